#include "bst/harmonic.hpp"

namespace bst {

Rat harmonic_h(long n, long k)
{
    if (n < 0 || k < 0)
        throw std::invalid_argument("harmonic_h: indices must be non-negative");
    Rat sum(0);
    for (long j = 1; j <= n; ++j) {
        Int jk;
        mpz_pow_ui(jk.get_mpz_t(), Int(j).get_mpz_t(), static_cast<unsigned long>(k));
        sum += make_rat(1, jk);
    }
    return sum;
}

Rat harmonic_g(long n, long k)
{
    if (n < 0 || k < 0)
        throw std::invalid_argument("harmonic_g: indices must be non-negative");
    Int nfact;
    mpz_fac_ui(nfact.get_mpz_t(), static_cast<unsigned long>(n));
    return make_rat(cycle_stirling(n + 1, k + 1), nfact);
}

IdentityCheck verify_conv(long n, long k)
{
    if (n < 0 || k < 1)
        throw std::invalid_argument("verify_conv: need n >= 0, k >= 1");
    IdentityCheck chk;
    chk.id = IdentityId::conv;
    chk.n = n;
    chk.m = k;
    chk.lhs = Rat(Int(k) * cycle_stirling(n + 1, k + 1));
    Rat rhs(0);
    for (long j = 0; j < k; ++j) {
        Rat term = harmonic_h(n, k - j) * Rat(cycle_stirling(n + 1, j + 1));
        rhs += ((k - j) % 2 != 0) ? -term : term;
    }
    chk.rhs = -rhs;
    chk.pass = (chk.lhs == chk.rhs);
    return chk;
}

}  // namespace bst
