#include "bst/congruence.hpp"

#include "bst/harmonic.hpp"
#include "bst/stirling.hpp"

namespace bst {

std::string to_string(ClaimId id)
{
    switch (id) {
        case ClaimId::ge10ee: return "ge10ee";
        case ClaimId::ge10een: return "ge10een";
        case ClaimId::e10e: return "e10e";
        case ClaimId::bern: return "bern";
        case ClaimId::ee10biss: return "ee10biss";
        case ClaimId::conj1: return "conj1";
        case ClaimId::conj2: return "conj2";
    }
    return "?";
}

namespace {

void require_prime(const Int& p, const char* what)
{
    if (!is_prime(p))
        throw std::invalid_argument(std::string(what) + ": p must be prime");
}

Rat pow_rat(const Int& base, long exp)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return Rat(r);
}

CongruenceReport finish(CongruenceReport rep, const Rat& residual)
{
    auto v = padic_valuation(residual, rep.prime);
    rep.achieved_infinite = v.infinite;
    rep.achieved_valuation = v.infinite ? 0 : v.order;
    if (rep.claims_exact_zero)
        rep.pass = (residual == 0);
    else
        rep.pass = v.infinite || v.order >= rep.claimed_valuation;
    return rep;
}

}  // namespace

CongruenceReport verify_g_expansion(const Int& p, long k)
{
    require_prime(p, "verify_g_expansion");
    const long pl = static_cast<long>(p.get_si());
    if (k < 0 || k > pl - 1)
        throw std::invalid_argument("verify_g_expansion: need 0 <= k <= p-1");
    CongruenceReport rep;
    rep.claim = (k == 0) ? ClaimId::ge10een : ClaimId::ge10ee;
    rep.prime = p;
    rep.params = {{"k", k}};
    rep.claims_exact_zero = true;
    Rat sum(0);
    for (long j = 0; j <= pl - 1 - k; ++j) {
        Rat term = Rat(binomial(Int(j + k), Int(j))) * harmonic_g(pl - 1, k + j) *
                   pow_rat(p, j);
        sum += (j % 2 != 0) ? -term : term;
    }
    // The overall sign comes out of recst3 at n = p, m = k+1 as
    // (-1)^(p-1-k); for odd p that is the usual (-1)^k.
    if ((pl - 1 - k) % 2 != 0)
        sum = -sum;
    return finish(std::move(rep), harmonic_g(pl - 1, k) - sum);
}

CongruenceReport verify_theorem52(const Int& p, long i)
{
    require_prime(p, "verify_theorem52");
    if (i < 1)
        throw std::invalid_argument("verify_theorem52: need i >= 1");
    const long pl = static_cast<long>(p.get_si());
    CongruenceReport rep;
    rep.claim = ClaimId::conj2;
    rep.prime = p;
    rep.params = {{"i", i}};
    rep.claims_exact_zero = true;
    Rat sum(0);
    for (long j = 0; j <= pl - 2 * i; ++j)
        sum += bernoulli(static_cast<unsigned long>(j)) *
               Rat(binomial(Int(j + 2 * i - 1), Int(j))) *
               Rat(cycle_stirling(pl, j + 2 * i)) * pow_rat(p, j);
    return finish(std::move(rep), sum);
}

CongruenceReport verify_h_expansion(const Int& p, long k, long trunc)
{
    require_prime(p, "verify_h_expansion");
    if (k < 1 || trunc < 0)
        throw std::invalid_argument("verify_h_expansion: need k >= 1, J >= 0");
    const long pl = static_cast<long>(p.get_si());
    CongruenceReport rep;
    rep.claim = ClaimId::e10e;
    rep.prime = p;
    rep.params = {{"k", k}, {"J", trunc}};
    rep.claimed_valuation = trunc + 1;
    Rat sum(0);
    for (long j = 0; j <= trunc; ++j)
        sum += Rat(binomial(Int(j + k - 1), Int(j))) * harmonic_h(pl - 1, k + j) *
               pow_rat(p, j);
    if (k % 2 != 0)
        sum = -sum;
    return finish(std::move(rep), harmonic_h(pl - 1, k) - sum);
}

CongruenceReport verify_washington(const Int& p, long k, long n)
{
    require_prime(p, "verify_washington");
    if (p < 5)
        throw std::invalid_argument("verify_washington: claim needs p >= 5");
    if (k < 0 || n < 0)
        throw std::invalid_argument("verify_washington: need k, n >= 0");
    const long pl = static_cast<long>(p.get_si());
    CongruenceReport rep;
    rep.claim = (k == 0) ? ClaimId::ee10biss : ClaimId::bern;
    rep.prime = p;
    rep.params = {{"k", k}, {"n", n}};
    rep.claimed_valuation = 2 * n + 3;
    Rat sum(0);
    for (long j = 0; j <= 2 * n + 1; ++j) {
        Rat term = Rat(binomial(Int(j + 2 * k), Int(2 * k))) *
                   bernoulli(static_cast<unsigned long>(j)) *
                   harmonic_h(pl - 1, 2 * k + j + 1) * pow_rat(p, j);
        sum += (j % 2 != 0) ? -term : term;
    }
    return finish(std::move(rep), sum);
}

CongruenceReport verify_g_congruence(const Int& p, long n)
{
    require_prime(p, "verify_g_congruence");
    if (p < 5)
        throw std::invalid_argument("verify_g_congruence: claim needs p >= 5");
    if (n < 0)
        throw std::invalid_argument("verify_g_congruence: need n >= 0");
    const long pl = static_cast<long>(p.get_si());
    CongruenceReport rep;
    rep.claim = ClaimId::conj1;
    rep.prime = p;
    rep.params = {{"n", n}};
    rep.claimed_valuation = 2 * n + 3;
    Rat sum(0);
    for (long j = 0; j <= 2 * n + 1; ++j)
        sum += Rat(Int(j + 1)) * bernoulli(static_cast<unsigned long>(j)) *
               harmonic_g(pl - 1, j + 1) * pow_rat(p, j);
    return finish(std::move(rep), sum);
}

}  // namespace bst
