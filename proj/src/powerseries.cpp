#include "bst/powerseries.hpp"

namespace bst {

TruncatedEgf::TruncatedEgf(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty())
        throw std::invalid_argument("TruncatedEgf: need at least the constant term");
}

TruncatedEgf TruncatedEgf::zero(long order)
{
    return TruncatedEgf(std::vector<Rat>(static_cast<std::size_t>(order) + 1, Rat(0)));
}

TruncatedEgf TruncatedEgf::one(long order)
{
    auto s = zero(order);
    s.coeffs_[0] = 1;
    return s;
}

const Rat& TruncatedEgf::coeff(long n) const
{
    if (n < 0 || n > order())
        throw std::out_of_range("TruncatedEgf::coeff: index beyond truncation order");
    return coeffs_[static_cast<std::size_t>(n)];
}

TruncatedEgf TruncatedEgf::mul(const TruncatedEgf& other) const
{
    if (order() != other.order())
        throw std::invalid_argument("TruncatedEgf::mul: order mismatch");
    auto out = zero(order());
    for (long u = 0; u <= order(); ++u) {
        Rat c(0);
        for (long j = 0; j <= u; ++j)
            c += Rat(binomial(Int(u), Int(j))) * coeffs_[static_cast<std::size_t>(j)] *
                 other.coeffs_[static_cast<std::size_t>(u - j)];
        out.coeffs_[static_cast<std::size_t>(u)] = c;
    }
    return out;
}

TruncatedEgf TruncatedEgf::recip() const
{
    if (coeffs_[0] == 0)
        throw std::invalid_argument("TruncatedEgf::recip: zero constant term");
    auto out = zero(order());
    out.coeffs_[0] = Rat(1) / coeffs_[0];
    for (long u = 1; u <= order(); ++u) {
        Rat acc(0);
        for (long j = 1; j <= u; ++j)
            acc += Rat(binomial(Int(u), Int(j))) * coeffs_[static_cast<std::size_t>(j)] *
                   out.coeffs_[static_cast<std::size_t>(u - j)];
        out.coeffs_[static_cast<std::size_t>(u)] = -acc / coeffs_[0];
    }
    return out;
}

TruncatedEgf TruncatedEgf::scale_argument(const Int& k) const
{
    auto out = *this;
    Int kn = 1;
    for (long n = 1; n <= order(); ++n) {
        kn *= k;
        out.coeffs_[static_cast<std::size_t>(n)] *= Rat(kn);
    }
    return out;
}

TruncatedEgf egf_exp_minus_one(long order)
{
    std::vector<Rat> c(static_cast<std::size_t>(order) + 1, Rat(1));
    c[0] = 0;
    return TruncatedEgf(std::move(c));
}

TruncatedEgf egf_log_one_minus(long order)
{
    std::vector<Rat> c(static_cast<std::size_t>(order) + 1, Rat(0));
    Int fact = 1;  // (n-1)!
    for (long n = 1; n <= order; ++n) {
        if (n > 1)
            fact *= (n - 1);
        c[static_cast<std::size_t>(n)] = Rat(-fact);
    }
    return TruncatedEgf(std::move(c));
}

TruncatedEgf egf_bernoulli(long order)
{
    // (e^x - 1)/x has c_n = 1/(n+1)
    std::vector<Rat> c(static_cast<std::size_t>(order) + 1, Rat(0));
    for (long n = 0; n <= order; ++n)
        c[static_cast<std::size_t>(n)] = make_rat(1, Int(n + 1));
    return TruncatedEgf(std::move(c)).recip();
}

namespace {

// base^k / k! by repeated binomial-convolution; k stays <= order in all uses
TruncatedEgf egf_power_over_factorial(const TruncatedEgf& base, long k)
{
    auto acc = TruncatedEgf::one(base.order());
    Int kfact = 1;
    for (long i = 1; i <= k; ++i) {
        acc = acc.mul(base);
        kfact *= i;
    }
    std::vector<Rat> c = acc.coefficients();
    for (auto& v : c)
        v /= Rat(kfact);
    return TruncatedEgf(std::move(c));
}

}  // namespace

TruncatedEgf egf_cycle_stirling(long k, long order)
{
    if (k < 0 || order < 0)
        throw std::invalid_argument("egf_cycle_stirling: bad arguments");
    auto s = egf_power_over_factorial(egf_log_one_minus(order), k);
    if (k % 2 == 0)
        return s;
    std::vector<Rat> c = s.coefficients();
    for (auto& v : c)
        v = -v;
    return TruncatedEgf(std::move(c));
}

TruncatedEgf egf_partition_stirling(long k, long order)
{
    if (k < 0 || order < 0)
        throw std::invalid_argument("egf_partition_stirling: bad arguments");
    return egf_power_over_factorial(egf_exp_minus_one(order), k);
}

TruncatedEgf egf_bs_second(long k, long order)
{
    if (k < 1 || order < 0)
        throw std::invalid_argument("egf_bs_second: need k >= 1");
    // kx/(e^{kx}-1) is the Bernoulli EGF with x -> kx
    auto kernel = egf_bernoulli(order).scale_argument(Int(k));
    return egf_partition_stirling(k, order).mul(kernel);
}

}  // namespace bst
