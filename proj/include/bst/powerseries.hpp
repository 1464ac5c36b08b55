#ifndef BST_POWERSERIES_HPP
#define BST_POWERSERIES_HPP

#include <vector>

#include "bst/corenum.hpp"

namespace bst {

// Truncated exponential generating function: c_0..c_N with c_n the
// coefficient of x^n/n!. Immutable after construction; binary operations
// require equal orders and never silently extend them.
class TruncatedEgf {
public:
    explicit TruncatedEgf(std::vector<Rat> coeffs);
    static TruncatedEgf zero(long order);
    static TruncatedEgf one(long order);

    long order() const { return static_cast<long>(coeffs_.size()) - 1; }
    const Rat& coeff(long n) const;
    const std::vector<Rat>& coefficients() const { return coeffs_; }

    // Binomial-convolution product: c_u = sum_{j+h=u} C(u,h) a_j b_h.
    TruncatedEgf mul(const TruncatedEgf& other) const;

    // Multiplicative inverse to the common order; constant term must be
    // nonzero.
    TruncatedEgf recip() const;

    // Substitution x -> kx as coefficient scaling c_n -> k^n c_n.
    TruncatedEgf scale_argument(const Int& k) const;

    bool operator==(const TruncatedEgf& other) const = default;

private:
    std::vector<Rat> coeffs_;
};

inline TruncatedEgf operator*(const TruncatedEgf& a, const TruncatedEgf& b)
{
    return a.mul(b);
}

// e^x - 1: c_0 = 0, c_n = 1.
TruncatedEgf egf_exp_minus_one(long order);

// ln(1-x): c_0 = 0, c_n = -(n-1)!.
TruncatedEgf egf_log_one_minus(long order);

// x/(e^x - 1), built as recip of (e^x-1)/x; c_n = B_n. Independent of the
// Bernoulli recurrence, so the two routes cross-check each other.
TruncatedEgf egf_bernoulli(long order);

// (-1)^k (ln(1-x))^k / k!; c_n = [n,k].
TruncatedEgf egf_cycle_stirling(long k, long order);

// (e^x-1)^k / k!; c_n = {n,k}.
TruncatedEgf egf_partition_stirling(long k, long order);

// (e^x-1)^k/k! * kx/(e^{kx}-1); c_n = B_{n,k} of the second-kind triangle.
TruncatedEgf egf_bs_second(long k, long order);

}  // namespace bst

#endif
