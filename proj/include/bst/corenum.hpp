#ifndef BST_CORENUM_HPP
#define BST_CORENUM_HPP

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace bst {

// Exact arbitrary-precision integer and rational. All arithmetic in this
// project is exact; GMP keeps mpq values in lowest terms with positive
// denominator after every operation.
using Int = mpz_class;
using Rat = mpq_class;

// Raised when a quantity that is an integer by theorem comes out with a
// denominator != 1, or an exact division leaves a remainder. Indicates an
// arithmetic bug, never bad input.
class internal_consistency_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// num/den reduced to lowest terms, den > 0 enforced.
Rat make_rat(const Int& num, const Int& den);

std::string to_string(const Int& v);
// "num" when the denominator is 1, "num/den" otherwise.
std::string to_string(const Rat& v);

// Deterministic trial division; sweep inputs stay below 10^4.
bool is_prime(const Int& p);

// Coefficient of x^k in (1+x)^n, any sign of n. Zero for k < 0, and for
// k > n when n >= 0. Negative n goes through C(-n,k) = (-1)^k C(n+k-1, n-1).
Int binomial(const Int& n, const Int& k);

// Bernoulli number B_n, memoized. B_1 = -1/2 convention.
const Rat& bernoulli(unsigned long n);

struct PAdicValuation {
    Int prime;
    bool infinite = false;  // order of the rational 0
    long order = 0;
    std::string order_string() const;  // "inf" for the infinite marker
};

// Exact order of p in q: order(numerator) - order(denominator).
PAdicValuation padic_valuation(const Rat& q, const Int& p);

// Product of all primes p with (p-1) | n; equals the reduced denominator
// of B_n. Requires n even, n >= 2.
Int von_staudt_clausen_denominator(unsigned long n);

}  // namespace bst

#endif
