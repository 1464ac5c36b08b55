#include "bst/corenum.hpp"

#include <deque>
#include <mutex>

namespace bst {

Rat make_rat(const Int& num, const Int& den)
{
    if (den == 0)
        throw std::invalid_argument("make_rat: zero denominator");
    Rat q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Int& v)
{
    return v.get_str();
}

std::string to_string(const Rat& v)
{
    return v.get_str();  // mpq prints "num" when den == 1
}

bool is_prime(const Int& p)
{
    if (p < 2)
        return false;
    if (p < 4)
        return true;
    if (p % 2 == 0)
        return false;
    for (Int d = 3; d * d <= p; d += 2)
        if (p % d == 0)
            return false;
    return true;
}

Int binomial(const Int& n, const Int& k)
{
    if (k < 0)
        return 0;
    if (n >= 0 && k > n)
        return 0;
    const unsigned long ku = mpz_get_ui(k.get_mpz_t());
    Int r;
    if (n >= 0) {
        mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), ku);
        return r;
    }
    // C(-m, k) = (-1)^k C(m+k-1, m-1), never via factorials
    const Int top = -n + k - 1;
    mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), ku);
    if (ku % 2 != 0)
        r = -r;
    return r;
}

namespace {

// B_m = -1/(m+1) * sum_{k<m} C(m+1,k) B_k, the summation form of the
// Bernoulli recurrence; the alternating form and the EGF extraction are
// asserted as properties in the tests.
std::deque<Rat> g_bernoulli{Rat(1)};
std::mutex g_bernoulli_mutex;

}  // namespace

const Rat& bernoulli(unsigned long n)
{
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    while (g_bernoulli.size() <= n) {
        const unsigned long m = g_bernoulli.size();
        Rat sum(0);
        for (unsigned long k = 0; k < m; ++k)
            sum += Rat(binomial(Int(m + 1), Int(k))) * g_bernoulli[k];
        g_bernoulli.push_back(-sum / Rat(Int(m + 1)));
    }
    return g_bernoulli[n];
}

std::string PAdicValuation::order_string() const
{
    return infinite ? "inf" : std::to_string(order);
}

PAdicValuation padic_valuation(const Rat& q, const Int& p)
{
    if (!is_prime(p))
        throw std::invalid_argument("padic_valuation: p must be prime");
    PAdicValuation v;
    v.prime = p;
    if (q == 0) {
        v.infinite = true;
        return v;
    }
    Int scratch;
    const long vnum = static_cast<long>(
        mpz_remove(scratch.get_mpz_t(), q.get_num_mpz_t(), p.get_mpz_t()));
    const long vden = static_cast<long>(
        mpz_remove(scratch.get_mpz_t(), q.get_den_mpz_t(), p.get_mpz_t()));
    v.order = vnum - vden;
    return v;
}

Int von_staudt_clausen_denominator(unsigned long n)
{
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument(
            "von_staudt_clausen_denominator: n must be even and >= 2");
    Int product = 1;
    for (unsigned long p = 2; p <= n + 1; ++p) {
        if (n % (p - 1) == 0 && is_prime(Int(p)))
            product *= p;
    }
    return product;
}

}  // namespace bst
