#include "bst/bstriangle.hpp"

#include <map>
#include <mutex>

namespace bst {

namespace {

Int pow_int(const Int& base, long exp)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

Int require_integer(const Rat& value, const char* what)
{
    if (value.get_den() != 1)
        throw internal_consistency_error(std::string(what) +
                                         ": non-integer value " + to_string(value));
    return value.get_num();
}

std::map<std::pair<long, long>, Int> g_bs_first;
std::map<std::pair<long, long>, Int> g_bs_second;
std::mutex g_bs_mutex;

Rat bs_first_sum(long n, long k)
{
    Rat sum(0);
    for (long h = 0; h <= n - k; ++h)
        sum += bernoulli(static_cast<unsigned long>(h)) *
               Rat(binomial(Int(k + h - 1), Int(h))) *
               Rat(cycle_stirling(n, h + k)) * Rat(pow_int(Int(n), h));
    return sum;
}

Rat bs_second_sum(long n, long k)
{
    Rat sum(0);
    for (long h = 0; h <= n - k; ++h)
        sum += bernoulli(static_cast<unsigned long>(h)) *
               Rat(binomial(Int(n), Int(h))) *
               Rat(partition_stirling(n - h, k)) * Rat(pow_int(Int(k), h));
    return sum;
}

}  // namespace

Int bs_first(long n, long k)
{
    if (n < 0 || k < 0)
        throw std::invalid_argument("bs_first: indices must be non-negative");
    if (k > n)
        return 0;
    std::lock_guard<std::mutex> lock(g_bs_mutex);
    auto [it, inserted] = g_bs_first.try_emplace({n, k});
    if (inserted)
        it->second = require_integer(bs_first_sum(n, k), "bs_first");
    return it->second;
}

Int bs_second(long n, long k)
{
    if (n < 0 || k < 0)
        throw std::invalid_argument("bs_second: indices must be non-negative");
    if (k > n)
        return 0;
    std::lock_guard<std::mutex> lock(g_bs_mutex);
    auto [it, inserted] = g_bs_second.try_emplace({n, k});
    if (inserted)
        it->second = require_integer(bs_second_sum(n, k), "bs_second");
    return it->second;
}

bool tandem_void(long n, long k)
{
    return k > n || (n - k) % 2 != 0;
}

TandemEntry tandem(long n, long k)
{
    TandemEntry e;
    e.n = n;
    e.k = k;
    if (n < 0 && k < 0) {
        e.source = TandemSource::bViaDuality;
        e.value = (k <= n) ? bs_second(-k, -n) : Int(0);
    } else {
        e.source = TandemSource::aDirect;
        e.value = (n >= 0 && k >= 0) ? bs_first(n, k) : Int(0);
    }
    return e;
}

Polynomial p_polynomial(long k)
{
    if (k < 0)
        throw std::invalid_argument("p_polynomial: k must be non-negative");
    std::vector<Rat> nodes;
    std::vector<Rat> values;
    for (long n = k; n <= 3 * k; ++n) {
        nodes.emplace_back(Int(n));
        values.emplace_back(bs_first(n, n - k));
    }
    Polynomial p = Polynomial::interpolate(nodes, values);
    if (!p.is_zero() && p.degree() != 2 * k)
        throw internal_consistency_error("p_polynomial: degree mismatch for k=" +
                                         std::to_string(k));
    for (long r = -1; k > 0 && r <= k; ++r)
        if (p(Rat(Int(r))) != 0)
            throw internal_consistency_error("p_polynomial: missing root at " +
                                             std::to_string(r));
    return p;
}

namespace {

// (x - lo)(x - lo - 1)...(x - hi)
Polynomial falling_product(long lo, long hi)
{
    Polynomial prod = Polynomial::constant(Rat(1));
    for (long j = lo; j <= hi; ++j)
        prod = prod * Polynomial(std::vector<Rat>{Rat(Int(-j)), Rat(1)});
    return prod;
}

Polynomial exact_quotient(const Polynomial& num, const Polynomial& den,
                          const char* what)
{
    auto [quot, rem] = num.divmod(den);
    if (!rem.is_zero())
        throw internal_consistency_error(std::string(what) + ": nonzero remainder");
    return quot;
}

}  // namespace

Polynomial s_polynomial(long n)
{
    if (n < 1)
        throw std::invalid_argument("s_polynomial: n must be >= 1");
    return exact_quotient(p_polynomial(n), falling_product(-1, n), "s_polynomial");
}

Polynomial sigma_polynomial(long n)
{
    if (n < 1)
        throw std::invalid_argument("sigma_polynomial: n must be >= 1");
    return exact_quotient(q_polynomial(n), falling_product(0, n), "sigma_polynomial");
}

IdentityCheck verify_interrelation(Interrelation which, long n, long x)
{
    if (n < 0)
        throw std::invalid_argument("verify_interrelation: n must be non-negative");
    IdentityCheck chk;
    chk.id = (which == Interrelation::bnk1) ? IdentityId::bnk1 : IdentityId::bnk2;
    chk.n = n;
    chk.m = x;
    if (which == Interrelation::bnk1)
        chk.lhs = (x >= n) ? Rat(bs_second(x, x - n)) : p_polynomial(n)(Rat(Int(n - x)));
    else
        chk.lhs = (x >= n) ? Rat(bs_first(x, x - n)) : p_polynomial(n)(Rat(Int(x)));
    Int rhs = 0;
    for (long u = 0; u <= n; ++u) {
        Int a = binomial(Int(n + x), Int(n - u)) * binomial(Int(n - x), Int(n + u));
        rhs += a * ((which == Interrelation::bnk1) ? bs_first(n + u, u)
                                                   : bs_second(n + u, u));
    }
    chk.rhs = Rat(rhs);
    chk.pass = (chk.lhs == chk.rhs);
    return chk;
}

std::vector<Int> genocchi_column(long n_max)
{
    if (n_max < 1)
        throw std::invalid_argument("genocchi_column: n_max must be >= 1");
    std::vector<Int> column;  // column[i] = B_{2(i+1),2}
    for (long n = 1; n <= n_max; ++n) {
        Rat v{Int(n)};
        for (long j = 1; j < n; ++j)
            v -= make_rat(binomial(Int(2 * n), Int(2 * j)), 2) * Rat(column[static_cast<std::size_t>(j - 1)]);
        column.push_back(require_integer(v, "genocchi_column"));
    }
    return column;
}

TriangleTable inverse_first_triangle(long n_max)
{
    if (n_max < 1)
        throw std::invalid_argument("inverse_first_triangle: n_max must be >= 1");
    TriangleTable inv(TriangleKind::bsFirstInverse, 1);
    std::vector<std::vector<Int>> rows;  // rows[n-1][k-1]
    for (long n = 1; n <= n_max; ++n) {
        std::vector<Int> row(static_cast<std::size_t>(n), Int(0));
        row[static_cast<std::size_t>(n - 1)] = 1;
        for (long k = 1; k < n; ++k) {
            Int acc = 0;
            for (long j = k; j < n; ++j)
                acc += bs_first(n, j) * rows[static_cast<std::size_t>(j - 1)]
                                            [static_cast<std::size_t>(k - 1)];
            row[static_cast<std::size_t>(k - 1)] = -acc;
        }
        rows.push_back(row);
        inv.push_row(std::move(row));
    }
    return inv;
}

}  // namespace bst
