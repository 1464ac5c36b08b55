#include "bst/stirling.hpp"

#include <mutex>

namespace bst {

Int TriangleTable::entry(long n, long k) const
{
    if (n < min_index_ || n > max_n() || k < min_index_ || k > n)
        return 0;
    return rows_[static_cast<std::size_t>(n - min_index_)]
                [static_cast<std::size_t>(k - min_index_)];
}

void TriangleTable::push_row(std::vector<Int> row)
{
    rows_.push_back(std::move(row));
}

std::string to_string(IdentityId id)
{
    switch (id) {
        case IdentityId::recst1: return "recst1";
        case IdentityId::recst2: return "recst2";
        case IdentityId::recst3: return "recst3";
        case IdentityId::recst4: return "recst4";
        case IdentityId::conv: return "conv";
        case IdentityId::hs1: return "hs1";
        case IdentityId::bnk1: return "bnk1";
        case IdentityId::bnk2: return "bnk2";
    }
    return "?";
}

namespace {

// Shared row caches: single writer under lock, rows never mutated after
// insertion, so concurrent readers that hold the lock briefly are safe.
struct RowCache {
    std::vector<std::vector<Int>> rows;
    std::mutex mutex;
};

RowCache g_cycle;
RowCache g_partition;

// grow to row n, cycle: [n,k] = (n-1)[n-1,k] + [n-1,k-1]
//           partition: {n,k} = k{n-1,k} + {n-1,k-1}
const std::vector<Int>& ensure_row(RowCache& cache, long n, bool cycle)
{
    if (cache.rows.empty())
        cache.rows.push_back({Int(1)});  // [0,0] = {0,0} = 1
    while (static_cast<long>(cache.rows.size()) <= n) {
        const auto& prev = cache.rows.back();
        const long m = static_cast<long>(cache.rows.size());
        std::vector<Int> row(static_cast<std::size_t>(m) + 1, Int(0));
        for (long k = 0; k <= m; ++k) {
            Int v = 0;
            if (k <= m - 1)
                v += (cycle ? Int(m - 1) : Int(k)) * prev[static_cast<std::size_t>(k)];
            if (k >= 1)
                v += prev[static_cast<std::size_t>(k - 1)];
            row[static_cast<std::size_t>(k)] = v;
        }
        cache.rows.push_back(std::move(row));
    }
    return cache.rows[static_cast<std::size_t>(n)];
}

Int triangle_value(RowCache& cache, long n, long k, bool cycle)
{
    if (n < 0)
        throw std::invalid_argument("stirling: n must be non-negative");
    if (k < 0 || k > n)
        return 0;
    std::lock_guard<std::mutex> lock(cache.mutex);
    return ensure_row(cache, n, cycle)[static_cast<std::size_t>(k)];
}

}  // namespace

Int cycle_stirling(long n, long k)
{
    return triangle_value(g_cycle, n, k, true);
}

Int partition_stirling(long n, long k)
{
    return triangle_value(g_partition, n, k, false);
}

std::vector<Int> cycle_row_via_product(long n)
{
    if (n < 0)
        throw std::invalid_argument("cycle_row_via_product: n must be non-negative");
    std::vector<Int> coeffs{Int(1)};  // empty product
    for (long j = 0; j < n; ++j) {
        // multiply by (x + j)
        std::vector<Int> next(coeffs.size() + 1, Int(0));
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            next[i] += Int(j) * coeffs[i];
            next[i + 1] += coeffs[i];
        }
        coeffs = std::move(next);
    }
    return coeffs;
}

namespace {

Int pow_int(const Int& base, long exp)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp));
    return r;
}

}  // namespace

IdentityCheck verify_identity(IdentityId id, long n, long m)
{
    if (n < 0 || m < 0)
        throw std::invalid_argument("verify_identity: indices must be non-negative");
    IdentityCheck chk;
    chk.id = id;
    chk.n = n;
    chk.m = m;
    Int lhs = 0;
    Int rhs = 0;
    const Int minus_n = Int(-n);
    switch (id) {
        case IdentityId::recst1:
            lhs = cycle_stirling(n + 1, m + 1);
            for (long h = 0; h <= n - m; ++h)
                rhs += binomial(Int(h + m), Int(m)) * cycle_stirling(n, h + m);
            break;
        case IdentityId::recst2:
            lhs = cycle_stirling(n + 1, m + 1);
            for (long h = 0; h <= n - m; ++h)
                rhs += binomial(Int(h + m), Int(m)) * cycle_stirling(n, h + m) *
                       pow_int(minus_n, h);
            if ((n - m) % 2 != 0)
                rhs = -rhs;
            break;
        case IdentityId::recst3:
            if (n == 0)
                throw std::invalid_argument("recst3 requires n > 0");
            lhs = cycle_stirling(n, m);
            for (long h = 0; h <= n - m; ++h)
                rhs += binomial(Int(h + m - 1), Int(m - 1)) *
                       cycle_stirling(n, h + m) * pow_int(minus_n, h);
            if ((n - m) % 2 != 0)
                rhs = -rhs;
            break;
        case IdentityId::recst4:
            if (n == 0)
                throw std::invalid_argument("recst4 requires n > 0");
            lhs = cycle_stirling(n, m) * pow_int(minus_n, m);
            if ((n - m) % 2 != 0)
                lhs = -lhs;
            for (long h = 0; h <= n; ++h)
                rhs += binomial(Int(h - 1), Int(m - 1)) * cycle_stirling(n, h) *
                       pow_int(minus_n, h);
            break;
        case IdentityId::hs1:
            // sum_k (-1)^(k-m) C(k,m) C(n,k) = [n == m]
            lhs = (n == m) ? 1 : 0;
            for (long k = 0; k <= n; ++k) {
                Int term = binomial(Int(k), Int(m)) * binomial(Int(n), Int(k));
                rhs += ((k - m) % 2 != 0) ? -term : term;
            }
            break;
        default:
            throw std::invalid_argument("verify_identity: unsupported identity " +
                                        to_string(id));
    }
    chk.lhs = Rat(lhs);
    chk.rhs = Rat(rhs);
    chk.pass = (chk.lhs == chk.rhs);
    return chk;
}

Polynomial q_polynomial(long k)
{
    if (k < 0)
        throw std::invalid_argument("q_polynomial: k must be non-negative");
    // 2k+1 nodes pin a degree-2k polynomial uniquely; all nodes lie where
    // the triangle value is defined.
    std::vector<Rat> nodes;
    std::vector<Rat> values;
    for (long n = k; n <= 3 * k; ++n) {
        nodes.emplace_back(Int(n));
        values.emplace_back(cycle_stirling(n, n - k));
    }
    Polynomial q = Polynomial::interpolate(nodes, values);
    if (q.degree() != 2 * k)
        throw internal_consistency_error("q_polynomial: degree mismatch for k=" +
                                         std::to_string(k));
    return q;
}

}  // namespace bst
