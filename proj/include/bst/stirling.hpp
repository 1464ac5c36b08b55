#ifndef BST_STIRLING_HPP
#define BST_STIRLING_HPP

#include <string>
#include <vector>

#include "bst/corenum.hpp"
#include "bst/polynomial.hpp"

namespace bst {

enum class TriangleKind { cycle, partition, bsFirst, bsSecond, bsFirstInverse };

// Row-indexed lower-triangular table of exact integers. Row n holds
// entries k = min_index()..n; entry() is 0 outside the stored triangle
// and the diagonal is 1 for every kind built here.
class TriangleTable {
public:
    TriangleTable(TriangleKind kind, long min_index)
        : kind_(kind), min_index_(min_index) {}

    TriangleKind kind() const { return kind_; }
    long min_index() const { return min_index_; }
    long max_n() const { return min_index_ + static_cast<long>(rows_.size()) - 1; }

    Int entry(long n, long k) const;
    void push_row(std::vector<Int> row);

private:
    TriangleKind kind_;
    long min_index_;
    std::vector<std::vector<Int>> rows_;
};

enum class IdentityId { recst1, recst2, recst3, recst4, conv, hs1, bnk1, bnk2 };

std::string to_string(IdentityId id);

// Both sides are reported so a failure is diagnosable.
struct IdentityCheck {
    IdentityId id;
    long n = 0;
    long m = 0;
    Rat lhs;
    Rat rhs;
    bool pass = false;
};

// Unsigned Stirling number of the first kind [n,k]; 0 for k < 0 or k > n.
// Memoized row DP over the basic recurrence.
Int cycle_stirling(long n, long k);

// Stirling number of the second kind {n,k}; 0 for k < 0 or k > n.
Int partition_stirling(long n, long k);

// Coefficients of prod_{j=0}^{n-1}(x+j): the full row [n,k], k = 0..n.
// Independent of the recurrence DP; used to cross-check it.
std::vector<Int> cycle_row_via_product(long n);

// Evaluates both sides of the named cycle-Stirling identity exactly.
// Handles recst1..recst4 and hs1 (m plays the role of j there); the
// convolution identity lives in the harmonic module.
IdentityCheck verify_identity(IdentityId id, long n, long m);

// Degree-2k polynomial with Q_k(n) = [n, n-k] for all n >= k, built by
// exact Newton interpolation at the nodes n = k..3k, then degree-checked.
Polynomial q_polynomial(long k);

}  // namespace bst

#endif
