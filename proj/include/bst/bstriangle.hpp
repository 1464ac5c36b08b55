#ifndef BST_BSTRIANGLE_HPP
#define BST_BSTRIANGLE_HPP

#include <vector>

#include "bst/corenum.hpp"
#include "bst/polynomial.hpp"
#include "bst/stirling.hpp"

namespace bst {

// Bernoulli-Stirling number of the first kind:
//   A_{n,k} = sum_{h=0}^{n-k} B_h C(k+h-1,h) [n,h+k] n^h.
// The defining sum is evaluated with exact rationals; a denominator other
// than 1 raises internal_consistency_error. Zero for k > n. Memoized.
Int bs_first(long n, long k);

// Bernoulli-Stirling number of the second kind:
//   B_{n,k} = sum_{h=0}^{n-k} B_h C(n,h) {n-h,k} k^h.
// Same integrality check. Accepts k = 0 (value [n == 0]) so the
// inter-relation sweeps can touch the boundary column.
Int bs_second(long n, long k);

enum class TandemSource { aDirect, bViaDuality };

struct TandemEntry {
    long n = 0;
    long k = 0;
    Int value;
    TandemSource source = TandemSource::aDirect;
};

// True for the structurally blank tandem cells: k > n or odd n-k.
// Cells with k < n that sit outside both triangles carry an explicit 0.
bool tandem_void(long n, long k);

// The A triangle extended to all integer indices via the duality
// A_{-n,-k} = B_{k,n}: rows are n, columns are k, and a negative-quadrant
// cell (n,k) carries B_{-k,-n}. Mixed-sign cells are 0.
TandemEntry tandem(long n, long k);

// Polynomial with P_k(n) = A_{n,n-k} for all n >= k, exact interpolation
// at n = k..3k. Degree <= 2k, with equality unless identically zero
// (parity vanishing forces P_k = 0 for odd k); roots -1..k checked for
// k > 0.
Polynomial p_polynomial(long k);

// S_n with P_n(x) = (x+1)x(x-1)...(x-n) S_n(x); exact division, zero
// remainder required. n >= 1.
Polynomial s_polynomial(long n);

// Stirling polynomial sigma_n with Q_n(x) = x(x-1)...(x-n) sigma_n(x);
// exact division, zero remainder required. n >= 1.
Polynomial sigma_polynomial(long n);

enum class Interrelation { bnk1, bnk2 };

// bnk1: B_{x,x-n} = sum_u C(n+x,n-u) C(n-x,n+u) A_{n+u,u}
// bnk2: the A/B-swapped form. Generalized binomials handle the negative
// upper argument n-x; for x < n the left side goes through the polynomial
// extension (B_{x,x-n} = P_n(n-x), A_{x,x-n} = P_n(x)).
IdentityCheck verify_interrelation(Interrelation which, long n, long x);

// B_{2n,2} for n = 1..n_max via the Genocchi-style recursion
//   B_{2n,2} = n - 1/2 sum_{j=1}^{n-1} C(2n,2j) B_{2j,2}.
std::vector<Int> genocchi_column(long n_max);

// Exact inverse of the unit-lower-triangular matrix [A_{n,k}], 1 <= n,k
// <= n_max, by forward substitution.
TriangleTable inverse_first_triangle(long n_max);

}  // namespace bst

#endif
