#ifndef BST_CONGRUENCE_HPP
#define BST_CONGRUENCE_HPP

#include <string>
#include <utility>
#include <vector>

#include "bst/corenum.hpp"

namespace bst {

enum class ClaimId { ge10ee, ge10een, e10e, bern, ee10biss, conj1, conj2 };

std::string to_string(ClaimId id);

// Result of one p-adic verification. "Congruence modulo p^m" for a
// rational value means v_p(value) >= m; exact-zero claims require the
// rational 0. The achieved valuation is carried so sharper-than-claimed
// congruences stay observable.
struct CongruenceReport {
    ClaimId claim = ClaimId::ge10ee;
    Int prime;
    std::vector<std::pair<std::string, long>> params;
    bool claims_exact_zero = false;
    long claimed_valuation = 0;  // ignored when claims_exact_zero
    bool achieved_infinite = false;
    long achieved_valuation = 0;
    bool pass = false;
};

// G^(k)_{p-1} equals its own alternating expansion in powers of p; the
// finite sum is exactly zero. 0 <= k <= p-1.
CongruenceReport verify_g_expansion(const Int& p, long k);

// sum_j B_j C(j+2i-1,j) [p,j+2i] p^j = 0 exactly, the finite sum running
// to j = p-2i. i >= 1.
CongruenceReport verify_theorem52(const Int& p, long i);

// Truncated p-adic expansion of H^(k)_{p-1}: the order-J residual has
// valuation >= J+1. k >= 1.
CongruenceReport verify_h_expansion(const Int& p, long k, long trunc);

// sum_{j=0}^{2n+1} C(j+2k,2k) B_j H^(2k+j+1)_{p-1} (-p)^j has valuation
// >= 2n+3. p >= 5.
CongruenceReport verify_washington(const Int& p, long k, long n);

// sum_{j=0}^{2n+1} (j+1) B_j G^(j+1)_{p-1} p^j has valuation >= 2n+3.
// p >= 5.
CongruenceReport verify_g_congruence(const Int& p, long n);

}  // namespace bst

#endif
