#ifndef BST_HARMONIC_HPP
#define BST_HARMONIC_HPP

#include "bst/corenum.hpp"
#include "bst/stirling.hpp"

namespace bst {

// H_n^(k) = sum_{j=1}^{n} 1/j^k. H_n^(0) = n, H_0^(k) = 0.
Rat harmonic_h(long n, long k);

// G_n^(k), the elementary-symmetric harmonic sum over k-subsets of
// {1..n}, computed through the Stirling bridge [n+1,k+1] = n! G_n^(k).
// Subset enumeration survives only as a test oracle.
Rat harmonic_g(long n, long k);

// Convolution between the harmonic and cycle Stirling numbers:
// k[n+1,k+1] = -sum_{j=0}^{k-1} (-1)^(k-j) H_n^(k-j) [n+1,j+1].
IdentityCheck verify_conv(long n, long k);

}  // namespace bst

#endif
