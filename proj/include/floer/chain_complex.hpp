#pragma once

// The Floer chain complex of (RP^k, T^k) over GF(2): the boundary operator
// counting isolated strips, the disk-bubbling obstruction, and the homology
// dimension.

#include <cstdint>

#include "floer/gf2.hpp"
#include "floer/signvec.hpp"

namespace floer {

// Dense 2^k x 2^k matrices stop here; 32768^2 bits (128 MiB) is the desk
// ceiling for whole-matrix work.
inline constexpr int kMaxBoundaryDim = 15;

// Boundary of one generator: the sum of its k+1 single-coordinate flips.
// Coincident flips cancel mod 2, which empties the chain at k=1 where both
// flips land on the same point.
Chain boundary_image(PointCode p);

// The tail-flip part (i = 1..k) and the leading flip (the involution that
// negates every tail sign); together they sum to the full boundary.
Chain boundary_tilde_image(PointCode p);
PointCode eta(PointCode p);

// Linear extensions to chains.
Chain boundary(const Chain& x);
Chain boundary_tilde(const Chain& x);
Chain eta(const Chain& x);

// 2^k x 2^k matrix whose column p is boundary_image(p). Symmetric, since
// q is a flip of p exactly when p is a flip of q.
BitMatrix boundary_matrix(int k);

struct Obstruction {
    int k;
    std::uint64_t phi_rp;  // Maslov-2 disks through a point, boundary on RP^k
    std::uint64_t phi_t;   // same with boundary on the torus
    bool square_is_zero;   // (k+1) even
};

// Disk-bubbling count per intersection point and the verified matrix
// identity d^2 = ((k+1) mod 2) * I. Throws InvariantError if the identity
// fails numerically (it cannot, short of a bug).
Obstruction obstruction(int k);

// dim HF(RP^k, T^k; Z_2) = 2^k - 2 rank(d). Defined for odd k only; for
// even k the differential squares to the identity and the request is
// refused with an ObstructionError.
std::uint64_t hf_dimension(int k);

}  // namespace floer
