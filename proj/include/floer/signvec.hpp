#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "floer/errors.hpp"

namespace floer {

// Largest tail length the mask encoding supports.
inline constexpr int kMaxPointDim = 31;

enum class Parity { Even, Odd };

// An intersection point of RP^k with the Clifford torus: a projective sign
// vector stored in canonical form [+1 : e_1 : ... : e_k]. Bit i-1 of mask is
// set iff the tail coordinate e_i is -1.
struct PointCode {
    int k = 0;
    std::uint32_t mask = 0;

    friend bool operator==(const PointCode&, const PointCode&) = default;
};

// Validating constructor used by parsers; ops assume a well-formed code.
PointCode point_code(int k, std::uint32_t mask);

// Encode a full sign vector of k+1 entries (each +1 or -1). A vector with
// leading -1 is negated first, so both representatives of a projective
// point map to the same code.
PointCode canonicalize(std::span<const int> signs, int k);

// Negate homogeneous coordinate i and re-canonicalize. i = 0 negates the
// leading +1, which amounts to complementing every tail sign.
PointCode flip(PointCode p, int i);

// Parity of the number of +1 entries among the k+1 homogeneous coordinates.
// Only defined for odd k; then k+1 is even and the count's parity does not
// depend on the choice of representative.
Parity plus_one_count_parity(PointCode p);

// Full sign vector of the canonical representative (k+1 entries, first +1).
std::vector<int> to_signs(PointCode p);

// Tail signs as a string of '+'/'-', leftmost character = e_1.
std::string to_sign_string(PointCode p);
PointCode from_sign_string(const std::string& s);

}  // namespace floer
