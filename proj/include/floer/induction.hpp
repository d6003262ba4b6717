#pragma once

// Passage between the chain complexes of consecutive odd dimensions: the
// two-coordinate truncation, the block decomposition of chains upstairs,
// the map alpha whose kernel matches the cycles, and the dimension
// recursion all of this verifies.

#include <cstdint>
#include <utility>

#include "floer/gf2.hpp"

namespace floer {

// Deletes the first two tail coordinates of every generator, mod 2.
// x must live in an odd dimension >= 3; the image lives in dimension k-2.
Chain project(const Chain& x);

// Prefixes every generator of x with the two tail signs (s1, s2).
Chain embed(int s1, int s2, const Chain& x);

// The truncated sub-chain of x supported on generators whose first two
// tail signs are (s1, s2).
Chain block(const Chain& x, int s1, int s2);

struct CycleBlocks {
    Chain u, v, w, t;
};

// x = [(1,1,u) + (-1,-1,u) + (-1,1,v) + (1,-1,v) + (1,1,w) + (-1,1,w)]
//     + (1,1,t)
Chain rebuild(const CycleBlocks& b);

// Unique block decomposition of x, defined when project(x) is a cycle
// downstairs (then t = project(x) is automatically a cycle). Extraction:
//   u = block(-1,-1), v = block(1,-1), w = block(-1,1) + v,
//   t = block(1,1) + u + w.
CycleBlocks decompose(const Chain& x);

// The three downstairs relations equivalent to rebuild(b) being a cycle:
//   d v = w + t + eta w,  d u = w + eta t + eta w,  d w = 0.
bool check_cycle_relations(const CycleBlocks& b);

// alpha(u, v, w, t) = (d eta u + d v, d eta u + w + t + eta w), defined on
// the domain {d w = 0, d t = 0} and onto Im(d) + Ker(d). The components
// are asserted to land in Im(d) and Ker(d) respectively.
std::pair<Chain, Chain> alpha(const CycleBlocks& b);

struct RecursionReport {
    int n;                           // downstairs index; k_small = 2n-1
    int big_n;                       // n+1; k_big = 2n+1
    int k_small;
    int k_big;
    std::uint64_t dim_ker_alpha;     // by direct rank computation
    std::uint64_t half_dim_cf_big;   // 2^(k_big - 1)
    std::uint64_t dim_hf_small;
    std::uint64_t dim_hf_big;
    bool kernel_count_matches;       // dim Ker alpha == half_dim_cf_big/... see below
    bool dimension_doubles;          // dim_hf_big == 2 * dim_hf_small
};

// Verifies dim Ker(alpha) = (1/2) dim CF(k_big) + dim HF(k_small) by an
// independent rank computation on the matrix of alpha, and the homology
// doubling between the two dimensions.
RecursionReport recursion_check(int n);

}  // namespace floer
