#include "floer/induction.hpp"

#include "floer/chain_complex.hpp"

namespace floer {

namespace {

void check_big_dim(int k) {
    if (k < 3 || k % 2 == 0) {
        throw DimensionMismatchError(
            "truncation needs an odd chain dimension >= 3, got " + std::to_string(k));
    }
}

std::uint32_t sign_pair_bits(int s1, int s2) {
    if ((s1 != 1 && s1 != -1) || (s2 != 1 && s2 != -1)) {
        throw DimensionMismatchError("leading signs must be +1 or -1");
    }
    return (s1 < 0 ? 1u : 0u) | (s2 < 0 ? 2u : 0u);
}

void check_same_dim(const CycleBlocks& b) {
    if (b.u.k != b.v.k || b.u.k != b.w.k || b.u.k != b.t.k) {
        throw DimensionMismatchError("block chains live in different dimensions");
    }
}

// Solvability of d y = x, decided by comparing ranks with and without the
// extra column.
bool in_boundary_image(const Chain& x) {
    const std::size_t n = std::size_t{1} << x.k;
    const BitMatrix d = boundary_matrix(x.k);
    BitMatrix augmented(n, n + 1);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            if (d.get(r, c)) augmented.set(r, c);
        }
        if (x.bits.test(r)) augmented.set(r, n);
    }
    return rank(augmented) == rank(d);
}

}  // namespace

Chain project(const Chain& x) {
    check_big_dim(x.k);
    Chain out(x.k - 2);
    x.bits.for_each_set([&](std::size_t p) { out.toggle(static_cast<std::uint32_t>(p >> 2)); });
    return out;
}

Chain embed(int s1, int s2, const Chain& x) {
    if (x.k + 2 > kMaxPointDim) {
        throw CapacityError("embedding exceeds the supported dimension");
    }
    const std::uint32_t base = sign_pair_bits(s1, s2);
    Chain out(x.k + 2);
    x.bits.for_each_set([&](std::size_t p) {
        out.toggle((static_cast<std::uint32_t>(p) << 2) | base);
    });
    return out;
}

Chain block(const Chain& x, int s1, int s2) {
    check_big_dim(x.k);
    const std::uint32_t base = sign_pair_bits(s1, s2);
    Chain out(x.k - 2);
    x.bits.for_each_set([&](std::size_t p) {
        if ((p & 3u) == base) out.toggle(static_cast<std::uint32_t>(p >> 2));
    });
    return out;
}

Chain rebuild(const CycleBlocks& b) {
    check_same_dim(b);
    Chain x = embed(1, 1, b.u);
    x ^= embed(-1, -1, b.u);
    x ^= embed(-1, 1, b.v);
    x ^= embed(1, -1, b.v);
    x ^= embed(1, 1, b.w);
    x ^= embed(-1, 1, b.w);
    x ^= embed(1, 1, b.t);
    return x;
}

CycleBlocks decompose(const Chain& x) {
    check_big_dim(x.k);
    const Chain projected = project(x);
    if (!boundary(projected).empty()) {
        throw NotInPreimageError("chain does not project to a cycle downstairs");
    }
    CycleBlocks b;
    b.u = block(x, -1, -1);
    b.v = block(x, 1, -1);
    b.w = block(x, -1, 1) ^ b.v;
    b.t = block(x, 1, 1) ^ b.u ^ b.w;
    if (!(rebuild(b) == x)) {
        throw InvariantError("block decomposition does not rebuild its input");
    }
    if (!boundary(b.t).empty()) {
        throw InvariantError("t component of the decomposition is not a cycle");
    }
    return b;
}

bool check_cycle_relations(const CycleBlocks& b) {
    check_same_dim(b);
    const Chain eta_w = eta(b.w);
    if (!(boundary(b.v) == (b.w ^ b.t ^ eta_w))) return false;
    if (!(boundary(b.u) == (b.w ^ eta(b.t) ^ eta_w))) return false;
    return boundary(b.w).empty();
}

std::pair<Chain, Chain> alpha(const CycleBlocks& b) {
    check_same_dim(b);
    if (!boundary(b.w).empty() || !boundary(b.t).empty()) {
        throw DomainConstraintError("alpha needs cycle entries in the w and t slots");
    }
    const Chain d_eta_u = boundary(eta(b.u));
    Chain first = d_eta_u ^ boundary(b.v);
    Chain second = d_eta_u ^ b.w ^ b.t ^ eta(b.w);
    if (!boundary(second).empty()) {
        throw InvariantError("second component of alpha is not a cycle");
    }
    if (!in_boundary_image(first)) {
        throw InvariantError("first component of alpha is not a boundary");
    }
    return {std::move(first), std::move(second)};
}

RecursionReport recursion_check(int n) {
    if (n < 1) {
        throw UnsupportedDimensionError("recursion index n must be >= 1");
    }
    const int k_small = 2 * n - 1;
    const int k_big = 2 * n + 1;
    if (k_big > kMaxBoundaryDim) {
        throw CapacityError("recursion check capped at 2n+1 <= " +
                            std::to_string(kMaxBoundaryDim));
    }
    const std::size_t dim_cf = std::size_t{1} << k_small;
    const BitMatrix d = boundary_matrix(k_small);
    const std::vector<BitVector> ker = kernel_basis(d);

    // Matrix of alpha on the basis (u slots | v slots | w slots | t slots),
    // codomain CF + CF stacked.
    const std::size_t domain = 2 * dim_cf + 2 * ker.size();
    BitMatrix a(2 * dim_cf, domain);
    std::size_t col = 0;
    auto put = [&](const Chain& top, const Chain& bottom, std::size_t c) {
        top.bits.for_each_set([&](std::size_t r) { a.set(r, c); });
        bottom.bits.for_each_set([&](std::size_t r) { a.set(dim_cf + r, c); });
    };
    for (std::size_t p = 0; p < dim_cf; ++p, ++col) {  // u slots
        Chain g(k_small);
        g.toggle(static_cast<std::uint32_t>(p));
        const Chain d_eta = boundary(eta(g));
        put(d_eta, d_eta, col);
    }
    for (std::size_t p = 0; p < dim_cf; ++p, ++col) {  // v slots
        Chain g(k_small);
        g.toggle(static_cast<std::uint32_t>(p));
        put(boundary(g), Chain(k_small), col);
    }
    for (const BitVector& kv : ker) {  // w slots
        Chain g(k_small);
        g.bits = kv;
        put(Chain(k_small), g ^ eta(g), col);
        ++col;
    }
    for (const BitVector& kv : ker) {  // t slots
        Chain g(k_small);
        g.bits = kv;
        put(Chain(k_small), g, col);
        ++col;
    }

    RecursionReport report;
    report.n = n;
    report.big_n = n + 1;
    report.k_small = k_small;
    report.k_big = k_big;
    report.dim_ker_alpha = domain - rank(a);
    report.half_dim_cf_big = std::uint64_t{1} << (k_big - 1);
    report.dim_hf_small = hf_dimension(k_small);
    report.dim_hf_big = hf_dimension(k_big);
    report.kernel_count_matches =
        report.dim_ker_alpha == report.half_dim_cf_big + report.dim_hf_small;
    report.dimension_doubles = report.dim_hf_big == 2 * report.dim_hf_small;
    return report;
}

}  // namespace floer
