#include "floer/chain_complex.hpp"

#include "floer/disks.hpp"

namespace floer {

namespace {

void check_matrix_dim(int k) {
    if (k < 1) {
        throw UnsupportedDimensionError("k must be >= 1, got " + std::to_string(k));
    }
    if (k > kMaxBoundaryDim) {
        throw CapacityError("dense boundary matrix capped at k <= " +
                            std::to_string(kMaxBoundaryDim) + ", got " +
                            std::to_string(k));
    }
}

}  // namespace

Chain boundary_image(PointCode p) {
    Chain out(p.k);
    for (int i = 0; i <= p.k; ++i) out.toggle(flip(p, i).mask);
    return out;
}

Chain boundary_tilde_image(PointCode p) {
    Chain out(p.k);
    for (int i = 1; i <= p.k; ++i) out.toggle(flip(p, i).mask);
    return out;
}

PointCode eta(PointCode p) { return flip(p, 0); }

Chain boundary(const Chain& x) {
    Chain out(x.k);
    x.bits.for_each_set([&](std::size_t p) {
        const PointCode g{x.k, static_cast<std::uint32_t>(p)};
        for (int i = 0; i <= x.k; ++i) out.toggle(flip(g, i).mask);
    });
    return out;
}

Chain boundary_tilde(const Chain& x) {
    Chain out(x.k);
    x.bits.for_each_set([&](std::size_t p) {
        const PointCode g{x.k, static_cast<std::uint32_t>(p)};
        for (int i = 1; i <= x.k; ++i) out.toggle(flip(g, i).mask);
    });
    return out;
}

Chain eta(const Chain& x) {
    Chain out(x.k);
    x.bits.for_each_set([&](std::size_t p) {
        out.toggle(flip(PointCode{x.k, static_cast<std::uint32_t>(p)}, 0).mask);
    });
    return out;
}

BitMatrix boundary_matrix(int k) {
    check_matrix_dim(k);
    const std::size_t n = std::size_t{1} << k;
    BitMatrix m(n, n);
    for (std::uint32_t p = 0; p < n; ++p) {
        const PointCode g{k, p};
        for (int i = 0; i <= k; ++i) m.toggle(flip(g, i).mask, p);
    }
    return m;
}

Obstruction obstruction(int k) {
    if (k < 2) {
        throw UnsupportedDimensionError(
            "obstruction parity needs k >= 2 (at k=1 the two Lagrangians coincide)");
    }
    check_matrix_dim(k);
    const std::uint64_t phi_t =
        static_cast<std::uint64_t>(maslov_two_disks_through(PointCode{k, 0}));
    const bool square_zero = ((k + 1) % 2) == 0;

    const BitMatrix d = boundary_matrix(k);
    const BitMatrix square = multiply(d, d);
    const bool identity_holds =
        square_zero ? is_zero(square)
                    : (square == identity_matrix(square.rows()));
    if (!identity_holds) {
        throw InvariantError("d^2 != ((k+1) mod 2) I at k=" + std::to_string(k));
    }
    return Obstruction{k, 0, phi_t, square_zero};
}

std::uint64_t hf_dimension(int k) {
    if (k < 1) {
        throw UnsupportedDimensionError("k must be >= 1, got " + std::to_string(k));
    }
    if (k % 2 == 0) {
        throw ObstructionError(
            "homology undefined for even k=" + std::to_string(k) +
            ": disk bubbling gives d^2 = I",
            (k + 1) % 2);
    }
    check_matrix_dim(k);
    const std::uint64_t dim_cf = std::uint64_t{1} << k;
    return dim_cf - 2 * rank(boundary_matrix(k));
}

}  // namespace floer
