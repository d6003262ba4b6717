#pragma once

// The Novikov field of formal GF(2) series in one generator e with support
// bounded below, the graded/filtered basis of the chain group it acts on,
// and the deformed boundary operator whose columns are rescaled by the
// action filtration.

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "floer/errors.hpp"
#include "floer/signvec.hpp"

namespace floer {

// A series sum_j a_j e^j with a_j in GF(2) and support bounded below.
//
// A scalar is exactly zero, an exact polynomial (every coefficient outside
// the stored window is zero), or a truncation known only on the window
// [valuation, valuation + precision). Sums and products of exact scalars
// stay exact; division falls back to a truncated series when the quotient
// does not terminate. Operations throw PrecisionError instead of guessing
// when cancellation pushes the leading term below the known window.
//
// Invariants: zero is {0, kExactPrecision, 0}. Otherwise bit 0 of coeffs
// (the leading coefficient) is set, and a truncated scalar has
// 1 <= precision <= 64 with no coefficient bits at or above it.
struct NovikovScalar {
    static constexpr int kExactPrecision = std::numeric_limits<int>::max();

    int valuation = 0;
    int precision = kExactPrecision;
    std::uint64_t coeffs = 0;  // bit j = coefficient of e^{valuation + j}

    static NovikovScalar monomial(int exponent);
    static NovikovScalar one() { return monomial(0); }
    // Exact polynomial with the given exponents (duplicates cancel mod 2).
    static NovikovScalar from_exponents(std::span<const int> exponents);

    bool is_zero() const { return coeffs == 0; }
    bool is_exact() const { return precision == kExactPrecision; }
    bool is_monomial() const { return coeffs == 1; }

    // Coefficient of e^j; throws PrecisionError beyond the known window.
    int coefficient(int j) const;

    friend bool operator==(const NovikovScalar&, const NovikovScalar&) = default;
};

NovikovScalar scalar_add(const NovikovScalar& a, const NovikovScalar& b);
NovikovScalar scalar_mul(const NovikovScalar& a, const NovikovScalar& b);
// Quotient a / b, exact when the polynomial division terminates and
// otherwise truncated to `window` coefficients from the leading term.
NovikovScalar scalar_div(const NovikovScalar& a, const NovikovScalar& b, int window);
// Multiplicative inverse to `window` coefficients; the leading coefficient
// is a unit in GF(2), so this is leading-term division with refinement.
NovikovScalar scalar_inv(const NovikovScalar& a, int window);

// Coefficient-wise equality below e^limit; both scalars must know that range.
bool congruent(const NovikovScalar& a, const NovikovScalar& b, int limit);

// Sparse exponent list, e.g. "e^0+e^2"; zero prints as "0".
std::string to_string(const NovikovScalar& s);
NovikovScalar parse_scalar(const std::string& text);

// Image in the universal one-variable ring: e^j maps to T^{2jc} e^{-j},
// with the monotonicity constant c kept symbolic.
std::string to_universal_string(const NovikovScalar& s);

// A basis element of the chain group over the Novikov field: the point, the
// exponent that normalizes its reference strip to action zero, and the
// resulting grading/action. Actions are integer multiples of the
// monotonicity constant c.
struct GradedGenerator {
    PointCode point;
    int j_offset;
    int grading;      // 0 or -1
    int action_in_c;  // 0 or -1

    double action(double c) const { return action_in_c * c; }
};

// Grading and action of the normalized generator over q (odd k only).
// A point with an even number of +1 homogeneous coordinates sits in
// grading 0 with action 0; an odd count gives grading -1 and action -c.
GradedGenerator grade_and_action(PointCode q);

// Degree and period of e^j.
constexpr int degree_shift(int j) { return -2 * j; }
constexpr int period_in_c(int j) { return 2 * j; }

inline constexpr int kMaxNovikovDim = 11;

struct NovikovMatrix {
    std::size_t rows = 0, cols = 0;
    std::vector<NovikovScalar> entries;  // row-major

    NovikovMatrix() = default;
    NovikovMatrix(std::size_t r, std::size_t c)
        : rows(r), cols(c), entries(r * c) {}

    NovikovScalar& at(std::size_t r, std::size_t c) { return entries[r * cols + c]; }
    const NovikovScalar& at(std::size_t r, std::size_t c) const {
        return entries[r * cols + c];
    }
};

// The deformed boundary operator: columns over points with an even number
// of +1 homogeneous coordinates agree with the GF(2) matrix (lifted), the
// remaining columns are scaled by e.
NovikovMatrix novikov_boundary_matrix(int k);

enum class PivotTieBreak { FirstRow, LastRow };

// Rank over the Novikov field by Gaussian elimination with valuation-aware
// pivoting: the pivot is an entry of minimal valuation (ties broken toward
// smaller support, then by row order per `tie`). The result must not
// depend on the tie-break.
std::size_t rank(const NovikovMatrix& m, int window,
                 PivotTieBreak tie = PivotTieBreak::FirstRow);

// 2^k - 2 rank(d') over the Novikov field, asserted equal to the GF(2)
// computation (the deformed matrix is the GF(2) one times an invertible
// diagonal).
std::uint64_t hf_dimension_novikov(int k, int window);

// JSON text of the nonzero entries as (row, col, scalar) triples.
std::string matrix_to_json(const NovikovMatrix& m);

}  // namespace floer
