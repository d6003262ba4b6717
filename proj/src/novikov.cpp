#include "floer/novikov.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <vector>

#include "floer/chain_complex.hpp"
#include "floer/gf2.hpp"

namespace floer {

namespace {

using U128 = unsigned __int128;

// Absolute-exponent sentinel for "known everywhere".
constexpr std::int64_t kForever = std::numeric_limits<std::int64_t>::max() / 4;

int ctz128(U128 x) {
    const std::uint64_t lo = static_cast<std::uint64_t>(x);
    if (lo) return std::countr_zero(lo);
    return 64 + std::countr_zero(static_cast<std::uint64_t>(x >> 64));
}

// One past the last exponent whose coefficient the scalar knows.
std::int64_t knowledge_end(const NovikovScalar& s) {
    if (s.is_zero() || s.is_exact()) return kForever;
    return static_cast<std::int64_t>(s.valuation) + s.precision;
}

// Normalizes a raw series: strips leading zero coefficients, clamps the
// window to the 64-coefficient storage, and decides exactness. `end` is the
// absolute exponent up to which `poly` is known (kForever when the tail is
// exactly zero).
NovikovScalar normalized(std::int64_t val, U128 poly, std::int64_t end) {
    const bool exact_tail = end >= kForever;
    if (poly == 0) {
        if (exact_tail) return NovikovScalar{};
        throw PrecisionError(
            "every known coefficient cancelled; cannot normalize within the window");
    }
    const int shift = ctz128(poly);
    val += shift;
    poly >>= shift;
    if (!exact_tail && val >= end) {
        throw PrecisionError("leading coefficient lies beyond the known window");
    }
    std::int64_t width = exact_tail ? 128 : end - val;
    if (width > 128) width = 128;
    if (width < 128) {
        const U128 mask = (U128{1} << width) - 1;
        poly &= mask;
    }
    // Storage holds 64 coefficients; knowledge past that is surrendered.
    bool exact = exact_tail;
    if (poly >> 64) {
        exact = false;
        poly = static_cast<std::uint64_t>(poly);
        if (width > 64) width = 64;
    }
    if (width > 64) width = 64;
    if (static_cast<std::uint64_t>(poly) == 0) {
        throw PrecisionError(
            "every known coefficient cancelled; cannot normalize within the window");
    }
    if (val < std::numeric_limits<int>::min() / 2 ||
        val > std::numeric_limits<int>::max() / 2) {
        throw PrecisionError("valuation out of range");
    }
    NovikovScalar s;
    s.valuation = static_cast<int>(val);
    s.coeffs = static_cast<std::uint64_t>(poly);
    if (exact) {
        s.precision = NovikovScalar::kExactPrecision;
    } else {
        s.precision = static_cast<int>(width);
        if (s.precision < 64) {
            s.coeffs &= (std::uint64_t{1} << s.precision) - 1;
        }
        if (s.coeffs == 0) {
            throw PrecisionError(
                "every known coefficient cancelled; cannot normalize within the window");
        }
    }
    return s;
}

U128 poly_mul(std::uint64_t a, std::uint64_t b) {
    U128 acc = 0;
    U128 shifted = a;
    while (b) {
        if (b & 1) acc ^= shifted;
        shifted <<= 1;
        b >>= 1;
    }
    return acc;
}

}  // namespace

NovikovScalar NovikovScalar::monomial(int exponent) {
    NovikovScalar s;
    s.valuation = exponent;
    s.coeffs = 1;
    s.precision = kExactPrecision;
    return s;
}

NovikovScalar NovikovScalar::from_exponents(std::span<const int> exponents) {
    NovikovScalar acc;
    for (int e : exponents) acc = scalar_add(acc, monomial(e));
    return acc;
}

int NovikovScalar::coefficient(int j) const {
    if (is_zero()) return 0;
    if (j < valuation) return 0;
    const std::int64_t offset = static_cast<std::int64_t>(j) - valuation;
    if (offset < 64) {
        const int bit = static_cast<int>((coeffs >> offset) & 1u);
        if (is_exact() || offset < precision) return bit;
    } else if (is_exact()) {
        return 0;
    }
    throw PrecisionError("coefficient of e^" + std::to_string(j) +
                         " lies beyond the known window");
}

NovikovScalar scalar_add(const NovikovScalar& a, const NovikovScalar& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const std::int64_t val = std::min(a.valuation, b.valuation);
    const std::int64_t end = std::min(knowledge_end(a), knowledge_end(b));
    const std::int64_t sa = a.valuation - val;
    const std::int64_t sb = b.valuation - val;
    // Content shifted past the 128-bit working register is surrendered.
    const auto content_top = [](std::uint64_t c) {
        return static_cast<std::int64_t>(64 - std::countl_zero(c));
    };
    std::int64_t capped_end = end;
    if (sa + content_top(a.coeffs) > 128 || sb + content_top(b.coeffs) > 128) {
        capped_end = std::min<std::int64_t>(capped_end, val + 128);
    }
    U128 poly = 0;
    if (sa < 128) poly ^= U128{a.coeffs} << sa;
    if (sb < 128) poly ^= U128{b.coeffs} << sb;
    return normalized(val, poly, capped_end);
}

NovikovScalar scalar_mul(const NovikovScalar& a, const NovikovScalar& b) {
    if (a.is_zero() || b.is_zero()) return NovikovScalar{};
    const std::int64_t val =
        static_cast<std::int64_t>(a.valuation) + b.valuation;
    U128 poly = poly_mul(a.coeffs, b.coeffs);
    std::int64_t end = kForever;
    if (!a.is_exact() || !b.is_exact()) {
        // a = A + O(e^{Ea}), b = B + O(e^{Eb}):
        // ab is known modulo e^{min(val_a + Eb, val_b + Ea)}.
        end = std::min(a.valuation + knowledge_end(b),
                       b.valuation + knowledge_end(a));
    }
    return normalized(val, poly, end);
}

NovikovScalar scalar_div(const NovikovScalar& a, const NovikovScalar& b, int window) {
    if (b.is_zero()) {
        throw DivisionByZeroError("division by the zero series");
    }
    if (window < 1) {
        throw DomainConstraintError("division window must be positive");
    }
    if (a.is_zero()) return NovikovScalar{};
    // Quotient coefficients are limited by the operands' own windows and by
    // the 64-coefficient storage:
    // a/b = A/B + O(e^{min(width_a, width_b)}) relative to the leading term.
    std::int64_t avail = std::min<std::int64_t>(window, 64);
    if (!a.is_exact())
        avail = std::min<std::int64_t>(avail, knowledge_end(a) - a.valuation);
    if (!b.is_exact())
        avail = std::min<std::int64_t>(avail, knowledge_end(b) - b.valuation);
    if (avail < 1) {
        throw PrecisionError("no quotient coefficient is determined by the inputs");
    }
    const bool may_terminate = a.is_exact() && b.is_exact();

    U128 rem = a.coeffs;
    std::uint64_t quotient = 0;
    bool terminated = false;
    while (rem != 0) {
        const int low = ctz128(rem);
        if (low >= 64 || (!may_terminate && low >= avail)) break;
        quotient |= std::uint64_t{1} << low;
        rem ^= U128{b.coeffs} << low;
    }
    if (rem == 0 && may_terminate) terminated = true;

    const std::int64_t val =
        static_cast<std::int64_t>(a.valuation) - b.valuation;
    if (terminated) {
        return normalized(val, quotient, kForever);
    }
    if (avail < 64) quotient &= (std::uint64_t{1} << avail) - 1;
    return normalized(val, quotient, val + avail);
}

NovikovScalar scalar_inv(const NovikovScalar& a, int window) {
    if (a.is_zero()) {
        throw DivisionByZeroError("inversion of zero");
    }
    return scalar_div(NovikovScalar::one(), a, window);
}

bool congruent(const NovikovScalar& a, const NovikovScalar& b, int limit) {
    if (knowledge_end(a) < limit || knowledge_end(b) < limit) {
        throw PrecisionError("operands do not know all coefficients below e^" +
                             std::to_string(limit));
    }
    std::int64_t start = limit;
    if (!a.is_zero()) start = std::min<std::int64_t>(start, a.valuation);
    if (!b.is_zero()) start = std::min<std::int64_t>(start, b.valuation);
    for (std::int64_t j = start; j < limit; ++j) {
        if (a.coefficient(static_cast<int>(j)) != b.coefficient(static_cast<int>(j)))
            return false;
    }
    return true;
}

std::string to_string(const NovikovScalar& s) {
    if (s.is_zero()) return "0";
    std::string out;
    for (int j = 0; j < 64; ++j) {
        if ((s.coeffs >> j) & 1u) {
            if (!out.empty()) out += '+';
            out += "e^" + std::to_string(s.valuation + j);
        }
    }
    return out;
}

NovikovScalar parse_scalar(const std::string& text) {
    if (text == "0") return NovikovScalar{};
    std::vector<int> exponents;
    std::size_t pos = 0;
    while (pos < text.size()) {
        if (text.compare(pos, 2, "e^") != 0) {
            throw DimensionMismatchError("scalar term must look like e^<int>: " + text);
        }
        pos += 2;
        std::size_t used = 0;
        int exponent;
        try {
            exponent = std::stoi(text.substr(pos), &used);
        } catch (const std::exception&) {
            throw DimensionMismatchError("bad exponent in scalar: " + text);
        }
        exponents.push_back(exponent);
        pos += used;
        if (pos < text.size()) {
            if (text[pos] != '+') {
                throw DimensionMismatchError("scalar terms must be joined by '+': " + text);
            }
            ++pos;
        }
    }
    return NovikovScalar::from_exponents(exponents);
}

std::string to_universal_string(const NovikovScalar& s) {
    if (s.is_zero()) return "0";
    std::string out;
    for (int j = 0; j < 64; ++j) {
        if (!((s.coeffs >> j) & 1u)) continue;
        const int exponent = s.valuation + j;
        if (!out.empty()) out += " + ";
        if (exponent == 0) {
            out += "1";
        } else {
            out += "T^(" + std::to_string(period_in_c(exponent)) + "c)e^(" +
                   std::to_string(degree_shift(exponent) / 2) + ")";
        }
    }
    return out;
}

GradedGenerator grade_and_action(PointCode q) {
    const Parity parity = plus_one_count_parity(q);  // odd k enforced here
    const int pop = std::popcount(q.mask);
    const int flips = std::min(pop, q.k + 1 - pop);  // shortest flip path
    GradedGenerator g;
    g.point = q;
    if (parity == Parity::Even) {
        g.j_offset = flips / 2;
        g.grading = 0;
        g.action_in_c = 0;
    } else {
        g.j_offset = (flips - 1) / 2;
        g.grading = -1;
        g.action_in_c = -1;
    }
    return g;
}

NovikovMatrix novikov_boundary_matrix(int k) {
    if (k < 1 || k % 2 == 0) {
        throw UnsupportedDimensionError(
            "deformed boundary needs odd k, got " + std::to_string(k));
    }
    if (k > kMaxNovikovDim) {
        throw CapacityError("dense Novikov matrix capped at k <= " +
                            std::to_string(kMaxNovikovDim));
    }
    const BitMatrix d = boundary_matrix(k);
    const std::size_t n = d.rows();
    NovikovMatrix m(n, n);
    for (std::size_t c = 0; c < n; ++c) {
        const Parity parity =
            plus_one_count_parity(PointCode{k, static_cast<std::uint32_t>(c)});
        const NovikovScalar scale =
            (parity == Parity::Even) ? NovikovScalar::one() : NovikovScalar::monomial(1);
        for (std::size_t r = 0; r < n; ++r) {
            if (d.get(r, c)) m.at(r, c) = scale;
        }
    }
    return m;
}

std::size_t rank(const NovikovMatrix& m, int window, PivotTieBreak tie) {
    if (window < 1) {
        throw DomainConstraintError("elimination window must be positive");
    }
    NovikovMatrix work = m;
    std::size_t rk = 0;
    for (std::size_t c = 0; c < work.cols && rk < work.rows; ++c) {
        // Pivot: minimal valuation, then smallest support, then row order.
        std::size_t pivot = work.rows;
        for (std::size_t r = rk; r < work.rows; ++r) {
            const NovikovScalar& cand = work.at(r, c);
            if (cand.is_zero()) continue;
            if (pivot == work.rows) {
                pivot = r;
                continue;
            }
            const NovikovScalar& best = work.at(pivot, c);
            const auto key = [](const NovikovScalar& s) {
                return std::pair<int, int>(s.valuation, std::popcount(s.coeffs));
            };
            if (key(cand) < key(best)) {
                pivot = r;
            } else if (key(cand) == key(best) && tie == PivotTieBreak::LastRow) {
                pivot = r;
            }
        }
        if (pivot == work.rows) continue;
        if (pivot != rk) {
            for (std::size_t j = 0; j < work.cols; ++j) {
                std::swap(work.at(rk, j), work.at(pivot, j));
            }
        }
        const NovikovScalar pivot_value = work.at(rk, c);
        // Columns the pivot row touches; only these need updating.
        std::vector<std::size_t> touched;
        for (std::size_t j = c + 1; j < work.cols; ++j) {
            if (!work.at(rk, j).is_zero()) touched.push_back(j);
        }
        for (std::size_t r = rk + 1; r < work.rows; ++r) {
            const NovikovScalar& entry = work.at(r, c);
            if (entry.is_zero()) continue;
            const NovikovScalar factor = scalar_div(entry, pivot_value, window);
            for (std::size_t j : touched) {
                work.at(r, j) =
                    scalar_add(work.at(r, j), scalar_mul(factor, work.at(rk, j)));
            }
            work.at(r, c) = NovikovScalar{};  // eliminated by construction
        }
        ++rk;
    }
    return rk;
}

std::uint64_t hf_dimension_novikov(int k, int window) {
    const NovikovMatrix deformed = novikov_boundary_matrix(k);
    const std::size_t rank_novikov = rank(deformed, window);
    const std::size_t rank_gf2 = rank(boundary_matrix(k));
    if (rank_novikov != rank_gf2) {
        throw InvariantError(
            "Novikov rank " + std::to_string(rank_novikov) +
            " differs from the GF(2) rank " + std::to_string(rank_gf2) +
            "; the diagonal column scaling is invertible, so they must agree");
    }
    return (std::uint64_t{1} << k) - 2 * rank_novikov;
}

std::string matrix_to_json(const NovikovMatrix& m) {
    std::ostringstream out;
    out << "{\"rows\":" << m.rows << ",\"cols\":" << m.cols << ",\"entries\":[";
    bool first = true;
    for (std::size_t r = 0; r < m.rows; ++r) {
        for (std::size_t c = 0; c < m.cols; ++c) {
            const NovikovScalar& s = m.at(r, c);
            if (s.is_zero()) continue;
            if (!first) out << ',';
            first = false;
            out << '[' << r << ',' << c << ",\"" << to_string(s) << "\"]";
        }
    }
    out << "]}";
    return out.str();
}

}  // namespace floer
