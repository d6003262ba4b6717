#include "floer/volume.hpp"

#include <numbers>
#include <numeric>
#include <string>

namespace floer {

namespace {

constexpr double kPi = std::numbers::pi;

void check_index(int n) {
    if (n < 1) {
        throw UnsupportedDimensionError("volume index n must be >= 1, got " +
                                        std::to_string(n));
    }
    if (n > 62) {
        throw CapacityError("volume index n capped at 62 (bound numerator is 2^n)");
    }
}

}  // namespace

double vol_rp(int n) {
    check_index(n);
    // pi^n / (n-1)!, accumulated factor by factor to keep magnitudes tame.
    double v = kPi;
    for (int j = 2; j <= n; ++j) v *= kPi / (j - 1);
    return v;
}

double vol_torus(int n) {
    check_index(n);
    // (2pi)^{2n-1} / (2n)^n
    double v = 2.0 * kPi;
    for (int j = 1; j < 2 * n - 1; ++j) v *= 2.0 * kPi;
    for (int j = 0; j < n; ++j) v /= 2.0 * n;
    return v;
}

double volume_ratio(int n) {
    check_index(n);
    return vol_torus(n) / vol_rp(n);
}

Rational make_rational(std::int64_t num, std::int64_t den) {
    if (den == 0) {
        throw DomainConstraintError("rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational{num, den};
}

Rational crofton_bound(int n) {
    check_index(n);
    return make_rational(std::int64_t{1} << n, 2 * n);
}

std::vector<ComparisonRow> comparison_table(int n_max) {
    check_index(n_max);
    std::vector<ComparisonRow> rows;
    rows.reserve(n_max);
    for (int n = 1; n <= n_max; ++n) {
        const double ratio = volume_ratio(n);
        const Rational bound = crofton_bound(n);
        rows.push_back(ComparisonRow{n, ratio, bound, bound.value() >= ratio});
    }
    return rows;
}

}  // namespace floer
