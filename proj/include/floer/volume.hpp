#pragma once

// Closed-form volumes of RP^{2n-1} and the Clifford torus T^{2n-1} inside
// CP^{2n-1}, the intersection-count volume bound, and their comparison.

#include <cstdint>
#include <vector>

#include "floer/errors.hpp"

namespace floer {

/// vol(RP^{2n-1}) = pi^n / (n-1)!
double vol_rp(int n);

/// vol(T^{2n-1}) = (1/2pi) (2pi/sqrt(2n))^{2n} = (2pi)^{2n-1} / (2n)^n
double vol_torus(int n);

/// vol(T^{2n-1}) / vol(RP^{2n-1})
double volume_ratio(int n);

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;  // reduced, den > 0

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    friend bool operator==(const Rational&, const Rational&) = default;
};

Rational make_rational(std::int64_t num, std::int64_t den);

/// Lower bound 2^n / (2n) for vol(phi(T^{2n-1})) / vol(RP^{2n-1}) over all
/// Hamiltonian diffeomorphisms phi, as an exact rational.
Rational crofton_bound(int n);

struct ComparisonRow {
    int n;
    double ratio;
    Rational bound;
    bool bound_active;  // bound >= ratio: the bound alone certifies minimality
};

std::vector<ComparisonRow> comparison_table(int n_max);

}  // namespace floer
