#include "floer/disks.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace floer {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBoundaryTol = 1e-9;
constexpr int kMaxWindingSamples = 1 << 22;

// Gauss-Legendre nodes and weights on [-1, 1], by Newton iteration on the
// Legendre recurrence.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
    x.assign(n, 0.0);
    w.assign(n, 0.0);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double t = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = t;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2 * j - 1) * t * p1 - (j - 1) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (t * p1 - p0) / (t * t - 1.0);
            const double dt = p1 / dp;
            t -= dt;
            if (std::abs(dt) < 1e-15) break;
        }
        x[i] = -t;
        x[n - 1 - i] = t;
        const double wi = 2.0 / ((1.0 - t * t) * dp * dp);
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
}

bool approximately(Complex a, Complex b, double tol) {
    return std::abs(a - b) <= tol;
}

}  // namespace

BlaschkeDisk::BlaschkeDisk(int k, std::vector<BlaschkeCoordinate> coords)
    : k_(k), coords_(std::move(coords)) {
    if (k_ < 1 || k_ > kMaxPointDim) {
        throw CapacityError("disk ambient dimension out of range: " +
                            std::to_string(k_));
    }
    if (static_cast<int>(coords_.size()) != k_ + 1) {
        throw DimensionMismatchError("expected " + std::to_string(k_ + 1) +
                                     " coordinate factors, got " +
                                     std::to_string(coords_.size()));
    }
    for (const auto& c : coords_) {
        for (Complex a : c.zeros) {
            if (std::abs(a) >= 1.0) {
                throw DomainConstraintError("Blaschke zero on or outside the unit circle");
            }
        }
    }
    // The zero sets must have empty common intersection; a coordinate with
    // no zeros settles it immediately.
    bool some_empty = false;
    for (const auto& c : coords_) some_empty |= c.zeros.empty();
    if (!some_empty) {
        for (Complex cand : coords_[0].zeros) {
            bool in_all = true;
            for (int i = 1; i <= k_ && in_all; ++i) {
                in_all = std::any_of(coords_[i].zeros.begin(), coords_[i].zeros.end(),
                                     [&](Complex a) { return approximately(a, cand, 1e-12); });
            }
            if (in_all) {
                throw DomainConstraintError(
                    "all coordinates vanish at a common point; the projective map "
                    "is undefined there");
            }
        }
    }
}

int BlaschkeDisk::total_degree() const {
    int d = 0;
    for (const auto& c : coords_) d += static_cast<int>(c.zeros.size());
    return d;
}

Complex BlaschkeDisk::coordinate_value(int i, Complex z) const {
    Complex v = std::polar(1.0, coords_[i].theta);
    for (Complex a : coords_[i].zeros) {
        v *= (z - a) / (1.0 - std::conj(a) * z);
    }
    return v;
}

Complex BlaschkeDisk::coordinate_derivative(int i, Complex z) const {
    // product rule over factors; each factor's derivative is
    // (1 - |a|^2) / (1 - conj(a) z)^2
    const auto& zeros = coords_[i].zeros;
    const std::size_t n = zeros.size();
    if (n == 0) return {0.0, 0.0};
    std::vector<Complex> fac(n), dfac(n);
    for (std::size_t j = 0; j < n; ++j) {
        const Complex a = zeros[j];
        const Complex den = 1.0 - std::conj(a) * z;
        fac[j] = (z - a) / den;
        dfac[j] = (1.0 - std::norm(a)) / (den * den);
    }
    Complex sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        Complex term = dfac[j];
        for (std::size_t l = 0; l < n; ++l) {
            if (l != j) term *= fac[l];
        }
        sum += term;
    }
    return std::polar(1.0, coords_[i].theta) * sum;
}

std::vector<Complex> evaluate(const BlaschkeDisk& d, Complex z) {
    if (std::abs(z) > 1.0 + 1e-12) {
        throw DomainConstraintError("evaluation point outside the closed unit disk");
    }
    std::vector<Complex> v(d.k() + 1);
    double norm2 = 0.0;
    for (int i = 0; i <= d.k(); ++i) {
        v[i] = d.coordinate_value(i, z);
        norm2 += std::norm(v[i]);
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& c : v) c *= inv;
    return v;
}

PointCode boundary_point(const BlaschkeDisk& d, Complex z) {
    const std::vector<Complex> v = evaluate(d, z);
    std::vector<int> signs(d.k() + 1);
    for (int i = 0; i <= d.k(); ++i) {
        const Complex ratio = v[i] / v[0];
        if (std::abs(ratio.imag()) > kBoundaryTol ||
            std::abs(std::abs(ratio.real()) - 1.0) > kBoundaryTol) {
            throw DomainConstraintError(
                "boundary value is not a real sign vector at the given z");
        }
        signs[i] = ratio.real() > 0 ? 1 : -1;
    }
    return canonicalize(signs, d.k());
}

std::vector<BlaschkeDisk> isolated_strips(PointCode p) {
    const std::vector<int> eps = to_signs(p);
    std::vector<BlaschkeDisk> strips;
    strips.reserve(p.k + 1);
    for (int i = 0; i <= p.k; ++i) {
        std::vector<BlaschkeCoordinate> coords(p.k + 1);
        for (int l = 0; l <= p.k; ++l) {
            if (l == i) {
                // coordinate i becomes -eps_i z
                coords[l].theta = (eps[l] > 0) ? kPi : 0.0;
                coords[l].zeros = {Complex{0.0, 0.0}};
            } else {
                coords[l].theta = (eps[l] > 0) ? 0.0 : kPi;
            }
        }
        BlaschkeDisk d(p.k, std::move(coords));
        const auto [from, to] = strip_endpoints(d);
        if (!(from == p) || !(to == flip(p, i))) {
            throw InvariantError("strip endpoints disagree with the flip of coordinate " +
                                 std::to_string(i));
        }
        strips.push_back(std::move(d));
    }
    return strips;
}

std::pair<PointCode, PointCode> strip_endpoints(const BlaschkeDisk& d) {
    return {boundary_point(d, {-1.0, 0.0}), boundary_point(d, {1.0, 0.0})};
}

int winding_maslov(const BlaschkeDisk& d, int samples) {
    if (samples < 64) {
        throw DomainConstraintError("winding needs at least 64 boundary samples");
    }
    int n = samples;
    while (true) {
        bool too_coarse = false;
        double total_turns = 0.0;
        for (int i = 0; i <= d.k() && !too_coarse; ++i) {
            double accumulated = 0.0;
            double prev = std::arg(d.coordinate_value(i, {1.0, 0.0}));
            for (int s = 1; s <= n; ++s) {
                const double phi = 2.0 * kPi * s / n;
                const double cur =
                    std::arg(d.coordinate_value(i, std::polar(1.0, phi)));
                double step = cur - prev;
                while (step > kPi) step -= 2.0 * kPi;
                while (step < -kPi) step += 2.0 * kPi;
                if (std::abs(step) > kPi / 2.0) {
                    too_coarse = true;
                    break;
                }
                accumulated += step;
                prev = cur;
            }
            total_turns += accumulated / (2.0 * kPi);
        }
        if (!too_coarse) {
            const long rounded = std::lround(total_turns);
            if (std::abs(total_turns - static_cast<double>(rounded)) > 0.25) {
                throw ResolutionError("accumulated winding is not close to an integer");
            }
            const int index = 2 * static_cast<int>(rounded);
            if (index != d.maslov_index()) {
                throw InvariantError("winding index " + std::to_string(index) +
                                     " disagrees with 2 * total degree " +
                                     std::to_string(d.maslov_index()));
            }
            return index;
        }
        if (n >= kMaxWindingSamples) {
            throw ResolutionError(
                "argument step exceeds pi/2 even at the densest sampling");
        }
        n *= 2;
    }
}

namespace {

// Fubini-Study area density pulled back through the disk at z:
//   (|w|^2 |w'|^2 - |<w', w>|^2) / |w|^4,
// with w the vector of coordinate functions. Normalization: a projective
// line has area pi.
double area_density(const BlaschkeDisk& d, Complex z) {
    double norm2 = 0.0, dnorm2 = 0.0;
    Complex mixed = 0.0;
    for (int i = 0; i <= d.k(); ++i) {
        const Complex w = d.coordinate_value(i, z);
        const Complex dw = d.coordinate_derivative(i, z);
        norm2 += std::norm(w);
        dnorm2 += std::norm(dw);
        mixed += dw * std::conj(w);
    }
    return (norm2 * dnorm2 - std::norm(mixed)) / (norm2 * norm2);
}

double energy_at_grid(const BlaschkeDisk& d, double phi_max, int grid) {
    std::vector<double> xr, wr, xp, wp;
    gauss_legendre(grid, xr, wr);
    gauss_legendre(grid, xp, wp);
    double sum = 0.0;
    for (int ir = 0; ir < grid; ++ir) {
        const double r = 0.5 * (xr[ir] + 1.0);
        const double wgt_r = 0.5 * wr[ir];
        for (int ip = 0; ip < grid; ++ip) {
            const double phi = 0.5 * phi_max * (xp[ip] + 1.0);
            const double wgt = wgt_r * 0.5 * phi_max * wp[ip];
            sum += wgt * area_density(d, std::polar(r, phi)) * r;
        }
    }
    return sum;
}

}  // namespace

double energy(const BlaschkeDisk& d, EnergyRegion region, int grid) {
    if (grid < 16) {
        throw DomainConstraintError("quadrature grid must be at least 16");
    }
    const double phi_max = (region == EnergyRegion::FullDisk) ? 2.0 * kPi : kPi;
    double prev = energy_at_grid(d, phi_max, grid);
    double cur = energy_at_grid(d, phi_max, 2 * grid);
    if (std::abs(cur - prev) > 1e-4 * std::abs(cur)) {
        prev = cur;
        cur = energy_at_grid(d, phi_max, 4 * grid);
        if (std::abs(cur - prev) > 1e-4 * std::abs(cur)) {
            throw AccuracyError("quadrature did not converge across two refinements");
        }
    }
    return cur;
}

int maslov_two_disks_through(PointCode p) {
    const std::vector<BlaschkeDisk> strips = isolated_strips(p);
    for (const auto& d : strips) {
        if (!(strip_endpoints(d).first == p)) {
            throw InvariantError("constructed disk does not pass through the base point");
        }
    }
    return static_cast<int>(strips.size());
}

}  // namespace floer
