#pragma once

// Holomorphic disks with boundary on the Clifford torus, written in
// homogeneous coordinates as finite Blaschke products. Provides evaluation,
// the isolated strips out of an intersection point, Maslov indices by
// boundary winding, and symplectic area by Fubini-Study quadrature.

#include <complex>
#include <utility>
#include <vector>

#include "floer/signvec.hpp"

namespace floer {

using Complex = std::complex<double>;

struct BlaschkeCoordinate {
    double theta = 0.0;           // boundary phase, radians
    std::vector<Complex> zeros;   // all strictly inside the unit disk
};

// One homogeneous-coordinate Blaschke product per ambient coordinate:
//   w_i(z) = e^{i theta_i} prod_j (z - a_{i,j}) / (1 - conj(a_{i,j}) z).
// Validity: every |a| < 1, and the per-coordinate zero sets have no common
// point, so the map into projective space is defined on the closed disk.
class BlaschkeDisk {
public:
    BlaschkeDisk(int k, std::vector<BlaschkeCoordinate> coords);

    int k() const { return k_; }
    const std::vector<BlaschkeCoordinate>& coordinates() const { return coords_; }

    int degree(int i) const { return static_cast<int>(coords_[i].zeros.size()); }
    int total_degree() const;
    int maslov_index() const { return 2 * total_degree(); }

    // Unnormalized coordinate function and its complex derivative.
    Complex coordinate_value(int i, Complex z) const;
    Complex coordinate_derivative(int i, Complex z) const;

private:
    int k_;
    std::vector<BlaschkeCoordinate> coords_;
};

// Homogeneous coordinate vector at z (|z| <= 1), scaled to unit Euclidean
// norm. On |z| = 1 every coordinate has the same modulus, so the boundary
// value lies on the torus.
std::vector<Complex> evaluate(const BlaschkeDisk& d, Complex z);

// Reads a boundary value (z on the unit circle) as a projective sign
// vector. Only meaningful where the disk meets RP^k; checked numerically.
PointCode boundary_point(const BlaschkeDisk& d, Complex z);

// The k+1 isolated strips out of p: strip i replaces homogeneous coordinate
// i of p by -eps_i z and keeps the others constant. Each is half of a
// degree-one disk (Maslov index 2 as a disk, 1 as a strip). Evaluation at
// z = -1 gives p and at z = +1 gives flip(p, i); both are asserted.
std::vector<BlaschkeDisk> isolated_strips(PointCode p);

// Maslov index as twice the total boundary winding of the coordinate
// functions, tracked by accumulated argument around |z| = 1. Sampling is
// doubled adaptively when an argument step exceeds pi/2; a step past pi at
// the densest sampling raises ResolutionError. The result is asserted
// against twice the algebraic degree.
int winding_maslov(const BlaschkeDisk& d, int samples);

enum class EnergyRegion { FullDisk, UpperHalf };

// Symplectic area of (a region of) the disk: the pullback of the
// Fubini-Study form, normalized so a projective line has area pi,
// integrated by tensor-product Gauss-Legendre quadrature in polar
// coordinates. The grid is doubled until two successive refinements agree
// to 1e-4 relative; persistent disagreement raises AccuracyError.
double energy(const BlaschkeDisk& d, EnergyRegion region, int grid);

// Number of Maslov index 2 disks with boundary on the torus through p:
// the k+1 single-coordinate degree-one families, built explicitly and
// checked to pass through p.
int maslov_two_disks_through(PointCode p);

// Boundary endpoints of a strip-like disk, at z = -1 and z = +1.
std::pair<PointCode, PointCode> strip_endpoints(const BlaschkeDisk& d);

}  // namespace floer
