#pragma once

#include <array>
#include <vector>

#include "qdouble/halfint.hpp"
#include "qdouble/linalg.hpp"

namespace qdouble {

// Point of SU(2), carried both as Euler angles (phi, theta, psi) with
// phi in [0,2pi), theta in [0,pi], psi in [-2pi,2pi), and as the matrix
// g_phi a_theta g_psi with
//   g_phi = diag(e^{i phi/2}, e^{-i phi/2}),
//   a_theta = [[cos t/2, -sin t/2], [sin t/2, cos t/2]].
// At theta in {0,pi} the split of phi+psi (resp. phi-psi) is degenerate; the
// canonical choice absorbs everything into phi, with psi in {0,-2pi} as the
// phi range requires.
struct SU2Element {
    double phi = 0.0, theta = 0.0, psi = 0.0;
    std::array<cplx, 4> m{cplx(1.0), cplx(0.0), cplx(0.0), cplx(1.0)}; // row-major 2x2

    static SU2Element identity() { return SU2Element{}; }
    static SU2Element from_euler(double phi, double theta, double psi);
    static SU2Element from_matrix(const std::array<cplx, 4>& m); // canonical Euler extraction
    // g(r, theta, phi) = exp(i r/2 n(theta,phi).tau), tau1 diagonal
    static SU2Element from_axis_angle(double r, double theta, double phi);
    static SU2Element g_phi(double angle) { return from_euler_raw(angle, 0.0, 0.0); }
    static SU2Element a_theta(double angle) { return from_euler_raw(0.0, angle, 0.0); }

    SU2Element operator*(const SU2Element& o) const;
    SU2Element inverse() const;
    cplx trace() const { return m[0] + m[3]; }
    double matrix_distance(const SU2Element& o) const;

private:
    // matrix from angles without re-canonicalization (angles stored as given)
    static SU2Element from_euler_raw(double phi, double theta, double psi);
};

// Wigner small-d matrix element d^j_{mn}(theta), explicit factorial sum.
// Stable in double precision up to j ~ 20. Throws on out-of-range or
// parity-inconsistent indices.
double wigner_small_d(HalfInt j, HalfInt m, HalfInt n, double theta);

// D^j_{mn}(g) = e^{-im phi} d^j_{mn}(theta) e^{-in psi}
cplx wigner_D(HalfInt j, HalfInt m, HalfInt n, const SU2Element& g);

// full (2j+1) x (2j+1) matrix, rows/cols ordered m = j, j-1, ..., -j
CMat wigner_D_matrix(HalfInt j, const SU2Element& g);

// Clebsch-Gordan coefficient <j1 m1 j2 m2 | j m>, Condon-Shortley phase.
// Returns 0 outside the selection rules and for malformed index pairs.
double su2_cgc(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j, HalfInt m);

// Gauss-Legendre nodes/weights on [-1, 1].
struct GaussLegendre {
    std::vector<double> x, w;
};
GaussLegendre gauss_legendre(int npts);

// Quadrature rule for normalized Haar measure on SU(2):
// uniform trapezoid in phi (period 2pi) and psi (period 4pi), Gauss-Legendre
// in cos(theta). Exact on Wigner products up to the band limit implied by
// the orders; order_psi should be even so the psi sum kills half-odd
// frequencies from mixed integer/half-integer spin products.
struct Su2Quadrature {
    struct Node {
        double phi, theta, psi;
        SU2Element g;
        double weight;
    };
    std::vector<Node> nodes;
};
Su2Quadrature haar_quadrature(int order_phi, int order_theta, int order_psi);

// factorial as double, n <= 170
double factorial(int n);

} // namespace qdouble
