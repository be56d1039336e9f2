#pragma once

#include <functional>

#include "qdouble/su2.hpp"

namespace qdouble {

// Generic irrep label of D(SU(2)): conjugacy-class rotation angle r in the
// open interval (0, 2pi) and a half-integer U(1) centralizer character n.
struct GenericIrrepLabel {
    double r = 0.0;
    HalfInt n;
};
void validate_generic_label(const GenericIrrepLabel& l);

struct DSu2Labels {
    GenericIrrepLabel first, second;
};

// Fusion interval I_{r1 r2} = [|r1-r2|, min(r1+r2, 4pi-(r1+r2))].
struct FusionInterval {
    double lo = 0.0, hi = 0.0;
    bool contains(double r3, double tol = 0.0) const { return r3 >= lo - tol && r3 <= hi + tol; }
};
FusionInterval fusion_interval(double r1, double r2);

// One point of the Clebsch-Gordan series of Pi^{r1}_{n1} x Pi^{r2}_{n2}:
// an output class angle r3 = lambda(theta) inside the fusion interval, the
// centralizer character n3 on the n1+n2 ladder, and the nu-density there.
struct FusionChannel {
    double r3 = 0.0;
    double theta = 0.0;
    HalfInt n3;
    double nu_density = 0.0;
};
// Validates the selection rule and the interval membership; theta in [0, pi].
FusionChannel make_fusion_channel(const DSu2Labels& labels, double theta, HalfInt n3);

// r3 = 2 arccos(cos(r1/2)cos(r2/2) - cos(theta) sin(r1/2)sin(r2/2));
// strictly decreasing in theta on (0, pi), endpoints hit the interval ends.
double lambda_map(double r1, double r2, double theta);
// inverse of lambda_map; throws std::domain_error when r3 is outside I_{r1 r2}
double theta_from_r3(double r1, double r2, double r3);

// density of the fusion measure nu on I_{r1 r2}: sin(r3/2)/(4 sin(r1/2) sin(r2/2))
double nu_density(double r1, double r2, double r3);
// integral of the density over the interval, by Gauss-Legendre (should be 1)
double nu_total_mass(double r1, double r2, int gl_order = 64);

// Conjugator w(theta) = g_{phi_w} a_{theta_w} with
// w g_{r3} w^-1 = g_{r1} a_theta g_{r2} a_theta^-1. Third Euler angle fixed
// to zero. Throws std::domain_error when sin(r3/2) < 1e-9 (channel touching
// a nongeneric class).
SU2Element w_of_theta(double r1, double r2, double theta);

// Optional modification of the section choices:
//   a_theta -> g_phi a_theta g_psi,  w -> g_phi w g_zeta.
// The generalized CG coefficients pick up only the phase
// e^{i(n1 phi - n2 psi + n3 zeta)}; Gram matrices are unchanged.
struct SectionGauge {
    double phi = 0.0, psi = 0.0, zeta = 0.0;
};

// Generalized Clebsch-Gordan coefficient
//   <(r1,n1) j1 m1, (r2,n2) j2 m2 | (r3,n3) j m>
// Zero when m != m1+m2 or the (j,n3) index pair is invalid; throws
// std::invalid_argument when n3 - (n1+n2) is not a whole integer.
cplx dsu2_cgc(const DSu2Labels& labels, HalfInt n3, double r3,
              HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j, HalfInt m,
              const SectionGauge& gauge = {});

// Independent oracle: the U(1)-averaged projection integral evaluated on the
// product Wigner state, then projected onto D^j_{(m1+m2) n3} by Haar
// quadrature. Shares no code path with the closed form above.
cplx dsu2_cgc_quadrature(const DSu2Labels& labels, HalfInt n3, double r3,
                         HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j,
                         int zeta_points = 1024);

// Expansion of rho^{r3}_{n3} (D^{j1}_{m1 n1} x D^{j2}_{m2 n2}) over basis
// functions D^j_{m n3}; m = m1+m2 for every term.
struct RhoTerm {
    HalfInt j, m;
    cplx coeff;
};
std::vector<RhoTerm> rho_apply(const DSu2Labels& labels, HalfInt n3, double r3,
                               HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2,
                               const SectionGauge& gauge = {});

// Pointwise braid operator on callable tensor states:
//   (R Phi)(x,y) = Phi(y, y g_{r1}^{-1} y^{-1} x)   (values are scalars here)
using TensorFn = std::function<cplx(const SU2Element&, const SU2Element&)>;
cplx braid_eval(const DSu2Labels& labels, const TensorFn& phi,
                const SU2Element& x, const SU2Element& y);
// inverse braid, mapping back from the swapped representation
cplx braid_inverse_eval(const DSu2Labels& labels, const TensorFn& psi,
                        const SU2Element& x, const SU2Element& y);

// Orthogonality Gram matrix of the generalized CG coefficients: rows/columns
// indexed by (j1, m1, j2, m2) with j_i <= jmax on the n_i ladders; entries
//   sum_{n3} sum'_j (2j+1)^{-1} int_I <t|..> conj(<t'|..>) dnu(r3)
// computed as a theta-integral with Gauss-Legendre in cos(theta). The target
// is delta_{j1 j1'} delta_{j2 j2'} delta_{m1 m1'} / ((2j1+1)(2j2+1)).
struct GramReport {
    struct Key {
        HalfInt j1, m1, j2, m2;
    };
    std::vector<Key> basis;
    CMat gram;          // basis x basis; entries with mismatched total m are exact zeros
    double max_defect = 0.0;
    double min_diag = 0.0, max_diag = 0.0;
};
GramReport orthogonality_gram(const DSu2Labels& labels, HalfInt jmax, int gl_order,
                              const SectionGauge& gauge = {});

// Character of a generic irrep on separable F(x,y) = f1(x) f2(y):
//   chi(F) = int_SU2 int_U1 f1(z g_r z^-1) f2(z g_zeta z^-1) e^{i n zeta}
// with normalized measures (zeta over a 4pi period).
using ClassFn = std::function<cplx(const SU2Element&)>;
cplx character_su2(const GenericIrrepLabel& label, const ClassFn& f1, const ClassFn& f2,
                   int order_phi, int order_theta, int order_psi, int zeta_points);

} // namespace qdouble
