#include "qdouble/dsu2.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qdouble {

namespace {
constexpr double pi = std::numbers::pi;
constexpr double clamp_tol = 1e-12;

double checked_acos(double x, const char* what) {
    if (x > 1.0 + clamp_tol || x < -1.0 - clamp_tol)
        throw std::domain_error(std::string(what) + ": argument outside [-1,1] beyond roundoff");
    return std::acos(std::min(1.0, std::max(-1.0, x)));
}
} // namespace

void validate_generic_label(const GenericIrrepLabel& l) {
    if (!(l.r > 0.0 && l.r < 2.0 * pi))
        throw std::invalid_argument("generic irrep label needs r strictly inside (0, 2pi)");
}

FusionInterval fusion_interval(double r1, double r2) {
    FusionInterval iv;
    iv.lo = std::abs(r1 - r2);
    iv.hi = std::min(r1 + r2, 4.0 * pi - (r1 + r2));
    return iv;
}

FusionChannel make_fusion_channel(const DSu2Labels& labels, double theta, HalfInt n3) {
    validate_generic_label(labels.first);
    validate_generic_label(labels.second);
    if (!(theta >= 0.0 && theta <= pi))
        throw std::invalid_argument("make_fusion_channel: theta outside [0, pi]");
    if (!n3.same_ladder(labels.first.n + labels.second.n))
        throw std::invalid_argument("make_fusion_channel: n3 violates the n1+n2 mod Z rule");
    FusionChannel ch;
    ch.theta = theta;
    ch.n3 = n3;
    ch.r3 = lambda_map(labels.first.r, labels.second.r, theta);
    ch.nu_density = nu_density(labels.first.r, labels.second.r, ch.r3);
    return ch;
}

double lambda_map(double r1, double r2, double theta) {
    // half-angle form of 2 acos(cos(r1/2)cos(r2/2) - cos(theta) sin(r1/2)sin(r2/2)):
    // both radicands are sums of nonnegative terms, so the interval endpoints
    // come out exact instead of losing half the digits to acos near +-1
    double s1s2 = std::sin(r1 / 2.0) * std::sin(r2 / 2.0);
    double ch = std::cos(theta / 2.0), sh = std::sin(theta / 2.0);
    double sd = std::sin((r1 - r2) / 4.0), cs = std::cos((r1 + r2) / 4.0);
    double a = sd * sd + ch * ch * s1s2;
    double b = cs * cs + sh * sh * s1s2;
    if (a < -clamp_tol || b < -clamp_tol)
        throw std::domain_error("lambda_map: arguments outside the generic domain");
    return 4.0 * std::atan2(std::sqrt(std::max(a, 0.0)), std::sqrt(std::max(b, 0.0)));
}

double theta_from_r3(double r1, double r2, double r3) {
    FusionInterval iv = fusion_interval(r1, r2);
    if (!iv.contains(r3, 1e-12))
        throw std::domain_error("theta_from_r3: r3 outside the fusion interval");
    double s12 = std::sin(r1 / 2.0) * std::sin(r2 / 2.0);
    double arg = (std::cos(r1 / 2.0) * std::cos(r2 / 2.0) - std::cos(r3 / 2.0)) / s12;
    return checked_acos(arg, "theta_from_r3");
}

double nu_density(double r1, double r2, double r3) {
    if (!fusion_interval(r1, r2).contains(r3)) return 0.0;
    return std::sin(r3 / 2.0) / (4.0 * std::sin(r1 / 2.0) * std::sin(r2 / 2.0));
}

double nu_total_mass(double r1, double r2, int gl_order) {
    FusionInterval iv = fusion_interval(r1, r2);
    GaussLegendre gl = gauss_legendre(gl_order);
    double half = (iv.hi - iv.lo) / 2.0, mid = (iv.hi + iv.lo) / 2.0;
    double s = 0.0;
    for (size_t i = 0; i < gl.x.size(); ++i)
        s += gl.w[i] * nu_density(r1, r2, mid + half * gl.x[i]);
    return s * half;
}

SU2Element w_of_theta(double r1, double r2, double theta) {
    double r3 = lambda_map(r1, r2, theta);
    double s3 = std::sin(r3 / 2.0);
    if (std::abs(s3) < 1e-9)
        throw std::domain_error("w_of_theta: degenerate channel, sin(r3/2) ~ 0");
    double c1 = std::cos(r1 / 2.0), s1 = std::sin(r1 / 2.0);
    double c2 = std::cos(r2 / 2.0), s2 = std::sin(r2 / 2.0);
    double n1 = (s1 * c2 + std::cos(theta) * c1 * s2) / s3;
    double n2 = std::sin(theta) * c1 * s2 / s3;
    double n3 = std::sin(theta) * s1 * s2 / s3;
    double sin_tw = std::hypot(n2, n3);
    double theta_w = std::atan2(sin_tw, n1);
    double phi_w = sin_tw < 1e-13 ? 0.0 : std::atan2(n3, n2);
    if (phi_w < 0.0) phi_w += 2.0 * pi;
    return SU2Element::from_euler(phi_w, theta_w, 0.0);
}

cplx dsu2_cgc(const DSu2Labels& labels, HalfInt n3, double r3,
              HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j, HalfInt m,
              const SectionGauge& gauge) {
    validate_generic_label(labels.first);
    validate_generic_label(labels.second);
    HalfInt n1 = labels.first.n, n2 = labels.second.n;
    if (!n3.same_ladder(n1 + n2))
        throw std::invalid_argument("dsu2_cgc: n3 violates the selection rule n3 = n1+n2 mod Z");
    if (m != m1 + m2) return 0.0;
    if (abs(n3) > j || !j.same_ladder(n3)) return 0.0; // no such basis function D^j_{m n3}
    if (abs(m) > j) return 0.0;

    double cg_m = su2_cgc(j1, m1, j2, m2, j, m);
    if (cg_m == 0.0) return 0.0;

    double theta = theta_from_r3(labels.first.r, labels.second.r, r3);
    SU2Element y_el = SU2Element::g_phi(gauge.phi) * SU2Element::a_theta(theta) *
                      SU2Element::g_phi(gauge.psi);
    SU2Element w_el = SU2Element::g_phi(gauge.phi) *
                      w_of_theta(labels.first.r, labels.second.r, theta) *
                      SU2Element::g_phi(gauge.zeta);

    HalfInt p2 = max(-(j + n1), -j2);
    if (!p2.same_ladder(j2)) p2 = HalfInt::from_twice(p2.twice + 1); // align to the j2 ladder
    HalfInt p2_max = min(j - n1, j2);
    cplx sum = 0.0;
    for (; p2 <= p2_max; p2 += 1) {
        double cg_n = su2_cgc(j1, n1, j2, p2, j, n1 + p2);
        if (cg_n == 0.0) continue;
        sum += cg_n * wigner_D(j2, p2, n2, y_el) * std::conj(wigner_D(j, n1 + p2, n3, w_el));
    }
    return cg_m * sum;
}

cplx dsu2_cgc_quadrature(const DSu2Labels& labels, HalfInt n3, double r3,
                         HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j,
                         int zeta_points) {
    validate_generic_label(labels.first);
    validate_generic_label(labels.second);
    HalfInt n1 = labels.first.n, n2 = labels.second.n;
    HalfInt m = m1 + m2;
    if (abs(m) > j || abs(n3) > j || !j.same_ladder(n3) || !j.same_ladder(m)) return 0.0;

    double theta = theta_from_r3(labels.first.r, labels.second.r, r3);
    SU2Element a_th = SU2Element::a_theta(theta);
    SU2Element w_inv = w_of_theta(labels.first.r, labels.second.r, theta).inverse();

    // band limit of the integrand: j1+j2 in each slot
    int band = (j1 + j2).twice + 2;
    Su2Quadrature haar = haar_quadrature(2 * band + 2, band + 2, 2 * band + 2);

    cplx acc = 0.0;
    for (const auto& node : haar.nodes) {
        // U(1) average of Phi(x g_z w^-1, x g_z w^-1 a_theta) e^{i n3 zeta}
        cplx inner = 0.0;
        for (int c = 0; c < zeta_points; ++c) {
            double zeta = -2.0 * pi + 4.0 * pi * c / zeta_points;
            SU2Element u = node.g * SU2Element::g_phi(zeta) * w_inv;
            inner += std::polar(1.0, n3.value() * zeta) * wigner_D(j1, m1, n1, u) *
                     wigner_D(j2, m2, n2, u * a_th);
        }
        inner /= double(zeta_points);
        acc += node.weight * inner * std::conj(wigner_D(j, m, n3, node.g));
    }
    return acc * (j.twice + 1.0);
}

std::vector<RhoTerm> rho_apply(const DSu2Labels& labels, HalfInt n3, double r3,
                               HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2,
                               const SectionGauge& gauge) {
    HalfInt n1 = labels.first.n, n2 = labels.second.n;
    if (abs(m1) > j1 || abs(m2) > j2 || !j1.same_ladder(n1) || !j2.same_ladder(n2) ||
        j1 < abs(n1) || j2 < abs(n2))
        throw std::invalid_argument("rho_apply: (j,m,n) labels do not index basis functions");
    HalfInt m = m1 + m2;
    // j >= |n3| so that D^j_{m n3} exists; terms with j below |n1+n2| but
    // >= |n3| are genuinely present (the U(1) projection reaches them via p2)
    HalfInt jlo = max(max(abs(j1 - j2), abs(m)), abs(n3));
    std::vector<RhoTerm> out;
    for (HalfInt j = jlo; j <= j1 + j2; j += 1)
        out.push_back({j, m, dsu2_cgc(labels, n3, r3, j1, m1, j2, m2, j, m, gauge)});
    return out;
}

cplx braid_eval(const DSu2Labels& labels, const TensorFn& phi,
                const SU2Element& x, const SU2Element& y) {
    SU2Element arg = y * SU2Element::g_phi(-labels.first.r) * y.inverse() * x;
    return phi(y, arg);
}

cplx braid_inverse_eval(const DSu2Labels& labels, const TensorFn& psi,
                        const SU2Element& x, const SU2Element& y) {
    SU2Element arg = x * SU2Element::g_phi(labels.first.r) * x.inverse() * y;
    return psi(arg, x);
}

GramReport orthogonality_gram(const DSu2Labels& labels, HalfInt jmax, int gl_order,
                              const SectionGauge& gauge) {
    validate_generic_label(labels.first);
    validate_generic_label(labels.second);
    HalfInt n1 = labels.first.n, n2 = labels.second.n;

    GramReport rep;
    for (HalfInt j1 = abs(n1); j1 <= jmax; j1 += 1)
        for (HalfInt m1 = -j1; m1 <= j1; m1 += 1)
            for (HalfInt j2 = abs(n2); j2 <= jmax; j2 += 1)
                for (HalfInt m2 = -j2; m2 <= j2; m2 += 1)
                    rep.basis.push_back({j1, m1, j2, m2});
    int nb = int(rep.basis.size());
    rep.gram = CMat(nb, nb);

    HalfInt jtop = jmax + jmax;            // largest total spin among pairs
    HalfInt base = n1 + n2;                // n3 ladder anchor
    std::vector<HalfInt> n3_list;
    for (int t = -jtop.twice; t <= jtop.twice; ++t)
        if (HalfInt::from_twice(t).same_ladder(base)) n3_list.push_back(HalfInt::from_twice(t));
    std::vector<HalfInt> j_list; // on the ladder of j1+j2, i.e. of n1+n2
    for (HalfInt j = HalfInt::from_twice(std::abs(base.twice) % 2); j <= jtop; j += 1)
        j_list.push_back(j);

    GaussLegendre gl = gauss_legendre(gl_order);
    for (size_t q = 0; q < gl.x.size(); ++q) {
        double theta = std::acos(gl.x[q]);
        double wq = gl.w[q] / 2.0; // (1/2) sin(theta) dtheta pulled back to cos(theta)
        double r3 = lambda_map(labels.first.r, labels.second.r, theta);

        // cache coefficients for every basis tuple and (n3, j)
        std::vector<std::vector<std::vector<cplx>>> coeff(
            n3_list.size(), std::vector<std::vector<cplx>>(j_list.size(), std::vector<cplx>(nb, 0.0)));
        for (size_t a = 0; a < n3_list.size(); ++a)
            for (size_t b = 0; b < j_list.size(); ++b)
                for (int t = 0; t < nb; ++t) {
                    const auto& key = rep.basis[t];
                    coeff[a][b][t] = dsu2_cgc(labels, n3_list[a], r3, key.j1, key.m1, key.j2,
                                              key.m2, j_list[b], key.m1 + key.m2, gauge);
                }
        for (int t = 0; t < nb; ++t)
            for (int u = 0; u < nb; ++u) {
                if ((rep.basis[t].m1 + rep.basis[t].m2) != (rep.basis[u].m1 + rep.basis[u].m2))
                    continue;
                cplx s = 0.0;
                for (size_t a = 0; a < n3_list.size(); ++a)
                    for (size_t b = 0; b < j_list.size(); ++b)
                        s += coeff[a][b][t] * std::conj(coeff[a][b][u]) / (j_list[b].twice + 1.0);
                rep.gram(t, u) += wq * s;
            }
    }

    rep.min_diag = 1e300;
    rep.max_diag = -1e300;
    for (int t = 0; t < nb; ++t)
        for (int u = 0; u < nb; ++u) {
            const auto& kt = rep.basis[t];
            const auto& ku = rep.basis[u];
            double target = (kt.j1 == ku.j1 && kt.j2 == ku.j2 && kt.m1 == ku.m1 &&
                             kt.m2 == ku.m2)
                                ? 1.0 / ((kt.j1.twice + 1.0) * (kt.j2.twice + 1.0))
                                : 0.0;
            rep.max_defect = std::max(rep.max_defect, std::abs(rep.gram(t, u) - target));
            if (t == u) {
                rep.min_diag = std::min(rep.min_diag, rep.gram(t, t).real());
                rep.max_diag = std::max(rep.max_diag, rep.gram(t, t).real());
            }
        }
    return rep;
}

cplx character_su2(const GenericIrrepLabel& label, const ClassFn& f1, const ClassFn& f2,
                   int order_phi, int order_theta, int order_psi, int zeta_points) {
    validate_generic_label(label);
    Su2Quadrature haar = haar_quadrature(order_phi, order_theta, order_psi);
    SU2Element gr = SU2Element::g_phi(label.r);
    cplx acc = 0.0;
    for (const auto& node : haar.nodes) {
        SU2Element zinv = node.g.inverse();
        cplx a = f1(node.g * gr * zinv);
        cplx inner = 0.0;
        for (int c = 0; c < zeta_points; ++c) {
            double zeta = -2.0 * pi + 4.0 * pi * c / zeta_points;
            inner += f2(node.g * SU2Element::g_phi(zeta) * zinv) * std::polar(1.0, label.n.value() * zeta);
        }
        acc += node.weight * a * inner / double(zeta_points);
    }
    return acc;
}

} // namespace qdouble
