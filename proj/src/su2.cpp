#include "qdouble/su2.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qdouble {

namespace {
constexpr double pi = std::numbers::pi;

double fold_phi(double phi) { // into [0, 2pi)
    phi = std::fmod(phi, 2.0 * pi);
    if (phi < 0.0) phi += 2.0 * pi;
    if (phi >= 2.0 * pi) phi = 0.0;
    return phi;
}

double fold_psi(double psi) { // into [-2pi, 2pi)
    psi = std::fmod(psi, 4.0 * pi);
    if (psi < -2.0 * pi) psi += 4.0 * pi;
    if (psi >= 2.0 * pi) psi -= 4.0 * pi;
    return psi;
}
} // namespace

double factorial(int n) {
    if (n < 0 || n > 170) throw std::out_of_range("factorial argument out of range");
    static const std::vector<double> table = [] {
        std::vector<double> t(171);
        t[0] = 1.0;
        for (int i = 1; i <= 170; ++i) t[i] = t[i - 1] * i;
        return t;
    }();
    return table[n];
}

SU2Element SU2Element::from_euler_raw(double phi, double theta, double psi) {
    SU2Element g;
    g.phi = phi;
    g.theta = theta;
    g.psi = psi;
    double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    cplx eplus = std::polar(1.0, (phi + psi) / 2.0);
    cplx eminus = std::polar(1.0, (phi - psi) / 2.0);
    g.m = {c * eplus, -s * eminus, s * std::conj(eminus), c * std::conj(eplus)};
    return g;
}

SU2Element SU2Element::from_euler(double phi, double theta, double psi) {
    bool in_range = phi >= 0.0 && phi < 2.0 * pi && theta >= 0.0 && theta <= pi &&
                    psi >= -2.0 * pi && psi < 2.0 * pi;
    SU2Element g = from_euler_raw(phi, theta, psi);
    if (!in_range) return from_matrix(g.m);
    if (theta == 0.0 || theta == pi) return from_matrix(g.m); // canonical split
    return g;
}

SU2Element SU2Element::from_matrix(const std::array<cplx, 4>& m) {
    cplx a = m[0], c = m[2];
    double det_defect = std::abs(m[0] * m[3] - m[1] * m[2] - cplx(1.0));
    double uni_defect = std::max(std::abs(std::norm(a) + std::norm(c) - 1.0),
                                 std::abs(m[3] - std::conj(a)) + std::abs(m[1] + std::conj(c)));
    if (det_defect > 1e-10 || uni_defect > 1e-10)
        throw std::invalid_argument("from_matrix: not a special unitary matrix");

    double ca = std::abs(a), sa = std::abs(c);
    double theta = 2.0 * std::atan2(sa, ca);
    double phi, psi;
    if (sa < 1e-13) { // theta = 0: only phi+psi matters
        double chi = 2.0 * std::arg(a);
        phi = fold_phi(chi);
        psi = fold_psi(chi - phi);
        theta = 0.0;
    } else if (ca < 1e-13) { // theta = pi: only phi-psi matters
        double delta = -2.0 * std::arg(c);
        phi = fold_phi(delta);
        psi = fold_psi(phi - delta);
        theta = pi;
    } else {
        phi = std::arg(a) - std::arg(c);
        psi = std::arg(a) + std::arg(c);
        if (phi < 0.0) {
            phi += 2.0 * pi;
            psi += 2.0 * pi;
        } else if (phi >= 2.0 * pi) {
            phi -= 2.0 * pi;
            psi -= 2.0 * pi;
        }
        psi = fold_psi(psi);
    }
    SU2Element g = from_euler_raw(phi, theta, psi);
    g.m = m; // keep the exact input matrix; angles reproduce it to 1e-12
    return g;
}

SU2Element SU2Element::from_axis_angle(double r, double theta, double phi) {
    double n1 = std::cos(theta), n2 = std::sin(theta) * std::cos(phi), n3 = std::sin(theta) * std::sin(phi);
    double c = std::cos(r / 2.0), s = std::sin(r / 2.0);
    std::array<cplx, 4> m = {cplx(c, s * n1), cplx(-s * n3, s * n2), cplx(s * n3, s * n2),
                             cplx(c, -s * n1)};
    return from_matrix(m);
}

SU2Element SU2Element::operator*(const SU2Element& o) const {
    std::array<cplx, 4> p = {m[0] * o.m[0] + m[1] * o.m[2], m[0] * o.m[1] + m[1] * o.m[3],
                             m[2] * o.m[0] + m[3] * o.m[2], m[2] * o.m[1] + m[3] * o.m[3]};
    // renormalize against drift in long products
    cplx det = p[0] * p[3] - p[1] * p[2];
    double scale = 1.0 / std::sqrt(std::abs(det));
    for (auto& x : p) x *= scale;
    return from_matrix(p);
}

SU2Element SU2Element::inverse() const {
    std::array<cplx, 4> p = {std::conj(m[0]), std::conj(m[2]), std::conj(m[1]), std::conj(m[3])};
    return from_matrix(p);
}

double SU2Element::matrix_distance(const SU2Element& o) const {
    double d = 0.0;
    for (int i = 0; i < 4; ++i) d = std::max(d, std::abs(m[i] - o.m[i]));
    return d;
}

double wigner_small_d(HalfInt j, HalfInt m, HalfInt n, double theta) {
    if (j.twice < 0) throw std::invalid_argument("wigner_small_d: negative j");
    if (abs(m) > j || abs(n) > j) throw std::invalid_argument("wigner_small_d: |m| or |n| exceeds j");
    if (!j.same_ladder(m) || !j.same_ladder(n))
        throw std::invalid_argument("wigner_small_d: indices not on the j ladder");
    int jpm = (j + m).as_int(), jmm = (j - m).as_int();
    int jpn = (j + n).as_int(), jmn = (j - n).as_int();
    int nm = (n - m).as_int(); // n - m is a whole integer
    double pref = std::sqrt(factorial(jpn) * factorial(jmn) * factorial(jpm) * factorial(jmm));
    int kmin = std::max(0, nm), kmax = std::min(jpn, jmm);
    double c = std::cos(theta / 2.0), s = std::sin(theta / 2.0);
    double sum = 0.0;
    for (int k = kmin; k <= kmax; ++k) {
        double denom = factorial(jpn - k) * factorial(k) * factorial(jmm - k) * factorial(k - nm);
        double sign = ((k - nm) % 2 == 0) ? 1.0 : -1.0;
        sum += sign * std::pow(c, j.twice - 2 * k + nm) * std::pow(s, 2 * k - nm) / denom;
    }
    return pref * sum;
}

cplx wigner_D(HalfInt j, HalfInt m, HalfInt n, const SU2Element& g) {
    double d = wigner_small_d(j, m, n, g.theta);
    return std::polar(d, -(m.value() * g.phi + n.value() * g.psi));
}

CMat wigner_D_matrix(HalfInt j, const SU2Element& g) {
    int dim = j.twice + 1;
    CMat out(dim, dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) {
            HalfInt m = HalfInt::from_twice(j.twice - 2 * r);
            HalfInt n = HalfInt::from_twice(j.twice - 2 * c);
            out(r, c) = wigner_D(j, m, n, g);
        }
    return out;
}

double su2_cgc(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt j, HalfInt m) {
    if (m != m1 + m2) return 0.0;
    if (abs(m1) > j1 || abs(m2) > j2 || abs(m) > j) return 0.0;
    if (!j1.same_ladder(m1) || !j2.same_ladder(m2) || !j.same_ladder(m)) return 0.0;
    if ((j1 + j2 + j).twice % 2 != 0) return 0.0; // j1+j2+j must be a whole integer
    if (j > j1 + j2 || j < abs(j1 - j2)) return 0.0;

    int a = (j1 + j2 - j).as_int(), b = (j1 - j2 + j).as_int(), c = (j2 - j1 + j).as_int();
    double pref = std::sqrt((j.twice + 1.0) * factorial(a) * factorial(b) * factorial(c) /
                            factorial((j1 + j2 + j).as_int() + 1));
    pref *= std::sqrt(factorial((j + m).as_int()) * factorial((j - m).as_int()) *
                      factorial((j1 + m1).as_int()) * factorial((j1 - m1).as_int()) *
                      factorial((j2 + m2).as_int()) * factorial((j2 - m2).as_int()));
    int kmin = std::max({0, (j2 - j - m1).as_int(), (j1 + m2 - j).as_int()});
    int kmax = std::min({a, (j1 - m1).as_int(), (j2 + m2).as_int()});
    double sum = 0.0;
    for (int k = kmin; k <= kmax; ++k) {
        double denom = factorial(k) * factorial(a - k) * factorial((j1 - m1).as_int() - k) *
                       factorial((j2 + m2).as_int() - k) * factorial((j - j2 + m1).as_int() + k) *
                       factorial((j - j1 - m2).as_int() + k);
        sum += (k % 2 == 0 ? 1.0 : -1.0) / denom;
    }
    return pref * sum;
}

GaussLegendre gauss_legendre(int npts) {
    if (npts < 1) throw std::invalid_argument("gauss_legendre: order must be >= 1");
    GaussLegendre rule;
    rule.x.resize(npts);
    rule.w.resize(npts);
    for (int i = 0; i < npts; ++i) {
        double x = std::cos(pi * (i + 0.75) / (npts + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            if (npts == 1) p1 = x;
            for (int k = 2; k <= npts; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            double pn = (npts == 1) ? x : p1;
            double pnm1 = (npts == 1) ? 1.0 : p0;
            dp = npts * (x * pn - pnm1) / (x * x - 1.0);
            double dx = pn / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.x[i] = x;
        rule.w[i] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

Su2Quadrature haar_quadrature(int order_phi, int order_theta, int order_psi) {
    if (order_phi < 1 || order_theta < 1 || order_psi < 1)
        throw std::invalid_argument("haar_quadrature: orders must be >= 1");
    GaussLegendre gl = gauss_legendre(order_theta);
    Su2Quadrature q;
    q.nodes.reserve(size_t(order_phi) * order_theta * order_psi);
    for (int a = 0; a < order_phi; ++a) {
        double phi = 2.0 * pi * a / order_phi;
        for (int b = 0; b < order_theta; ++b) {
            double theta = std::acos(gl.x[b]);
            for (int c = 0; c < order_psi; ++c) {
                double psi = -2.0 * pi + 4.0 * pi * c / order_psi;
                Su2Quadrature::Node node;
                node.phi = phi;
                node.theta = theta;
                node.psi = psi;
                node.g = SU2Element::from_euler(phi, theta, psi);
                node.weight = gl.w[b] / (2.0 * order_phi * order_psi);
                q.nodes.push_back(node);
            }
        }
    }
    return q;
}

} // namespace qdouble
