#include "qdouble/double_finite.hpp"

#include <algorithm>
#include <cmath>

namespace qdouble {

double DoubleElement::max_abs_diff(const DoubleElement& o) const {
    double m = 0.0;
    for (size_t i = 0; i < v.size(); ++i) m = std::max(m, std::abs(v[i] - o.v[i]));
    return m;
}

double DoubleElement2::max_abs_diff(const DoubleElement2& o) const {
    double m = 0.0;
    for (size_t i = 0; i < v.size(); ++i) m = std::max(m, std::abs(v[i] - o.v[i]));
    return m;
}

DoubleElement DoubleAlgebra::point_mass(int g, int x) const {
    DoubleElement f(g_.order);
    f.at(g, x) = double(g_.order);
    return f;
}

DoubleElement DoubleAlgebra::unit() const {
    DoubleElement f(g_.order);
    for (int x = 0; x < g_.order; ++x) f.at(x, g_.identity) = double(g_.order);
    return f;
}

DoubleElement DoubleAlgebra::random_element(std::mt19937& rng) const {
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    DoubleElement f(g_.order);
    for (auto& x : f.v) x = cplx(uni(rng), uni(rng));
    return f;
}

DoubleElement DoubleAlgebra::multiply(const DoubleElement& f1, const DoubleElement& f2) const {
    int n = g_.order;
    if (f1.n != n || f2.n != n) throw std::invalid_argument("multiply: group mismatch");
    DoubleElement out(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            cplx s = 0.0;
            for (int z = 0; z < n; ++z)
                s += f1.at(x, z) * f2.at(g_.conj(g_.inv(z), x), g_.op(g_.inv(z), y));
            out.at(x, y) = s / double(n);
        }
    return out;
}

DoubleElement DoubleAlgebra::star(const DoubleElement& f) const {
    int n = g_.order;
    DoubleElement out(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            out.at(x, y) = std::conj(f.at(g_.conj(g_.inv(y), x), g_.inv(y)));
    return out;
}

cplx DoubleAlgebra::counit(const DoubleElement& f) const {
    cplx s = 0.0;
    for (int y = 0; y < g_.order; ++y) s += f.at(g_.identity, y);
    return s / double(g_.order);
}

DoubleElement DoubleAlgebra::antipode(const DoubleElement& f) const {
    int n = g_.order;
    DoubleElement out(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            out.at(x, y) = f.at(g_.conj(g_.inv(y), g_.inv(x)), g_.inv(y));
    return out;
}

DoubleElement2 DoubleAlgebra::comultiply(const DoubleElement& f) const {
    int n = g_.order;
    DoubleElement2 out(n);
    for (int x1 = 0; x1 < n; ++x1)
        for (int y = 0; y < n; ++y)
            for (int x2 = 0; x2 < n; ++x2)
                out.at(x1, y, x2, y) = f.at(g_.op(x1, x2), y) * double(n);
    return out;
}

DoubleElement2 DoubleAlgebra::comultiply_op(const DoubleElement& f) const {
    int n = g_.order;
    DoubleElement2 delta = comultiply(f);
    DoubleElement2 out(n);
    for (int x1 = 0; x1 < n; ++x1)
        for (int y1 = 0; y1 < n; ++y1)
            for (int x2 = 0; x2 < n; ++x2)
                for (int y2 = 0; y2 < n; ++y2)
                    out.at(x1, y1, x2, y2) = delta.at(x2, y2, x1, y1);
    return out;
}

DoubleElement2 DoubleAlgebra::r_element() const {
    int n = g_.order;
    DoubleElement2 out(n);
    for (int x1 = 0; x1 < n; ++x1)
        for (int x2 = 0; x2 < n; ++x2)
            out.at(x1, g_.identity, x2, x1) = double(n) * double(n);
    return out;
}

DoubleElement2 DoubleAlgebra::r_element_inverse() const {
    int n = g_.order;
    DoubleElement2 out(n);
    // (S x id) R: nonzero where x1 y2 = e and y1 = e
    for (int x1 = 0; x1 < n; ++x1)
        for (int x2 = 0; x2 < n; ++x2)
            out.at(x1, g_.identity, x2, g_.inv(x1)) = double(n) * double(n);
    return out;
}

DoubleElement2 DoubleAlgebra::unit2() const {
    int n = g_.order;
    DoubleElement2 out(n);
    for (int x1 = 0; x1 < n; ++x1)
        for (int x2 = 0; x2 < n; ++x2)
            out.at(x1, g_.identity, x2, g_.identity) = double(n) * double(n);
    return out;
}

DoubleElement2 DoubleAlgebra::multiply2(const DoubleElement2& h, const DoubleElement2& k) const {
    int n = g_.order;
    DoubleElement2 out(n);
    for (int x1 = 0; x1 < n; ++x1)
        for (int y1 = 0; y1 < n; ++y1)
            for (int x2 = 0; x2 < n; ++x2)
                for (int y2 = 0; y2 < n; ++y2) {
                    cplx s = 0.0;
                    for (int z1 = 0; z1 < n; ++z1) {
                        int c1 = g_.conj(g_.inv(z1), x1);
                        int d1 = g_.op(g_.inv(z1), y1);
                        for (int z2 = 0; z2 < n; ++z2)
                            s += h.at(x1, z1, x2, z2) *
                                 k.at(c1, d1, g_.conj(g_.inv(z2), x2), g_.op(g_.inv(z2), y2));
                    }
                    out.at(x1, y1, x2, y2) = s / double(n * n);
                }
    return out;
}

DoubleElement DoubleAlgebra::contract_m(const DoubleElement2& h) const {
    int n = g_.order;
    DoubleElement out(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            cplx s = 0.0;
            for (int z = 0; z < n; ++z)
                s += h.at(x, z, g_.conj(g_.inv(z), x), g_.op(g_.inv(z), y));
            out.at(x, y) = s / double(n);
        }
    return out;
}

DoubleElement2 DoubleAlgebra::apply_antipode_left(const DoubleElement2& h) const {
    int n = g_.order;
    DoubleElement2 out(n);
    for (int x1 = 0; x1 < n; ++x1)
        for (int y1 = 0; y1 < n; ++y1)
            for (int x2 = 0; x2 < n; ++x2)
                for (int y2 = 0; y2 < n; ++y2)
                    out.at(x1, y1, x2, y2) =
                        h.at(g_.conj(g_.inv(y1), g_.inv(x1)), g_.inv(y1), x2, y2);
    return out;
}

DoubleElement2 DoubleAlgebra::apply_antipode_right(const DoubleElement2& h) const {
    int n = g_.order;
    DoubleElement2 out(n);
    for (int x1 = 0; x1 < n; ++x1)
        for (int y1 = 0; y1 < n; ++y1)
            for (int x2 = 0; x2 < n; ++x2)
                for (int y2 = 0; y2 < n; ++y2)
                    out.at(x1, y1, x2, y2) =
                        h.at(x1, y1, g_.conj(g_.inv(y2), g_.inv(x2)), g_.inv(y2));
    return out;
}

DoubleElement DoubleAlgebra::counit_left(const DoubleElement2& h) const {
    int n = g_.order;
    DoubleElement out(n);
    for (int x2 = 0; x2 < n; ++x2)
        for (int y2 = 0; y2 < n; ++y2) {
            cplx s = 0.0;
            for (int y1 = 0; y1 < n; ++y1) s += h.at(g_.identity, y1, x2, y2);
            out.at(x2, y2) = s / double(n);
        }
    return out;
}

DoubleElement DoubleAlgebra::counit_right(const DoubleElement2& h) const {
    int n = g_.order;
    DoubleElement out(n);
    for (int x1 = 0; x1 < n; ++x1)
        for (int y1 = 0; y1 < n; ++y1) {
            cplx s = 0.0;
            for (int y2 = 0; y2 < n; ++y2) s += h.at(x1, y1, g_.identity, y2);
            out.at(x1, y1) = s / double(n);
        }
    return out;
}

DoubleIrrep build_double_irrep(const GroupData& gd, int class_index, const SubgroupIrrep& alpha) {
    const FiniteGroup& g = gd.group;
    const ConjugacyClass& cls = gd.classes[class_index];
    if (alpha.subgroup != cls.centralizer)
        throw std::invalid_argument("irrep '" + alpha.label + "' is not an irrep of the centralizer");
    DoubleIrrep rep;
    rep.class_index = class_index;
    rep.cls = cls;
    rep.alpha = alpha;
    rep.coset_of.assign(g.order, -1);
    rep.h_part.assign(g.order, -1);
    for (int x = 0; x < g.order; ++x) {
        if (rep.coset_of[x] >= 0) continue;
        int idx = int(rep.coset_reps.size());
        rep.coset_reps.push_back(x); // ascending scan: x is the smallest member
        for (int h : cls.centralizer) {
            int y = g.op(x, h);
            rep.coset_of[y] = idx;
            rep.h_part[y] = h;
        }
    }
    rep.dim = int(rep.coset_reps.size()) * alpha.dim;
    rep.label = "[C" + std::to_string(cls.representative) + ";" + alpha.label + "]";
    return rep;
}

std::vector<DoubleIrrep> all_double_irreps(const GroupData& gd) {
    std::vector<DoubleIrrep> out;
    for (int c = 0; c < int(gd.classes.size()); ++c)
        for (const auto& alpha : gd.centralizer_irreps[c])
            out.push_back(build_double_irrep(gd, c, alpha));
    return out;
}

CMat irrep_matrix(const GroupData& gd, const DoubleIrrep& rep, const DoubleElement& f) {
    const FiniteGroup& g = gd.group;
    int n = g.order;
    int nc = int(rep.coset_reps.size());
    int d = rep.alpha.dim;
    CMat m(rep.dim, rep.dim);
    for (int i = 0; i < nc; ++i) {
        int xi = rep.coset_reps[i];
        int gAi = g.conj(xi, rep.cls.representative); // x_i g_A x_i^-1
        for (int z = 0; z < n; ++z) {
            cplx fv = f.at(gAi, z);
            if (fv == cplx(0.0)) continue;
            int zi = g.op(g.inv(z), xi); // z^-1 x_i = x_j h
            int j = rep.coset_of[zi];
            const CMat& a = rep.alpha.mat_at(g.inv(rep.h_part[zi])); // alpha(h^-1) = alpha(x_i^-1 z x_j)
            for (int u = 0; u < d; ++u)
                for (int v = 0; v < d; ++v)
                    m(rep.basis_index(i, u), rep.basis_index(j, v)) += fv * a(u, v) / double(n);
        }
    }
    return m;
}

cplx character_value(const GroupData& gd, const DoubleIrrep& rep, int g, int x) {
    DoubleAlgebra alg(gd.group);
    return irrep_matrix(gd, rep, alg.point_mass(g, x)).trace();
}

std::vector<cplx> induced_basis_value(const GroupData& gd, const DoubleIrrep& rep,
                                      int coset, int comp, int at) {
    const FiniteGroup& g = gd.group;
    std::vector<cplx> out(rep.alpha.dim, 0.0);
    if (rep.coset_of[at] != coset) return out;
    double scale = std::sqrt(double(rep.coset_reps.size()));
    const CMat& a = rep.alpha.mat_at(g.inv(rep.h_part[at])); // alpha(h^-1)
    for (int u = 0; u < rep.alpha.dim; ++u) out[u] = scale * a(u, comp);
    return out;
}

double TensorState::norm_sq() const {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return s / (double(n) * double(n));
}

double TensorState::max_abs_diff(const TensorState& o) const {
    double m = 0.0;
    for (size_t i = 0; i < v.size(); ++i) m = std::max(m, std::abs(v[i] - o.v[i]));
    return m;
}

TensorState product_basis_state(const GroupData& gd, const DoubleIrrep& ra, const DoubleIrrep& rb,
                                int coset_a, int comp_a, int coset_b, int comp_b) {
    int n = gd.group.order;
    TensorState phi(n, ra.alpha.dim, rb.alpha.dim);
    for (int x = 0; x < n; ++x) {
        auto fa = induced_basis_value(gd, ra, coset_a, comp_a, x);
        bool zero = true;
        for (auto& c : fa)
            if (c != cplx(0.0)) zero = false;
        if (zero) continue;
        for (int y = 0; y < n; ++y) {
            auto fb = induced_basis_value(gd, rb, coset_b, comp_b, y);
            for (int k = 0; k < ra.alpha.dim; ++k)
                for (int l = 0; l < rb.alpha.dim; ++l) phi.at(x, y, k, l) = fa[k] * fb[l];
        }
    }
    return phi;
}

TensorState random_covariant_state(const GroupData& gd, const DoubleIrrep& ra,
                                   const DoubleIrrep& rb, std::mt19937& rng) {
    int n = gd.group.order;
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    TensorState phi(n, ra.alpha.dim, rb.alpha.dim);
    for (int ca = 0; ca < int(ra.coset_reps.size()); ++ca)
        for (int ua = 0; ua < ra.alpha.dim; ++ua)
            for (int cb = 0; cb < int(rb.coset_reps.size()); ++cb)
                for (int ub = 0; ub < rb.alpha.dim; ++ub) {
                    cplx coeff(uni(rng), uni(rng));
                    TensorState basis = product_basis_state(gd, ra, rb, ca, ua, cb, ub);
                    for (size_t i = 0; i < phi.v.size(); ++i) phi.v[i] += coeff * basis.v[i];
                }
    return phi;
}

double covariance_defect(const GroupData& gd, const DoubleIrrep& ra, const DoubleIrrep& rb,
                         const TensorState& phi) {
    const FiniteGroup& g = gd.group;
    int n = g.order, da = ra.alpha.dim, db = rb.alpha.dim;
    double worst = 0.0;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int h1 : ra.cls.centralizer)
                for (int h2 : rb.cls.centralizer) {
                    const CMat& a = ra.alpha.mat_at(g.inv(h1));
                    const CMat& b = rb.alpha.mat_at(g.inv(h2));
                    for (int k = 0; k < da; ++k)
                        for (int l = 0; l < db; ++l) {
                            cplx expect = 0.0;
                            for (int kk = 0; kk < da; ++kk)
                                for (int ll = 0; ll < db; ++ll)
                                    expect += a(k, kk) * b(l, ll) * phi.at(x, y, kk, ll);
                            worst = std::max(worst,
                                             std::abs(phi.at(g.op(x, h1), g.op(y, h2), k, l) - expect));
                        }
                }
    return worst;
}

TensorState tensor_apply(const GroupData& gd, const DoubleIrrep& ra, const DoubleIrrep& rb,
                         const DoubleElement& f, const TensorState& phi) {
    const FiniteGroup& g = gd.group;
    int n = g.order;
    if (phi.n != n || phi.da != ra.alpha.dim || phi.db != rb.alpha.dim)
        throw std::invalid_argument("tensor_apply: state dimensions do not match the irreps");
    if (covariance_defect(gd, ra, rb, phi) > 1e-12)
        throw std::invalid_argument("tensor_apply: input state violates the covariance condition");
    TensorState out(n, phi.da, phi.db);
    for (int x = 0; x < n; ++x) {
        int gax = g.conj(x, ra.cls.representative);
        for (int y = 0; y < n; ++y) {
            int arg = g.op(gax, g.conj(y, rb.cls.representative)); // x g_A x^-1 y g_B y^-1
            for (int z = 0; z < n; ++z) {
                cplx fv = f.at(arg, z);
                if (fv == cplx(0.0)) continue;
                int zx = g.op(g.inv(z), x), zy = g.op(g.inv(z), y);
                for (int k = 0; k < phi.da; ++k)
                    for (int l = 0; l < phi.db; ++l)
                        out.at(x, y, k, l) += fv * phi.at(zx, zy, k, l) / double(n);
            }
        }
    }
    return out;
}

TensorState braid_apply(const GroupData& gd, const DoubleIrrep& ra, const DoubleIrrep& rb,
                        const TensorState& phi) {
    const FiniteGroup& g = gd.group;
    int n = g.order;
    TensorState out(n, phi.db, phi.da); // values in V_beta (x) V_alpha
    int ga_inv = g.inv(ra.cls.representative);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            int arg = g.op(g.conj(y, ga_inv), x); // y g_A^-1 y^-1 x
            for (int k = 0; k < phi.da; ++k)
                for (int l = 0; l < phi.db; ++l) out.at(x, y, l, k) = phi.at(y, arg, k, l);
        }
    return out;
}

std::vector<cplx> central_character(const GroupData& gd, const DoubleIrrep& ra,
                                    const DoubleIrrep& rb) {
    std::vector<cplx> omega;
    for (int z : gd.center) {
        const CMat& a = ra.alpha.mat_at(z);
        const CMat& b = rb.alpha.mat_at(z);
        // Schur: central elements act as scalars in an irrep
        for (int i = 0; i < a.rows(); ++i)
            for (int j = 0; j < a.cols(); ++j)
                if (std::abs(a(i, j) - (i == j ? a(0, 0) : cplx(0.0))) > 1e-10)
                    throw std::logic_error("central element does not act as a scalar");
        omega.push_back(a(0, 0) * b(0, 0));
    }
    return omega;
}

bool central_character_matches(const GroupData& gd, const SubgroupIrrep& gamma,
                               const std::vector<cplx>& omega) {
    for (size_t i = 0; i < gd.center.size(); ++i) {
        const CMat& m = gamma.mat_at(gd.center[i]);
        if (std::abs(m(0, 0) - omega[i]) > 1e-9) return false;
    }
    return true;
}

std::vector<cplx> rho_component(const GroupData& gd, const DoubleIrrep& ra, const DoubleIrrep& rb,
                                const DoubleCosetSystem& dcs, int coset_index,
                                const SubgroupIrrep& gamma, int k, int l, int j,
                                const TensorState& phi) {
    const FiniteGroup& g = gd.group;
    const auto& coset = dcs.cosets[coset_index];
    const auto& nc = gd.classes[coset.class_index].centralizer;
    if (gamma.subgroup != nc)
        throw std::invalid_argument("gamma is not an irrep of the centralizer of C(xi)");
    auto omega = central_character(gd, ra, rb);
    if (!central_character_matches(gd, gamma, omega))
        throw std::invalid_argument(
            "gamma restricted to the center differs from the tensor central character; "
            "this fusion sector vanishes identically");

    int n = g.order, dg = gamma.dim;
    int w_inv = g.inv(coset.w);
    int wy = g.op(w_inv, coset.rep); // w^-1 y
    std::vector<cplx> out(size_t(n) * dg, 0.0);
    for (int x = 0; x < n; ++x)
        for (int nn : nc) {
            int xn = g.op(x, nn);
            int u = g.op(xn, w_inv);
            int v = g.op(xn, wy);
            const CMat& gm = gamma.mat_at(nn);
            cplx pv = phi.at(u, v, k, l);
            for (int i = 0; i < dg; ++i) out[size_t(x) * dg + i] += gm(i, j) * pv / double(nc.size());
        }
    return out;
}

IsometryCheck isometry_check(const GroupData& gd, const DoubleIrrep& ra, const DoubleIrrep& rb,
                             const TensorState& phi, TieBreak tie) {
    const FiniteGroup& g = gd.group;
    int n = g.order;
    auto dcs = double_cosets(g, gd.classes, gd.class_of, ra.class_index, rb.class_index, tie);
    auto omega = central_character(gd, ra, rb);

    IsometryCheck chk;
    chk.lhs = phi.norm_sq();
    double rhs = 0.0;
    for (int xi = 0; xi < int(dcs.cosets.size()); ++xi) {
        double mu = double(dcs.cosets[xi].members.size()) / double(n);
        int ci = dcs.cosets[xi].class_index;
        for (const auto& gamma : gd.centralizer_irreps[ci]) {
            if (!central_character_matches(gd, gamma, omega)) continue;
            for (int k = 0; k < ra.alpha.dim; ++k)
                for (int l = 0; l < rb.alpha.dim; ++l)
                    for (int j = 0; j < gamma.dim; ++j) {
                        auto r = rho_component(gd, ra, rb, dcs, xi, gamma, k, l, j, phi);
                        double nrm = 0.0;
                        for (const auto& c : r) nrm += std::norm(c);
                        rhs += mu * double(gamma.dim) * nrm / double(n);
                    }
        }
    }
    chk.rhs = rhs;
    return chk;
}

namespace {

// character-oracle multiplicity: N = (1/|G|) sum_x sum_{g1,g2}
//   conj(chi^C_gamma(g1 g2, x)) chi^A_alpha(g1, x) chi^B_beta(g2, x)
long long character_multiplicity(const GroupData& gd, const std::vector<cplx>& chi_c,
                                 const std::vector<cplx>& chi_a, const std::vector<cplx>& chi_b) {
    const FiniteGroup& g = gd.group;
    int n = g.order;
    cplx s = 0.0;
    for (int x = 0; x < n; ++x)
        for (int g1 = 0; g1 < n; ++g1) {
            cplx a = chi_a[size_t(g1) * n + x];
            if (a == cplx(0.0)) continue;
            for (int g2 = 0; g2 < n; ++g2) {
                cplx b = chi_b[size_t(g2) * n + x];
                if (b == cplx(0.0)) continue;
                s += std::conj(chi_c[size_t(g.op(g1, g2)) * n + x]) * a * b;
            }
        }
    s /= double(n);
    long long nn = llround(s.real());
    if (std::abs(s - cplx(double(nn))) > 1e-8)
        throw OracleDisagreement("character multiplicity is not a nonnegative integer");
    if (nn < 0) throw OracleDisagreement("negative character multiplicity");
    return nn;
}

std::vector<cplx> character_table_of(const GroupData& gd, const DoubleIrrep& rep) {
    int n = gd.group.order;
    std::vector<cplx> chi(size_t(n) * n, 0.0);
    for (int g = 0; g < n; ++g)
        for (int x = 0; x < n; ++x) {
            if (gd.group.op(g, x) != gd.group.op(x, g)) continue; // commuting support
            chi[size_t(g) * n + x] = character_value(gd, rep, g, x);
        }
    return chi;
}

} // namespace

FusionResult fusion_multiplicities(const GroupData& gd, const DoubleIrrep& ra,
                                   const DoubleIrrep& rb, TieBreak tie) {
    const FiniteGroup& g = gd.group;
    int n = g.order;
    auto dcs = double_cosets(g, gd.classes, gd.class_of, ra.class_index, rb.class_index, tie);
    auto omega = central_character(gd, ra, rb);

    auto chi_a = character_table_of(gd, ra);
    auto chi_b = character_table_of(gd, rb);

    // input basis of the tensor space
    std::vector<TensorState> basis;
    for (int ca = 0; ca < int(ra.coset_reps.size()); ++ca)
        for (int ua = 0; ua < ra.alpha.dim; ++ua)
            for (int cb = 0; cb < int(rb.coset_reps.size()); ++cb)
                for (int ub = 0; ub < rb.alpha.dim; ++ub)
                    basis.push_back(product_basis_state(gd, ra, rb, ca, ua, cb, ub));

    FusionResult res;
    res.dim_product = (long long)ra.dim * rb.dim;

    for (int c = 0; c < int(gd.classes.size()); ++c) {
        for (int gi = 0; gi < int(gd.centralizer_irreps[c].size()); ++gi) {
            const SubgroupIrrep& gamma = gd.centralizer_irreps[c][gi];
            long long n_rank = 0;
            if (central_character_matches(gd, gamma, omega)) {
                std::vector<std::vector<cplx>> maps;
                for (int xi = 0; xi < int(dcs.cosets.size()); ++xi) {
                    if (dcs.cosets[xi].class_index != c) continue;
                    for (int k = 0; k < ra.alpha.dim; ++k)
                        for (int l = 0; l < rb.alpha.dim; ++l)
                            for (int j = 0; j < gamma.dim; ++j) {
                                std::vector<cplx> flat;
                                flat.reserve(basis.size() * size_t(n) * gamma.dim);
                                for (const auto& st : basis) {
                                    auto r = rho_component(gd, ra, rb, dcs, xi, gamma, k, l, j, st);
                                    flat.insert(flat.end(), r.begin(), r.end());
                                }
                                maps.push_back(std::move(flat));
                            }
                }
                n_rank = rank_of_span(maps);
            }
            DoubleIrrep rc = build_double_irrep(gd, c, gamma);
            auto chi_c = character_table_of(gd, rc);
            long long n_char = character_multiplicity(gd, chi_c, chi_a, chi_b);
            if (n_rank != n_char)
                throw OracleDisagreement(
                    "fusion oracle disagreement for channel (" + rc.label + "): rank " +
                    std::to_string(n_rank) + " vs character " + std::to_string(n_char));
            if (n_rank > 0) {
                res.channels.push_back({c, gi, gamma.label, int(n_rank)});
                res.dim_sum += n_rank * (long long)rc.dim;
            }
        }
    }
    if (res.dim_sum != res.dim_product)
        throw OracleDisagreement("fusion dimensions do not add up: " + std::to_string(res.dim_sum) +
                                 " vs " + std::to_string(res.dim_product));
    return res;
}

double HopfReport::max_defect() const {
    double m = 0.0;
    for (const auto& e : axioms) m = std::max(m, e.defect);
    return m;
}

namespace {

// Point-mass triple e_{(g1,x1)} x e_{(g2,x2)} x e_{(g3,x3)}, for the QYBE
// check in D(G)^(x3). Products stay single basis terms, so both sides of the
// equation are integer-coefficient sums computed exactly.
struct BasisTriple {
    int g[3];
    int x[3];
};

// Right-multiply a basis triple by R_{ab} = sum_{h,g} (slot a: e_{(h,e)},
// slot b: e_{(g,h)}, remaining slot: unit = sum_f e_{(f,e)}). The basis rule
// e_{(p,u)} e_{(q,v)} = [q = u^-1 p u] e_{(p, uv)} pins the matching R term
// uniquely, so each input term maps to exactly one output term.
BasisTriple right_mul_r(const FiniteGroup& grp, const BasisTriple& t, int a, int b) {
    BasisTriple out = t;
    int h = grp.conj(grp.inv(t.x[a]), t.g[a]); // slot a: matching R term needs h = u_a^-1 g_a u_a
    // slot a multiplies by e_{(h,e)}, slot b by e_{(g*,h)}, slot c by e_{(f*,e)}
    out.x[a] = t.x[a];
    out.x[b] = grp.op(t.x[b], h);
    // x parts of the unit slots stay; g parts never change under the rule
    return out;
}

double qybe_defect(const FiniteGroup& g) {
    int n = g.order;
    size_t total = size_t(n) * n * n * n * n * n;
    std::vector<double> lhs(total, 0.0), rhs(total, 0.0);
    auto idx6 = [n](const BasisTriple& t) {
        return ((((size_t(t.g[0]) * n + t.x[0]) * n + t.g[1]) * n + t.x[1]) * n + t.g[2]) * n + t.x[2];
    };
    int e = g.identity;
    auto r_terms = [&](int a, int b) {
        std::vector<BasisTriple> terms;
        terms.reserve(size_t(n) * n * n);
        for (int h = 0; h < n; ++h)
            for (int gg = 0; gg < n; ++gg)
                for (int f = 0; f < n; ++f) {
                    BasisTriple t{};
                    int c = 3 - a - b;
                    t.g[a] = h; t.x[a] = e;
                    t.g[b] = gg; t.x[b] = h;
                    t.g[c] = f; t.x[c] = e;
                    terms.push_back(t);
                }
        return terms;
    };
    for (const auto& t : r_terms(0, 1)) lhs[idx6(right_mul_r(g, right_mul_r(g, t, 0, 2), 1, 2))] += 1.0;
    for (const auto& t : r_terms(1, 2)) rhs[idx6(right_mul_r(g, right_mul_r(g, t, 0, 2), 0, 1))] += 1.0;
    double worst = 0.0;
    for (size_t i = 0; i < total; ++i) worst = std::max(worst, std::abs(lhs[i] - rhs[i]));
    return worst;
}

} // namespace

HopfReport verify_hopf(const GroupData& gd) {
    const FiniteGroup& g = gd.group;
    DoubleAlgebra alg(g);
    int n = g.order;
    std::mt19937 rng(2718);
    HopfReport rep;

    std::vector<DoubleElement> randoms;
    for (int i = 0; i < 3; ++i) randoms.push_back(alg.random_element(rng));

    { // associativity of the twisted product
        double worst = 0.0;
        for (const auto& r1 : randoms)
            for (const auto& r2 : randoms)
                worst = std::max(worst, alg.multiply(alg.multiply(r1, r2), randoms[0])
                                            .max_abs_diff(alg.multiply(r1, alg.multiply(r2, randoms[0]))));
        for (int gg = 0; gg < n; ++gg)
            for (int x = 0; x < n; ++x) {
                DoubleElement e = alg.point_mass(gg, x);
                worst = std::max(worst, alg.multiply(alg.multiply(e, randoms[0]), randoms[1])
                                            .max_abs_diff(alg.multiply(e, alg.multiply(randoms[0], randoms[1]))));
                worst = std::max(worst, alg.multiply(alg.multiply(randoms[0], e), randoms[1])
                                            .max_abs_diff(alg.multiply(randoms[0], alg.multiply(e, randoms[1]))));
                worst = std::max(worst, alg.multiply(alg.multiply(randoms[0], randoms[1]), e)
                                            .max_abs_diff(alg.multiply(randoms[0], alg.multiply(randoms[1], e))));
            }
        rep.axioms.push_back({"associativity", worst});
    }
    { // unit laws
        double worst = 0.0;
        DoubleElement one = alg.unit();
        for (int gg = 0; gg < n; ++gg)
            for (int x = 0; x < n; ++x) {
                DoubleElement e = alg.point_mass(gg, x);
                worst = std::max(worst, alg.multiply(one, e).max_abs_diff(e));
                worst = std::max(worst, alg.multiply(e, one).max_abs_diff(e));
            }
        rep.axioms.push_back({"unit", worst});
    }
    { // coassociativity on G^6
        double worst = 0.0;
        for (const auto& f : randoms) {
            DoubleElement2 d = alg.comultiply(f);
            // (Delta x id) Delta F and (id x Delta) Delta F, evaluated pointwise
            for (int x1 = 0; x1 < n; ++x1)
                for (int y1 = 0; y1 < n; ++y1)
                    for (int x2 = 0; x2 < n; ++x2)
                        for (int y2 = 0; y2 < n; ++y2)
                            for (int x3 = 0; x3 < n; ++x3)
                                for (int y3 = 0; y3 < n; ++y3) {
                                    cplx a = d.at(g.op(x1, x2), y1, x3, y3) * double(y1 == y2 ? n : 0);
                                    cplx b = d.at(x1, y1, g.op(x2, x3), y2) * double(y2 == y3 ? n : 0);
                                    worst = std::max(worst, std::abs(a - b));
                                }
        }
        rep.axioms.push_back({"coassociativity", worst});
    }
    { // counit laws
        double worst = 0.0;
        for (int gg = 0; gg < n; ++gg)
            for (int x = 0; x < n; ++x) {
                DoubleElement e = alg.point_mass(gg, x);
                DoubleElement2 d = alg.comultiply(e);
                worst = std::max(worst, alg.counit_left(d).max_abs_diff(e));
                worst = std::max(worst, alg.counit_right(d).max_abs_diff(e));
            }
        rep.axioms.push_back({"counit", worst});
    }
    { // antipode axiom m (S x id) Delta F = eps(F) 1 = m (id x S) Delta F
        double worst = 0.0;
        DoubleElement one = alg.unit();
        for (int gg = 0; gg < n; ++gg)
            for (int x = 0; x < n; ++x) {
                DoubleElement e = alg.point_mass(gg, x);
                DoubleElement2 d = alg.comultiply(e);
                cplx eps = alg.counit(e);
                DoubleElement lhs = alg.contract_m(alg.apply_antipode_left(d));
                DoubleElement rhs = alg.contract_m(alg.apply_antipode_right(d));
                DoubleElement want(n);
                for (size_t i = 0; i < want.v.size(); ++i) want.v[i] = eps * one.v[i];
                worst = std::max(worst, lhs.max_abs_diff(want));
                worst = std::max(worst, rhs.max_abs_diff(want));
            }
        rep.axioms.push_back({"antipode", worst});
    }
    { // star antimultiplicativity, plus involution on the basis
        double worst = 0.0;
        for (int g1 = 0; g1 < n; ++g1)
            for (int x1 = 0; x1 < n; ++x1) {
                DoubleElement e1 = alg.point_mass(g1, x1);
                worst = std::max(worst, alg.star(alg.star(e1)).max_abs_diff(e1));
                worst = std::max(worst, alg.star(alg.multiply(e1, randoms[0]))
                                            .max_abs_diff(alg.multiply(alg.star(randoms[0]), alg.star(e1))));
            }
        worst = std::max(worst, alg.star(alg.multiply(randoms[1], randoms[2]))
                                    .max_abs_diff(alg.multiply(alg.star(randoms[2]), alg.star(randoms[1]))));
        rep.axioms.push_back({"star-antimultiplicative", worst});
    }
    { // quasi-triangularity R (Delta F) R^-1 = Delta^op F, and R R^-1 = 1 x 1
        double worst = 0.0;
        DoubleElement2 r = alg.r_element();
        DoubleElement2 rinv = alg.r_element_inverse();
        worst = std::max(worst, alg.multiply2(r, rinv).max_abs_diff(alg.unit2()));
        for (int gg = 0; gg < n; ++gg)
            for (int x = 0; x < n; ++x) {
                DoubleElement e = alg.point_mass(gg, x);
                DoubleElement2 lhs = alg.multiply2(alg.multiply2(r, alg.comultiply(e)), rinv);
                worst = std::max(worst, lhs.max_abs_diff(alg.comultiply_op(e)));
            }
        rep.axioms.push_back({"quasi-triangularity", worst});
    }
    rep.axioms.push_back({"qybe", qybe_defect(g)});
    return rep;
}

long long peter_weyl_sum(const GroupData& gd) {
    long long s = 0;
    for (const auto& rep : all_double_irreps(gd)) s += (long long)rep.dim * rep.dim;
    return s;
}

} // namespace qdouble
