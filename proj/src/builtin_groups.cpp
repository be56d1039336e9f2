#include "qdouble/builtin_groups.hpp"
#include "qdouble/character_table.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qdouble {

namespace {

constexpr double pi = std::numbers::pi;

int element_order(const FiniteGroup& g, int x) {
    int ord = 1, y = x;
    while (y != g.identity) {
        y = g.op(y, x);
        ++ord;
    }
    return ord;
}

std::vector<long long> irrep_sort_key(const SubgroupIrrep& ir) {
    std::vector<long long> k;
    k.push_back(ir.dim);
    for (const auto& m : ir.matrices) {
        cplx t = m.trace();
        k.push_back(llround(t.real() * 1e9));
        k.push_back(llround(t.imag() * 1e9));
    }
    return k;
}

bool is_trivial_irrep(const SubgroupIrrep& ir) {
    if (ir.dim != 1) return false;
    for (const auto& m : ir.matrices)
        if (std::abs(m(0, 0) - cplx(1.0)) > 1e-9) return false;
    return true;
}

void sort_irreps(std::vector<SubgroupIrrep>& irreps) {
    std::stable_sort(irreps.begin(), irreps.end(), [](const SubgroupIrrep& a, const SubgroupIrrep& b) {
        bool ta = is_trivial_irrep(a), tb = is_trivial_irrep(b);
        if (ta != tb) return ta;
        return irrep_sort_key(a) < irrep_sort_key(b);
    });
}

SubgroupIrrep one_dim_irrep(std::vector<int> subgroup, std::vector<cplx> values, std::string label) {
    SubgroupIrrep ir;
    ir.subgroup = std::move(subgroup);
    ir.dim = 1;
    ir.label = std::move(label);
    for (cplx v : values) {
        CMat m(1, 1);
        m(0, 0) = v;
        ir.matrices.push_back(m);
    }
    return ir;
}

} // namespace

std::vector<SubgroupIrrep> abelian_subgroup_characters(const FiniteGroup& g,
                                                       const std::vector<int>& elems) {
    Subgroup sub = make_subgroup(g, elems);
    if (!is_abelian_subset(g, sub.elems))
        throw GroupValidationError("abelian character construction on a nonabelian subgroup");
    CharacterTable tab = character_table(sub.group);
    int h = int(sub.elems.size());
    auto cls_of = class_index_table(sub.group, tab.classes); // classes are singletons

    std::vector<SubgroupIrrep> out;
    for (int row = 0; row < tab.num_irreps(); ++row) {
        std::vector<cplx> vals(h);
        for (int e = 0; e < h; ++e) {
            cplx raw = tab.values(row, cls_of[e]);
            // chi(x)^ord(x) = 1: snap to the nearest root of unity
            int ord = element_order(sub.group, e);
            long k = lround(std::arg(raw) * ord / (2.0 * pi));
            k = ((k % ord) + ord) % ord;
            vals[e] = std::polar(1.0, 2.0 * pi * double(k) / double(ord));
            if (std::abs(vals[e] - raw) > 1e-6)
                throw GroupValidationError("abelian character failed to snap to a root of unity");
        }
        out.push_back(one_dim_irrep(sub.elems, vals, ""));
    }
    sort_irreps(out);
    for (int i = 0; i < int(out.size()); ++i) out[i].label = "chi" + std::to_string(i);
    return out;
}

GroupData make_group_data(FiniteGroup g, std::vector<SubgroupIrrep> supplied) {
    GroupData gd;
    gd.group = std::move(g);
    gd.classes = conjugacy_classes(gd.group);
    gd.class_of = class_index_table(gd.group, gd.classes);
    gd.center = group_center(gd.group);

    for (auto& ir : supplied) {
        std::sort(ir.subgroup.begin(), ir.subgroup.end());
        validate_subgroup_irrep(gd.group, ir);
    }

    gd.centralizer_irreps.resize(gd.classes.size());
    for (size_t c = 0; c < gd.classes.size(); ++c) {
        const auto& cent = gd.classes[c].centralizer;
        std::vector<SubgroupIrrep> chosen;
        long long degsum = 0;
        for (const auto& ir : supplied)
            if (ir.subgroup == cent) {
                chosen.push_back(ir);
                degsum += (long long)ir.dim * ir.dim;
            }
        if (degsum == (long long)cent.size()) {
            sort_irreps(chosen);
        } else if (is_abelian_subset(gd.group, cent)) {
            chosen = abelian_subgroup_characters(gd.group, cent);
        } else {
            throw GroupValidationError(
                "no complete irrep set supplied for the (nonabelian) centralizer of class " +
                std::to_string(gd.classes[c].representative));
        }
        gd.centralizer_irreps[c] = std::move(chosen);
    }
    // centralizer of the identity is G itself
    gd.group_irreps = gd.centralizer_irreps[0];
    return gd;
}

namespace {

GroupData make_cyclic(int n) {
    std::vector<int> mult(n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) mult[i * n + j] = (i + j) % n;
    FiniteGroup g = make_group(n, std::move(mult), "Z" + std::to_string(n));
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    std::vector<SubgroupIrrep> irreps;
    for (int k = 0; k < n; ++k) {
        std::vector<cplx> vals(n);
        for (int j = 0; j < n; ++j) {
            cplx v = std::polar(1.0, 2.0 * pi * (k * j % n) / n);
            if (std::abs(v.real()) < 4e-16) v = cplx(0.0, v.imag());
            if (std::abs(v.imag()) < 4e-16) v = cplx(v.real(), 0.0);
            vals[j] = v;
        }
        irreps.push_back(one_dim_irrep(all, vals, "chi" + std::to_string(k)));
    }
    return make_group_data(std::move(g), std::move(irreps));
}

GroupData make_s3() {
    // 0:e 1:(01) 2:(02) 3:(12) 4:(012) 5:(021); (012) maps 0->1,1->2,2->0
    const std::array<std::array<int, 3>, 6> perms = {{
        {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}}};
    auto index_of = [&](const std::array<int, 3>& p) {
        for (int i = 0; i < 6; ++i)
            if (perms[i] == p) return i;
        return -1;
    };
    std::vector<int> mult(36);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            std::array<int, 3> comp{};
            for (int i = 0; i < 3; ++i) comp[i] = perms[a][perms[b][i]]; // apply b, then a
            mult[a * 6 + b] = index_of(comp);
        }
    FiniteGroup g = make_group(6, std::move(mult), "S3");
    std::vector<int> all = {0, 1, 2, 3, 4, 5};

    auto parity = [&](int e) { return (e >= 1 && e <= 3) ? -1.0 : 1.0; };
    std::vector<cplx> sgn(6);
    for (int e = 0; e < 6; ++e) sgn[e] = parity(e);
    std::vector<cplx> triv(6, 1.0);

    // 2-dim irrep from the action on triangle vertices v_k = (cos, sin)(2 pi k / 3)
    SubgroupIrrep std2;
    std2.subgroup = all;
    std2.dim = 2;
    std2.label = "std";
    double vx[3], vy[3];
    for (int k = 0; k < 3; ++k) {
        vx[k] = std::cos(2.0 * pi * k / 3.0);
        vy[k] = std::sin(2.0 * pi * k / 3.0);
    }
    for (int e = 0; e < 6; ++e) {
        CMat m(2, 2);
        // M = (2/3) V P V^T with P the permutation matrix of perms[e]
        for (int rr = 0; rr < 2; ++rr)
            for (int cc = 0; cc < 2; ++cc) {
                double s = 0.0;
                for (int k = 0; k < 3; ++k) {
                    int pk = perms[e][k];
                    double rowp = rr == 0 ? vx[pk] : vy[pk];
                    double colv = cc == 0 ? vx[k] : vy[k];
                    s += rowp * colv;
                }
                m(rr, cc) = 2.0 * s / 3.0;
            }
        std2.matrices.push_back(m);
    }

    std::vector<SubgroupIrrep> irreps;
    irreps.push_back(one_dim_irrep(all, triv, "triv"));
    irreps.push_back(one_dim_irrep(all, sgn, "sgn"));
    irreps.push_back(std::move(std2));
    return make_group_data(std::move(g), std::move(irreps));
}

GroupData make_d4() {
    // idx = i + 4j meaning r^i s^j, with s r = r^-1 s
    auto idx = [](int i, int j) { return ((i % 4) + 4) % 4 + 4 * (((j % 2) + 2) % 2); };
    std::vector<int> mult(64);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 2; ++l) {
                    int a = idx(i, j), b = idx(k, l);
                    int ii = j == 0 ? i + k : i - k;
                    mult[a * 8 + b] = idx(ii, j + l);
                }
    FiniteGroup g = make_group(8, std::move(mult), "D4");
    std::vector<int> all = {0, 1, 2, 3, 4, 5, 6, 7};

    auto chr = [&](double a, double b) {
        std::vector<cplx> v(8);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 2; ++j) v[i + 4 * j] = std::pow(a, i) * std::pow(b, j);
        return v;
    };
    SubgroupIrrep e2;
    e2.subgroup = all;
    e2.dim = 2;
    e2.label = "e2";
    CMat rot(2, 2), ref(2, 2);
    rot(0, 1) = -1.0; rot(1, 0) = 1.0;
    ref(0, 0) = 1.0; ref(1, 1) = -1.0;
    for (int e = 0; e < 8; ++e) {
        int i = e % 4, j = e / 4;
        CMat m = CMat::identity(2);
        for (int t = 0; t < i; ++t) m = m * rot;
        if (j) m = m * ref;
        e2.matrices.push_back(m);
    }
    std::vector<SubgroupIrrep> irreps;
    irreps.push_back(one_dim_irrep(all, chr(1, 1), "triv"));
    irreps.push_back(one_dim_irrep(all, chr(1, -1), "x_r"));
    irreps.push_back(one_dim_irrep(all, chr(-1, 1), "x_s"));
    irreps.push_back(one_dim_irrep(all, chr(-1, -1), "x_rs"));
    irreps.push_back(std::move(e2));
    return make_group_data(std::move(g), std::move(irreps));
}

GroupData make_q8() {
    // idx = 2a + s: a in {1,i,j,k}, s = 0 for +, 1 for -
    // axis products: (axis result, extra sign)
    static const int ax[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sg[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    // sg[a][b]: sign of axis_a * axis_b: i*j=+k, j*i=-k, i*i=-1, ...
    std::vector<int> mult(64);
    for (int a = 0; a < 4; ++a)
        for (int s = 0; s < 2; ++s)
            for (int b = 0; b < 4; ++b)
                for (int t = 0; t < 2; ++t) {
                    int axis = ax[a][b];
                    int sign = (s + t + sg[a][b]) % 2;
                    mult[(2 * a + s) * 8 + (2 * b + t)] = 2 * axis + sign;
                }
    FiniteGroup g = make_group(8, std::move(mult), "Q8");
    std::vector<int> all = {0, 1, 2, 3, 4, 5, 6, 7};

    auto chr = [&](double ci, double cj) {
        std::vector<cplx> v(8);
        double c[4] = {1.0, ci, cj, ci * cj};
        for (int a = 0; a < 4; ++a)
            for (int s = 0; s < 2; ++s) v[2 * a + s] = c[a];
        return v;
    };
    SubgroupIrrep e2;
    e2.subgroup = all;
    e2.dim = 2;
    e2.label = "e2";
    const cplx I(0.0, 1.0);
    auto quat = [&](int a) {
        CMat m(2, 2);
        switch (a) {
            case 0: m(0, 0) = 1; m(1, 1) = 1; break;
            case 1: m(0, 0) = I; m(1, 1) = -I; break;
            case 2: m(0, 1) = 1; m(1, 0) = -1; break;
            case 3: m(0, 1) = I; m(1, 0) = I; break;
        }
        return m;
    };
    for (int a = 0; a < 4; ++a)
        for (int s = 0; s < 2; ++s) e2.matrices.push_back(quat(a).scaled(s ? -1.0 : 1.0));

    std::vector<SubgroupIrrep> irreps;
    irreps.push_back(one_dim_irrep(all, chr(1, 1), "triv"));
    irreps.push_back(one_dim_irrep(all, chr(1, -1), "x_i"));
    irreps.push_back(one_dim_irrep(all, chr(-1, 1), "x_j"));
    irreps.push_back(one_dim_irrep(all, chr(-1, -1), "x_k"));
    irreps.push_back(std::move(e2));
    return make_group_data(std::move(g), std::move(irreps));
}

} // namespace

bool is_builtin_group_name(const std::string& name) {
    if (name == "S3" || name == "D4" || name == "Q8") return true;
    if (name.size() >= 2 && name[0] == 'Z') {
        int n = atoi(name.c_str() + 1);
        return n >= 1 && n <= 12 && name == "Z" + std::to_string(n);
    }
    return false;
}

GroupData builtin_group(const std::string& name) {
    if (name == "S3") return make_s3();
    if (name == "D4") return make_d4();
    if (name == "Q8") return make_q8();
    if (is_builtin_group_name(name)) return make_cyclic(atoi(name.c_str() + 1));
    throw std::invalid_argument("unknown builtin group '" + name + "'");
}

} // namespace qdouble
