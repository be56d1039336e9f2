#include "qdouble/finite_group.hpp"

#include <algorithm>
#include <cmath>

namespace qdouble {

void FiniteGroup::validate() const {
    int n = order;
    if (n <= 0) throw GroupValidationError("group order must be positive");
    if (int(mult.size()) != n * n) throw GroupValidationError("multiplication table has wrong size");
    for (int i = 0; i < n * n; ++i)
        if (mult[i] < 0 || mult[i] >= n)
            throw GroupValidationError("multiplication table entry out of range at (" +
                                       std::to_string(i / n) + ", " + std::to_string(i % n) + ")");
    for (int g = 0; g < n; ++g) {
        if (op(identity, g) != g || op(g, identity) != g)
            throw GroupValidationError("element 0 is not a two-sided identity at " + std::to_string(g));
    }
    // Latin square
    for (int r = 0; r < n; ++r) {
        std::vector<char> seen_row(n, 0), seen_col(n, 0);
        for (int c = 0; c < n; ++c) {
            if (seen_row[op(r, c)]++)
                throw GroupValidationError("row " + std::to_string(r) + " of the table is not a permutation");
            if (seen_col[op(c, r)]++)
                throw GroupValidationError("column " + std::to_string(r) + " of the table is not a permutation");
        }
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (op(op(i, j), k) != op(i, op(j, k)))
                    throw GroupValidationError("multiplication table is not associative at triple (" +
                                               std::to_string(i) + ", " + std::to_string(j) + ", " +
                                               std::to_string(k) + ")");
    if (int(inverse.size()) != n) throw GroupValidationError("inverse table has wrong size");
    for (int g = 0; g < n; ++g)
        if (op(g, inverse[g]) != identity || op(inverse[g], g) != identity)
            throw GroupValidationError("inverse table wrong at element " + std::to_string(g));
}

FiniteGroup make_group(int order, std::vector<int> mult, std::string name) {
    FiniteGroup g;
    g.order = order;
    g.mult = std::move(mult);
    g.name = std::move(name);
    g.inverse.assign(order, -1);
    if (int(g.mult.size()) != order * order)
        throw GroupValidationError("multiplication table has wrong size");
    for (int x = 0; x < order; ++x)
        for (int y = 0; y < order; ++y)
            if (g.mult[x * order + y] == g.identity) g.inverse[x] = y;
    for (int x = 0; x < order; ++x)
        if (g.inverse[x] < 0)
            throw GroupValidationError("element " + std::to_string(x) + " has no inverse");
    g.validate();
    return g;
}

std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g) {
    int n = g.order;
    std::vector<char> done(n, 0);
    std::vector<ConjugacyClass> out;
    for (int rep = 0; rep < n; ++rep) {
        if (done[rep]) continue;
        ConjugacyClass cls;
        std::vector<char> in(n, 0);
        for (int w = 0; w < n; ++w) in[g.conj(w, rep)] = 1;
        for (int x = 0; x < n; ++x)
            if (in[x]) {
                cls.members.push_back(x);
                done[x] = 1;
            }
        cls.representative = cls.members.front();
        for (int x = 0; x < n; ++x)
            if (g.op(x, cls.representative) == g.op(cls.representative, x)) cls.centralizer.push_back(x);
        out.push_back(std::move(cls));
    }
    return out;
}

std::vector<int> class_index_table(const FiniteGroup& g, const std::vector<ConjugacyClass>& classes) {
    std::vector<int> t(g.order, -1);
    for (int c = 0; c < int(classes.size()); ++c)
        for (int m : classes[c].members) t[m] = c;
    return t;
}

std::vector<int> group_center(const FiniteGroup& g) {
    std::vector<int> z;
    for (int x = 0; x < g.order; ++x) {
        bool central = true;
        for (int y = 0; y < g.order && central; ++y)
            if (g.op(x, y) != g.op(y, x)) central = false;
        if (central) z.push_back(x);
    }
    return z;
}

bool is_abelian_subset(const FiniteGroup& g, const std::vector<int>& elems) {
    for (int a : elems)
        for (int b : elems)
            if (g.op(a, b) != g.op(b, a)) return false;
    return true;
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    int h = int(elems.size());
    Subgroup s;
    s.elems = elems;
    s.parent_to_sub.assign(g.order, -1);
    for (int i = 0; i < h; ++i) s.parent_to_sub[elems[i]] = i;
    if (elems.empty() || elems[0] != g.identity)
        throw GroupValidationError("subgroup does not contain the identity");
    std::vector<int> mult(h * h);
    for (int i = 0; i < h; ++i)
        for (int j = 0; j < h; ++j) {
            int p = g.op(elems[i], elems[j]);
            int q = s.parent_to_sub[p];
            if (q < 0) throw GroupValidationError("element set is not closed under multiplication");
            mult[i * h + j] = q;
        }
    s.group = make_group(h, std::move(mult), g.name + "-subgroup");
    return s;
}

const CMat& SubgroupIrrep::mat_at(int parent_elem) const {
    int p = pos_of(parent_elem);
    if (p < 0) throw std::out_of_range("element not in the irrep's subgroup");
    return matrices[p];
}

int SubgroupIrrep::pos_of(int parent_elem) const {
    auto it = std::lower_bound(subgroup.begin(), subgroup.end(), parent_elem);
    if (it == subgroup.end() || *it != parent_elem) return -1;
    return int(it - subgroup.begin());
}

void validate_subgroup_irrep(const FiniteGroup& g, const SubgroupIrrep& irrep) {
    int h = int(irrep.subgroup.size());
    if (int(irrep.matrices.size()) != h)
        throw GroupValidationError("irrep '" + irrep.label + "': matrix count mismatch");
    CMat id = CMat::identity(irrep.dim);
    for (int i = 0; i < h; ++i) {
        const CMat& m = irrep.matrices[i];
        if (m.rows() != irrep.dim || m.cols() != irrep.dim)
            throw GroupValidationError("irrep '" + irrep.label + "': matrix dimension mismatch");
        if ((m * m.adjoint()).max_abs_diff(id) > 1e-12)
            throw GroupValidationError("irrep '" + irrep.label + "': matrix not unitary at element " +
                                       std::to_string(irrep.subgroup[i]));
    }
    for (int a : irrep.subgroup)
        for (int b : irrep.subgroup) {
            int p = g.op(a, b);
            if ((irrep.mat_at(a) * irrep.mat_at(b)).max_abs_diff(irrep.mat_at(p)) > 1e-12)
                throw GroupValidationError("irrep '" + irrep.label + "': not a homomorphism at pair (" +
                                           std::to_string(a) + ", " + std::to_string(b) + ")");
        }
    double s = 0.0;
    for (int a : irrep.subgroup) s += std::norm(irrep.mat_at(a).trace());
    if (std::abs(s / h - 1.0) > 1e-10)
        throw GroupValidationError("irrep '" + irrep.label + "': not irreducible (character norm " +
                                   std::to_string(s / h) + ")");
}

DoubleCosetSystem double_cosets(const FiniteGroup& g,
                                const std::vector<ConjugacyClass>& classes,
                                const std::vector<int>& class_of,
                                int class_a, int class_b,
                                TieBreak tie) {
    const ConjugacyClass& a = classes[class_a];
    const ConjugacyClass& b = classes[class_b];
    int n = g.order;
    bool smallest = (tie == TieBreak::SmallestIndex);

    DoubleCosetSystem sys;
    sys.left = a.centralizer;
    sys.right = b.centralizer;
    sys.coset_of.assign(n, -1);

    for (int step = 0; step < n; ++step) {
        int seed = smallest ? step : n - 1 - step;
        if (sys.coset_of[seed] >= 0) continue;
        DoubleCosetSystem::Coset c;
        std::vector<char> in(n, 0);
        for (int n1 : sys.left)
            for (int n2 : sys.right) in[g.op(g.op(n1, seed), g.inv(n2))] = 1;
        for (int x = 0; x < n; ++x)
            if (in[x]) c.members.push_back(x);
        c.rep = smallest ? c.members.front() : c.members.back();

        // g_A y g_B y^-1, the element whose class is C(xi)
        int target = g.op(a.representative, g.conj(c.rep, b.representative));
        c.class_index = class_of[target];
        c.class_rep = classes[c.class_index].representative;
        c.w = -1;
        for (int step_w = 0; step_w < n; ++step_w) {
            int w = smallest ? step_w : n - 1 - step_w;
            if (g.conj(w, c.class_rep) == target) { c.w = w; break; }
        }
        if (c.w < 0) throw GroupValidationError("no conjugator found; class table inconsistent");
        int idx = int(sys.cosets.size());
        for (int x : c.members) sys.coset_of[x] = idx;
        sys.cosets.push_back(std::move(c));
    }

    sys.section_n.assign(n, {-1, -1});
    for (int x = 0; x < n; ++x) {
        int y = sys.cosets[sys.coset_of[x]].rep;
        bool found = false;
        for (size_t i1 = 0; i1 < sys.left.size() && !found; ++i1)
            for (size_t i2 = 0; i2 < sys.right.size() && !found; ++i2) {
                int n1 = smallest ? sys.left[i1] : sys.left[sys.left.size() - 1 - i1];
                int n2 = smallest ? sys.right[i2] : sys.right[sys.right.size() - 1 - i2];
                if (g.op(g.op(n1, y), g.inv(n2)) == x) {
                    sys.section_n[x] = {n1, n2};
                    found = true;
                }
            }
        if (!found) throw GroupValidationError("section map failed; double cosets inconsistent");
    }
    return sys;
}

std::vector<int> regular_part(const FiniteGroup& g,
                              const ConjugacyClass& a, const ConjugacyClass& b) {
    std::vector<int> center = group_center(g);
    std::vector<char> central(g.order, 0);
    for (int z : center) central[z] = 1;
    std::vector<int> out;
    for (int x = 0; x < g.order; ++x) {
        bool ok = true;
        for (int n1 : a.centralizer) {
            for (int n2 : b.centralizer)
                if (g.op(g.op(n1, x), g.inv(n2)) == x && !(n1 == n2 && central[n1])) { ok = false; break; }
            if (!ok) break;
        }
        if (ok) out.push_back(x);
    }
    return out;
}

} // namespace qdouble
