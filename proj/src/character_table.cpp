#include "qdouble/character_table.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace qdouble {

double CharacterTable::row_orthogonality_defect(int group_order) const {
    int r = num_irreps();
    double worst = 0.0;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            cplx s = 0.0;
            for (int c = 0; c < r; ++c)
                s += double(classes[c].members.size()) * values(i, c) * std::conj(values(j, c));
            s /= double(group_order);
            worst = std::max(worst, std::abs(s - (i == j ? cplx(1.0) : cplx(0.0))));
        }
    return worst;
}

namespace {

// lexicographic key on rounded character values, for a stable row order
std::vector<long long> row_key(const CMat& values, int row) {
    std::vector<long long> k;
    for (int c = 0; c < values.cols(); ++c) {
        k.push_back(llround(values(row, c).real() * 1e9));
        k.push_back(llround(values(row, c).imag() * 1e9));
    }
    return k;
}

} // namespace

CharacterTable character_table(const FiniteGroup& g) {
    auto classes = conjugacy_classes(g);
    auto class_of = class_index_table(g, classes);
    int r = int(classes.size());
    int n = g.order;

    // class-algebra structure constants: Z_i Z_j = sum_k a[i][j][k] Z_k
    std::vector<CMat> amat(r, CMat(r, r));
    for (int i = 0; i < r; ++i) {
        std::vector<std::vector<long long>> count(r, std::vector<long long>(r, 0));
        for (int x : classes[i].members)
            for (int j = 0; j < r; ++j)
                for (int y : classes[j].members) count[j][class_of[g.op(x, y)]]++;
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) {
                long long tot = count[j][k];
                long long sz = (long long)classes[k].members.size();
                if (tot % sz != 0) throw GroupValidationError("class algebra inconsistency");
                amat[i](j, k) = double(tot / sz);
            }
    }

    for (unsigned seed = 0; seed < 24; ++seed) {
        std::mt19937 rng(12345 + seed);
        std::uniform_real_distribution<double> uni(0.1, 1.0);
        CMat blend(r, r);
        for (int i = 0; i < r; ++i) blend = blend + amat[i].scaled(uni(rng));

        EigenPairs ep;
        if (!simple_eigenpairs(blend, ep)) continue;

        CMat values(r, r);
        std::vector<int> degrees(r, 0);
        bool ok = true;
        for (int k = 0; k < r && ok; ++k) {
            const auto& v = ep.vectors[k];
            int mi = 0;
            for (int i = 1; i < r; ++i)
                if (std::abs(v[i]) > std::abs(v[mi])) mi = i;
            // omega_i = |C_i| chi(g_i) / degree, recovered as joint eigenvalues
            std::vector<cplx> omega(r);
            for (int i = 0; i < r; ++i) {
                cplx num = 0.0;
                for (int j = 0; j < r; ++j) num += amat[i](mi, j) * v[j];
                omega[i] = num / v[mi];
                double resid = 0.0;
                for (int row = 0; row < r; ++row) {
                    cplx lhs = 0.0;
                    for (int j = 0; j < r; ++j) lhs += amat[i](row, j) * v[j];
                    resid = std::max(resid, std::abs(lhs - omega[i] * v[row]));
                }
                if (resid > 1e-7 * (1.0 + std::abs(omega[i]))) { ok = false; break; }
            }
            if (!ok) break;
            double s = 0.0;
            for (int i = 0; i < r; ++i) s += std::norm(omega[i]) / double(classes[i].members.size());
            double d = std::sqrt(double(n) / s);
            int di = int(llround(d));
            if (std::abs(d - di) > 1e-6 || di < 1) { ok = false; break; }
            degrees[k] = di;
            for (int i = 0; i < r; ++i)
                values(k, i) = omega[i] * double(di) / double(classes[i].members.size());
        }
        if (!ok) continue;

        // order rows: trivial first, then by degree, then lexicographically
        std::vector<int> perm(r);
        for (int i = 0; i < r; ++i) perm[i] = i;
        auto is_trivial = [&](int row) {
            for (int c = 0; c < r; ++c)
                if (std::abs(values(row, c) - cplx(1.0)) > 1e-8) return false;
            return true;
        };
        std::sort(perm.begin(), perm.end(), [&](int p, int q) {
            bool tp = is_trivial(p), tq = is_trivial(q);
            if (tp != tq) return tp;
            if (degrees[p] != degrees[q]) return degrees[p] < degrees[q];
            return row_key(values, p) < row_key(values, q);
        });

        CharacterTable tab;
        tab.classes = classes;
        tab.values = CMat(r, r);
        tab.degrees.resize(r);
        for (int i = 0; i < r; ++i) {
            tab.degrees[i] = degrees[perm[i]];
            for (int c = 0; c < r; ++c) tab.values(i, c) = values(perm[i], c);
        }
        long long degsum = 0;
        for (int d : tab.degrees) degsum += (long long)d * d;
        if (degsum != n) continue;
        if (tab.row_orthogonality_defect(n) > 1e-10) continue;
        return tab;
    }
    throw GroupValidationError("character table: eigenvector separation failed after reseeding");
}

} // namespace qdouble
