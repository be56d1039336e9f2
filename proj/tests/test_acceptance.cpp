// Acceptance suite: one test case per criterion, each printing a pass/fail
// line with the measured defect against its pinned tolerance.
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <random>

#include "qdouble/double_finite.hpp"
#include "qdouble/dsu2.hpp"

using namespace qdouble;

namespace {

constexpr double pi = std::numbers::pi;

double elapsed_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

void report(int criterion, bool pass, const std::string& detail) {
    std::printf("criterion %2d [%s] %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
}

HalfInt half(int twice) { return HalfInt::from_twice(twice); }

} // namespace

TEST_CASE("criterion 1: Hopf axiom contractions on the small-group family") {
    auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    for (const char* name : {"Z2", "Z3", "Z4", "Z6", "S3", "D4", "Q8"}) {
        GroupData gd = builtin_group(name);
        HopfReport rep = verify_hopf(gd);
        REQUIRE(rep.axioms.size() == 8);
        worst = std::max(worst, rep.max_defect());
    }
    double dt = elapsed_since(t0);
    bool pass = worst < 1e-12 && dt < 30.0;
    report(1, pass,
           fmt("eight Hopf axioms on {Z2,Z3,Z4,Z6,S3,D4,Q8}: max defect %.3e (< 1e-12), %.1f s (< 30 s)",
               worst, dt));
    CHECK(worst < 1e-12);
    CHECK(dt < 30.0);
}

TEST_CASE("criterion 2: Peter-Weyl dimension identity for every catalog group") {
    bool pass = true;
    for (int n = 1; n <= 12; ++n) {
        GroupData gd = builtin_group("Z" + std::to_string(n));
        pass = pass && peter_weyl_sum(gd) == (long long)n * n;
    }
    for (const char* name : {"S3", "D4", "Q8"}) {
        GroupData gd = builtin_group(name);
        pass = pass && peter_weyl_sum(gd) == (long long)gd.group.order * gd.group.order;
    }
    long long s3 = peter_weyl_sum(builtin_group("S3"));
    long long d4 = peter_weyl_sum(builtin_group("D4"));
    long long q8 = peter_weyl_sum(builtin_group("Q8"));
    pass = pass && s3 == 36 && d4 == 64 && q8 == 64;
    report(2, pass,
           fmt("sum (|A| d_alpha)^2 = |G|^2 exactly on Z1..Z12, S3 (%lld), D4 (%lld), Q8 (%lld)",
               s3, d4, q8));
    CHECK(pass);
}

TEST_CASE("criterion 3: norm isometry of the rho decomposition on D(S3)") {
    GroupData s3 = builtin_group("S3");
    auto irreps = all_double_irreps(s3);
    std::mt19937 rng(2026);
    std::uniform_int_distribution<int> pick(0, int(irreps.size()) - 1);
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
        const DoubleIrrep& ra = irreps[pick(rng)];
        const DoubleIrrep& rb = irreps[pick(rng)];
        TensorState phi = random_covariant_state(s3, ra, rb, rng);
        IsometryCheck chk = isometry_check(s3, ra, rb, phi);
        worst = std::max(worst, chk.defect() / (1.0 + chk.lhs));
    }
    bool pass = worst < 1e-10;
    report(3, pass, fmt("norm identity over 20 random covariant states: max defect %.3e (< 1e-10)",
                        worst));
    CHECK(pass);
}

TEST_CASE("criterion 4: fusion dual-oracle agreement and vacuum identity") {
    bool pass = true;
    std::string detail;
    for (const char* name : {"S3", "Z4"}) {
        GroupData gd = builtin_group(name);
        auto irreps = all_double_irreps(gd);
        int pairs = 0;
        try {
            for (const auto& ra : irreps)
                for (const auto& rb : irreps) {
                    FusionResult res = fusion_multiplicities(gd, ra, rb);
                    ++pairs;
                    // vacuum channel acts as the identity
                    if (&ra == &irreps[0]) {
                        pass = pass && res.channels.size() == 1 &&
                               res.channels[0].multiplicity == 1 &&
                               res.channels[0].class_index == rb.class_index &&
                               gd.centralizer_irreps[rb.class_index][res.channels[0].gamma_index]
                                       .label == rb.alpha.label;
                    }
                }
        } catch (const OracleDisagreement& e) {
            pass = false;
            detail = e.what();
        }
        detail += fmt("%s: %d pairs  ", name, pairs);
    }
    report(4, pass, "rank and character multiplicities identical; " + detail);
    CHECK(pass);
}

TEST_CASE("criterion 5: braid intertwiner, finite exactly and SU(2) by quadrature") {
    // finite part: all point-mass F on every irrep pair of D(Z2) and D(S3)
    double worst_finite = 0.0;
    std::mt19937 rng(77);
    for (const char* name : {"Z2", "S3"}) {
        GroupData gd = builtin_group(name);
        DoubleAlgebra alg(gd.group);
        auto irreps = all_double_irreps(gd);
        for (const auto& ra : irreps)
            for (const auto& rb : irreps) {
                TensorState phi = random_covariant_state(gd, ra, rb, rng);
                for (int g = 0; g < gd.group.order; ++g)
                    for (int x = 0; x < gd.group.order; ++x) {
                        DoubleElement f = alg.point_mass(g, x);
                        TensorState lhs = braid_apply(gd, ra, rb, tensor_apply(gd, ra, rb, f, phi));
                        TensorState rhs = tensor_apply(gd, rb, ra, f, braid_apply(gd, ra, rb, phi));
                        worst_finite = std::max(worst_finite, lhs.max_abs_diff(rhs));
                    }
            }
    }

    // SU(2): band-limited F with a, b <= 1, Haar quadrature order 32
    DSu2Labels lab{{pi / 2, half(1)}, {2 * pi / 3, half(1)}};
    HalfInt j1 = half(1), j2 = half(1);
    TensorFn phi = [&](const SU2Element& x, const SU2Element& y) {
        return wigner_D(j1, half(1), lab.first.n, x) * wigner_D(j2, half(-1), lab.second.n, y);
    };
    Su2Quadrature haar = haar_quadrature(32, 32, 32);
    SU2Element gr1 = SU2Element::g_phi(lab.first.r), gr2 = SU2Element::g_phi(lab.second.r);
    std::vector<std::pair<HalfInt, HalfInt>> fspins = {{half(1), half(1)},
                                                       {half(2), half(1)},
                                                       {half(2), half(2)}};
    std::mt19937 rng2(5);
    std::uniform_real_distribution<double> u(0.15, 2.9);
    double worst_su2 = 0.0;
    for (auto [fa, fb] : fspins) {
        auto f = [&](const SU2Element& uu, const SU2Element& vv) {
            return wigner_D(fa, fa, -fa, uu) * wigner_D(fb, fb, fb, vv);
        };
        auto f_phi = [&](const SU2Element& x, const SU2Element& y) {
            cplx acc = 0.0;
            for (const auto& node : haar.nodes)
                acc += node.weight * f(x * gr1 * x.inverse() * y * gr2 * y.inverse(), node.g) *
                       phi(node.g.inverse() * x, node.g.inverse() * y);
            return acc;
        };
        for (int t = 0; t < 2; ++t) {
            SU2Element px = SU2Element::from_euler(u(rng2), u(rng2) / 1.2, u(rng2));
            SU2Element py = SU2Element::from_euler(u(rng2), u(rng2) / 1.2, u(rng2));
            cplx lhs = braid_eval(lab, f_phi, px, py);
            cplx rhs = 0.0;
            for (const auto& node : haar.nodes)
                rhs += node.weight *
                       f(px * gr2 * px.inverse() * py * gr1 * py.inverse(), node.g) *
                       braid_eval(lab, phi, node.g.inverse() * px, node.g.inverse() * py);
            worst_su2 = std::max(worst_su2, std::abs(lhs - rhs));
        }
    }
    bool pass = worst_finite < 1e-12 && worst_su2 < 1e-8;
    report(5, pass,
           fmt("intertwiner identity: finite %.3e (< 1e-12), SU(2) order-32 %.3e (< 1e-8)",
               worst_finite, worst_su2));
    CHECK(worst_finite < 1e-12);
    CHECK(worst_su2 < 1e-8);
}

TEST_CASE("criterion 6: SU(2) special functions") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    auto rand_el = [&] {
        return SU2Element::from_euler(2.0 * pi * u01(rng), std::acos(2.0 * u01(rng) - 1.0),
                                      -2.0 * pi + 4.0 * pi * u01(rng));
    };
    double worst_rep = 0.0;
    for (int t = 0; t < 100; ++t) {
        SU2Element g1 = rand_el(), g2 = rand_el();
        for (int tj = 0; tj <= 6; ++tj) {
            HalfInt j = half(tj);
            CMat d1 = wigner_D_matrix(j, g1), d2 = wigner_D_matrix(j, g2);
            worst_rep = std::max(worst_rep, (d1 * d2).max_abs_diff(wigner_D_matrix(j, g1 * g2)));
            worst_rep =
                std::max(worst_rep, (d1 * d1.adjoint()).max_abs_diff(CMat::identity(tj + 1)));
        }
    }

    double worst_cg = 0.0;
    for (int tj1 = 0; tj1 <= 4; ++tj1)
        for (int tj2 = 0; tj2 <= 4; ++tj2)
            for (int tj = std::abs(tj1 - tj2); tj <= tj1 + tj2; tj += 2)
                for (int tjp = std::abs(tj1 - tj2); tjp <= tj1 + tj2; tjp += 2)
                    for (int tm = -tj; tm <= tj; tm += 2) {
                        if (std::abs(tm) > tjp) continue;
                        double s = 0.0;
                        for (int tm1 = -tj1; tm1 <= tj1; tm1 += 2) {
                            int tm2 = tm - tm1;
                            if (std::abs(tm2) > tj2) continue;
                            s += su2_cgc(half(tj1), half(tm1), half(tj2), half(tm2), half(tj),
                                         half(tm)) *
                                 su2_cgc(half(tj1), half(tm1), half(tj2), half(tm2), half(tjp),
                                         half(tm));
                        }
                        worst_cg = std::max(worst_cg, std::abs(s - (tj == tjp ? 1.0 : 0.0)));
                    }
    bool pass = worst_rep < 1e-10 && worst_cg < 1e-12;
    report(6, pass,
           fmt("D^j rep/unitarity (j <= 3, 100 pairs) %.3e (< 1e-10); CG orthogonality %.3e (< 1e-12)",
               worst_rep, worst_cg));
    CHECK(worst_rep < 1e-10);
    CHECK(worst_cg < 1e-12);
}

TEST_CASE("criterion 7: fusion interval endpoints and measure mass on a grid") {
    double worst_end = 0.0, worst_mass = 0.0;
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            double r1 = 2.0 * pi * (i + 0.5) / 10.0;
            double r2 = 2.0 * pi * (j + 0.5) / 10.0;
            FusionInterval iv = fusion_interval(r1, r2);
            worst_end = std::max(worst_end, std::abs(lambda_map(r1, r2, pi) - iv.lo));
            worst_end = std::max(worst_end, std::abs(lambda_map(r1, r2, 0.0) - iv.hi));
            worst_mass = std::max(worst_mass, std::abs(nu_total_mass(r1, r2) - 1.0));
        }
    bool pass = worst_end < 1e-12 && worst_mass < 1e-10;
    report(7, pass,
           fmt("10x10 (r1,r2) grid: endpoint defect %.3e (< 1e-12), nu mass defect %.3e (< 1e-10)",
               worst_end, worst_mass));
    CHECK(worst_end < 1e-12);
    CHECK(worst_mass < 1e-10);
}

TEST_CASE("criterion 8: generalized CGC closed form vs zeta-quadrature oracle") {
    std::mt19937 rng(404);
    std::uniform_real_distribution<double> ur(0.4, 2.0 * pi - 0.4);
    std::uniform_real_distribution<double> uth(0.25, pi - 0.25);
    std::uniform_int_distribution<int> un(-2, 2);
    std::uniform_int_distribution<int> coin(0, 1);
    double worst = 0.0;
    int done = 0;
    while (done < 50) {
        DSu2Labels lab{{ur(rng), half(un(rng))}, {ur(rng), half(un(rng))}};
        double th = uth(rng);
        double r3 = lambda_map(lab.first.r, lab.second.r, th);
        if (std::sin(r3 / 2.0) < 1e-3) continue;
        // j1, j2 on the right ladders, <= 3/2
        HalfInt j1 = abs(lab.first.n), j2 = abs(lab.second.n);
        if (j1.twice == 0) j1 = half(coin(rng) ? 2 : 0);
        if (j1 < abs(lab.first.n)) j1 = abs(lab.first.n);
        if (j1.twice + 2 <= 3 && coin(rng)) j1 += 1;
        if (j2.twice == 0 && coin(rng)) j2 = half(2);
        std::uniform_int_distribution<int> um1(0, j1.twice), um2(0, j2.twice);
        HalfInt m1 = half(j1.twice - 2 * um1(rng)), m2 = half(j2.twice - 2 * um2(rng));
        HalfInt m = m1 + m2;
        HalfInt n3 = lab.first.n + lab.second.n + HalfInt::whole(un(rng) % 2);
        HalfInt jlo = max(max(abs(j1 - j2), abs(m)), abs(n3));
        if (jlo > j1 + j2) continue;
        HalfInt j = jlo;
        cplx c = dsu2_cgc(lab, n3, r3, j1, m1, j2, m2, j, m);
        cplx q = dsu2_cgc_quadrature(lab, n3, r3, j1, m1, j2, m2, j, 256);
        worst = std::max(worst, std::abs(c - q));
        ++done;
    }
    bool pass = worst < 1e-8;
    report(8, pass, fmt("50 random tuples, spins <= 3/2: max |closed - quadrature| %.3e (< 1e-8)",
                        worst));
    CHECK(pass);
}

TEST_CASE("criterion 9: orthogonality Gram at jmax 3/2, order 64") {
    auto t0 = std::chrono::steady_clock::now();
    DSu2Labels lab{{pi / 2, half(1)}, {2 * pi / 3, half(1)}};
    GramReport rep = orthogonality_gram(lab, half(3), 64);
    double dt = elapsed_since(t0);

    // diagonal entries must reproduce 1/((2j1+1)(2j2+1))
    double worst_diag = 0.0;
    for (size_t t = 0; t < rep.basis.size(); ++t) {
        double want = 1.0 / ((rep.basis[t].j1.twice + 1.0) * (rep.basis[t].j2.twice + 1.0));
        worst_diag = std::max(worst_diag, std::abs(rep.gram(int(t), int(t)).real() - want));
    }
    bool pass = rep.max_defect < 1e-6 && dt < 60.0;
    report(9, pass,
           fmt("Gram defect %.3e (< 1e-6), diagonal defect %.3e, basis %zu, %.1f s (< 60 s)",
               rep.max_defect, worst_diag, rep.basis.size(), dt));
    CHECK(rep.max_defect < 1e-6);
    CHECK(worst_diag < 1e-6);
    CHECK(dt < 60.0);
}

TEST_CASE("criterion 10: Gram matrix is invariant under section-gauge changes") {
    DSu2Labels lab{{pi / 2, half(1)}, {2 * pi / 3, half(1)}};
    GramReport plain = orthogonality_gram(lab, half(3), 64);
    GramReport gauged = orthogonality_gram(lab, half(3), 64, SectionGauge{0.8, -1.4, 2.3});
    double diff = plain.gram.max_abs_diff(gauged.gram);
    bool pass = diff < 1e-10;
    report(10, pass,
           fmt("gauge a->g_phi a g_psi, w->g_phi w g_zeta: Gram change %.3e (< 1e-10)", diff));
    CHECK(pass);
}
