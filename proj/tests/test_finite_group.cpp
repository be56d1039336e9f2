#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "qdouble/builtin_groups.hpp"
#include "qdouble/character_table.hpp"

using namespace qdouble;

namespace {

// independent orbit enumeration, used as the oracle for class examples
std::vector<std::set<int>> brute_classes(const FiniteGroup& g) {
    std::vector<std::set<int>> out;
    std::vector<char> done(g.order, 0);
    for (int x = 0; x < g.order; ++x) {
        if (done[x]) continue;
        std::set<int> orbit;
        for (int w = 0; w < g.order; ++w) orbit.insert(g.op(g.op(w, x), g.inv(w)));
        for (int m : orbit) done[m] = 1;
        out.push_back(orbit);
    }
    return out;
}

// independent double-coset enumeration
std::vector<std::set<int>> brute_double_cosets(const FiniteGroup& g, const std::vector<int>& na,
                                               const std::vector<int>& nb) {
    std::vector<std::set<int>> out;
    std::vector<char> done(g.order, 0);
    for (int y = 0; y < g.order; ++y) {
        if (done[y]) continue;
        std::set<int> coset;
        for (int n1 : na)
            for (int n2 : nb) coset.insert(g.op(g.op(n1, y), g.inv(n2)));
        for (int m : coset) done[m] = 1;
        out.push_back(coset);
    }
    return out;
}

std::vector<int> sorted_sizes(const std::vector<std::set<int>>& parts) {
    std::vector<int> s;
    for (const auto& p : parts) s.push_back(int(p.size()));
    std::sort(s.begin(), s.end());
    return s;
}

} // namespace

TEST_CASE("group table validation names the failing triple") {
    std::vector<int> mult = {0, 1, 2, 1, 2, 0, 2, 0, 1};
    CHECK_NOTHROW(make_group(3, mult, "Z3"));
    mult[1 * 3 + 1] = 1; // row 1 no longer a permutation
    CHECK_THROWS_AS(make_group(3, mult, "bad"), GroupValidationError);
    // Latin square with identity but not associative (a loop, not a group)
    std::vector<int> ls = {0, 1, 2, 3, 4,
                           1, 0, 3, 4, 2,
                           2, 4, 0, 1, 3,
                           3, 2, 4, 0, 1,
                           4, 3, 1, 2, 0};
    try {
        make_group(5, ls, "loop");
        CHECK(false);
    } catch (const GroupValidationError& e) {
        CHECK(std::string(e.what()).find("associative at triple") != std::string::npos);
    }
}

TEST_CASE("catalog groups satisfy the group axioms") {
    for (const char* name : {"Z1", "Z2", "Z5", "Z12", "S3", "D4", "Q8"}) {
        GroupData gd = builtin_group(name);
        CHECK_NOTHROW(gd.group.validate());
        CHECK(gd.group.identity == 0);
    }
    CHECK_THROWS_AS(builtin_group("Z13"), std::invalid_argument);
    CHECK_THROWS_AS(builtin_group("A5"), std::invalid_argument);
}

TEST_CASE("conjugacy classes: Z2, S3, Q8 against the orbit oracle") {
    GroupData z2 = builtin_group("Z2");
    auto cls2 = conjugacy_classes(z2.group);
    REQUIRE(cls2.size() == 2);
    for (const auto& c : cls2) {
        CHECK(c.members.size() == 1);
        CHECK(c.centralizer.size() == 2);
    }

    GroupData s3 = builtin_group("S3");
    auto cls3 = conjugacy_classes(s3.group);
    auto oracle3 = brute_classes(s3.group);
    REQUIRE(cls3.size() == oracle3.size());
    CHECK(sorted_sizes(oracle3) == std::vector<int>{1, 2, 3});
    std::vector<int> cent_orders;
    for (const auto& c : cls3) cent_orders.push_back(int(c.centralizer.size()));
    std::sort(cent_orders.begin(), cent_orders.end());
    CHECK(cent_orders == std::vector<int>{2, 3, 6});

    GroupData q8 = builtin_group("Q8");
    CHECK(sorted_sizes(brute_classes(q8.group)) == std::vector<int>{1, 1, 2, 2, 2});

    // representative is the smallest member; members match the oracle orbit
    for (const auto& c : cls3) {
        CHECK(c.representative == c.members.front());
        std::set<int> mem(c.members.begin(), c.members.end());
        CHECK(std::find(oracle3.begin(), oracle3.end(), mem) != oracle3.end());
    }
}

TEST_CASE("orbit-stabilizer holds exactly on the whole catalog") {
    for (const char* name : {"Z1", "Z2", "Z3", "Z4", "Z6", "Z8", "Z12", "S3", "D4", "Q8"}) {
        GroupData gd = builtin_group(name);
        for (const auto& c : gd.classes)
            CHECK(c.members.size() * c.centralizer.size() == size_t(gd.group.order));
    }
}

TEST_CASE("double cosets partition the group and satisfy the section identities") {
    for (const char* name : {"S3", "D4", "Q8", "Z4"}) {
        GroupData gd = builtin_group(name);
        const FiniteGroup& g = gd.group;
        for (int a = 0; a < int(gd.classes.size()); ++a)
            for (int b = 0; b < int(gd.classes.size()); ++b) {
                auto dcs = double_cosets(g, gd.classes, gd.class_of, a, b);
                std::vector<int> seen(g.order, 0);
                for (const auto& c : dcs.cosets)
                    for (int m : c.members) seen[m]++;
                CHECK(std::all_of(seen.begin(), seen.end(), [](int v) { return v == 1; }));
                // class equation g_A y g_B y^-1 = w g_C w^-1, exactly
                for (const auto& c : dcs.cosets) {
                    int target = g.op(gd.classes[a].representative,
                                      g.conj(c.rep, gd.classes[b].representative));
                    CHECK(g.conj(c.w, c.class_rep) == target);
                    CHECK(gd.class_of[target] == c.class_index);
                }
                // section maps: x = n1(x) y(xi) n2(x)^-1 for every x
                for (int x = 0; x < g.order; ++x) {
                    auto [n1, n2] = dcs.section_n[x];
                    int y = dcs.cosets[dcs.coset_of[x]].rep;
                    CHECK(g.op(g.op(n1, y), g.inv(n2)) == x);
                }
            }
    }
}

TEST_CASE("double coset examples against the brute-force oracle") {
    GroupData s3 = builtin_group("S3");
    const FiniteGroup& g = s3.group;

    // A = B = {e}: the centralizer of the identity is all of G, so G e G = G
    // is the single double coset
    auto dcs_e = double_cosets(g, s3.classes, s3.class_of, 0, 0);
    CHECK(dcs_e.cosets.size() == 1);
    CHECK(dcs_e.cosets[0].members.size() == 6);
    CHECK(dcs_e.cosets[0].rep == 0);
    CHECK(dcs_e.cosets[0].class_rep == 0); // e y e y^-1 = e

    // transposition class pair: N_A = N_B of order 2
    int ta = -1;
    for (int c = 0; c < int(s3.classes.size()); ++c)
        if (s3.classes[c].members.size() == 3) ta = c;
    REQUIRE(ta >= 0);
    auto oracle = brute_double_cosets(g, s3.classes[ta].centralizer, s3.classes[ta].centralizer);
    auto dcs_t = double_cosets(g, s3.classes, s3.class_of, ta, ta);
    CHECK(dcs_t.cosets.size() == oracle.size());
    CHECK(sorted_sizes(oracle) == std::vector<int>{2, 4});

    // Z4 with A = B = {i}: N = G, one coset covering the group
    GroupData z4 = builtin_group("Z4");
    auto dcs_i = double_cosets(z4.group, z4.classes, z4.class_of, 1, 1);
    CHECK(dcs_i.cosets.size() == 1);
    CHECK(dcs_i.cosets[0].members.size() == 4);
}

TEST_CASE("regular part") {
    GroupData z2 = builtin_group("Z2");
    auto go = regular_part(z2.group, z2.classes[1], z2.classes[1]);
    CHECK(go.size() == 2); // abelian: N = Z = G, every x qualifies

    GroupData s3 = builtin_group("S3");
    int ta = -1;
    for (int c = 0; c < int(s3.classes.size()); ++c)
        if (s3.classes[c].members.size() == 3) ta = c;
    auto go_t = regular_part(s3.group, s3.classes[ta], s3.classes[ta]);
    // invariance under x -> n1 x n2^-1
    std::set<int> go_set(go_t.begin(), go_t.end());
    for (int x : go_t)
        for (int n1 : s3.classes[ta].centralizer)
            for (int n2 : s3.classes[ta].centralizer)
                CHECK(go_set.count(s3.group.op(s3.group.op(n1, x), s3.group.inv(n2))) == 1);

    // A = B = {e}: direct evaluation oracle
    auto go_e = regular_part(s3.group, s3.classes[0], s3.classes[0]);
    std::vector<int> center = group_center(s3.group);
    std::set<int> zset(center.begin(), center.end());
    std::vector<int> expect;
    for (int x = 0; x < s3.group.order; ++x) {
        bool ok = true;
        for (int n1 = 0; n1 < s3.group.order && ok; ++n1)
            for (int n2 = 0; n2 < s3.group.order && ok; ++n2)
                if (s3.group.op(s3.group.op(n1, x), s3.group.inv(n2)) == x &&
                    !(n1 == n2 && zset.count(n1)))
                    ok = false;
        if (ok) expect.push_back(x);
    }
    CHECK(go_e == expect);
}

TEST_CASE("Burnside character table oracle") {
    // Z3: three linear characters with values in the cube roots of unity
    GroupData z3 = builtin_group("Z3");
    CharacterTable t3 = character_table(z3.group);
    REQUIRE(t3.num_irreps() == 3);
    CHECK(t3.degrees == std::vector<int>{1, 1, 1});
    for (int i = 0; i < 3; ++i)
        for (int c = 0; c < 3; ++c) {
            cplx v = t3.values(i, c);
            CHECK(std::abs(std::abs(v) - 1.0) < 1e-10);
            CHECK(std::abs(std::pow(v, 3) - cplx(1.0)) < 1e-9);
        }
    CHECK(t3.row_orthogonality_defect(3) < 1e-10);

    GroupData s3 = builtin_group("S3");
    CharacterTable ts = character_table(s3.group);
    CHECK(ts.degrees == std::vector<int>{1, 1, 2});
    CHECK(ts.row_orthogonality_defect(6) < 1e-10);

    GroupData q8 = builtin_group("Q8");
    CharacterTable tq = character_table(q8.group);
    CHECK(tq.degrees == std::vector<int>{1, 1, 1, 1, 2});
    CHECK(tq.row_orthogonality_defect(8) < 1e-10);

    // first row is the trivial character
    for (int c = 0; c < ts.num_irreps(); ++c) CHECK(std::abs(ts.values(0, c) - cplx(1.0)) < 1e-10);

    for (const char* name : {"Z6", "Z12", "D4"}) {
        GroupData gd = builtin_group(name);
        CharacterTable t = character_table(gd.group);
        CHECK(t.row_orthogonality_defect(gd.group.order) < 1e-10);
        long long degsum = 0;
        for (int d : t.degrees) degsum += (long long)d * d;
        CHECK(degsum == gd.group.order);
    }
}

TEST_CASE("catalog irreps pass the representation invariants") {
    // Z2: two 1-dim irreps, +1 and -1 on the generator
    GroupData z2 = builtin_group("Z2");
    REQUIRE(z2.group_irreps.size() == 2);
    CHECK(std::abs(z2.group_irreps[0].mat_at(1)(0, 0) - cplx(1.0)) < 1e-14);
    CHECK(std::abs(z2.group_irreps[1].mat_at(1)(0, 0) - cplx(-1.0)) < 1e-14);

    // S3 std: real 2x2 rotation/reflection matrices
    GroupData s3 = builtin_group("S3");
    const SubgroupIrrep* std2 = nullptr;
    for (const auto& ir : s3.group_irreps)
        if (ir.dim == 2) std2 = &ir;
    REQUIRE(std2 != nullptr);
    CHECK_NOTHROW(validate_subgroup_irrep(s3.group, *std2));
    for (const auto& m : std2->matrices)
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) CHECK(std::abs(m(r, c).imag()) < 1e-14);

    // Q8: quaternion units as 2x2 unitaries
    GroupData q8 = builtin_group("Q8");
    const SubgroupIrrep* e2 = nullptr;
    for (const auto& ir : q8.group_irreps)
        if (ir.dim == 2) e2 = &ir;
    REQUIRE(e2 != nullptr);
    CHECK_NOTHROW(validate_subgroup_irrep(q8.group, *e2));

    // every centralizer irrep set in the catalog is valid and complete
    for (const char* name : {"Z4", "Z6", "S3", "D4", "Q8"}) {
        GroupData gd = builtin_group(name);
        for (size_t c = 0; c < gd.classes.size(); ++c) {
            long long degsum = 0;
            for (const auto& ir : gd.centralizer_irreps[c]) {
                CHECK_NOTHROW(validate_subgroup_irrep(gd.group, ir));
                CHECK(ir.subgroup == gd.classes[c].centralizer);
                degsum += (long long)ir.dim * ir.dim;
            }
            CHECK(degsum == (long long)gd.classes[c].centralizer.size());
        }
    }
}

TEST_CASE("abelian subgroup characters are exact roots of unity") {
    GroupData s3 = builtin_group("S3");
    // centralizer of a 3-cycle is cyclic of order 3
    int tc = -1;
    for (int c = 0; c < int(s3.classes.size()); ++c)
        if (s3.classes[c].members.size() == 2) tc = c;
    REQUIRE(tc >= 0);
    auto chars = abelian_subgroup_characters(s3.group, s3.classes[tc].centralizer);
    REQUIRE(chars.size() == 3);
    cplx w = std::polar(1.0, 2.0 * std::numbers::pi / 3.0);
    for (const auto& ch : chars) {
        cplx v = ch.mat_at(s3.classes[tc].representative)(0, 0);
        bool is_root = std::abs(v - cplx(1.0)) < 1e-14 || std::abs(v - w) < 1e-14 ||
                       std::abs(v - w * w) < 1e-14;
        CHECK(is_root);
    }
    CHECK_THROWS_AS(make_subgroup(s3.group, std::vector<int>{0, 4}), GroupValidationError);
}
