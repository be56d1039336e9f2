#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "qdouble/cli_app.hpp"
#include "qdouble/group_io.hpp"
#include "qdouble/tables.hpp"

using namespace qdouble;

namespace {

struct CliResult {
    int code;
    std::string out, err;
};

CliResult cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

} // namespace

TEST_CASE("verify-hopf command") {
    CliResult r = cli({"verify-hopf", "--group", "S3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);

    CliResult j = cli({"verify-hopf", "--group", "Z2", "--format", "json"});
    CHECK(j.code == 0);
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed.at("axioms").size() == 8);
    CHECK(parsed.at("pass").get<bool>());
}

TEST_CASE("bad group files exit with code 2 and name the problem") {
    std::string path = temp_path("qdouble_bad_group.json");
    {
        std::ofstream f(path);
        // order-3 table that is a Latin square with identity but has no
        // associative structure on row 1
        f << R"({"order": 3, "mult": [[0,1,2],[1,0,0],[2,2,1]]})";
    }
    CliResult r = cli({"verify-hopf", "--group", "file:" + path});
    CHECK(r.code == 2);
    CHECK(!r.err.empty());

    std::string path2 = temp_path("qdouble_nonassoc.json");
    {
        std::ofstream f(path2);
        // the order-5 loop: Latin square, identity, not associative
        f << R"({"order": 5, "mult": [[0,1,2,3,4],[1,0,3,4,2],[2,4,0,1,3],[3,2,4,0,1],[4,3,1,2,0]]})";
    }
    CliResult r2 = cli({"verify-hopf", "--group", "file:" + path2});
    CHECK(r2.code == 2);
    CHECK(r2.err.find("associative at triple") != std::string::npos);

    CliResult r3 = cli({"fusion", "--group", "NoSuchGroup"});
    CHECK(r3.code == 2);

    std::remove(path.c_str());
    std::remove(path2.c_str());
}

TEST_CASE("valid group file round-trips through the loader") {
    std::string path = temp_path("qdouble_z3.json");
    {
        std::ofstream f(path);
        nlohmann::json j;
        j["order"] = 3;
        j["mult"] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
        j["name"] = "Z3file";
        // supply the three characters explicitly
        j["irreps"] = nlohmann::json::array();
        for (int k = 0; k < 3; ++k) {
            nlohmann::json ji;
            ji["subgroup"] = {0, 1, 2};
            ji["dim"] = 1;
            ji["label"] = "c" + std::to_string(k);
            for (int e = 0; e < 3; ++e) {
                double ang = 2.0 * std::numbers::pi * k * e / 3.0;
                ji["matrices"][std::to_string(e)] = {
                    {{{"re", std::cos(ang)}, {"im", std::sin(ang)}}}};
            }
            j["irreps"].push_back(ji);
        }
        f << j.dump();
    }
    GroupData gd = load_group_file(path);
    CHECK(gd.group.order == 3);
    CHECK(gd.group_irreps.size() == 3);
    CliResult r = cli({"fusion", "--group", "file:" + path});
    CHECK(r.code == 0);
    // 9 irreps of D(Z3), 81 pairs, one channel each
    CHECK(fusion_from_csv(r.out).rows.size() == 81);
    std::remove(path.c_str());
}

TEST_CASE("fusion table output and re-parse") {
    CliResult r = cli({"fusion", "--group", "Z2"});
    CHECK(r.code == 0);
    FusionTable parsed = fusion_from_csv(r.out);
    CHECK(parsed.rows.size() == 16);
    GroupData z2 = builtin_group("Z2");
    FusionTable direct = fusion_table(z2);
    direct.group.clear(); // csv carries no group name
    FusionTable expect = direct;
    CHECK(parsed.rows.size() == expect.rows.size());
    for (size_t i = 0; i < parsed.rows.size(); ++i) {
        CHECK(parsed.rows[i].a_rep == expect.rows[i].a_rep);
        CHECK(parsed.rows[i].alpha == expect.rows[i].alpha);
        CHECK(parsed.rows[i].c_rep == expect.rows[i].c_rep);
        CHECK(parsed.rows[i].gamma == expect.rows[i].gamma);
        CHECK(parsed.rows[i].multiplicity == expect.rows[i].multiplicity);
    }

    CliResult j = cli({"fusion", "--group", "Z2", "--format", "json"});
    CHECK(nlohmann::json::parse(j.out).at("channels").size() == 16);
}

TEST_CASE("cgc table: emitted CSV re-parses to the exact in-memory table") {
    std::string labels = "r1=pi/2,n1=1/2;r2=2pi/3,n2=1/2;n3=1";
    CliResult r = cli({"cgc", "--labels", labels, "--jmax", "1/2", "--order", "9"});
    CHECK(r.code == 0);
    CgcTable parsed = cgc_from_csv(r.out);
    DSu2Labels lab{{std::numbers::pi / 2, HalfInt::from_twice(1)},
                   {2 * std::numbers::pi / 3, HalfInt::from_twice(1)}};
    CgcTable direct = cgc_table(lab, HalfInt::whole(1), HalfInt::from_twice(1), 9);
    CHECK(exactly_equal(parsed, direct)); // 17-digit round trip is bitwise
    CHECK(!direct.rows.empty());

    // single tuple matches the library call bit-for-bit
    const auto& row = direct.rows.front();
    cplx v = dsu2_cgc(lab, HalfInt::from_twice(row.tn3), row.r3, HalfInt::from_twice(row.tj1),
                      HalfInt::from_twice(row.tm1), HalfInt::from_twice(row.tj2),
                      HalfInt::from_twice(row.tm2), HalfInt::from_twice(row.tj),
                      HalfInt::from_twice(row.tm));
    CHECK(parsed.rows.front().value == v);
}

TEST_CASE("cgc with a violating n3 emits an empty table and a warning") {
    CliResult r = cli({"cgc", "--labels", "r1=pi/2,n1=1/2;r2=pi/2,n2=1/2;n3=1/2", "--jmax", "1/2",
                       "--order", "8"});
    CHECK(r.code == 0);
    CHECK(r.err.find("selection rule") != std::string::npos);
    CHECK(cgc_from_csv(r.out).rows.empty());
}

TEST_CASE("ortho command meets its tolerance") {
    CliResult r = cli({"ortho", "--labels", "r1=pi/2,n1=1/2;r2=2pi/3,n2=1/2", "--jmax", "3/2",
                       "--order", "64"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("char command emits characters over commuting pairs") {
    CliResult r = cli({"char", "--group", "Z2"});
    CHECK(r.code == 0);
    // 4 irreps x 4 commuting pairs (Z2 is abelian)
    std::istringstream is(r.out);
    std::string line;
    int rows = -1; // skip header
    while (std::getline(is, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 16);
    // the sign-sign entry: chi^{a}_{chi1}(a, a) = -1
    CHECK(r.out.find("1,chi1,1,1,-1,") != std::string::npos);
}

TEST_CASE("braid-check command") {
    CliResult r = cli({"braid-check", "--group", "Z2"});
    CHECK(r.code == 0);
    CliResult s = cli({"braid-check", "--labels", "r1=pi/2,n1=1/2;r2=2pi/3,n2=1/2", "--order", "16",
                       "--format", "json"});
    CHECK(s.code == 0);
    CHECK(nlohmann::json::parse(s.out).at("pass").get<bool>());
}

TEST_CASE("input validation paths") {
    CHECK(cli({"cgc", "--labels", "r1=0,n1=1/2;r2=pi,n2=1/2", "--order", "8"}).code == 2); // r1 nongeneric
    CHECK(cli({"cgc", "--labels", "r1=pi,n1=1/2", "--order", "8"}).code == 2);             // incomplete
    CHECK(cli({"ortho", "--labels", "r1=pi/2,n1=1/2;r2=pi/2,n2=1/2", "--order", "4"}).code == 2);
    CHECK(cli({"ortho", "--labels", "r1=pi/2,n1=1/2;r2=pi/2,n2=1/2", "--tol", "-3"}).code == 2);
    CHECK(cli({"no-such-command"}).code == 2);
    CHECK(cli({}).code == 2);
    CHECK(cli({"fusion", "--group", "Z2", "--no-such-flag"}).code == 2);
}

TEST_CASE("--out writes the table to a file") {
    std::string path = temp_path("qdouble_fusion_out.csv");
    CliResult r = cli({"fusion", "--group", "Z3", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream f(path);
    std::stringstream ss;
    ss << f.rdbuf();
    CHECK(fusion_from_csv(ss.str()).rows.size() == 81);
    std::remove(path.c_str());
}
