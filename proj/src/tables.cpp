#include "qdouble/tables.hpp"

#include <cstdio>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace qdouble {

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

FusionTable fusion_table(const GroupData& gd, TieBreak tie) {
    FusionTable t;
    t.group = gd.group.name;
    auto irreps = all_double_irreps(gd);
    for (const auto& ra : irreps)
        for (const auto& rb : irreps) {
            FusionResult res = fusion_multiplicities(gd, ra, rb, tie);
            for (const auto& ch : res.channels)
                t.rows.push_back({gd.classes[ra.class_index].representative, ra.alpha.label,
                                  gd.classes[rb.class_index].representative, rb.alpha.label,
                                  gd.classes[ch.class_index].representative, ch.gamma_label,
                                  ch.multiplicity});
        }
    return t;
}

std::string to_csv(const FusionTable& t) {
    std::ostringstream os;
    os << "A,alpha,B,beta,C,gamma,N\n";
    for (const auto& r : t.rows)
        os << r.a_rep << ',' << r.alpha << ',' << r.b_rep << ',' << r.beta << ',' << r.c_rep << ','
           << r.gamma << ',' << r.multiplicity << '\n';
    return os.str();
}

std::string to_json(const FusionTable& t) {
    nlohmann::json j;
    j["group"] = t.group;
    j["channels"] = nlohmann::json::array();
    for (const auto& r : t.rows)
        j["channels"].push_back({{"A", r.a_rep},
                                 {"alpha", r.alpha},
                                 {"B", r.b_rep},
                                 {"beta", r.beta},
                                 {"C", r.c_rep},
                                 {"gamma", r.gamma},
                                 {"N", r.multiplicity}});
    return j.dump(2) + "\n";
}

namespace {
std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == ',') {
            out.push_back(cur);
            cur.clear();
        } else
            cur += ch;
    }
    out.push_back(cur);
    return out;
}
} // namespace

FusionTable fusion_from_csv(const std::string& csv) {
    FusionTable t;
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line); // header
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto f = split_csv_line(line);
        t.rows.push_back({std::stoi(f[0]), f[1], std::stoi(f[2]), f[3], std::stoi(f[4]), f[5],
                          std::stoi(f[6])});
    }
    return t;
}

CgcTable cgc_table(const DSu2Labels& labels, HalfInt n3, HalfInt jmax, int grid) {
    CgcTable t;
    HalfInt n1 = labels.first.n, n2 = labels.second.n;
    for (int q = 0; q < grid; ++q) {
        double theta = std::numbers::pi * (q + 0.5) / grid;
        double r3 = lambda_map(labels.first.r, labels.second.r, theta);
        for (HalfInt j1 = abs(n1); j1 <= jmax; j1 += 1)
            for (HalfInt m1 = -j1; m1 <= j1; m1 += 1)
                for (HalfInt j2 = abs(n2); j2 <= jmax; j2 += 1)
                    for (HalfInt m2 = -j2; m2 <= j2; m2 += 1) {
                        HalfInt m = m1 + m2;
                        for (auto& term : rho_apply(labels, n3, r3, j1, m1, j2, m2))
                            t.rows.push_back({j1.twice, m1.twice, n1.twice, labels.first.r,
                                              j2.twice, m2.twice, n2.twice, labels.second.r,
                                              term.j.twice, m.twice, n3.twice, r3, term.coeff});
                    }
    }
    return t;
}

std::string to_csv(const CgcTable& t) {
    std::ostringstream os;
    os << "2j1,2m1,2n1,r1,2j2,2m2,2n2,r2,2j,2m,2n3,r3,re,im\n";
    for (const auto& r : t.rows)
        os << r.tj1 << ',' << r.tm1 << ',' << r.tn1 << ',' << format_double(r.r1) << ',' << r.tj2
           << ',' << r.tm2 << ',' << r.tn2 << ',' << format_double(r.r2) << ',' << r.tj << ','
           << r.tm << ',' << r.tn3 << ',' << format_double(r.r3) << ','
           << format_double(r.value.real()) << ',' << format_double(r.value.imag()) << '\n';
    return os.str();
}

std::string to_json(const CgcTable& t) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& r : t.rows)
        j.push_back({{"2j1", r.tj1}, {"2m1", r.tm1}, {"2n1", r.tn1}, {"r1", r.r1},
                     {"2j2", r.tj2}, {"2m2", r.tm2}, {"2n2", r.tn2}, {"r2", r.r2},
                     {"2j", r.tj},   {"2m", r.tm},   {"2n3", r.tn3}, {"r3", r.r3},
                     {"re", r.value.real()}, {"im", r.value.imag()}});
    return j.dump(2) + "\n";
}

CgcTable cgc_from_csv(const std::string& csv) {
    CgcTable t;
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        auto f = split_csv_line(line);
        t.rows.push_back({std::stoi(f[0]), std::stoi(f[1]), std::stoi(f[2]), std::stod(f[3]),
                          std::stoi(f[4]), std::stoi(f[5]), std::stoi(f[6]), std::stod(f[7]),
                          std::stoi(f[8]), std::stoi(f[9]), std::stoi(f[10]), std::stod(f[11]),
                          cplx(std::stod(f[12]), std::stod(f[13]))});
    }
    return t;
}

bool exactly_equal(const CgcTable& a, const CgcTable& b) {
    if (a.rows.size() != b.rows.size()) return false;
    for (size_t i = 0; i < a.rows.size(); ++i) {
        const auto& x = a.rows[i];
        const auto& y = b.rows[i];
        if (x.tj1 != y.tj1 || x.tm1 != y.tm1 || x.tn1 != y.tn1 || x.tj2 != y.tj2 ||
            x.tm2 != y.tm2 || x.tn2 != y.tn2 || x.tj != y.tj || x.tm != y.tm || x.tn3 != y.tn3)
            return false;
        if (x.r1 != y.r1 || x.r2 != y.r2 || x.r3 != y.r3 || x.value != y.value) return false;
    }
    return true;
}

} // namespace qdouble
