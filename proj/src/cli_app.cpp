#include "qdouble/cli_app.hpp"

#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qdouble/group_io.hpp"
#include "qdouble/tables.hpp"

namespace qdouble {

namespace {

constexpr double pi = std::numbers::pi;

HalfInt parse_halfint(const std::string& s) {
    size_t slash = s.find('/');
    try {
        if (slash == std::string::npos) return HalfInt::whole(std::stoi(s));
        if (s.substr(slash + 1) != "2") throw std::invalid_argument("denominator must be 2");
        return HalfInt::from_twice(std::stoi(s.substr(0, slash)));
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse half-integer '" + s + "' (use e.g. 2, 1/2, -3/2)");
    }
}

// angles: plain float, or "pi", "2pi", "pi/2", "2pi/3", "0.5pi"
double parse_angle(const std::string& s) {
    size_t p = s.find("pi");
    try {
        if (p == std::string::npos) return std::stod(s);
        double num = 1.0;
        if (p > 0) num = std::stod(s.substr(0, p));
        double den = 1.0;
        if (p + 2 < s.size()) {
            if (s[p + 2] != '/') throw std::invalid_argument("bad angle");
            den = std::stod(s.substr(p + 3));
        }
        return num * pi / den;
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse angle '" + s + "' (use e.g. 1.5708, pi/2, 2pi/3)");
    }
}

struct Su2LabelArgs {
    DSu2Labels labels;
    bool has_n3 = false;
    HalfInt n3;
};

// "r1=pi/2,n1=1/2;r2=2pi/3,n2=1/2;n3=1"
Su2LabelArgs parse_su2_labels(const std::string& spec) {
    Su2LabelArgs out;
    bool saw_r1 = false, saw_r2 = false, saw_n1 = false, saw_n2 = false;
    std::string item;
    std::stringstream ss(spec);
    while (std::getline(ss, item, ';')) {
        std::stringstream ss2(item);
        std::string kv;
        while (std::getline(ss2, kv, ',')) {
            size_t eq = kv.find('=');
            if (eq == std::string::npos) throw std::invalid_argument("label item '" + kv + "' is not key=value");
            std::string k = kv.substr(0, eq), v = kv.substr(eq + 1);
            if (k == "r1") { out.labels.first.r = parse_angle(v); saw_r1 = true; }
            else if (k == "r2") { out.labels.second.r = parse_angle(v); saw_r2 = true; }
            else if (k == "n1") { out.labels.first.n = parse_halfint(v); saw_n1 = true; }
            else if (k == "n2") { out.labels.second.n = parse_halfint(v); saw_n2 = true; }
            else if (k == "n3") { out.n3 = parse_halfint(v); out.has_n3 = true; }
            else throw std::invalid_argument("unknown label key '" + k + "'");
        }
    }
    if (!(saw_r1 && saw_r2 && saw_n1 && saw_n2))
        throw std::invalid_argument("labels must set r1, n1, r2, n2 (and optionally n3)");
    validate_generic_label(out.labels.first);
    validate_generic_label(out.labels.second);
    return out;
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot write output file '" + path + "'");
    f << text;
}

int cmd_verify_hopf(const std::string& group, double tol, const std::string& format,
                    const std::string& out_path, std::ostream& out) {
    GroupData gd = resolve_group(group);
    HopfReport rep = verify_hopf(gd);
    std::ostringstream os;
    if (format == "json") {
        nlohmann::json j;
        j["group"] = gd.group.name;
        j["axioms"] = nlohmann::json::array();
        for (const auto& e : rep.axioms) j["axioms"].push_back({{"name", e.name}, {"defect", e.defect}});
        j["max_defect"] = rep.max_defect();
        j["tolerance"] = tol;
        j["pass"] = rep.max_defect() < tol;
        os << j.dump(2) << "\n";
    } else {
        os << "Hopf axiom contractions for D(" << gd.group.name << "):\n";
        for (const auto& e : rep.axioms)
            os << "  " << e.name << ": max defect " << format_double(e.defect) << "\n";
        os << (rep.max_defect() < tol ? "PASS" : "FAIL") << " (max defect "
           << format_double(rep.max_defect()) << ", tolerance " << format_double(tol) << ")\n";
    }
    write_output(os.str(), out_path, out);
    return rep.max_defect() < tol ? 0 : 1;
}

int cmd_fusion(const std::string& group, const std::string& format, const std::string& out_path,
               std::ostream& out) {
    GroupData gd = resolve_group(group);
    FusionTable t = fusion_table(gd);
    write_output(format == "json" ? to_json(t) : to_csv(t), out_path, out);
    return 0;
}

int cmd_char(const std::string& group, const std::string& format, const std::string& out_path,
             std::ostream& out) {
    GroupData gd = resolve_group(group);
    int n = gd.group.order;
    auto irreps = all_double_irreps(gd);
    std::ostringstream os;
    nlohmann::json j = nlohmann::json::array();
    if (format != "json") os << "A,alpha,g,x,re,im\n";
    for (const auto& rep : irreps)
        for (int g = 0; g < n; ++g)
            for (int x = 0; x < n; ++x) {
                if (gd.group.op(g, x) != gd.group.op(x, g)) continue;
                cplx v = character_value(gd, rep, g, x);
                if (format == "json")
                    j.push_back({{"A", gd.classes[rep.class_index].representative},
                                 {"alpha", rep.alpha.label},
                                 {"g", g},
                                 {"x", x},
                                 {"re", v.real()},
                                 {"im", v.imag()}});
                else
                    os << gd.classes[rep.class_index].representative << ',' << rep.alpha.label << ','
                       << g << ',' << x << ',' << format_double(v.real()) << ','
                       << format_double(v.imag()) << '\n';
            }
    write_output(format == "json" ? j.dump(2) + "\n" : os.str(), out_path, out);
    return 0;
}

int cmd_cgc(const std::string& labels_str, const std::string& jmax_str, int order,
            const std::string& format, const std::string& out_path, std::ostream& out,
            std::ostream& err) {
    Su2LabelArgs a = parse_su2_labels(labels_str);
    HalfInt jmax = parse_halfint(jmax_str);
    HalfInt base = a.labels.first.n + a.labels.second.n;
    HalfInt n3 = a.has_n3 ? a.n3 : base;
    if (!n3.same_ladder(base)) {
        err << "warning: n3 = " << to_string(n3) << " violates the selection rule n3 = n1+n2 mod Z; "
            << "all coefficients vanish, emitting an empty table\n";
        CgcTable empty;
        write_output(format == "json" ? to_json(empty) : to_csv(empty), out_path, out);
        return 0;
    }
    CgcTable t = cgc_table(a.labels, n3, jmax, order);
    write_output(format == "json" ? to_json(t) : to_csv(t), out_path, out);
    return 0;
}

int cmd_ortho(const std::string& labels_str, const std::string& jmax_str, int order, double tol,
              const std::string& format, const std::string& out_path, std::ostream& out) {
    Su2LabelArgs a = parse_su2_labels(labels_str);
    HalfInt jmax = parse_halfint(jmax_str);
    GramReport rep = orthogonality_gram(a.labels, jmax, order);
    std::ostringstream os;
    if (format == "json") {
        nlohmann::json j;
        j["jmax2"] = jmax.twice;
        j["order"] = order;
        j["basis_size"] = rep.basis.size();
        j["max_defect"] = rep.max_defect;
        j["min_diag"] = rep.min_diag;
        j["max_diag"] = rep.max_diag;
        j["tolerance"] = tol;
        j["pass"] = rep.max_defect < tol;
        os << j.dump(2) << "\n";
    } else {
        os << "Gram orthogonality for D(SU(2)) CG coefficients\n"
           << "  basis size " << rep.basis.size() << ", quadrature order " << order << "\n"
           << "  max defect " << format_double(rep.max_defect) << " (tolerance "
           << format_double(tol) << ")\n"
           << "  diagonal range [" << format_double(rep.min_diag) << ", "
           << format_double(rep.max_diag) << "]\n"
           << (rep.max_defect < tol ? "PASS" : "FAIL") << "\n";
    }
    write_output(os.str(), out_path, out);
    return rep.max_defect < tol ? 0 : 1;
}

double finite_braid_defect(const GroupData& gd) {
    DoubleAlgebra alg(gd.group);
    int n = gd.group.order;
    auto irreps = all_double_irreps(gd);
    std::mt19937 rng(97);
    double worst = 0.0;
    for (const auto& ra : irreps)
        for (const auto& rb : irreps) {
            TensorState phi = random_covariant_state(gd, ra, rb, rng);
            for (int g = 0; g < n; ++g)
                for (int x = 0; x < n; ++x) {
                    DoubleElement f = alg.point_mass(g, x);
                    TensorState lhs = braid_apply(gd, ra, rb, tensor_apply(gd, ra, rb, f, phi));
                    TensorState rhs = tensor_apply(gd, rb, ra, f, braid_apply(gd, ra, rb, phi));
                    worst = std::max(worst, lhs.max_abs_diff(rhs));
                }
        }
    return worst;
}

double su2_braid_defect(const DSu2Labels& labels, int order) {
    // band-limited F = D^a_{pq}(u) D^b_{st}(v) with a,b <= 1, product Wigner state
    HalfInt n1 = labels.first.n, n2 = labels.second.n;
    HalfInt j1 = abs(n1), j2 = abs(n2);
    if (j1.twice == 0) j1 = HalfInt::whole(1);
    if (j2.twice == 0) j2 = HalfInt::whole(1);
    TensorFn phi = [&](const SU2Element& x, const SU2Element& y) {
        return wigner_D(j1, j1, n1, x) * wigner_D(j2, -j2, n2, y);
    };
    Su2Quadrature haar = haar_quadrature(order, order, order);
    SU2Element gr1 = SU2Element::g_phi(labels.first.r);
    SU2Element gr2 = SU2Element::g_phi(labels.second.r);

    std::vector<std::pair<HalfInt, HalfInt>> fspins = {
        {HalfInt::from_twice(1), HalfInt::from_twice(1)},
        {HalfInt::whole(1), HalfInt::from_twice(1)},
        {HalfInt::whole(1), HalfInt::whole(1)}};
    std::vector<std::pair<SU2Element, SU2Element>> points;
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> uni(0.2, 2.8);
    for (int i = 0; i < 3; ++i)
        points.push_back({SU2Element::from_euler(uni(rng), uni(rng) / 1.2, uni(rng)),
                          SU2Element::from_euler(uni(rng), uni(rng) / 1.2, uni(rng))});

    double worst = 0.0;
    for (auto [fa, fb] : fspins) {
        auto f = [&](const SU2Element& u, const SU2Element& v) {
            return wigner_D(fa, fa, -fa, u) * wigner_D(fb, fb, fb, v);
        };
        auto tensor_f = [&](const SU2Element& x, const SU2Element& y) {
            cplx acc = 0.0;
            for (const auto& node : haar.nodes)
                acc += node.weight *
                       f(x * gr1 * x.inverse() * y * gr2 * y.inverse(), node.g) *
                       phi(node.g.inverse() * x, node.g.inverse() * y);
            return acc;
        };
        for (const auto& [px, py] : points) {
            cplx lhs = braid_eval(labels, tensor_f, px, py);
            // right side: (Pi^B x Pi^A)(F) applied to the braided state
            cplx rhs = 0.0;
            for (const auto& node : haar.nodes) {
                SU2Element zx = node.g.inverse() * px, zy = node.g.inverse() * py;
                rhs += node.weight *
                       f(px * gr2 * px.inverse() * py * gr1 * py.inverse(), node.g) *
                       braid_eval(labels, phi, zx, zy);
            }
            worst = std::max(worst, std::abs(lhs - rhs));
        }
    }
    return worst;
}

int cmd_braid_check(const std::string& group, const std::string& labels_str, int order, double tol,
                    const std::string& format, const std::string& out_path, std::ostream& out) {
    std::ostringstream os;
    double defect;
    std::string what;
    if (!group.empty()) {
        GroupData gd = resolve_group(group);
        defect = finite_braid_defect(gd);
        what = "D(" + gd.group.name + ") braid intertwiner, all point-mass F";
    } else {
        Su2LabelArgs a = parse_su2_labels(labels_str);
        defect = su2_braid_defect(a.labels, order);
        what = "D(SU(2)) braid intertwiner, band-limited F, quadrature order " +
               std::to_string(order);
    }
    bool pass = defect < tol;
    if (format == "json") {
        nlohmann::json j{{"check", what}, {"defect", defect}, {"tolerance", tol}, {"pass", pass}};
        os << j.dump(2) << "\n";
    } else {
        os << what << "\n  max defect " << format_double(defect) << " (tolerance "
           << format_double(tol) << ")\n" << (pass ? "PASS" : "FAIL") << "\n";
    }
    write_output(os.str(), out_path, out);
    return pass ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"quantum double toolkit: exact D(G) for finite groups and numerical D(SU(2))"};
    app.require_subcommand(1);

    std::string group, labels, jmax = "3/2", format, out_path;
    int order = 32;
    double tol = -1.0;
    std::map<CLI::App*, std::string> fmt_default;

    auto add_common = [&](CLI::App* sub, const char* default_format) {
        sub->add_option("--group", group, "builtin group name (Z1..Z12, S3, D4, Q8) or file:PATH");
        sub->add_option("--labels", labels,
                        "SU(2) labels, e.g. \"r1=pi/2,n1=1/2;r2=2pi/3,n2=1/2;n3=1\"");
        sub->add_option("--jmax", jmax, "largest spin in tables/Gram (half-integer, e.g. 3/2)");
        sub->add_option("--order", order, "quadrature order / r3 grid size");
        sub->add_option("--out", out_path, "write output to a file instead of stdout");
        sub->add_option("--format", format, "csv | json | text")->default_str(default_format);
        sub->add_option("--tol", tol, "tolerance override");
        fmt_default[sub] = default_format;
    };

    CLI::App* c_hopf = app.add_subcommand("verify-hopf", "contract all eight Hopf axioms for D(G)");
    add_common(c_hopf, "text");
    CLI::App* c_fus = app.add_subcommand("fusion", "full fusion table of D(G), dual-oracle checked");
    add_common(c_fus, "csv");
    CLI::App* c_char = app.add_subcommand("char", "character table of D(G) on commuting pairs");
    add_common(c_char, "csv");
    CLI::App* c_cgc = app.add_subcommand("cgc", "generalized Clebsch-Gordan table for D(SU(2))");
    add_common(c_cgc, "csv");
    CLI::App* c_ortho = app.add_subcommand("ortho", "orthogonality Gram defect of D(SU(2)) CGCs");
    add_common(c_ortho, "text");
    CLI::App* c_braid = app.add_subcommand("braid-check",
                                           "braid intertwiner identity, finite or SU(2)");
    add_common(c_braid, "text");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    for (auto& [sub, def] : fmt_default)
        if (sub->parsed() && sub->count("--format") == 0) format = def;

    try {
        if (order < 8) throw std::invalid_argument("--order must be at least 8");
        if (tol == 0.0 || (tol < 0.0 && tol != -1.0))
            throw std::invalid_argument("--tol must be positive");
        if (c_hopf->parsed())
            return cmd_verify_hopf(group, tol > 0 ? tol : 1e-12, format, out_path, out);
        if (c_fus->parsed()) return cmd_fusion(group, format, out_path, out);
        if (c_char->parsed()) return cmd_char(group, format, out_path, out);
        if (c_cgc->parsed()) return cmd_cgc(labels, jmax, order, format, out_path, out, err);
        if (c_ortho->parsed())
            return cmd_ortho(labels, jmax, order, tol > 0 ? tol : 1e-6, format, out_path, out);
        if (c_braid->parsed())
            return cmd_braid_check(group, labels, order, tol > 0 ? tol : (group.empty() ? 1e-8 : 1e-12),
                                   format, out_path, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const OracleDisagreement& e) {
        err << "internal oracle disagreement: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace qdouble
