#include "qdouble/group_io.hpp"

#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace qdouble {

using nlohmann::json;

GroupData load_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open group file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::runtime_error("malformed JSON in '" + path + "': " + e.what());
    }
    if (!j.contains("order") || !j.contains("mult"))
        throw std::runtime_error("group file must contain 'order' and 'mult'");
    int n = j.at("order").get<int>();
    std::vector<int> mult;
    mult.reserve(size_t(n) * n);
    for (const auto& row : j.at("mult"))
        for (const auto& x : row) mult.push_back(x.get<int>());
    FiniteGroup g = make_group(n, std::move(mult),
                               j.value("name", std::filesystem::path(path).stem().string()));

    std::vector<SubgroupIrrep> irreps;
    if (j.contains("irreps")) {
        for (const auto& ji : j.at("irreps")) {
            SubgroupIrrep ir;
            ir.subgroup = ji.at("subgroup").get<std::vector<int>>();
            ir.dim = ji.at("dim").get<int>();
            ir.label = ji.value("label", "irrep" + std::to_string(irreps.size()));
            std::sort(ir.subgroup.begin(), ir.subgroup.end());
            ir.matrices.resize(ir.subgroup.size());
            for (const auto& [key, jm] : ji.at("matrices").items()) {
                int elem = std::stoi(key);
                int pos = ir.pos_of(elem);
                if (pos < 0)
                    throw std::runtime_error("irrep '" + ir.label + "': matrix for element " + key +
                                             " outside its subgroup");
                CMat m(ir.dim, ir.dim);
                for (int r = 0; r < ir.dim; ++r)
                    for (int c = 0; c < ir.dim; ++c) {
                        const auto& e = jm.at(r).at(c);
                        m(r, c) = cplx(e.at("re").get<double>(), e.at("im").get<double>());
                    }
                ir.matrices[pos] = m;
            }
            for (size_t k = 0; k < ir.subgroup.size(); ++k)
                if (ir.matrices[k].rows() == 0)
                    throw std::runtime_error("irrep '" + ir.label + "': missing matrix for element " +
                                             std::to_string(ir.subgroup[k]));
            irreps.push_back(std::move(ir));
        }
    }
    return make_group_data(std::move(g), std::move(irreps));
}

GroupData resolve_group(const std::string& source) {
    if (is_builtin_group_name(source)) return builtin_group(source);
    if (source.rfind("file:", 0) == 0) return load_group_file(source.substr(5));
    if (std::filesystem::exists(source)) return load_group_file(source);
    throw std::invalid_argument("unknown group '" + source + "' (not a builtin name or readable file)");
}

} // namespace qdouble
