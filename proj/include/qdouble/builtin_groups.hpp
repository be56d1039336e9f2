#pragma once

#include "qdouble/finite_group.hpp"

namespace qdouble {

// A group together with everything the double-algebra layer consumes:
// conjugacy classes, the center, and unitary irrep matrices for the full
// group and for each class centralizer.
struct GroupData {
    FiniteGroup group;
    std::vector<ConjugacyClass> classes;
    std::vector<int> class_of;
    std::vector<int> center;
    std::vector<SubgroupIrrep> group_irreps;                    // irreps of G, trivial first
    std::vector<std::vector<SubgroupIrrep>> centralizer_irreps; // per class, trivial first
};

// Assembles GroupData from a validated group plus supplied irreps. Matching
// supplied irreps are used as-is (after validation); abelian centralizers
// without supplied irreps get exact character-based ones.
GroupData make_group_data(FiniteGroup g, std::vector<SubgroupIrrep> supplied);

// Catalog: Z1..Z12, S3, D4, Q8. Unknown name throws std::invalid_argument.
GroupData builtin_group(const std::string& name);
bool is_builtin_group_name(const std::string& name);

// All 1-dim characters of an abelian subgroup, values snapped to exact roots
// of unity; trivial character first, then a stable lexicographic order.
std::vector<SubgroupIrrep> abelian_subgroup_characters(const FiniteGroup& g,
                                                       const std::vector<int>& elems);

} // namespace qdouble
