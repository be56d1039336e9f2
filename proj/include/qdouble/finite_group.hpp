#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qdouble/linalg.hpp"

namespace qdouble {

struct GroupValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite group given by its multiplication table. Element 0 is the identity.
struct FiniteGroup {
    int order = 0;
    std::vector<int> mult;    // order x order, row-major: mult[g*order + h] = g*h
    std::vector<int> inverse; // inverse[g]
    int identity = 0;
    std::string name;

    int op(int g, int h) const { return mult[g * order + h]; }
    int inv(int g) const { return inverse[g]; }
    int conj(int w, int g) const { return op(op(w, g), inv(w)); } // w g w^-1

    // Throws GroupValidationError naming the offending entry/triple.
    void validate() const;
};

// Builds a FiniteGroup from a table, filling inverses; validates.
FiniteGroup make_group(int order, std::vector<int> mult, std::string name);

struct ConjugacyClass {
    int representative = 0;            // smallest element index in the class
    std::vector<int> members;          // ascending
    std::vector<int> centralizer;      // N_A = {x : x g_A = g_A x}, ascending
};

// Classes ordered by representative; the identity class comes first.
std::vector<ConjugacyClass> conjugacy_classes(const FiniteGroup& g);

// class_of[g] = index into the class list
std::vector<int> class_index_table(const FiniteGroup& g, const std::vector<ConjugacyClass>& classes);

std::vector<int> group_center(const FiniteGroup& g);

bool is_abelian_subset(const FiniteGroup& g, const std::vector<int>& elems);

// Subgroup with its own 0-based table plus the embedding into the parent.
struct Subgroup {
    FiniteGroup group;            // abstract copy; element i corresponds to elems[i]
    std::vector<int> elems;       // ascending parent indices, elems[0] = identity
    std::vector<int> parent_to_sub; // parent index -> subgroup index, -1 outside
};
Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elems);

// Unitary irreducible representation of a subgroup H <= G, matrices indexed
// by parent element ids.
struct SubgroupIrrep {
    std::vector<int> subgroup;  // ascending parent element ids
    int dim = 1;
    std::vector<CMat> matrices; // aligned with `subgroup`
    std::string label;

    const CMat& mat_at(int parent_elem) const; // throws if not in subgroup
    int pos_of(int parent_elem) const;         // -1 if absent
    cplx character(int parent_elem) const { return mat_at(parent_elem).trace(); }
};

// Checks homomorphism (1e-12), unitarity (1e-12) and irreducibility (1e-10).
// Throws GroupValidationError on failure.
void validate_subgroup_irrep(const FiniteGroup& g, const SubgroupIrrep& irrep);

enum class TieBreak { SmallestIndex, LargestIndex };

// Double-coset decomposition N_A \ G / N_B with Borel-section data fixed by
// index tie-breaking, so every run of the library reproduces the same tables.
struct DoubleCosetSystem {
    std::vector<int> left;  // N_A
    std::vector<int> right; // N_B
    struct Coset {
        int rep = 0;               // y(xi)
        std::vector<int> members;  // ascending
        int w = 0;                 // w(xi): w g_C w^-1 = g_A y g_B y^-1
        int class_rep = 0;         // representative of C(xi)
        int class_index = 0;
    };
    std::vector<Coset> cosets;
    std::vector<int> coset_of;                 // element -> coset index
    std::vector<std::pair<int, int>> section_n; // x -> (n1(x), n2(x)) with x = n1 y n2^-1
};

DoubleCosetSystem double_cosets(const FiniteGroup& g,
                                const std::vector<ConjugacyClass>& classes,
                                const std::vector<int>& class_of,
                                int class_a, int class_b,
                                TieBreak tie = TieBreak::SmallestIndex);

// G_o = {x : n1 x n2^-1 = x with n1 in N_A, n2 in N_B forces n1 = n2 central}.
// Diagnostic only in the finite case.
std::vector<int> regular_part(const FiniteGroup& g,
                              const ConjugacyClass& a, const ConjugacyClass& b);

} // namespace qdouble
