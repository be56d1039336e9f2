#pragma once

#include "qdouble/finite_group.hpp"

namespace qdouble {

// Ordinary character table of a finite group, computed with the Burnside
// class-algebra method (common eigenvectors of the class-sum matrices).
// Serves as an independent oracle for multiplicity cross-checks; never
// consulted for representation matrices.
struct CharacterTable {
    std::vector<ConjugacyClass> classes;
    std::vector<int> degrees;  // one per irrep, trivial character first
    CMat values;               // rows: irreps, cols: classes

    int num_irreps() const { return int(degrees.size()); }
    // max |sum_C |C| chi_i(C) conj(chi_j(C))| / |G| - delta_ij  over all pairs
    double row_orthogonality_defect(int group_order) const;
};

// Throws GroupValidationError when eigenvector separation keeps failing
// (degenerate random splitting element after many reseeds).
CharacterTable character_table(const FiniteGroup& g);

} // namespace qdouble
