#pragma once

#include <string>
#include <vector>

#include "qdouble/double_finite.hpp"
#include "qdouble/dsu2.hpp"

namespace qdouble {

// Flat fusion table of D(G): one row per nonvanishing channel.
struct FusionTable {
    struct Row {
        int a_rep;            // class representative of A
        std::string alpha;
        int b_rep;
        std::string beta;
        int c_rep;
        std::string gamma;
        int multiplicity;
    };
    std::string group;
    std::vector<Row> rows;

    bool operator==(const FusionTable& o) const = default;
};

FusionTable fusion_table(const GroupData& gd, TieBreak tie = TieBreak::SmallestIndex);
std::string to_csv(const FusionTable& t);
std::string to_json(const FusionTable& t);
FusionTable fusion_from_csv(const std::string& csv);

// Generalized CG coefficient table for D(SU(2)); half-integers serialized
// doubled, floats with 17 significant digits.
struct CgcTable {
    struct Row {
        int tj1, tm1, tn1;
        double r1;
        int tj2, tm2, tn2;
        double r2;
        int tj, tm, tn3;
        double r3;
        cplx value;
    };
    std::vector<Row> rows;
};

// Rows over all admissible (j1,m1,j2,m2,j) with j_i <= jmax and an interior
// r3 grid obtained from `grid` equally spaced theta points.
CgcTable cgc_table(const DSu2Labels& labels, HalfInt n3, HalfInt jmax, int grid);
std::string to_csv(const CgcTable& t);
std::string to_json(const CgcTable& t);
CgcTable cgc_from_csv(const std::string& csv);
bool exactly_equal(const CgcTable& a, const CgcTable& b);

std::string format_double(double v); // round-trip-safe, 17 significant digits

} // namespace qdouble
