#pragma once

#include <map>
#include <random>

#include "qdouble/builtin_groups.hpp"

namespace qdouble {

// Element of D(G) = C(G x G), stored dense: F(x,y) = v[x*n + y].
// All integrals are normalized averages (1/|G|) sum; point masses carry a
// factor |G| so the compact-group formulas hold verbatim.
struct DoubleElement {
    int n = 0;
    std::vector<cplx> v;

    DoubleElement() = default;
    explicit DoubleElement(int order) : n(order), v(size_t(order) * order) {}
    cplx& at(int x, int y) { return v[size_t(x) * n + y]; }
    const cplx& at(int x, int y) const { return v[size_t(x) * n + y]; }
    double max_abs_diff(const DoubleElement& o) const;
};

// Element of D(G) tensor D(G), dense on G^4.
struct DoubleElement2 {
    int n = 0;
    std::vector<cplx> v;

    DoubleElement2() = default;
    explicit DoubleElement2(int order)
        : n(order), v(size_t(order) * order * order * order) {}
    size_t idx(int x1, int y1, int x2, int y2) const {
        return ((size_t(x1) * n + y1) * n + x2) * n + y2;
    }
    cplx& at(int x1, int y1, int x2, int y2) { return v[idx(x1, y1, x2, y2)]; }
    const cplx& at(int x1, int y1, int x2, int y2) const { return v[idx(x1, y1, x2, y2)]; }
    double max_abs_diff(const DoubleElement2& o) const;
};

// Hopf *-algebra operations on D(G) for a fixed finite group.
class DoubleAlgebra {
public:
    explicit DoubleAlgebra(const FiniteGroup& g) : g_(g) {}

    const FiniteGroup& group() const { return g_; }

    DoubleElement zero() const { return DoubleElement(g_.order); }
    // e_{(g,x)}(u,v) = |G| [u=g][v=x]; these span D(G)
    DoubleElement point_mass(int g, int x) const;
    DoubleElement unit() const;
    DoubleElement random_element(std::mt19937& rng) const;

    DoubleElement multiply(const DoubleElement& f1, const DoubleElement& f2) const;
    DoubleElement star(const DoubleElement& f) const;
    cplx counit(const DoubleElement& f) const;
    DoubleElement antipode(const DoubleElement& f) const;
    DoubleElement2 comultiply(const DoubleElement& f) const;
    DoubleElement2 comultiply_op(const DoubleElement& f) const; // flipped legs
    DoubleElement2 r_element() const;
    DoubleElement2 r_element_inverse() const; // (S x id) R
    DoubleElement2 unit2() const;             // 1 tensor 1

    // product on D(G) tensor D(G)
    DoubleElement2 multiply2(const DoubleElement2& h, const DoubleElement2& k) const;
    // multiplication map m: D(G) tensor D(G) -> D(G)
    DoubleElement contract_m(const DoubleElement2& h) const;
    DoubleElement2 apply_antipode_left(const DoubleElement2& h) const;
    DoubleElement2 apply_antipode_right(const DoubleElement2& h) const;
    // (eps x id) and (id x eps)
    DoubleElement counit_left(const DoubleElement2& h) const;
    DoubleElement counit_right(const DoubleElement2& h) const;

private:
    const FiniteGroup& g_;
};

// Irrep Pi^A_alpha of D(G) realized on the induced space L^2_alpha(G, V_alpha),
// with the orthonormal basis indexed by (coset of G/N_A, V_alpha component).
struct DoubleIrrep {
    int class_index = 0;
    ConjugacyClass cls;
    SubgroupIrrep alpha;
    std::vector<int> coset_reps; // ascending; the identity coset first
    std::vector<int> coset_of;   // g -> coset index
    std::vector<int> h_part;     // g -> x_i^{-1} g  (element of N_A)
    int dim = 0;                 // |A| * d_alpha
    std::string label;           // "[C<rep>;<alpha>]"

    int d_alpha() const { return alpha.dim; }
    int basis_index(int coset, int comp) const { return coset * alpha.dim + comp; }
};

DoubleIrrep build_double_irrep(const GroupData& gd, int class_index, const SubgroupIrrep& alpha);
std::vector<DoubleIrrep> all_double_irreps(const GroupData& gd);

// Matrix of Pi^A_alpha(F) in the orthonormal induced basis.
CMat irrep_matrix(const GroupData& gd, const DoubleIrrep& rep, const DoubleElement& f);

// chi^A_alpha(g,x) = tr Pi^A_alpha(e_{(g,x)})
cplx character_value(const GroupData& gd, const DoubleIrrep& rep, int g, int x);

// Orthonormal basis function phi_{(i,u)} of the induced space, evaluated at a
// group element; returns the V_alpha-vector.
std::vector<cplx> induced_basis_value(const GroupData& gd, const DoubleIrrep& rep,
                                      int coset, int comp, int at);

// Covariant V_alpha (x) V_beta - valued function on G x G.
struct TensorState {
    int n = 0, da = 1, db = 1;
    std::vector<cplx> v; // ((x*n + y)*da + k)*db + l

    TensorState() = default;
    TensorState(int order, int da_, int db_)
        : n(order), da(da_), db(db_), v(size_t(order) * order * da_ * db_) {}
    cplx& at(int x, int y, int k, int l) { return v[(size_t(size_t(x) * n + y) * da + k) * db + l]; }
    const cplx& at(int x, int y, int k, int l) const {
        return v[(size_t(size_t(x) * n + y) * da + k) * db + l];
    }
    double norm_sq() const; // normalized: (1/n^2) sum |.|^2
    double max_abs_diff(const TensorState& o) const;
};

TensorState product_basis_state(const GroupData& gd, const DoubleIrrep& ra, const DoubleIrrep& rb,
                                int coset_a, int comp_a, int coset_b, int comp_b);
TensorState random_covariant_state(const GroupData& gd, const DoubleIrrep& ra,
                                   const DoubleIrrep& rb, std::mt19937& rng);
// max covariance defect of Phi against (alpha x beta) right translation
double covariance_defect(const GroupData& gd, const DoubleIrrep& ra, const DoubleIrrep& rb,
                         const TensorState& phi);

// (Pi^A_alpha x Pi^B_beta)(F) Phi. Rejects non-covariant input (1e-12).
TensorState tensor_apply(const GroupData& gd, const DoubleIrrep& ra, const DoubleIrrep& rb,
                         const DoubleElement& f, const TensorState& phi);

// Braid operator: (R Phi)(x,y) = sigma(Phi(y, y g_A^-1 y^-1 x));
// the result lives in the (B,beta) x (A,alpha) tensor space.
TensorState braid_apply(const GroupData& gd, const DoubleIrrep& ra, const DoubleIrrep& rb,
                        const TensorState& phi);

// Central character omega(z) = alpha(z) beta(z) on Z(G).
std::vector<cplx> central_character(const GroupData& gd, const DoubleIrrep& ra, const DoubleIrrep& rb);
// gamma|_Z == omega test (the fusion selection rule)
bool central_character_matches(const GroupData& gd, const SubgroupIrrep& gamma,
                               const std::vector<cplx>& omega);

// Intertwiner component rho^xi_{gamma,k,l,j} applied to Phi: a function
// G -> V_gamma returned as out[x*d_gamma + i].
std::vector<cplx> rho_component(const GroupData& gd, const DoubleIrrep& ra, const DoubleIrrep& rb,
                                const DoubleCosetSystem& dcs, int coset_index,
                                const SubgroupIrrep& gamma, int k, int l, int j,
                                const TensorState& phi);

// Both sides of the norm-isometry identity underlying the multiplicity
// count: ||Phi||^2 against the weighted sum over double cosets / gamma / j
// of ||rho Phi||^2 with normalized measures.
struct IsometryCheck {
    double lhs = 0.0;
    double rhs = 0.0;
    double defect() const { return std::abs(lhs - rhs); }
};
IsometryCheck isometry_check(const GroupData& gd, const DoubleIrrep& ra, const DoubleIrrep& rb,
                             const TensorState& phi, TieBreak tie = TieBreak::SmallestIndex);

struct OracleDisagreement : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fusion multiplicities N^{AB gamma}_{alpha beta C}, computed two independent
// ways (intertwiner rank / character inner product) and asserted equal.
struct FusionChannelRow {
    int class_index = 0;
    int gamma_index = 0;
    std::string gamma_label;
    int multiplicity = 0;
};
struct FusionResult {
    std::vector<FusionChannelRow> channels; // N > 0 only
    long long dim_product = 0;              // dim Pi^A x dim Pi^B
    long long dim_sum = 0;                  // sum N * dim Pi^C_gamma
};
FusionResult fusion_multiplicities(const GroupData& gd, const DoubleIrrep& ra,
                                   const DoubleIrrep& rb,
                                   TieBreak tie = TieBreak::SmallestIndex);

// Hopf *-algebra axiom contraction suite; defects are exact up to rounding.
struct HopfReport {
    struct Entry {
        std::string name;
        double defect = 0.0;
    };
    std::vector<Entry> axioms;
    double max_defect() const;
};
HopfReport verify_hopf(const GroupData& gd);

// sum over irreps (|A| d_alpha)^2, which must equal |G|^2
long long peter_weyl_sum(const GroupData& gd);

} // namespace qdouble
