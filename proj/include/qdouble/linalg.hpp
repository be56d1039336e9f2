#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace qdouble {

using cplx = std::complex<double>;

// Dense complex matrix, row-major. Small sizes only (group orders <= ~100).
class CMat {
public:
    CMat() = default;
    CMat(int rows, int cols) : rows_(rows), cols_(cols), v_(size_t(rows) * cols) {}

    static CMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    cplx& operator()(int r, int c) { return v_[size_t(r) * cols_ + c]; }
    const cplx& operator()(int r, int c) const { return v_[size_t(r) * cols_ + c]; }

    CMat operator*(const CMat& o) const;
    CMat operator+(const CMat& o) const;
    CMat operator-(const CMat& o) const;
    CMat scaled(cplx s) const;
    CMat adjoint() const;
    cplx trace() const;

    double max_abs() const;
    double max_abs_diff(const CMat& o) const;

    const std::vector<cplx>& data() const { return v_; }
    std::vector<cplx>& data() { return v_; }

private:
    int rows_ = 0, cols_ = 0;
    std::vector<cplx> v_;
};

// Solves A x = b by partial-pivot LU; A is n x n. Throws on singular input.
std::vector<cplx> lu_solve(CMat a, std::vector<cplx> b);

// Eigenvalues of a Hermitian matrix by cyclic Jacobi, ascending order.
std::vector<double> hermitian_eigenvalues(CMat a);

// Rank of the span of a set of equal-length vectors, via the Gram matrix.
// rel_tol is relative to the largest Gram eigenvalue.
int rank_of_span(const std::vector<std::vector<cplx>>& vecs, double rel_tol = 1e-8);

// All roots of the monic polynomial z^n + c[n-1] z^(n-1) + ... + c[0]
// (Durand-Kerner iteration).
std::vector<cplx> poly_roots_monic(const std::vector<cplx>& coeffs);

// Eigen-decomposition of a small real nonsymmetric matrix with (assumed)
// simple eigenvalues: characteristic polynomial roots + inverse iteration.
// Returns false if eigenvalues are too clustered to separate reliably.
struct EigenPairs {
    std::vector<cplx> values;
    std::vector<std::vector<cplx>> vectors; // vectors[k] is the k-th right eigenvector
};
bool simple_eigenpairs(const CMat& a, EigenPairs& out, double gap_tol = 1e-7);

} // namespace qdouble
