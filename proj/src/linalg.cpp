#include "qdouble/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qdouble {

CMat CMat::identity(int n) {
    CMat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

CMat CMat::operator*(const CMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("CMat: dimension mismatch in product");
    CMat r(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            cplx a = (*this)(i, k);
            if (a == cplx(0.0)) continue;
            for (int j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
        }
    return r;
}

CMat CMat::operator+(const CMat& o) const {
    CMat r = *this;
    for (size_t i = 0; i < v_.size(); ++i) r.v_[i] += o.v_[i];
    return r;
}

CMat CMat::operator-(const CMat& o) const {
    CMat r = *this;
    for (size_t i = 0; i < v_.size(); ++i) r.v_[i] -= o.v_[i];
    return r;
}

CMat CMat::scaled(cplx s) const {
    CMat r = *this;
    for (auto& x : r.v_) x *= s;
    return r;
}

CMat CMat::adjoint() const {
    CMat r(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

cplx CMat::trace() const {
    cplx t = 0.0;
    for (int i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
}

double CMat::max_abs() const {
    double m = 0.0;
    for (const auto& x : v_) m = std::max(m, std::abs(x));
    return m;
}

double CMat::max_abs_diff(const CMat& o) const {
    double m = 0.0;
    for (size_t i = 0; i < v_.size(); ++i) m = std::max(m, std::abs(v_[i] - o.v_[i]));
    return m;
}

std::vector<cplx> lu_solve(CMat a, std::vector<cplx> b) {
    int n = a.rows();
    if (a.cols() != n || int(b.size()) != n) throw std::invalid_argument("lu_solve: bad dimensions");
    std::vector<int> piv(n);
    for (int i = 0; i < n; ++i) piv[i] = i;
    for (int col = 0; col < n; ++col) {
        int best = col;
        double bestv = std::abs(a(col, col));
        for (int r = col + 1; r < n; ++r)
            if (std::abs(a(r, col)) > bestv) { bestv = std::abs(a(r, col)); best = r; }
        if (bestv == 0.0) throw std::runtime_error("lu_solve: singular matrix");
        if (best != col) {
            for (int c = 0; c < n; ++c) std::swap(a(col, c), a(best, c));
            std::swap(b[col], b[best]);
        }
        for (int r = col + 1; r < n; ++r) {
            cplx f = a(r, col) / a(col, col);
            a(r, col) = 0.0;
            if (f == cplx(0.0)) continue;
            for (int c = col + 1; c < n; ++c) a(r, c) -= f * a(col, c);
            b[r] -= f * b[col];
        }
    }
    for (int r = n - 1; r >= 0; --r) {
        cplx s = b[r];
        for (int c = r + 1; c < n; ++c) s -= a(r, c) * b[c];
        b[r] = s / a(r, r);
    }
    return b;
}

std::vector<double> hermitian_eigenvalues(CMat a) {
    int n = a.rows();
    // cyclic Jacobi with complex rotations
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) off = std::max(off, std::abs(a(p, q)));
        if (off < 1e-15 * (1.0 + a.max_abs())) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                cplx apq = a(p, q);
                if (std::abs(apq) < 1e-300) continue;
                double app = a(p, p).real(), aqq = a(q, q).real();
                // phase so the pivot becomes real, then a real Jacobi rotation
                cplx phase = apq / std::abs(apq);
                double g = std::abs(apq);
                double tau = (aqq - app) / (2.0 * g);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                cplx sp = s * phase;
                for (int k = 0; k < n; ++k) {
                    cplx akp = a(k, p), akq = a(k, q);
                    a(k, p) = c * akp - std::conj(sp) * akq;
                    a(k, q) = sp * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    cplx apk = a(p, k), aqk = a(q, k);
                    a(p, k) = c * apk - sp * aqk;
                    a(q, k) = std::conj(sp) * apk + c * aqk;
                }
            }
    }
    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = a(i, i).real();
    std::sort(ev.begin(), ev.end());
    return ev;
}

int rank_of_span(const std::vector<std::vector<cplx>>& vecs, double rel_tol) {
    int m = int(vecs.size());
    if (m == 0) return 0;
    CMat gram(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            cplx s = 0.0;
            for (size_t k = 0; k < vecs[i].size(); ++k) s += std::conj(vecs[i][k]) * vecs[j][k];
            gram(i, j) = s;
        }
    auto ev = hermitian_eigenvalues(gram);
    double top = ev.empty() ? 0.0 : std::max(0.0, ev.back());
    // absolute floor keeps all-roundoff Gram matrices at rank 0
    double cut = std::max(rel_tol * top, 1e-12);
    int rank = 0;
    for (double lam : ev)
        if (lam > cut) ++rank;
    return rank;
}

std::vector<cplx> poly_roots_monic(const std::vector<cplx>& coeffs) {
    int n = int(coeffs.size());
    std::vector<cplx> z(n);
    cplx seed(0.4, 0.9); // standard Durand-Kerner start
    cplx p = 1.0;
    for (int i = 0; i < n; ++i) {
        p *= seed;
        z[i] = p;
    }
    auto eval = [&](cplx x) {
        cplx r = 1.0;
        for (int k = n - 1; k >= 0; --k) r = r * x + coeffs[k];
        return r;
    };
    for (int iter = 0; iter < 1000; ++iter) {
        double move = 0.0;
        for (int i = 0; i < n; ++i) {
            cplx denom = 1.0;
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= (z[i] - z[j]);
            if (std::abs(denom) < 1e-300) denom = 1e-300;
            cplx d = eval(z[i]) / denom;
            z[i] -= d;
            move = std::max(move, std::abs(d));
        }
        if (move < 1e-15) break;
    }
    return z;
}

bool simple_eigenpairs(const CMat& a, EigenPairs& out, double gap_tol) {
    int n = a.rows();
    double scale = 0.0;
    for (int i = 0; i < n; ++i) {
        double rs = 0.0;
        for (int j = 0; j < n; ++j) rs += std::abs(a(i, j));
        scale = std::max(scale, rs);
    }
    if (scale == 0.0) scale = 1.0;
    CMat b = a.scaled(1.0 / scale);

    // characteristic polynomial of b by Faddeev-LeVerrier
    std::vector<cplx> c(n + 1);
    c[n] = 1.0;
    CMat mk = CMat::identity(n);
    for (int k = 1; k <= n; ++k) {
        CMat bm = b * mk;
        cplx ck = -bm.trace() / double(k);
        c[n - k] = ck;
        mk = bm;
        for (int i = 0; i < n; ++i) mk(i, i) += ck;
    }
    std::vector<cplx> lowc(c.begin(), c.end() - 1);
    auto roots = poly_roots_monic(lowc);

    // reject clustered spectra: the caller retries with another random blend
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(roots[i] - roots[j]) < gap_tol) return false;

    out.values.assign(n, 0.0);
    out.vectors.assign(n, {});
    for (int k = 0; k < n; ++k) {
        cplx lam = roots[k];
        CMat shifted = b;
        for (int i = 0; i < n; ++i) shifted(i, i) -= lam + cplx(1e-13, 1e-13);
        std::vector<cplx> v(n);
        for (int i = 0; i < n; ++i) v[i] = cplx(1.0 + 0.01 * i, 0.3 - 0.02 * i);
        for (int it = 0; it < 4; ++it) {
            v = lu_solve(shifted, v);
            double nrm = 0.0;
            for (auto& x : v) nrm += std::norm(x);
            nrm = std::sqrt(nrm);
            for (auto& x : v) x /= nrm;
        }
        // Rayleigh-quotient style refinement of the eigenvalue on the original scale
        std::vector<cplx> bv(n, 0.0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) bv[i] += b(i, j) * v[j];
        int mi = 0;
        for (int i = 1; i < n; ++i)
            if (std::abs(v[i]) > std::abs(v[mi])) mi = i;
        cplx lam_ref = bv[mi] / v[mi];
        double resid = 0.0;
        for (int i = 0; i < n; ++i) resid = std::max(resid, std::abs(bv[i] - lam_ref * v[i]));
        if (resid > 1e-8) return false;
        out.values[k] = lam_ref * scale;
        out.vectors[k] = std::move(v);
    }
    return true;
}

} // namespace qdouble
