#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "ratginv/errors.hpp"
#include "ratginv/exact_linalg.hpp"
#include "ratginv/matrix.hpp"

namespace ratginv {

// Extended square-root-free factorization of a symmetric PSD matrix G over
// Q(x):  G = l1 * diag(d) * l1^T  with l1 of full column rank and one column
// per nonzero pivot. The classical Cholesky factor would be L = l1 * diag(sqrt d),
// but sqrt(d_k) generally leaves Q(x); keeping d separate closes everything
// over the field.
struct PSDFactorization {
    RatMatrix l1;                      // n x s, unit at each pivot row
    std::vector<RatFun> d;             // s nonzero pivots
    std::vector<std::size_t> pivots;   // kept column indices, ascending
    std::size_t n = 0;                 // original dimension

    std::size_t rank() const { return pivots.size(); }
};

// Factors a symmetric PSD Gram matrix, dropping zero-pivot columns where they
// occur. For a Gram matrix a zero pivot forces the rest of its column to
// vanish; a violation (or a negative constant pivot) means the input was not
// a Gram matrix and raises NotPSD.
inline PSDFactorization ldl_psd_exact(const RatMatrix& g) {
    if (!g.is_square()) throw DimensionMismatch("PSD factorization of a non-square matrix");
    if (!g.is_symmetric()) throw NotPSD("input matrix is not symmetric");
    const std::size_t n = g.rows();

    PSDFactorization f;
    f.n = n;
    std::vector<std::vector<RatFun>> cols;  // each of length n

    for (std::size_t j = 0; j < n; ++j) {
        const std::size_t s = f.pivots.size();
        RatFun pivot = g(j, j);
        for (std::size_t k = 0; k < s; ++k) pivot -= f.d[k] * cols[k][j] * cols[k][j];

        if (pivot.is_zero()) {
            for (std::size_t i = j + 1; i < n; ++i) {
                RatFun resid = g(i, j);
                for (std::size_t k = 0; k < s; ++k) resid -= f.d[k] * cols[k][i] * cols[k][j];
                if (!resid.is_zero())
                    throw NotPSD("zero pivot with a nonzero entry below it");
            }
            continue;
        }
        if (pivot.is_constant() && pivot.constant_value().sign() < 0)
            throw NotPSD("negative constant pivot");

        std::vector<RatFun> col(n);
        col[j] = RatFun(1);
        for (std::size_t i = j + 1; i < n; ++i) {
            RatFun v = g(i, j);
            for (std::size_t k = 0; k < s; ++k) v -= f.d[k] * cols[k][i] * cols[k][j];
            col[i] = v / pivot;
        }
        cols.push_back(std::move(col));
        f.d.push_back(std::move(pivot));
        f.pivots.push_back(j);
    }

    f.l1 = RatMatrix(n, f.pivots.size());
    for (std::size_t k = 0; k < cols.size(); ++k)
        for (std::size_t i = 0; i < n; ++i) f.l1(i, k) = cols[k][i];
    return f;
}

// Moore-Penrose inverse of the factored Gram matrix:
//   G^+ = l1 (l1^T l1)^{-1} D^{-1} (l1^T l1)^{-1} l1^T.
// This is the sqrt-free form of L (L^T L)^{-2} L^T for L = l1 diag(sqrt d);
// the sqrt factors cancel pairwise. Only s x s matrices are ever inverted and
// no inverse is squared.
//
// Evaluation clears the column denominators first: with c_k the lcm of column
// k of l1, U = l1 diag(c_k) is a polynomial matrix and the formula collapses
// to U S^{-1} diag(c_k^2 / d_k) S^{-1} U^T with S = U^T U, so the adjugate and
// determinant of the polynomial S carry all the elimination work.
inline RatMatrix psd_pinv(const PSDFactorization& f) {
    const std::size_t s = f.rank();
    const std::size_t n = f.n;
    if (s == 0) return RatMatrix(n, n);

    if (s == n) {
        // Nonsingular G: with l1 square the formula telescopes to G^{-1},
        // and the reconstructed G has the original small entries.
        RatMatrix ld = f.l1;
        for (std::size_t k = 0; k < s; ++k)
            for (std::size_t i = 0; i < n; ++i) ld(i, k) *= f.d[k];
        return inverse(ld * f.l1.transpose());
    }

    std::vector<Poly> col_scale(s);
    std::vector<std::vector<Poly>> u(n, std::vector<Poly>(s));
    for (std::size_t k = 0; k < s; ++k) {
        Poly l = Poly::one();
        for (std::size_t i = 0; i < n; ++i) l = poly_lcm(l, f.l1(i, k).den());
        for (std::size_t i = 0; i < n; ++i)
            u[i][k] = f.l1(i, k).num() * Poly::exact_div(l, f.l1(i, k).den());
        col_scale[k] = l;
    }

    std::vector<std::vector<Poly>> gram(s, std::vector<Poly>(s));
    for (std::size_t k = 0; k < s; ++k)
        for (std::size_t l = k; l < s; ++l) {
            Poly acc;
            for (std::size_t i = 0; i < n; ++i) acc += u[i][k] * u[i][l];
            gram[k][l] = acc;
            gram[l][k] = std::move(acc);
        }
    const Poly det = detail::bareiss_det(gram);
    if (det.is_zero()) throw std::logic_error("psd_pinv: cleared factor lost column rank");
    const auto adj = detail::poly_adjugate(gram);

    // mid = adj(S) diag(c_k^2 / d_k) adj(S) / det^2, as rational functions
    RatMatrix scaled(s, s);
    for (std::size_t k = 0; k < s; ++k) {
        const RatFun q = RatFun(col_scale[k] * col_scale[k]) / f.d[k];
        for (std::size_t i = 0; i < s; ++i) scaled(i, k) = RatFun(adj[i][k]) * q;
    }
    RatMatrix adj_rm(s, s);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) adj_rm(i, j) = RatFun(adj[i][j]);
    RatMatrix mid = scaled * adj_rm;
    const RatFun det_sq_inv = RatFun(Poly::one(), det * det);
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) mid(i, j) *= det_sq_inv;

    RatMatrix u_rm(n, s);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < s; ++k) u_rm(i, k) = RatFun(u[i][k]);
    return u_rm * mid * u_rm.transpose();
}

// Classic square-root Cholesky for constant matrices with pivot clamping:
// a pivot below tol is treated as zero and its column dropped, mirroring the
// exact path's zero-row elimination. Returns the n x kept factor and the
// number of kept pivots. A clamped pivot whose residual column still carries
// mass above tol (relative to the diagonal scale) means the input was not a
// Gram matrix.
inline std::pair<FloatMatrix, std::size_t> cholesky_float(const FloatMatrix& g,
                                                          double tol = 1e-11) {
    if (!g.is_square()) throw DimensionMismatch("Cholesky of a non-square matrix");
    const std::size_t n = g.rows();

    double scale = 1.0;
    for (std::size_t i = 0; i < n; ++i) scale = std::max(scale, std::abs(g(i, i)));
    const double residual_tol = tol * scale;

    FloatMatrix c(n, n);
    std::vector<std::size_t> kept;
    for (std::size_t p = 0; p < n; ++p) {
        double s1 = g(p, p);
        for (std::size_t q = 0; q < p; ++q) s1 -= c(p, q) * c(p, q);
        if (s1 < tol) s1 = 0.0;
        c(p, p) = std::sqrt(s1);
        if (c(p, p) != 0.0) {
            kept.push_back(p);
            for (std::size_t i = p + 1; i < n; ++i) {
                double s = g(i, p);
                for (std::size_t q = 0; q < p; ++q) s -= c(i, q) * c(p, q);
                c(i, p) = s / c(p, p);
            }
        } else {
            for (std::size_t i = p + 1; i < n; ++i) {
                double s = g(i, p);
                for (std::size_t q = 0; q < p; ++q) s -= c(i, q) * c(p, q);
                if (std::abs(s) > residual_tol)
                    throw NotPSD("clamped pivot with residual column mass above tolerance");
            }
        }
    }

    FloatMatrix l(n, kept.size());
    for (std::size_t k = 0; k < kept.size(); ++k)
        for (std::size_t i = 0; i < n; ++i) l(i, k) = c(i, kept[k]);
    return {std::move(l), kept.size()};
}

}  // namespace ratginv
