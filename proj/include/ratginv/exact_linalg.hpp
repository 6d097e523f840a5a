#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ratginv/errors.hpp"
#include "ratginv/matrix.hpp"
#include "ratginv/polynomial.hpp"

namespace ratginv {

namespace detail {

struct ClearedRows {
    std::vector<std::vector<Poly>> entries;
    std::vector<Poly> row_scale;  // the lcm each row was multiplied by
};

// Clears every row's denominators by their lcm, turning the matrix into a
// polynomial matrix with the same rank (row scaling by a nonzero polynomial).
inline ClearedRows clear_denominators(const RatMatrix& a) {
    ClearedRows out;
    out.entries.assign(a.rows(), std::vector<Poly>(a.cols()));
    out.row_scale.assign(a.rows(), Poly::one());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Poly l = Poly::one();
        for (std::size_t j = 0; j < a.cols(); ++j) l = poly_lcm(l, a(i, j).den());
        for (std::size_t j = 0; j < a.cols(); ++j)
            out.entries[i][j] = a(i, j).num() * Poly::exact_div(l, a(i, j).den());
        out.row_scale[i] = l;
    }
    return out;
}

// Fraction-free determinant of a polynomial matrix (Bareiss). Intermediate
// entries are minors of the input, so degrees and coefficients stay
// polynomially bounded.
inline Poly bareiss_det(std::vector<std::vector<Poly>> w) {
    const std::size_t n = w.size();
    if (n == 0) return Poly::one();
    bool negate = false;
    Poly prev = Poly::one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = n;
        for (std::size_t i = c; i < n; ++i) {
            if (w[i][c].is_zero()) continue;
            if (pivot == n || w[i][c].degree() < w[pivot][c].degree()) pivot = i;
        }
        if (pivot == n) return Poly();
        if (pivot != c) {
            std::swap(w[c], w[pivot]);
            negate = !negate;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j)
                w[i][j] = Poly::exact_div(w[c][c] * w[i][j] - w[i][c] * w[c][j], prev);
            w[i][c] = Poly();
        }
        prev = w[c][c];
    }
    return negate ? -w[n - 1][n - 1] : w[n - 1][n - 1];
}

// Adjugate of a polynomial matrix via fraction-free cofactor determinants:
// adj(P)_{ij} = (-1)^{i+j} det(P without row j, column i).
inline std::vector<std::vector<Poly>> poly_adjugate(const std::vector<std::vector<Poly>>& p) {
    const std::size_t n = p.size();
    std::vector<std::vector<Poly>> adj(n, std::vector<Poly>(n));
    if (n == 1) {
        adj[0][0] = Poly::one();
        return adj;
    }
    std::vector<std::vector<Poly>> minor(n - 1, std::vector<Poly>(n - 1));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t r = 0, rr = 0; r < n; ++r) {
                if (r == j) continue;
                for (std::size_t c = 0, cc = 0; c < n; ++c) {
                    if (c == i) continue;
                    minor[rr][cc] = p[r][c];
                    ++cc;
                }
                ++rr;
            }
            Poly cof = bareiss_det(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            adj[i][j] = std::move(cof);
        }
    return adj;
}

}  // namespace detail

// Exact rank over Q(x) by fraction-free (Bareiss) elimination on the
// denominator-cleared polynomial matrix. Pivots are chosen with minimal
// degree in their column to limit intermediate growth; every division by the
// previous pivot is exact by the Sylvester minor identity.
inline std::size_t rank(const RatMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    if (m == 0 || n == 0) return 0;
    auto w = detail::clear_denominators(a).entries;

    std::size_t r = 0;
    Poly prev = Poly::one();
    for (std::size_t c = 0; c < n && r < m; ++c) {
        std::size_t pivot = m;
        for (std::size_t i = r; i < m; ++i) {
            if (w[i][c].is_zero()) continue;
            if (pivot == m || w[i][c].degree() < w[pivot][c].degree()) pivot = i;
        }
        if (pivot == m) continue;
        std::swap(w[r], w[pivot]);
        for (std::size_t i = r + 1; i < m; ++i) {
            for (std::size_t j = c + 1; j < n; ++j)
                w[i][j] = Poly::exact_div(w[r][c] * w[i][j] - w[i][c] * w[r][j], prev);
            w[i][c] = Poly();
        }
        prev = w[r][c];
        ++r;
    }
    return r;
}

// Exact inverse over Q(x) through the adjugate of the denominator-cleared
// polynomial matrix: with D the diagonal of row-denominator lcms and
// P = D * a, the inverse is adj(P) * D / det(P). Every determinant runs
// fraction-free, so each output entry costs a single normalization instead of
// cascaded rational-function elimination.
inline RatMatrix inverse(const RatMatrix& a) {
    if (!a.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    if (n == 0) return a;

    auto cleared = detail::clear_denominators(a);
    auto& p = cleared.entries;
    auto& row_scale = cleared.row_scale;

    const Poly det = detail::bareiss_det(p);
    if (det.is_zero()) throw SingularMatrix("matrix is singular over Q(x)");

    const auto adj = detail::poly_adjugate(p);
    RatMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv(i, j) = RatFun(adj[i][j] * row_scale[j], det);
    return inv;
}

}  // namespace ratginv
