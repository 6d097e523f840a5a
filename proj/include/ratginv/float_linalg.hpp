#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <utility>

#include "ratginv/errors.hpp"
#include "ratginv/matrix.hpp"
#include "ratginv/psd_factor.hpp"

namespace ratginv {

// Condition estimate above which a Gram inversion is reported as unreliable;
// doubles have lost about half their digits at this point.
inline constexpr double kConditionWarningThreshold = 1e12;

struct FloatInverse {
    FloatMatrix inv;
    double cond1_estimate = 0.0;  // ||A||_1 * ||A^{-1}||_1
};

namespace detail {

inline double norm1(const FloatMatrix& a) {
    double best = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) {
        double s = 0.0;
        for (std::size_t i = 0; i < a.rows(); ++i) s += std::abs(a(i, j));
        best = std::max(best, s);
    }
    return best;
}

}  // namespace detail

// Gauss-Jordan inverse with partial pivoting, plus a 1-norm condition
// estimate from the computed inverse.
inline FloatInverse float_inverse(const FloatMatrix& a) {
    if (!a.is_square()) throw DimensionMismatch("inverse of a non-square matrix");
    const std::size_t n = a.rows();
    FloatMatrix w = a;
    FloatMatrix inv = FloatMatrix::identity(n);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = c;
        for (std::size_t i = c + 1; i < n; ++i)
            if (std::abs(w(i, c)) > std::abs(w(pivot, c))) pivot = i;
        if (std::abs(w(pivot, c)) < 1e-300)
            throw NumericFailure("Gram matrix numerically singular");
        if (pivot != c)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(w(c, j), w(pivot, j));
                std::swap(inv(c, j), inv(pivot, j));
            }
        const double scale = 1.0 / w(c, c);
        for (std::size_t j = 0; j < n; ++j) {
            w(c, j) *= scale;
            inv(c, j) *= scale;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || w(i, c) == 0.0) continue;
            const double f = w(i, c);
            for (std::size_t j = 0; j < n; ++j) {
                w(i, j) -= f * w(c, j);
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    FloatInverse out;
    out.cond1_estimate = detail::norm1(a) * detail::norm1(inv);
    out.inv = std::move(inv);
    return out;
}

// Moore-Penrose inverse of a constant matrix through the full-rank Cholesky
// factorization of A^T A (or A A^T when m < n):  Y = L M M L^T A^T with
// M = (L^T L)^{-1}.
inline FloatMatrix geninv_float(const FloatMatrix& a, double tol = 1e-11) {
    const std::size_t m = a.rows(), n = a.cols();
    const bool trans = m < n;
    const FloatMatrix at = a.transpose();
    const FloatMatrix gram = trans ? a * at : at * a;
    auto [l, kept] = cholesky_float(gram, tol);
    if (kept == 0) return FloatMatrix(n, m);
    const FloatMatrix lt = l.transpose();
    const FloatMatrix mi = float_inverse(lt * l).inv;
    const FloatMatrix core = l * mi * mi * lt;
    return trans ? at * core : core * at;
}

struct ModGinvResult {
    FloatMatrix x;
    std::size_t s = 0;
    // Mirrors the badly-conditioned-matrix warning: set when the Gram factor's
    // condition estimate exceeds kConditionWarningThreshold.
    bool condition_warning = false;
};

// Float counterpart of algorithm_2_1, with the same helper dispatch. The
// factored products (R^T A)^T (R^T A) and (A T^T)(A T^T)^T are squared Gram
// matrices, so rank decisions and conditioning degrade much faster than in
// geninv_float; the warning flag reports when that has happened.
inline ModGinvResult modginv_float(const FloatMatrix& a, const FloatMatrix& r,
                                   double tol = 1e-11) {
    ModGinvResult out;
    if (r.cols() == a.cols()) {
        const FloatMatrix c = a * r.transpose();
        const FloatMatrix gram = c * c.transpose();
        auto [l, kept] = cholesky_float(gram, tol);
        out.s = kept;
        if (kept == 0) {
            out.x = FloatMatrix(a.cols(), a.rows());
            return out;
        }
        const FloatMatrix lt = l.transpose();
        const FloatInverse fi = float_inverse(lt * l);
        out.condition_warning = fi.cond1_estimate > kConditionWarningThreshold;
        const FloatMatrix core = l * fi.inv * fi.inv * lt;
        out.x = r.transpose() * c.transpose() * core;
    } else if (r.rows() == a.rows()) {
        const FloatMatrix b = r.transpose() * a;
        const FloatMatrix gram = b.transpose() * b;
        auto [l, kept] = cholesky_float(gram, tol);
        out.s = kept;
        if (kept == 0) {
            out.x = FloatMatrix(a.cols(), a.rows());
            return out;
        }
        const FloatMatrix lt = l.transpose();
        const FloatInverse fi = float_inverse(lt * l);
        out.condition_warning = fi.cond1_estimate > kConditionWarningThreshold;
        const FloatMatrix core = l * fi.inv * fi.inv * lt;
        out.x = core * b.transpose() * r.transpose();
    } else {
        throw DimensionMismatch("helper fits neither branch");
    }
    return out;
}

// Max-norm defects of the four Penrose equations for a float candidate.
inline std::array<double, 4> penrose_residuals(const FloatMatrix& a, const FloatMatrix& x) {
    if (x.rows() != a.cols() || x.cols() != a.rows())
        throw DimensionMismatch("candidate must have the transposed shape of the input");
    auto max_abs = [](const FloatMatrix& m) {
        double best = 0.0;
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j) best = std::max(best, std::abs(m(i, j)));
        return best;
    };
    const FloatMatrix ax = a * x;
    const FloatMatrix xa = x * a;
    return {max_abs(ax * a - a), max_abs(xa * x - x), max_abs(ax.transpose() - ax),
            max_abs(xa.transpose() - xa)};
}

}  // namespace ratginv
