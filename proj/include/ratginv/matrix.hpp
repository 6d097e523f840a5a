#pragma once

#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "ratginv/errors.hpp"
#include "ratginv/rational_function.hpp"

namespace ratginv {

// Dense row-major matrix over a commutative ring scalar (RatFun for the exact
// field, double for the float backend).
template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}

    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, T{}) {}

    Matrix(std::size_t rows, std::size_t cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {
        if (e_.size() != rows_ * cols_)
            throw DimensionMismatch("matrix entry count does not match shape");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    const std::vector<T>& entries() const { return e_; }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    friend Matrix operator+(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatch("matrix addition shape mismatch");
        Matrix r = a;
        for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] += b.e_[k];
        return r;
    }

    friend Matrix operator-(const Matrix& a, const Matrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
            throw DimensionMismatch("matrix subtraction shape mismatch");
        Matrix r = a;
        for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] = r.e_[k] - b.e_[k];
        return r;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
        if constexpr (std::is_same_v<T, RatFun>) return detail_mul_ratfun(a, b);
        Matrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const T& aik = a(i, k);
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += aik * b(k, j);
            }
        return r;
    }

    friend Matrix operator*(const T& s, const Matrix& a) {
        Matrix r = a;
        for (auto& e : r.e_) e = s * e;
        return r;
    }

    Matrix transpose() const {
        Matrix r(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool is_zero() const {
        for (const auto& e : e_)
            if (!(e == T{})) return false;
        return true;
    }

    bool is_square() const { return rows_ == cols_; }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if (!((*this)(i, j) == (*this)(j, i))) return false;
        return true;
    }

private:
    // Product over Q(x) with denominators cleared up front: row i of the left
    // factor carries lcm r_i, column j of the right factor carries lcm c_j, so
    // each inner sum runs over plain polynomials and the (i,j) entry needs a
    // single normalization against r_i * c_j.
    static Matrix detail_mul_ratfun(const Matrix& a, const Matrix& b) {
        const std::size_t m = a.rows_, kk = a.cols_, n = b.cols_;
        std::vector<Poly> row_scale(m), col_scale(n);
        std::vector<Poly> pa(m * kk), pb(kk * n);
        for (std::size_t i = 0; i < m; ++i) {
            Poly l = Poly::one();
            for (std::size_t k = 0; k < kk; ++k) l = poly_lcm(l, a(i, k).den());
            for (std::size_t k = 0; k < kk; ++k)
                pa[i * kk + k] = a(i, k).num() * Poly::exact_div(l, a(i, k).den());
            row_scale[i] = l;
        }
        for (std::size_t j = 0; j < n; ++j) {
            Poly l = Poly::one();
            for (std::size_t k = 0; k < kk; ++k) l = poly_lcm(l, b(k, j).den());
            for (std::size_t k = 0; k < kk; ++k)
                pb[k * n + j] = b(k, j).num() * Poly::exact_div(l, b(k, j).den());
            col_scale[j] = l;
        }
        Matrix r(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Poly s;
                for (std::size_t k = 0; k < kk; ++k) s += pa[i * kk + k] * pb[k * n + j];
                const Poly den = row_scale[i] * col_scale[j];
                r(i, j) = den.is_one() ? RatFun(std::move(s)) : RatFun(std::move(s), den);
            }
        return r;
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> e_;
};

using RatMatrix = Matrix<RatFun>;
using FloatMatrix = Matrix<double>;

// Conjugate transpose; conjugation is the identity over rational coefficients.
inline RatMatrix star(const RatMatrix& a) { return a.transpose(); }

// Entrywise image under x -> x0; throws PoleAtPoint if any entry has a pole there.
inline FloatMatrix eval_at(const RatMatrix& a, const Rat& x0) {
    FloatMatrix r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j).eval(x0).to_double();
    return r;
}

inline bool has_pole_at(const RatMatrix& a, const Rat& x0) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j).den().eval(x0).is_zero()) return true;
    return false;
}

}  // namespace ratginv
