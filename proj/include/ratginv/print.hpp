#pragma once

#include <cstdio>
#include <string>

#include "ratginv/matrix.hpp"
#include "ratginv/polynomial.hpp"
#include "ratginv/rational.hpp"
#include "ratginv/rational_function.hpp"

namespace ratginv {

// Canonical printers. Polynomials print in ascending degree with explicit
// '*'; rational functions print as "(num)/(den)" with the normalized (reduced,
// monic-denominator) representation. Everything printed here reparses to a
// structurally equal value.

inline std::string to_string(const Rat& r) { return r.str(); }

namespace detail {

// One term "c*x^k" with positive c; the sign is handled by the caller.
inline std::string poly_term(const Rat& c, std::size_t k) {
    if (k == 0) return c.str();
    std::string s;
    if (!c.is_one()) s = c.str() + "*";
    s += "x";
    if (k > 1) s += "^" + std::to_string(k);
    return s;
}

}  // namespace detail

inline std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
        const Rat& c = p.coeffs()[k];
        if (c.is_zero()) continue;
        if (s.empty()) {
            s = c.sign() < 0 ? "-" + detail::poly_term(-c, k) : detail::poly_term(c, k);
        } else {
            s += c.sign() < 0 ? "-" + detail::poly_term(-c, k) : "+" + detail::poly_term(c, k);
        }
    }
    return s;
}

inline std::string to_string(const RatFun& f) {
    if (f.den().is_one()) return to_string(f.num());
    return "(" + to_string(f.num()) + ")/(" + to_string(f.den()) + ")";
}

// Matrix-file format: "m n" header, then one line per row with cells joined
// by "; ".
inline std::string to_string(const RatMatrix& a) {
    std::string s = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) s += "; ";
            s += to_string(a(i, j));
        }
        s += "\n";
    }
    return s;
}

// Float grid with a shape header, for the --float output path.
inline std::string to_string(const FloatMatrix& a) {
    std::string s = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
    char buf[40];
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            std::snprintf(buf, sizeof(buf), "%.12g", a(i, j));
            if (j) s += "  ";
            s += buf;
        }
        s += "\n";
    }
    return s;
}

}  // namespace ratginv
