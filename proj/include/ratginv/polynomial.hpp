#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ratginv/errors.hpp"
#include "ratginv/rational.hpp"

namespace ratginv {

// Univariate polynomial over Q, dense in ascending powers.
// Invariant: the coefficient vector is empty (the zero polynomial) or its last
// element is nonzero.
class Poly {
public:
    Poly() = default;
    Poly(const Rat& constant) { if (!constant.is_zero()) c_.push_back(constant); }
    Poly(long constant) : Poly(Rat(constant)) {}
    Poly(int constant) : Poly(Rat(constant)) {}

    explicit Poly(std::vector<Rat> ascending_coeffs) : c_(std::move(ascending_coeffs)) { trim(); }
    Poly(std::initializer_list<Rat> ascending_coeffs) : c_(ascending_coeffs) { trim(); }

    static Poly one() { return Poly(Rat(1)); }
    static Poly x() { return monomial(Rat(1), 1); }
    static Poly monomial(const Rat& coef, std::size_t power) {
        Poly p;
        if (!coef.is_zero()) {
            p.c_.assign(power + 1, Rat(0));
            p.c_[power] = coef;
        }
        return p;
    }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
    bool is_constant() const { return c_.size() <= 1; }

    // Degree, with -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }

    Rat leading() const { return c_.empty() ? Rat(0) : c_.back(); }

    const std::vector<Rat>& coeffs() const { return c_; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly operator-() const {
        Poly r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()), Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return Poly(std::move(r));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1, Rat(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return Poly(std::move(r));
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator*(const Poly& a, const Rat& s) {
        if (s.is_zero()) return Poly();
        Poly r(a);
        for (auto& c : r.c_) c *= s;
        return r;
    }
    friend Poly operator*(const Rat& s, const Poly& a) { return a * s; }

    // Euclidean division over Q: a = q*b + r with deg r < deg b.
    static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
        if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
        Poly r = a;
        if (a.degree() < b.degree()) return {Poly(), r};
        std::vector<Rat> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, Rat(0));
        const Rat lb = b.leading();
        while (!r.is_zero() && r.degree() >= b.degree()) {
            const std::size_t shift = static_cast<std::size_t>(r.degree() - b.degree());
            const Rat f = r.leading() / lb;
            q[shift] = f;
            // r -= f * x^shift * b, with the leading term cancelling exactly.
            for (std::size_t i = 0; i < b.c_.size(); ++i) {
                r.c_[shift + i] -= f * b.c_[i];
            }
            r.trim();
        }
        return {Poly(std::move(q)), r};
    }

    // Exact quotient; the remainder must vanish.
    static Poly exact_div(const Poly& a, const Poly& b) {
        auto [q, r] = divmod(a, b);
        if (!r.is_zero()) throw std::logic_error("exact_div: nonzero remainder");
        return q;
    }

    Poly monic() const {
        if (is_zero()) return Poly();
        return *this * leading().reciprocal();
    }

    Rat eval(const Rat& x0) const {  // Horner
        Rat acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x0 + c_[i];
        return acc;
    }

    double eval_double(double x0) const {
        double acc = 0.0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x0 + c_[i].to_double();
        return acc;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rat> c_;
};

namespace detail {

// Splits p = content * primitive with content a positive rational and the
// primitive part an integer-coefficient polynomial whose coefficient gcd is 1.
// The primitive part keeps the sign of p.
inline std::pair<Rat, Poly> content_primitive(const Poly& p) {
    if (p.is_zero()) return {Rat(0), Poly()};
    Int den_lcm = 1;
    for (const Rat& c : p.coeffs())
        if (!c.is_zero()) den_lcm = lcm(den_lcm, c.den());
    Int num_gcd = 0;
    for (const Rat& c : p.coeffs())
        if (!c.is_zero()) num_gcd = gcd(num_gcd, c.num() * (den_lcm / c.den()));
    const Rat content(num_gcd, den_lcm);
    return {content, p * content.reciprocal()};
}

// Pseudo-remainder of integer-coefficient polynomials: repeatedly
// cross-multiplies by leading coefficients so every step stays in Z[x].
// Returns an associate of rem(a, b), which is all a gcd chain needs; the
// integer content is stripped after each step to stop the cross-multipliers
// from compounding.
inline Poly pseudo_rem(Poly a, const Poly& b) {
    const Rat lb = b.leading();
    while (!a.is_zero() && a.degree() >= b.degree()) {
        const std::size_t shift = static_cast<std::size_t>(a.degree() - b.degree());
        a = a * lb - Poly::monomial(a.leading(), shift) * b;
        if (!a.is_zero()) a = content_primitive(a).second;
    }
    return a;
}

}  // namespace detail

// Monic greatest common divisor over Q[x]; gcd(0,0) = 0.
// Runs a primitive polynomial remainder sequence over Z to keep the
// intermediate coefficients from exploding.
inline Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly::one();
    if (a == b) return a.monic();
    Poly r0 = detail::content_primitive(a).second;
    Poly r1 = detail::content_primitive(b).second;
    if (r0.degree() < r1.degree()) std::swap(r0, r1);
    while (!r1.is_zero()) {
        Poly r2 = detail::pseudo_rem(r0, r1);
        if (!r2.is_zero()) r2 = detail::content_primitive(r2).second;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    return r0.monic();
}

inline Poly poly_lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    if (a.is_one()) return b.monic();
    if (b.is_one()) return a.monic();
    if (a == b) return a.monic();
    return Poly::exact_div(a * b, poly_gcd(a, b)).monic();
}

}  // namespace ratginv
