#pragma once

#include <utility>

#include "ratginv/errors.hpp"
#include "ratginv/polynomial.hpp"
#include "ratginv/rational.hpp"

namespace ratginv {

// Element of the field Q(x). Canonical form: gcd(num, den) = 1 and the
// denominator is monic, so structural equality is field equality.
class RatFun {
public:
    RatFun() : num_(), den_(Poly::one()) {}
    RatFun(const Rat& constant) : num_(constant), den_(Poly::one()) {}
    RatFun(long constant) : RatFun(Rat(constant)) {}
    RatFun(int constant) : RatFun(Rat(constant)) {}
    RatFun(Poly numerator) : num_(std::move(numerator)), den_(Poly::one()) {}

    RatFun(Poly numerator, Poly denominator) {
        if (denominator.is_zero()) throw DivisionByZero("rational function with zero denominator");
        normalize(std::move(numerator), std::move(denominator));
    }

    static RatFun x() { return RatFun(Poly::x()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }

    // The constant value; only meaningful when is_constant().
    Rat constant_value() const { return num_.coeff(0); }

    friend bool operator==(const RatFun& a, const RatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFun& a, const RatFun& b) { return !(a == b); }

    RatFun operator-() const {
        RatFun r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }

    // Gcd-economical addition: with g = gcd(d1, d2) the sum's only possible
    // cancellation against the combined denominator lives inside g, so one
    // small gcd replaces a full renormalization.
    friend RatFun operator+(const RatFun& a, const RatFun& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const Poly g = poly_gcd(a.den_, b.den_);
        RatFun r;
        if (g.is_one()) {
            r.num_ = a.num_ * b.den_ + b.num_ * a.den_;
            r.den_ = a.den_ * b.den_;
            if (r.num_.is_zero()) return RatFun();
            return r;
        }
        const Poly da = Poly::exact_div(a.den_, g);
        const Poly db = Poly::exact_div(b.den_, g);
        Poly t = a.num_ * db + b.num_ * da;
        if (t.is_zero()) return RatFun();
        const Poly h = poly_gcd(t, g);
        if (h.is_one()) {
            r.num_ = std::move(t);
            r.den_ = da * b.den_;
        } else {
            r.num_ = Poly::exact_div(t, h);
            r.den_ = da * Poly::exact_div(b.den_, h);
        }
        const Rat lead = r.den_.leading();
        if (!lead.is_one()) {
            const Rat inv = lead.reciprocal();
            r.num_ = r.num_ * inv;
            r.den_ = r.den_ * inv;
        }
        return r;
    }
    friend RatFun operator-(const RatFun& a, const RatFun& b) { return a + (-b); }

    friend RatFun operator*(const RatFun& a, const RatFun& b) {
        if (a.is_zero() || b.is_zero()) return RatFun();
        // Cross-cancel: with both operands reduced the result is already
        // reduced, and quotients of monic by monic keep the denominator monic.
        const Poly g1 = poly_gcd(a.num_, b.den_);
        const Poly g2 = poly_gcd(b.num_, a.den_);
        RatFun r;
        r.num_ = Poly::exact_div(a.num_, g1) * Poly::exact_div(b.num_, g2);
        r.den_ = Poly::exact_div(a.den_, g2) * Poly::exact_div(b.den_, g1);
        const Rat lead = r.den_.leading();
        if (!lead.is_one()) {
            const Rat inv = lead.reciprocal();
            r.num_ = r.num_ * inv;
            r.den_ = r.den_ * inv;
        }
        return r;
    }

    friend RatFun operator/(const RatFun& a, const RatFun& b) {
        if (b.is_zero()) throw DivisionByZero("rational function division by zero");
        return a * b.reciprocal();
    }

    RatFun& operator+=(const RatFun& o) { return *this = *this + o; }
    RatFun& operator-=(const RatFun& o) { return *this = *this - o; }
    RatFun& operator*=(const RatFun& o) { return *this = *this * o; }
    RatFun& operator/=(const RatFun& o) { return *this = *this / o; }

    RatFun reciprocal() const {
        if (is_zero()) throw DivisionByZero("reciprocal of the zero rational function");
        RatFun r;
        const Rat inv = num_.leading().reciprocal();
        r.num_ = den_ * inv;
        r.den_ = num_ * inv;
        return r;
    }

    // Exact evaluation; poles are genuine because num and den share no factor.
    Rat eval(const Rat& x0) const {
        const Rat d = den_.eval(x0);
        if (d.is_zero()) throw PoleAtPoint("evaluation at a pole");
        return num_.eval(x0) / d;
    }

    double eval_double(double x0) const { return num_.eval_double(x0) / den_.eval_double(x0); }

private:
    void normalize(Poly n, Poly d) {
        if (n.is_zero()) {
            num_ = Poly();
            den_ = Poly::one();
            return;
        }
        const Poly g = poly_gcd(n, d);
        if (!g.is_one()) {
            n = Poly::exact_div(n, g);
            d = Poly::exact_div(d, g);
        }
        const Rat lead = d.leading();
        if (!lead.is_one()) {
            const Rat inv = lead.reciprocal();
            n = n * inv;
            d = d * inv;
        }
        num_ = std::move(n);
        den_ = std::move(d);
    }

    Poly num_;
    Poly den_;
};

}  // namespace ratginv
