#pragma once

#include <concepts>
#include <stdexcept>
#include <string>

#include "poly.hpp"
#include "rational.hpp"

namespace bethe {

/// num / den in lowest terms with den monic.
class RationalFunction {
public:
    using P = UPoly<Rational>;

    RationalFunction() : den_(Rational(1)) {}
    RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}
    template <std::integral I>
    RationalFunction(I c) : RationalFunction(Rational(static_cast<long>(c))) {}
    RationalFunction(P num, P den) : num_(std::move(num)), den_(std::move(den)) { normalize(); }
    static RationalFunction poly(const P& p) { return RationalFunction(p, P(Rational(1))); }
    /// 1 / (u - x)
    static RationalFunction pole(const Rational& x) { return RationalFunction(P(Rational(1)), P::linear(x)); }

    const P& num() const { return num_; }
    const P& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    Rational at(const Rational& x) const {
        Rational d = den_.at(x);
        if (d.is_zero()) throw std::domain_error("RationalFunction: evaluation at a pole");
        return num_.at(x) / d;
    }
    RationalFunction derivative() const {
        return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    RationalFunction operator-() const {
        RationalFunction r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
        return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
        if (a.is_zero() || b.is_zero()) return RationalFunction();
        if (a.is_polynomial() && b.is_polynomial()) return poly(a.num_ * b.num_);
        return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
        if (b.is_zero()) throw std::domain_error("RationalFunction: division by zero");
        return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
    }
    RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
    RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
    RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

private:
    void normalize() {
        if (den_.is_zero()) throw std::domain_error("RationalFunction: zero denominator");
        if (num_.is_zero()) {
            den_ = P(Rational(1));
            return;
        }
        if (den_.degree() > 0) {
            P g = gcd(num_, den_);
            if (g.degree() > 0) {
                num_ = divmod(num_, g).first;
                den_ = divmod(den_, g).first;
            }
        }
        Rational lead = den_.leading();
        if (!bethe::is_one(lead)) {
            num_ = scale(num_, lead.inverse());
            den_ = scale(den_, lead.inverse());
        }
    }
    P num_;
    P den_;
};

using RF = RationalFunction;

inline RationalFunction scale(const RationalFunction& f, const Rational& s) {
    return RationalFunction(scale(f.num(), s), f.den());
}

}  // namespace bethe
