#pragma once

#include <gmpxx.h>

#include <cctype>
#include <complex>
#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bethe {

/// Exact rational number, always in lowest terms with positive denominator.
class Rational {
public:
    Rational() = default;
    Rational(int v) : v_(v) {}
    Rational(long v) : v_(v) {}
    Rational(long long v) : v_(static_cast<long>(v)) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }

    /// Accepts "a", "a/b" and finite decimals such as "-0.01" or "1e-2".
    static Rational parse(std::string_view text);

    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    std::string numerator_str() const { return v_.get_num().get_str(); }
    std::string denominator_str() const { return v_.get_den().get_str(); }
    /// Always "num/den"; integers carry "/1".
    std::string str() const { return numerator_str() + "/" + denominator_str(); }
    /// Human form: "3", "-1/2".
    std::string pretty() const { return is_integer() ? numerator_str() : str(); }
    double to_double() const { return v_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    Rational inverse() const { return Rational(1) / *this; }
    Rational pow(int e) const {
        if (e < 0) return inverse().pow(-e);
        Rational r(1), b = *this;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    std::size_t hash() const {
        return std::hash<std::string>{}(str());
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.pretty(); }

private:
    mpq_class v_;
};

inline Rational Rational::parse(std::string_view text) {
    std::string s(text);
    auto trim = [](std::string& t) {
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.erase(t.begin());
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.pop_back();
    };
    trim(s);
    if (s.empty()) throw std::invalid_argument("Rational::parse: empty string");
    auto slash = s.find('/');
    if (slash != std::string::npos) {
        mpz_class num, den;
        if (num.set_str(s.substr(0, slash), 10) != 0 || den.set_str(s.substr(slash + 1), 10) != 0)
            throw std::invalid_argument("Rational::parse: bad fraction '" + s + "'");
        if (den == 0) throw std::invalid_argument("Rational::parse: zero denominator");
        return Rational(mpq_class(num, den));
    }
    // decimal with optional exponent
    std::string mant = s;
    long exp10 = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
        mant = s.substr(0, epos);
        try {
            exp10 = std::stol(s.substr(epos + 1));
        } catch (...) {
            throw std::invalid_argument("Rational::parse: bad exponent '" + s + "'");
        }
    }
    bool neg = false;
    if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
        neg = mant[0] == '-';
        mant.erase(mant.begin());
    }
    auto dot = mant.find('.');
    std::string digits = mant;
    if (dot != std::string::npos) {
        digits = mant.substr(0, dot) + mant.substr(dot + 1);
        exp10 -= static_cast<long>(mant.size() - dot - 1);
    }
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("Rational::parse: bad number '" + s + "'");
    mpz_class num(digits, 10);
    if (neg) num = -num;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
    mpq_class q = exp10 < 0 ? mpq_class(num, scale) : mpq_class(num * scale);
    return Rational(q);
}

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(double x) { return x == 0.0; }
inline bool is_zero(const std::complex<double>& x) { return x == 0.0; }
template <class T>
auto is_zero(const T& x) -> decltype(x.is_zero()) { return x.is_zero(); }

inline Rational scale(const Rational& x, const Rational& s) { return x * s; }
inline double scale(double x, const Rational& s) { return x * s.to_double(); }
inline std::complex<double> scale(const std::complex<double>& x, const Rational& s) { return x * s.to_double(); }

inline Rational binomial(const Rational& p, int m) {
    Rational r(1);
    for (int i = 0; i < m; ++i) r = r * (p - Rational(i)) / Rational(i + 1);
    return r;
}

inline Rational factorial(int k) {
    Rational r(1);
    for (int i = 2; i <= k; ++i) r *= Rational(i);
    return r;
}

}  // namespace bethe

template <>
struct std::hash<bethe::Rational> {
    std::size_t operator()(const bethe::Rational& r) const { return r.hash(); }
};
