#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

namespace propdiv {

// Exact rational number, always in canonical form: gcd(|num|, den) = 1, den > 0.
// Backed by boost cpp_rational; this type owns the artifact's text grammar
// ("p", "-p", "p/q" with q > 0) and its error contract (division by zero and
// malformed text raise propdiv::Error instead of backend exceptions).
class Rational {
public:
    using Int = boost::multiprecision::cpp_int;

    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long long n) : v_(n) {}
    Rational(const Int& n) : v_(n) {}
    Rational(const Int& num, const Int& den);
    Rational(long long num, long long den);

    // Accepts an optional sign, then digits, optionally "/digits".
    // "4/0", "1/-2", "1.5", "" are all invalid_rational errors.
    static Rational parse(std::string_view text);

    Int num() const;
    Int den() const;

    bool is_zero() const { return v_.is_zero(); }
    bool is_integer() const;
    int sign() const { return v_.sign(); }

    Rational operator-() const;
    Rational abs() const;

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    // Largest integer <= value, exact.
    Int floor() const;
    // value - floor(value), in [0, 1).
    Rational frac() const;

    // Canonical text: "p" when den == 1, else "p/q".
    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    boost::multiprecision::cpp_rational v_;
};

} // namespace propdiv
