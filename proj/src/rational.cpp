#include "propdiv/rational.hpp"

#include "propdiv/errors.hpp"

#include <cctype>
#include <ostream>

namespace propdiv {

namespace mp = boost::multiprecision;

Rational::Rational(const Int& num, const Int& den) {
    if (den == 0)
        raise(Errc::division_by_zero, "rational with zero denominator");
    // the backend insists on den > 0; move the sign to the numerator
    v_ = den < 0 ? mp::cpp_rational(-num, -den) : mp::cpp_rational(num, den);
}

Rational::Rational(long long num, long long den) : Rational(Int(num), Int(den)) {}

Rational Rational::parse(std::string_view text) {
    auto fail = [&] { raise(Errc::invalid_rational, "not a rational: \"" + std::string(text) + "\""); };

    std::size_t i = 0;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
    std::size_t num_begin = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_begin) fail();
    // skip an explicit '+': the bigint constructor only knows '-'
    std::string num_text(text.substr(text[0] == '+' ? 1 : 0, text[0] == '+' ? i - 1 : i));

    Int den = 1;
    if (i < text.size()) {
        if (text[i] != '/') fail();
        ++i;
        std::size_t den_begin = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_begin || i != text.size()) fail();
        den = Int(std::string(text.substr(den_begin)));
        if (den == 0) fail();
    }
    return Rational(Int(num_text), den);
}

Rational::Int Rational::num() const { return mp::numerator(v_); }
Rational::Int Rational::den() const { return mp::denominator(v_); }

bool Rational::is_integer() const { return mp::denominator(v_) == 1; }

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational Rational::abs() const { return v_ < 0 ? -*this : *this; }

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        raise(Errc::division_by_zero, "rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational::Int Rational::floor() const {
    Int n = num(), d = den();
    Int q = n / d; // truncates toward zero
    if (n < 0 && q * d != n) --q;
    return q;
}

Rational Rational::frac() const { return *this - Rational(floor()); }

std::string Rational::str() const {
    std::string s = num().str();
    if (!is_integer()) {
        s += '/';
        s += den().str();
    }
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace propdiv
