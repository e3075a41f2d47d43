#include "jm/scalar.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

#include "jm/errors.hpp"

namespace jm {

GaussRational& GaussRational::operator*=(const GaussRational& o) {
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
    Rational den = o.re * o.re + o.im * o.im;
    if (den == 0) throw DomainError("division by zero in exact arithmetic");
    Rational r = (re * o.re + im * o.im) / den;
    Rational i = (im * o.re - re * o.im) / den;
    re = std::move(r);
    im = std::move(i);
    return *this;
}

GaussRational conj(const GaussRational& z) { return {z.re, -z.im}; }

namespace {

Rational pow10(int e) {
    Rational r(1);
    for (int i = 0; i < e; ++i) r *= 10;
    return r;
}

Rational parse_decimal(const std::string& s) {
    std::size_t pos = 0;
    bool negative = false;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
        negative = s[pos] == '-';
        ++pos;
    }
    boost::multiprecision::mpz_int mantissa = 0;
    int frac_digits = 0;
    bool seen_dot = false;
    bool any_digit = false;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (c >= '0' && c <= '9') {
            mantissa = mantissa * 10 + (c - '0');
            if (seen_dot) ++frac_digits;
            any_digit = true;
        } else if (c == '.' && !seen_dot) {
            seen_dot = true;
        } else {
            break;
        }
    }
    if (!any_digit) throw DomainError("malformed number: '" + s + "'");
    int exponent = 0;
    if (pos < s.size() && (s[pos] == 'e' || s[pos] == 'E')) {
        ++pos;
        std::string rest = s.substr(pos);
        try {
            std::size_t used = 0;
            exponent = std::stoi(rest, &used);
            if (used != rest.size()) throw DomainError("malformed exponent in '" + s + "'");
        } catch (const std::logic_error&) {
            throw DomainError("malformed exponent in '" + s + "'");
        }
        pos = s.size();
    }
    if (pos != s.size()) throw DomainError("malformed number: '" + s + "'");
    Rational value(mantissa);
    int shift = exponent - frac_digits;
    if (shift > 0) value *= pow10(shift);
    if (shift < 0) value /= pow10(-shift);
    return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return parse_decimal(text);
    Rational num = parse_decimal(text.substr(0, slash));
    Rational den = parse_decimal(text.substr(slash + 1));
    if (den == 0) throw DomainError("zero denominator in '" + text + "'");
    return num / den;
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) throw DomainError("non-finite value cannot be made exact");
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return parse_decimal(std::string(buf, res.ptr));
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r) { return r.str(); }

std::string format_scalar(const Complex& z) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

std::string format_scalar(const GaussRational& z) {
    if (z.im == 0) return to_string(z.re);
    return to_string(z.re) + (z.im < 0 ? "" : "+") + to_string(z.im) + "i";
}

}  // namespace jm
