#pragma once

#include <complex>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace jm {

using Rational = boost::multiprecision::mpq_rational;
using Complex = std::complex<double>;

// Exact complex number with rational real and imaginary parts.
struct GaussRational {
    Rational re{0};
    Rational im{0};

    GaussRational() = default;
    GaussRational(int r) : re(r) {}
    GaussRational(const Rational& r) : re(r) {}
    GaussRational(const Rational& r, const Rational& i) : re(r), im(i) {}

    GaussRational& operator+=(const GaussRational& o) { re += o.re; im += o.im; return *this; }
    GaussRational& operator-=(const GaussRational& o) { re -= o.re; im -= o.im; return *this; }
    GaussRational& operator*=(const GaussRational& o);
    GaussRational& operator/=(const GaussRational& o);

    friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
    friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
    friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
    friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
    friend GaussRational operator-(const GaussRational& a) { return {-a.re, -a.im}; }
    friend bool operator==(const GaussRational& a, const GaussRational& b) { return a.re == b.re && a.im == b.im; }
    friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }
};

GaussRational conj(const GaussRational& z);

// Parses "p/q", integers and finite decimals ("0.125", "-3e-2") exactly.
Rational parse_rational(const std::string& text);
// Exact rational value of a finite double, using its shortest round-trip decimal form.
Rational rational_from_double(double x);
double to_double(const Rational& r);
std::string to_string(const Rational& r);

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Complex> {
    using real_type = double;
    static constexpr bool exact = false;
    static Complex from_int(long long n) { return Complex(static_cast<double>(n), 0.0); }
    static Complex from_real(double r) { return Complex(r, 0.0); }
    static bool is_zero(const Complex& z) { return z == Complex(0.0, 0.0); }
    static Complex conjugate(const Complex& z) { return std::conj(z); }
    static Complex to_complex(const Complex& z) { return z; }
    static double real_part(const Complex& z) { return z.real(); }
};

template <>
struct scalar_traits<GaussRational> {
    using real_type = Rational;
    static constexpr bool exact = true;
    static GaussRational from_int(long long n) { return GaussRational(Rational(n)); }
    static GaussRational from_real(const Rational& r) { return GaussRational(r); }
    static bool is_zero(const GaussRational& z) { return z.re == 0 && z.im == 0; }
    static GaussRational conjugate(const GaussRational& z) { return conj(z); }
    static Complex to_complex(const GaussRational& z) { return Complex(to_double(z.re), to_double(z.im)); }
    static Rational real_part(const GaussRational& z) { return z.re; }
};

template <>
struct scalar_traits<double> {
    using real_type = double;
    static constexpr bool exact = false;
    static double from_int(long long n) { return static_cast<double>(n); }
    static double from_real(double r) { return r; }
    static bool is_zero(double x) { return x == 0.0; }
    static double conjugate(double x) { return x; }
    static Complex to_complex(double x) { return Complex(x, 0.0); }
    static double real_part(double x) { return x; }
};

template <>
struct scalar_traits<Rational> {
    using real_type = Rational;
    static constexpr bool exact = true;
    static Rational from_int(long long n) { return Rational(n); }
    static Rational from_real(const Rational& r) { return r; }
    static bool is_zero(const Rational& x) { return x == 0; }
    static Rational conjugate(const Rational& x) { return x; }
    static Complex to_complex(const Rational& x) { return Complex(to_double(x), 0.0); }
    static Rational real_part(const Rational& x) { return x; }
};

// Real parameter value lifted into a scalar type (double -> Complex, Rational -> GaussRational).
inline Complex lift(double r) { return Complex(r, 0.0); }
inline GaussRational lift(const Rational& r) { return GaussRational(r); }

std::string format_scalar(const Complex& z);
std::string format_scalar(const GaussRational& z);

}  // namespace jm
