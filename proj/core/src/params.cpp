#include "jm/params.hpp"

#include <cmath>

#include "jm/errors.hpp"

namespace jm {

Params params_from_ebar_hbar(double ebar, double hbar) {
    if (!(hbar > 0.0) || !std::isfinite(hbar) || !std::isfinite(ebar)) {
        throw DomainError("hbar must be a positive finite number");
    }
    double root = std::sqrt(ebar * ebar + 4.0 * hbar);
    // Pick the cancellation-free branch for each root of x^2 - ebar x - hbar.
    double eps1, eps2;
    if (ebar >= 0.0) {
        eps1 = 0.5 * (ebar + root);
        eps2 = -hbar / eps1;
    } else {
        eps2 = 0.5 * (ebar - root);
        eps1 = -hbar / eps2;
    }
    return Params{eps1, eps2};
}

Params params_from_alpha_hbar(double alpha, double hbar) {
    if (!(hbar > 0.0) || !(alpha > 0.0)) throw DomainError("alpha and hbar must be positive");
    return Params{std::sqrt(hbar * alpha), -std::sqrt(hbar / alpha)};
}

ExactParams exact_params_from_eps(const Rational& eps1, const Rational& eps2) {
    if (!(eps1 > 0) || !(eps2 < 0)) throw DomainError("exact parameters need eps2 < 0 < eps1");
    return ExactParams{eps1, eps2};
}

namespace {

bool exact_sqrt(const boost::multiprecision::mpz_int& n, boost::multiprecision::mpz_int& root) {
    if (n < 0) return false;
    root = boost::multiprecision::sqrt(n);
    return root * root == n;
}

}  // namespace

ExactParams exact_params_from_ebar_hbar(const Rational& ebar, const Rational& hbar) {
    if (!(hbar > 0)) throw DomainError("hbar must be positive");
    Rational disc = ebar * ebar + 4 * hbar;
    boost::multiprecision::mpz_int rn, rd;
    if (!exact_sqrt(numerator(disc), rn) || !exact_sqrt(denominator(disc), rd)) {
        throw DomainError("ebar^2 + 4 hbar is not a rational square; exact mode needs rational eps1, eps2");
    }
    Rational root(rn, rd);
    Rational eps1 = (ebar + root) / 2;
    return ExactParams{eps1, ebar - eps1};
}

Params to_numeric(const ExactParams& p) { return Params{to_double(p.eps1), to_double(p.eps2)}; }

ExactParams to_exact(const Params& p) {
    auto dyadic = [](double x) {
        int e = 0;
        double m = std::frexp(x, &e);
        // m * 2^53 is an integer for any double mantissa.
        auto mant = static_cast<long long>(std::ldexp(m, 53));
        Rational r(mant);
        int shift = e - 53;
        Rational two(2);
        Rational scale(1);
        for (int i = 0; i < std::abs(shift); ++i) scale *= two;
        return shift >= 0 ? Rational(r * scale) : Rational(r / scale);
    };
    return ExactParams{dyadic(p.eps1), dyadic(p.eps2)};
}

}  // namespace jm
