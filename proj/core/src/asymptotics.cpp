#include "jm/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <Eigen/Dense>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "jm/errors.hpp"
#include "jm/ribbon.hpp"

namespace jm {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

using Laurent = std::map<int, Complex>;

Laurent laurent_mul(const Laurent& a, const Laurent& b) {
    Laurent out;
    for (const auto& [i, x] : a) {
        for (const auto& [j, y] : b) out[i + j] += x * y;
    }
    return out;
}

Laurent symbol_laurent(const Specialization& v) {
    Laurent out;
    for (const auto& [k, c] : v.coeffs()) {
        out[-k] += c;
        out[k] += std::conj(c);
    }
    return out;
}

int default_nodes(const Specialization& v, int P) {
    return 8 * (v.support_bound() * std::max(P, 1) + 2);
}

std::vector<Complex> fourier_coefficients(const std::vector<double>& samples, int kmax) {
    const int N = static_cast<int>(samples.size());
    std::vector<Complex> out(static_cast<std::size_t>(2 * kmax + 1));
    for (int k = -kmax; k <= kmax; ++k) {
        Complex acc = 0.0;
        for (int n = 0; n < N; ++n) {
            double x = kTwoPi * n / N;
            acc += samples[n] * std::polar(1.0, k * x);
        }
        out[static_cast<std::size_t>(k + kmax)] = acc / static_cast<double>(N);
    }
    return out;
}

Specialization perturbed(const Specialization& v, int k, Complex delta) {
    std::map<int, Complex> coeffs = v.coeffs();
    coeffs[k] += delta;
    return Specialization(coeffs);
}

std::vector<double> real_linear_statistics(const Specialization& v, double ebar, int P) {
    std::vector<Complex> o = limit_linear_statistics(v, ebar, P);
    std::vector<double> out(o.size());
    for (std::size_t i = 0; i < o.size(); ++i) out[i] = o[i].real();
    return out;
}

double chebyshev_t(int k, double x) {
    double prev = 1.0;
    if (k == 0) return prev;
    double cur = x;
    for (int i = 1; i < k; ++i) {
        double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

Rational catalan(int m) {
    Rational c = 1;
    for (int i = 0; i < m; ++i) c = c * Rational(2 * (2 * i + 1)) / Rational(i + 2);
    return c;
}

}  // namespace

double symbol_eval(const Specialization& v, double x) {
    double total = 0.0;
    for (const auto& [k, c] : v.coeffs()) total += 2.0 * (c * std::polar(1.0, -k * x)).real();
    return total;
}

std::vector<double> convex_profile_moments(const Specialization& v, int P) {
    if (P < 0) throw DomainError("moment order must be nonnegative");
    Laurent base = symbol_laurent(v);
    Laurent power{{0, Complex(1.0, 0.0)}};
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(P) + 1);
    for (int p = 0; p <= P; ++p) {
        auto it = power.find(0);
        out.push_back(it == power.end() ? 0.0 : it->second.real());
        if (p < P) power = laurent_mul(power, base);
    }
    return out;
}

std::vector<double> convex_profile_moments_quadrature(const Specialization& v, int P, int N) {
    if (P < 0) throw DomainError("moment order must be nonnegative");
    if (N <= 0) N = default_nodes(v, P);
    std::vector<double> out(static_cast<std::size_t>(P) + 1, 0.0);
    for (int n = 0; n < N; ++n) {
        double c = symbol_eval(v, kTwoPi * n / N);
        double term = 1.0;
        for (int p = 0; p <= P; ++p) {
            out[p] += term;
            term *= c;
        }
    }
    for (double& o : out) o /= N;
    return out;
}

double convex_profile_value(const Specialization& v, double c) {
    // Outside the range of the symbol the integrand is c - v(x) of one sign, and v has mean zero.
    double range = 0.0;
    for (const auto& [k, value] : v.coeffs()) range += 2.0 * std::abs(value);
    if (std::abs(c) >= range) return std::abs(c);
    auto f = [&](double x) { return std::abs(c - symbol_eval(v, x)); };
    double value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, 0.0, kTwoPi, 15, 1e-12);
    return value / kTwoPi;
}

double vkls_profile(double c) {
    if (std::abs(c) >= 2.0) return std::abs(c);
    return (2.0 / std::numbers::pi) * (c * std::asin(c / 2.0) + std::sqrt(4.0 - c * c));
}

TruncatedLax truncated_lax(const Specialization& v, double ebar, int M) {
    if (M <= 0) throw DomainError("Lax truncation size must be positive");
    TruncatedLax lax;
    lax.M = M;
    lax.ebar = ebar;
    lax.entries.assign(static_cast<std::size_t>(M) * M, Complex(0.0, 0.0));
    for (int j = 0; j < M; ++j) {
        for (int jp = 0; jp < M; ++jp) {
            Complex& e = lax.entries[static_cast<std::size_t>(j) * M + jp];
            if (j == jp) e = ebar * j;
            else if (jp > j) e = std::conj(v.at(jp - j));
            else e = v.at(j - jp);
        }
    }
    return lax;
}

SpectralData spectral_data(const TruncatedLax& lax) {
    Eigen::MatrixXcd m(lax.M, lax.M);
    for (int j = 0; j < lax.M; ++j) {
        for (int jp = 0; jp < lax.M; ++jp) m(j, jp) = lax.at(j, jp);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
    if (solver.info() != Eigen::Success) throw ConsistencyError("Lax eigensolver did not converge");
    SpectralData out;
    for (int k = 0; k < lax.M; ++k) {
        out.eigenvalues.push_back(solver.eigenvalues()(k));
        out.weights.push_back(std::norm(solver.eigenvectors()(0, k)));
    }
    return out;
}

Complex resolvent_00(const SpectralData& spectrum, Complex u) {
    Complex total = 0.0;
    for (std::size_t k = 0; k < spectrum.eigenvalues.size(); ++k) {
        Complex gap = u - spectrum.eigenvalues[k];
        if (std::abs(gap) < 1e-8) throw DomainError("resolvent evaluated at an eigenvalue");
        total += spectrum.weights[k] / gap;
    }
    return total;
}

Complex resolvent_00(const TruncatedLax& lax, Complex u) { return resolvent_00(spectral_data(lax), u); }

std::vector<Complex> lax_moments(const TruncatedLax& lax, int L) {
    if (L < 0) throw DomainError("moment order must be nonnegative");
    std::vector<Complex> psi(static_cast<std::size_t>(lax.M), Complex(0.0, 0.0));
    psi[0] = 1.0;
    std::vector<Complex> out{Complex(1.0, 0.0)};
    for (int l = 1; l <= L; ++l) {
        std::vector<Complex> next(psi.size(), Complex(0.0, 0.0));
        for (int j = 0; j < lax.M; ++j) {
            for (int jp = 0; jp < lax.M; ++jp) next[j] += lax.at(j, jp) * psi[jp];
        }
        psi = std::move(next);
        out.push_back(psi[0]);
    }
    return out;
}

InterlacingProfile<double> DispersiveProfileData::as_profile() const {
    InterlacingProfile<double> profile;
    profile.minima.assign(poles.rbegin(), poles.rend());
    profile.maxima.assign(zeros.rbegin(), zeros.rend());
    return profile;
}

DispersiveProfileData dispersive_profile(const Specialization& v, double ebar, int M, double weight_floor) {
    if (!(ebar < 0.0)) throw DomainError("dispersive profile requires ebar < 0");
    SpectralData spectrum = spectral_data(truncated_lax(v, ebar, M));
    DispersiveProfileData out;
    out.M = M;
    out.ebar = ebar;
    out.weight_floor = weight_floor;
    SpectralData kept;
    for (std::size_t k = spectrum.eigenvalues.size(); k-- > 0;) {
        if (spectrum.weights[k] > weight_floor) {
            out.poles.push_back(spectrum.eigenvalues[k]);
            kept.eigenvalues.push_back(spectrum.eigenvalues[k]);
            kept.weights.push_back(spectrum.weights[k]);
        } else {
            out.dropped_weight += spectrum.weights[k];
        }
    }
    auto r = [&](double u) {
        double total = 0.0;
        for (std::size_t k = 0; k < kept.eigenvalues.size(); ++k) total += kept.weights[k] / (u - kept.eigenvalues[k]);
        return total;
    };
    for (std::size_t i = 0; i + 1 < out.poles.size(); ++i) {
        double hi = out.poles[i];
        double lo = out.poles[i + 1];
        double margin = 1e-12 * std::max(1.0, hi - lo);
        double a = lo + margin;
        double b = hi - margin;
        double fa = r(a);
        double fb = r(b);
        if (!(fa > 0.0 && fb < 0.0)) {
            throw TruncationError("resolvent zeros fail to interlace with its poles");
        }
        boost::uintmax_t iterations = 200;
        auto bracket = boost::math::tools::toms748_solve(r, a, b, fa, fb,
                                                         boost::math::tools::eps_tolerance<double>(50), iterations);
        double zero = 0.5 * (bracket.first + bracket.second);
        if (!(zero > lo && zero < hi)) throw TruncationError("resolvent zeros fail to interlace with its poles");
        out.zeros.push_back(zero);
        out.gap_ratios.push_back((hi - zero) / std::abs(ebar));
    }
    return out;
}

std::vector<Complex> limit_moments_paths(const Specialization& v, double ebar, int L) {
    if (L < 0) throw DomainError("moment order must be nonnegative");
    std::vector<Complex> out{Complex(1.0, 0.0)};
    for (int l = 1; l <= L; ++l) {
        BiPolynomial<Complex> poly = single_site_unpaired<Complex>(l, v, v);
        out.push_back(poly.evaluate(1.0, ebar));
    }
    return out;
}

std::vector<Complex> limit_linear_statistics(const Specialization& v, double ebar, int P) {
    return kmk_O_from_T(limit_moments_paths(v, ebar, P));
}

double covariance_welding(const Specialization& v, double ebar, int p1, int p2, double delta) {
    if (p1 < 0 || p2 < 0) throw DomainError("statistic order must be nonnegative");
    const int P = std::max(p1, p2);
    const int kmax = v.support_bound() * P;
    Complex total = 0.0;
    for (int k = 1; k <= kmax; ++k) {
        std::vector<double> xp = real_linear_statistics(perturbed(v, k, Complex(delta, 0.0)), ebar, P);
        std::vector<double> xm = real_linear_statistics(perturbed(v, k, Complex(-delta, 0.0)), ebar, P);
        std::vector<double> yp = real_linear_statistics(perturbed(v, k, Complex(0.0, delta)), ebar, P);
        std::vector<double> ym = real_linear_statistics(perturbed(v, k, Complex(0.0, -delta)), ebar, P);
        auto dx = [&](int p) { return (xp[p] - xm[p]) / (2.0 * delta); };
        auto dy = [&](int p) { return (yp[p] - ym[p]) / (2.0 * delta); };
        Complex dbar1 = 0.5 * Complex(dx(p1), dy(p1));
        Complex d2 = 0.5 * Complex(dx(p2), -dy(p2));
        total += static_cast<double>(k) * dbar1 * d2;
    }
    return total.real();
}

double covariance_paths(const Specialization& v, double ebar, int p1, int p2) {
    BiPolynomial<Complex> poly = decorated_cumulants_poly<Complex>({p1, p2}, v, v).hbar_slice(1);
    return poly.evaluate(1.0, ebar).real();
}

BiPolynomial<GaussRational> covariance_paths_poly(const ExactSpecialization& v, int p1, int p2) {
    return decorated_cumulants_poly<GaussRational>({p1, p2}, v, v).hbar_slice(1);
}

double test_function_covariance(const Specialization& v, const std::function<double(double)>& q1,
                                const std::function<double(double)>& q2, int N) {
    if (N < 4) throw DomainError("quadrature needs at least four nodes");
    std::vector<double> f1(static_cast<std::size_t>(N));
    std::vector<double> f2(static_cast<std::size_t>(N));
    for (int n = 0; n < N; ++n) {
        double c = symbol_eval(v, kTwoPi * n / N);
        f1[n] = q1(c);
        f2[n] = q2(c);
    }
    const int kmax = N / 2 - 1;
    std::vector<Complex> c1 = fourier_coefficients(f1, kmax);
    std::vector<Complex> c2 = fourier_coefficients(f2, kmax);
    Complex total = 0.0;
    for (int k = 1; k <= kmax; ++k) {
        total += static_cast<double>(k) * c1[static_cast<std::size_t>(k + kmax)] * c2[static_cast<std::size_t>(-k + kmax)];
    }
    return total.real();
}

double covariance_bd(const Specialization& v, int p1, int p2) {
    if (p1 < 1 || p2 < 1) throw DomainError("statistic order must be positive");
    auto q = [](int p) { return [p](double c) { return p * std::pow(c, p - 1); }; };
    return test_function_covariance(v, q(p1), q(p2), default_nodes(v, p1 + p2));
}

double chebyshev_covariance(int k1, int k2) {
    if (k1 < 1 || k2 < 1) throw DomainError("Chebyshev index must be positive");
    auto q = [](int k) { return [k](double c) { return -(2.0 / k) * chebyshev_t(k, c / 2.0); }; };
    Specialization v = plancherel_specialization<Complex>();
    return test_function_covariance(v, q(k1), q(k2), default_nodes(v, k1 + k2));
}

double chebyshev_variance(int k) { return chebyshev_covariance(k, k); }

std::vector<double> mean_shift_moments(const Specialization& v, int P, double delta) {
    std::vector<double> plus = real_linear_statistics(v, delta, P);
    std::vector<double> minus = real_linear_statistics(v, -delta, P);
    std::vector<double> out(plus.size());
    for (std::size_t p = 0; p < plus.size(); ++p) out[p] = (plus[p] - minus[p]) / (2.0 * delta);
    return out;
}

std::vector<Rational> mean_shift_moments_exact(const ExactSpecialization& v, int P) {
    if (P < 0) throw DomainError("moment order must be nonnegative");
    std::vector<Rational> out{Rational(0)};
    for (int p = 1; p <= P; ++p) {
        BiPolynomial<GaussRational> poly = decorated_cumulants_poly<GaussRational>({p}, v, v);
        out.push_back(poly.coeff(0, 1).re);
    }
    return out;
}

std::vector<double> plancherel_mean_shift_series(int P) {
    if (P < 0) throw DomainError("moment order must be nonnegative");
    std::vector<double> out(static_cast<std::size_t>(P) + 1, 0.0);
    for (int p = 3; p <= P; p += 2) {
        Rational acc = 0;
        const int n = (p - 3) / 2;
        Rational four_power = 1;
        for (int j = 0; j <= n; ++j) {
            acc += catalan(n - j) * four_power;
            four_power *= 4;
        }
        out[p] = to_double(acc * p);
    }
    return out;
}

double plancherel_mean_shift(double c) {
    if (std::abs(c) > 2.0) return 0.0;
    return -std::asin(c / 2.0) / kTwoPi;
}

std::vector<double> plancherel_mean_shift_closed_moments(int P) {
    if (P < 0) throw DomainError("moment order must be nonnegative");
    std::vector<double> out(static_cast<std::size_t>(P) + 1, 0.0);
    for (int p = 2; p <= P; ++p) {
        auto f = [p](double c) { return std::pow(c, p - 2) * plancherel_mean_shift(c); };
        double integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, -2.0, 2.0, 15, 1e-13);
        out[p] = 0.5 * p * (p - 1) * integral;
    }
    return out;
}

ReflectedData regime3_reflection(const Specialization& v, double ebar, int L, int P) {
    if (!(ebar > 0.0)) throw DomainError("reflection is used for ebar > 0");
    Specialization w = v.negated();
    ReflectedData out;
    std::vector<Complex> t = limit_moments_paths(w, -ebar, L);
    for (int l = 0; l <= L; ++l) out.moments.push_back((l % 2 == 0 ? 1.0 : -1.0) * t[l]);
    for (int p1 = 1; p1 <= P; ++p1) {
        for (int p2 = p1; p2 <= P; ++p2) {
            double sign = ((p1 + p2) % 2 == 0) ? 1.0 : -1.0;
            double value = sign * covariance_paths(w, -ebar, p1, p2);
            out.covariance[{p1, p2}] = value;
            out.covariance[{p2, p1}] = value;
        }
    }
    return out;
}

Complex g_up_weight(const std::vector<double>& contents, const std::vector<Complex>& u, const Params& params) {
    const double ebar = params.ebar();
    Complex total = 1.0;
    for (const Complex& ua : u) {
        for (double c : contents) {
            Complex x = ua - c;
            total *= x * (x - ebar) / ((x - params.eps2) * (x - params.eps1));
        }
    }
    return total;
}

std::vector<double> box_contents(const Partition& lambda, const Params& params) {
    std::vector<double> out;
    for (int i = 1; i <= lambda.length(); ++i) {
        for (int j = 1; j <= lambda.part(i); ++j) out.push_back(content(i, j, params));
    }
    return out;
}

Complex transition_stieltjes_product(const Partition& lambda, const std::vector<Complex>& u, const Params& params) {
    InterlacingProfile<double> profile = profile_of(lambda, params);
    Complex total = 1.0;
    for (const Complex& ua : u) {
        for (double y : profile.maxima) total *= ua - y;
        for (double x : profile.minima) total /= ua - x;
    }
    return total;
}

}  // namespace jm
