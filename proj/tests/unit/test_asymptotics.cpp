#include <doctest.h>

#include <cmath>

#include "jm/asymptotics.hpp"
#include "jm/errors.hpp"
#include "oracles.hpp"

using namespace jm;

namespace {

const Specialization kPl = plancherel_specialization<Complex>();

Specialization two_term() { return Specialization(std::map<int, Complex>{{1, Complex(1.0, 0.0)}, {2, Complex(0.5, 0.0)}}); }

Specialization skewed() {
    return Specialization(std::map<int, Complex>{{1, Complex(1.0, 0.5)}, {3, Complex(1.0 / 3.0, 0.0)}});
}

}  // namespace

TEST_CASE("convex profile moments of the Plancherel symbol are central binomials") {
    std::vector<double> exact = convex_profile_moments(kPl, 10);
    std::vector<double> quad = convex_profile_moments_quadrature(kPl, 10);
    for (int p = 0; p <= 10; ++p) {
        double want = p % 2 ? 0.0 : oracle::central_binomial(p / 2);
        CHECK(exact[p] == doctest::Approx(want).scale(1.0));
        CHECK(quad[p] == doctest::Approx(want).epsilon(1e-12).scale(1.0));
    }
    std::vector<double> a = convex_profile_moments(skewed(), 7);
    std::vector<double> b = convex_profile_moments_quadrature(skewed(), 7);
    for (int p = 0; p <= 7; ++p) CHECK(a[p] == doctest::Approx(b[p]).epsilon(1e-12).scale(1.0));
}

TEST_CASE("convex profile of the Plancherel symbol is the arcsine-law shape") {
    for (double c : {-3.0, -1.9, -1.0, 0.0, 0.4, 1.5, 2.0, 2.7}) {
        CHECK(convex_profile_value(kPl, c) == doctest::Approx(vkls_profile(c)).epsilon(1e-9));
    }
    CHECK(vkls_profile(0.0) == doctest::Approx(4.0 / M_PI));
    CHECK(vkls_profile(-5.0) == 5.0);
}

TEST_CASE("Lax matrix structure") {
    TruncatedLax lax = truncated_lax(skewed(), -0.5, 6);
    CHECK(lax.at(2, 2) == Complex(-1.0, 0.0));
    CHECK(lax.at(3, 0) == skewed().at(3));
    CHECK(lax.at(0, 3) == std::conj(skewed().at(3)));
    CHECK(lax.at(0, 2) == Complex(0.0, 0.0));
    CHECK_THROWS_AS(truncated_lax(kPl, 0.0, 0), DomainError);
}

TEST_CASE("semicircle resolvent at ebar = 0") {
    TruncatedLax lax = truncated_lax(kPl, 0.0, 400);
    for (Complex u : {Complex(0.0, 3.0), Complex(1.0, 2.0), Complex(3.5, 0.5)}) {
        Complex g = resolvent_00(lax, u);
        CHECK(std::abs(g * g - u * g + 1.0) < 1e-10);
        CHECK(std::abs(g - 1.0 / u) < 0.5 * std::abs(1.0 / u));
    }
    SpectralData s = spectral_data(lax);
    double total = 0.0;
    for (double w : s.weights) total += w;
    CHECK(total == doctest::Approx(1.0));
    CHECK(s.eigenvalues.front() > -2.0 - 1e-9);
    CHECK(s.eigenvalues.back() < 2.0 + 1e-9);
}

TEST_CASE("Lax moments agree with the single-site path sums") {
    for (double ebar : {0.0, -0.7, 1.2}) {
        for (const Specialization& v : {kPl, two_term(), skewed()}) {
            std::vector<Complex> lax = lax_moments(truncated_lax(v, ebar, 40), 8);
            std::vector<Complex> paths = limit_moments_paths(v, ebar, 8);
            for (int l = 0; l <= 8; ++l) CHECK(std::abs(lax[l] - paths[l]) < 1e-9 * (1.0 + std::abs(paths[l])));
        }
    }
    std::vector<Complex> semicircle = limit_moments_paths(kPl, 0.0, 10);
    for (int l = 0; l <= 10; ++l) CHECK(semicircle[l].real() == doctest::Approx(oracle::semicircle_moment(l)).scale(1.0));
}

TEST_CASE("covariance by welding, path sums and the Fourier formula") {
    const double want[4][4] = {{0, 0, 0, 0}, {0, 4, 0, 24}, {0, 0, 18, 0}, {0, 24, 0, 192}};
    for (int p1 = 2; p1 <= 4; ++p1) {
        for (int p2 = p1; p2 <= 4; ++p2) {
            double paths = covariance_paths(kPl, 0.0, p1, p2);
            CHECK(paths == doctest::Approx(want[p1 - 1][p2 - 1]).scale(1.0));
            CHECK(covariance_welding(kPl, 0.0, p1, p2) == doctest::Approx(paths).epsilon(1e-5).scale(1.0));
            CHECK(covariance_bd(kPl, p1, p2) == doctest::Approx(paths).epsilon(1e-9).scale(1.0));
        }
    }
    for (double ebar : {-0.5, 0.8}) {
        double paths = covariance_paths(two_term(), ebar, 2, 3);
        CHECK(covariance_welding(two_term(), ebar, 2, 3) == doctest::Approx(paths).epsilon(1e-5).scale(1.0));
    }
    BiPolynomial<GaussRational> exact = covariance_paths_poly(plancherel_specialization<GaussRational>(), 2, 2);
    CHECK(exact.coeff(1, 0) == GaussRational(4));
}

TEST_CASE("Chebyshev statistics decorrelate") {
    for (int k1 = 1; k1 <= 5; ++k1) {
        for (int k2 = 1; k2 <= 5; ++k2) {
            double want = k1 == k2 ? 1.0 / k1 : 0.0;
            CHECK(chebyshev_covariance(k1, k2) == doctest::Approx(want).scale(1.0));
        }
        CHECK(chebyshev_variance(k1) == doctest::Approx(1.0 / k1));
    }
    CHECK_THROWS_AS(chebyshev_covariance(0, 1), DomainError);
}

TEST_CASE("first-order shift in ebar by three routes") {
    std::vector<double> fd = mean_shift_moments(kPl, 7);
    std::vector<Rational> exact = mean_shift_moments_exact(plancherel_specialization<GaussRational>(), 7);
    std::vector<double> series = plancherel_mean_shift_series(7);
    for (int p = 0; p <= 7; ++p) {
        CHECK(fd[p] == doctest::Approx(static_cast<double>(exact[p])).epsilon(1e-6).scale(1.0));
        CHECK(series[p] == doctest::Approx(static_cast<double>(exact[p])).scale(1.0));
    }
    CHECK(exact[3] == 3);
    CHECK(exact[5] == 25);
    CHECK(plancherel_mean_shift(3.0) == 0.0);
    CHECK(plancherel_mean_shift(2.0) == doctest::Approx(-0.25));
}

TEST_CASE("dispersive profile of the Plancherel symbol") {
    DispersiveProfileData d = dispersive_profile(kPl, -1.0, 60);
    REQUIRE(d.poles.size() == d.zeros.size() + 1);
    for (std::size_t i = 0; i < d.zeros.size(); ++i) {
        CHECK(d.poles[i] > d.zeros[i]);
        CHECK(d.zeros[i] > d.poles[i + 1]);
        CHECK(d.gap_ratios[i] == doctest::Approx(1.0).epsilon(1e-6));
    }
    check_interlacing(d.as_profile());
    CHECK_THROWS_AS(dispersive_profile(kPl, 0.5, 60), DomainError);
}

TEST_CASE("positive ebar is reached by reflection") {
    const double ebar = 0.7;
    ReflectedData r = regime3_reflection(skewed(), ebar, 6, 3);
    std::vector<Complex> direct = limit_moments_paths(skewed(), ebar, 6);
    for (int l = 0; l <= 6; ++l) CHECK(std::abs(r.moments[l] - direct[l]) < 1e-10 * (1.0 + std::abs(direct[l])));
    for (int p1 = 1; p1 <= 3; ++p1) {
        for (int p2 = 1; p2 <= 3; ++p2) {
            CHECK(r.covariance.at({p1, p2}) ==
                  doctest::Approx(covariance_paths(skewed(), ebar, p1, p2)).epsilon(1e-10).scale(1.0));
        }
    }
    CHECK_THROWS_AS(regime3_reflection(kPl, -0.1, 2, 2), DomainError);
}

TEST_CASE("box-content weights relate the transition generating functions") {
    Params params = params_from_ebar_hbar(-0.4, 0.9);
    const std::vector<Complex> u{Complex(0.3, 1.7), Complex(-2.2, 0.6)};
    Complex empty = transition_stieltjes_product(Partition{}, u, params);
    for (const Partition& lambda : {Partition{1}, Partition{2, 1}, Partition{3, 1, 1}, Partition{2, 2}}) {
        Complex ratio = transition_stieltjes_product(lambda, u, params) / empty;
        Complex g = g_up_weight(box_contents(lambda, params), u, params);
        CHECK(std::abs(ratio / g - 1.0) < 1e-12);
    }
    CHECK(box_contents(Partition{2, 1}, params).size() == 3);
}
