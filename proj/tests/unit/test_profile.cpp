#include <doctest.h>

#include <random>

#include "jm/errors.hpp"
#include "jm/profile.hpp"
#include "oracles.hpp"

using namespace jm;

namespace {

// Transition moments from the residues of Π(u - y) / Π(u - x) at its simple poles x_i.
std::vector<double> residue_moments(const InterlacingProfile<double>& p, int L) {
    std::vector<double> t(static_cast<std::size_t>(L) + 1, 0.0);
    for (std::size_t i = 0; i < p.minima.size(); ++i) {
        double x = p.minima[i];
        double res = 1.0;
        for (double y : p.maxima) res *= x - y;
        for (std::size_t k = 0; k < p.minima.size(); ++k) {
            if (k != i) res /= x - p.minima[k];
        }
        double power = 1.0;
        for (int l = 0; l <= L; ++l) {
            t[l] += res * power;
            power *= x;
        }
    }
    return t;
}

const ExactParams kExactPoints[] = {
    exact_params_from_eps(Rational(1), Rational(-1)),
    exact_params_from_eps(Rational(2), Rational(-1)),
    exact_params_from_eps(Rational(1, 2), Rational(-3)),
    exact_params_from_eps(Rational(3, 2), Rational(-2, 3)),
};

}  // namespace

TEST_CASE("profile of the empty partition") {
    InterlacingProfile<double> p = profile_of(Partition{}, params_from_ebar_hbar(0.3, 1.0));
    CHECK(p.minima == std::vector<double>{0.0});
    CHECK(p.maxima.empty());
    CHECK(profile_value(p, 2.5) == doctest::Approx(2.5));
    CHECK(profile_value(p, -1.0) == doctest::Approx(1.0));
}

TEST_CASE("profile of (1) at ebar = 0") {
    Params params = params_from_ebar_hbar(0.0, 1.0);
    InterlacingProfile<double> p = profile_of(Partition{1}, params);
    CHECK(p.minima == std::vector<double>{-1.0, 1.0});
    CHECK(p.maxima == std::vector<double>{0.0});
    CHECK(profile_value(p, 0.0) == doctest::Approx(2.0));
}

TEST_CASE("area under the profile is 2 hbar |lambda|") {
    std::mt19937 gen(11);
    std::uniform_real_distribution<double> ebar(-2.0, 2.0), hbar(0.1, 3.0);
    for (int trial = 0; trial < 5; ++trial) {
        Params params = params_from_ebar_hbar(ebar(gen), hbar(gen));
        for (int d = 0; d <= 7; ++d) {
            for (const Partition& lambda : partitions_of_size(d)) {
                CHECK(profile_area(lambda, params) == doctest::Approx(2.0 * params.hbar() * d));
            }
        }
    }
    for (const ExactParams& params : kExactPoints) {
        for (const Partition& lambda : partitions_of_size(6)) {
            CHECK(profile_area(lambda, params) == 2 * params.hbar() * 6);
        }
    }
}

TEST_CASE("transition moments agree with the residue expansion") {
    Params params = params_from_ebar_hbar(-0.7, 0.8);
    for (int d = 0; d <= 6; ++d) {
        for (const Partition& lambda : partitions_of_size(d)) {
            InterlacingProfile<double> p = profile_of(lambda, params);
            std::vector<double> got = transition_moments(p, 8);
            std::vector<double> want = residue_moments(p, 8);
            for (int l = 0; l <= 8; ++l) CHECK(got[l] == doctest::Approx(want[l]).epsilon(1e-9).scale(1.0));
        }
    }
}

TEST_CASE("T_2 equals hbar |lambda| and T_0 = 1, T_1 = 0") {
    for (const ExactParams& params : kExactPoints) {
        for (int d = 0; d <= 7; ++d) {
            for (const Partition& lambda : partitions_of_size(d)) {
                std::vector<Rational> t = transition_moments(profile_of(lambda, params), 2);
                CHECK(t[0] == 1);
                CHECK(t[1] == 0);
                CHECK(t[2] == params.hbar() * d);
            }
        }
    }
}

TEST_CASE("content product route agrees exactly with the profile route") {
    for (const ExactParams& params : kExactPoints) {
        for (int d = 0; d <= 6; ++d) {
            for (const Partition& lambda : partitions_of_size(d)) {
                CHECK(transition_moments(profile_of(lambda, params), 9) ==
                      transition_moments_content_product(lambda, params, 9));
            }
        }
    }
}

TEST_CASE("moment transforms invert each other") {
    Params params = params_from_ebar_hbar(0.4, 1.3);
    for (const Partition& lambda : partitions_of_size(5)) {
        InterlacingProfile<double> p = profile_of(lambda, params);
        std::vector<double> o = linear_statistics(p, 7);
        std::vector<double> t = transition_moments(p, 7);
        std::vector<double> o_back = kmk_O_from_T(t);
        std::vector<double> t_back = kmk_T_from_O(o);
        for (int k = 0; k <= 7; ++k) {
            CHECK(o_back[k] == doctest::Approx(o[k]).epsilon(1e-9).scale(1.0));
            CHECK(t_back[k] == doctest::Approx(t[k]).epsilon(1e-9).scale(1.0));
        }
    }
}

TEST_CASE("O_p as a polynomial in T") {
    Params params = params_from_ebar_hbar(0.9, 0.6);
    for (int p = 1; p <= 6; ++p) {
        KmkPolynomial poly = kmk_polynomial(p);
        for (const Partition& lambda : partitions_of_size(4)) {
            InterlacingProfile<double> prof = profile_of(lambda, params);
            std::vector<double> t = residue_moments(prof, p);
            double value = 0.0;
            for (const auto& [key, c] : poly) {
                double term = static_cast<double>(c);
                for (int idx : key) term *= t[idx];
                value += term;
            }
            CHECK(value == doctest::Approx(linear_statistics(prof, p)[p]).epsilon(1e-9).scale(1.0));
        }
    }
}

TEST_CASE("broken interlacing is reported") {
    InterlacingProfile<double> bad{{0.0, 1.0}, {2.0}};
    CHECK_THROWS_AS(check_interlacing(bad), ConsistencyError);
    CHECK_THROWS_AS(transition_moments(profile_of(Partition{}, params_from_ebar_hbar(0.0, 1.0)), -1), DomainError);
}
