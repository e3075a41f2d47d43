#include <doctest.h>

#include <cmath>
#include <random>

#include "jm/errors.hpp"
#include "jm/fock.hpp"
#include "jm/jack.hpp"
#include "jm/profile.hpp"
#include "oracles.hpp"

using namespace jm;

namespace {

Specialization two_term() { return Specialization(std::map<int, Complex>{{1, Complex(1.0, 0.0)}, {2, Complex(0.5, 0.0)}}); }

double relative_gap(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("Schur point of the hook-product law is the Plancherel measure") {
    Params params = params_from_ebar_hbar(0.0, 1.0);
    for (int d = 1; d <= 9; ++d) {
        double total = 0.0;
        for (const Partition& lambda : partitions_of_size(d)) {
            double f = oracle::hook_dimension(lambda.parts());
            double p = jack_plancherel_prob(lambda, params);
            CHECK(p == doctest::Approx(f * f / oracle::factorial(d)).epsilon(1e-12));
            total += p;
        }
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("hook-product law sums to one at every degree") {
    for (const Params& params : {params_from_ebar_hbar(1.0, 2.0), params_from_ebar_hbar(-1.4, 0.51), params_from_ebar_hbar(1.5, 0.4)}) {
        for (int d = 0; d <= 10; ++d) {
            double total = 0.0;
            for (const Partition& lambda : partitions_of_size(d)) total += jack_plancherel_prob(lambda, params);
            CHECK(std::abs(total - 1.0) < 1e-12);
        }
    }
    ExactParams exact = exact_params_from_eps(Rational(5, 2), Rational(-1, 3));
    for (int d = 1; d <= 7; ++d) {
        Rational total = 0;
        for (const Partition& lambda : partitions_of_size(d)) total += jack_plancherel_prob(lambda, exact);
        CHECK(total == 1);
    }
}

TEST_CASE("power sums in the monomial basis") {
    std::vector<std::vector<double>> r = power_sum_to_monomial(2);
    CHECK(r == std::vector<std::vector<double>>{{1.0, 1.0}, {0.0, 2.0}});
    std::vector<std::vector<double>> r3 = power_sum_to_monomial(3);
    // p_{111} = m_3 + 3 m_{21} + 6 m_{111}
    CHECK(r3[0][2] == 1.0);
    CHECK(r3[1][2] == 3.0);
    CHECK(r3[2][2] == 6.0);
}

TEST_CASE("Jack eigenvalues match the transition moments of their label") {
    std::mt19937 gen(5);
    std::uniform_real_distribution<double> ebar(-1.5, 1.5), hbar(0.2, 2.0);
    for (int trial = 0; trial < 3; ++trial) {
        Params params = params_from_ebar_hbar(ebar(gen), hbar(gen));
        for (int d = 1; d <= 6; ++d) {
            JackBasis basis = jack_basis(d, params, 8);
            REQUIRE(basis.entries.size() == partitions_of_size(d).size());
            for (const JackEntry& entry : basis.entries) {
                std::vector<double> t = transition_moments(profile_of(entry.lambda, params), 8);
                for (int l = 0; l <= 8; ++l) CHECK(relative_gap(entry.eigenvalues[l], t[l]) < 1e-9);
            }
        }
    }
}

TEST_CASE("basis probabilities agree with the hook-product law for Plancherel data") {
    const Specialization pl = plancherel_specialization<Complex>();
    for (const Params& params : {params_from_ebar_hbar(1.0, 2.0), params_from_ebar_hbar(-0.6, 0.7)}) {
        double mean = 1.0 / params.hbar();
        for (int d = 0; d <= 5; ++d) {
            double pois = std::exp(-mean) * std::pow(mean, d) / oracle::factorial(d);
            for (const Partition& lambda : partitions_of_size(d)) {
                Complex p = jack_measure_prob(lambda, pl, pl, params);
                CHECK(std::abs(p.imag()) < 1e-12);
                CHECK(p.real() == doctest::Approx(pois * jack_plancherel_prob(lambda, params)).epsilon(1e-10));
            }
        }
    }
}

TEST_CASE("degree masses equal kernel norm ratios") {
    Specialization v = two_term();
    Params params = params_from_ebar_hbar(0.5, 0.9);
    double full = std::exp((std::norm(v.at(1)) + std::norm(v.at(2)) / 2.0) / params.hbar());
    for (int d = 0; d <= 6; ++d) {
        JackBasis basis = jack_basis(d, params, 2);
        double total = 0.0;
        for (const JackEntry& entry : basis.entries) {
            Complex p = jack_measure_prob(basis, entry.lambda, v, v);
            CHECK(p.real() > -1e-12);
            total += p.real();
        }
        FockVector<Complex> kd = coherent_state_degree(v, params.hbar(), d);
        CHECK(total == doctest::Approx(inner_product(kd, kd, params.hbar()).real() / full).epsilon(1e-10));
    }
}

TEST_CASE("degree limit and unknown labels") {
    Params params = params_from_ebar_hbar(0.0, 1.0);
    CHECK_THROWS_AS(jack_basis(11, params, 2), DomainError);
    JackBasis b = jack_basis(3, params, 2);
    CHECK_THROWS_AS(b.at(Partition{2, 2}), DomainError);
    CHECK(b.at(Partition{2, 1}).lambda == Partition{2, 1});
}
