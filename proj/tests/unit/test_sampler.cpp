#include <doctest.h>

#include <cmath>

#include "jm/errors.hpp"
#include "jm/jack.hpp"
#include "jm/sampler.hpp"
#include "oracles.hpp"

using namespace jm;

namespace {

const Specialization kPl = plancherel_specialization<Complex>();

Specialization two_term() { return Specialization(std::map<int, Complex>{{1, Complex(1.0, 0.0)}, {2, Complex(0.5, 0.0)}}); }

}  // namespace

TEST_CASE("empty specialization gives the point mass at the empty partition") {
    MeasureTable t = build_table(Specialization(), params_from_ebar_hbar(0.3, 1.0), 10);
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0].first == Partition{});
    CHECK(t.rows[0].second == 1.0);
    CHECK(t.tail_mass == 0.0);
    SampleResult s = sample(t, 7, 5);
    for (const Partition& p : s.draws) CHECK(p == Partition{});
}

TEST_CASE("Plancherel table is the Poisson mixture of the hook-product law") {
    Params params = params_from_ebar_hbar(0.0, 1.0);
    MeasureTable t = build_table(kPl, params, 9);
    double pois = std::exp(-1.0);
    for (int d = 0; d <= 9; ++d) {
        if (d > 0) pois /= d;
        for (const Partition& lambda : partitions_of_size(d)) {
            double f = oracle::hook_dimension(lambda.parts());
            CHECK(t.prob(lambda) == doctest::Approx(pois * f * f / oracle::factorial(d)).epsilon(1e-12));
        }
    }
    CHECK(t.total() + t.tail_mass == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(t.tail_mass == doctest::Approx(poisson_upper_tail(1.0, 9)).epsilon(1e-12));
    CHECK(t.prob(Partition{5, 5}) == 0.0);
}

TEST_CASE("rows come in canonical order") {
    MeasureTable t = build_table(kPl, params_from_ebar_hbar(-1.0, 0.5), 6);
    std::size_t i = 0;
    for (int d = 0; d <= 6; ++d) {
        for (const Partition& lambda : partitions_of_size(d)) CHECK(t.rows[i++].first == lambda);
    }
    CHECK(i == t.rows.size());
}

TEST_CASE("Jack-basis table mass grows with the cutoff") {
    Params params = params_from_ebar_hbar(0.5, 1.0);
    double previous = 0.0;
    for (int D = 0; D <= 7; ++D) {
        MeasureTable t = build_table(two_term(), params, D);
        CHECK(t.total() > previous);
        CHECK(t.total() <= 1.0 + 1e-12);
        CHECK(t.total() + t.tail_mass == doctest::Approx(1.0));
        previous = t.total();
    }
}

TEST_CASE("partition sums of T_2 reproduce hbar E|lambda|") {
    Params params = params_from_ebar_hbar(-1.0, 0.5);
    MeasureTable t = build_table(kPl, params, 30);
    PartitionSumMoment m = partition_sum_moment(t, {2}, kPl, params);
    CHECK(std::abs(m.value - 1.0) <= 1e-9 + m.tail_bound);
    CHECK(m.tail_bound < 1e-6);
    CHECK(m.tail_mass == t.tail_mass);
}

TEST_CASE("Philox4x32-10 known answers") {
    using B = Philox4x32::Block;
    CHECK(Philox4x32::generate({0, 0, 0, 0}, {0, 0}) == B{0x6627e8d5u, 0xe169c58du, 0xbc57ac4cu, 0x9b00dbd8u});
    CHECK(Philox4x32::generate({0xffffffffu, 0xffffffffu, 0xffffffffu, 0xffffffffu}, {0xffffffffu, 0xffffffffu}) ==
          B{0x408f276du, 0x41c83b0eu, 0xa20bc7c6u, 0x6d5451fdu});
    CHECK(Philox4x32::generate({0x243f6a88u, 0x85a308d3u, 0x13198a2eu, 0x03707344u}, {0xa4093822u, 0x299f31d0u}) ==
          B{0xd16cfe09u, 0x94fdccebu, 0x5001e420u, 0x24126ea1u});
    double u = Philox4x32::uniform(B{0xffffffffu, 0xffffffffu, 0u, 0u});
    CHECK(u < 1.0);
    CHECK(Philox4x32::uniform(B{0u, 0u, 5u, 5u}) == 0.0);
}

TEST_CASE("draws are reproducible and indexed by counter") {
    MeasureTable t = build_table(kPl, params_from_ebar_hbar(0.0, 1.0), 20);
    SampleResult a = sample(t, 99, 50);
    SampleResult b = sample(t, 99, 50);
    SampleResult prefix = sample(t, 99, 20);
    SampleResult other = sample(t, 100, 50);
    CHECK(a.draws == b.draws);
    CHECK(std::equal(prefix.draws.begin(), prefix.draws.end(), a.draws.begin()));
    CHECK(a.draws != other.draws);
}

TEST_CASE("sampler refuses tables with a heavy tail") {
    MeasureTable t = build_table(kPl, params_from_ebar_hbar(0.0, 1.0), 3);
    CHECK_THROWS_AS(sample(t, 1, 10), DomainError);
    CHECK_NOTHROW(sample(t, 1, 10, 0.5));
}

TEST_CASE("k-statistics of a small sample") {
    KStatistics k = k_statistics({1.0, 2.0, 3.0, 4.0});
    CHECK(k.n == 4);
    CHECK(k.k[0] == doctest::Approx(2.5));
    CHECK(k.k[1] == doctest::Approx(5.0 / 3.0));
    CHECK(k.k[2] == doctest::Approx(0.0).scale(1.0));
    CHECK(k.k[3] == doctest::Approx(-10.0 / 3.0));
}

TEST_CASE("sampled statistics match their exact cumulants") {
    Params params = params_from_ebar_hbar(-1.0, 0.25);
    MeasureTable t = build_table(kPl, params, 35);
    SampleResult s = sample(t, 2024, 20000);
    std::vector<double> sizes;
    for (const Partition& p : s.draws) sizes.push_back(static_cast<double>(p.size()));
    KStatistics k = k_statistics(sizes);
    CHECK(std::abs(k.k[0] - 4.0) < 4.0 * k.stderr_k1());
    CHECK(std::abs(k.k[1] - 4.0) < 4.0 * k.stderr_k2());

    Statistic t2{StatisticKind::Transition, 2};
    Statistic o2{StatisticKind::Linear, 2};
    std::vector<double> o2_values;
    for (const Partition& p : s.draws) {
        CHECK(statistic_value(t2, p, params) == doctest::Approx(params.hbar() * p.size()).scale(1.0));
        o2_values.push_back(statistic_value(o2, p, params));
    }
    KStatistics ko = k_statistics(o2_values);
    CHECK(std::abs(ko.k[1] / params.hbar() - 4.0) < 4.0 * ko.stderr_k2() / params.hbar());
    CHECK(empirical_cumulants(s.draws, o2, 2, params) == doctest::Approx(ko.k[1]));
    CHECK_THROWS_AS(empirical_cumulants(s.draws, o2, 5, params), DomainError);
}
