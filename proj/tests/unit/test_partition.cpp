#include <doctest.h>

#include "jm/errors.hpp"
#include "jm/params.hpp"
#include "jm/partition.hpp"
#include "jm/specialization.hpp"
#include "oracles.hpp"

using namespace jm;

TEST_CASE("partitions of each size match the recursive listing in order") {
    for (int d = 0; d <= 12; ++d) {
        std::vector<Partition> got = partitions_of_size(d);
        std::vector<std::vector<int>> want = oracle::partitions(d);
        REQUIRE(got.size() == want.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].parts() == want[i]);
    }
}

TEST_CASE("partition counts") {
    const std::int64_t small[] = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77};
    for (int d = 0; d <= 12; ++d) CHECK(partition_count(d) == small[d]);
    CHECK(partition_count(100) == 190569292);
    for (int d = 13; d <= 20; ++d) CHECK(partition_count(d) == static_cast<std::int64_t>(oracle::partitions(d).size()));
}

TEST_CASE("transpose is an involution and swaps rows with columns") {
    CHECK(transpose(Partition{4, 2, 1}) == Partition{3, 2, 1, 1});
    CHECK(transpose(Partition{}) == Partition{});
    for (int d = 0; d <= 9; ++d) {
        for (const Partition& p : partitions_of_size(d)) {
            CHECK(transpose(transpose(p)) == p);
            CHECK(transpose(p).size() == d);
        }
    }
}

TEST_CASE("dominance order") {
    CHECK(dominates(Partition{3}, Partition{2, 1}));
    CHECK(dominates(Partition{2, 1}, Partition{1, 1, 1}));
    CHECK_FALSE(dominates(Partition{3, 1, 1, 1}, Partition{2, 2, 2}));
    CHECK_FALSE(dominates(Partition{2, 2, 2}, Partition{3, 1, 1, 1}));
    CHECK(dominates(Partition{2, 2}, Partition{2, 2}));
}

TEST_CASE("addable and removable cells") {
    using Cells = std::vector<std::pair<int, int>>;
    Cells add = addable_cells(Partition{2, 1});
    Cells rem = removable_cells(Partition{2, 1});
    std::sort(add.begin(), add.end());
    std::sort(rem.begin(), rem.end());
    CHECK(add == Cells{{1, 3}, {2, 2}, {3, 1}});
    CHECK(rem == Cells{{1, 2}, {2, 1}});
    CHECK(addable_cells(Partition{}) == Cells{{1, 1}});
    CHECK(removable_cells(Partition{}).empty());
    for (int d = 0; d <= 8; ++d) {
        for (const Partition& p : partitions_of_size(d)) {
            CHECK(addable_cells(p).size() == removable_cells(p).size() + 1);
        }
    }
}

TEST_CASE("invalid partitions are rejected") {
    CHECK_THROWS_AS(Partition({1, 2}), DomainError);
    CHECK_THROWS_AS(Partition({2, 0}), DomainError);
    CHECK(partition_from_multiset({1, 3, 0, 2}) == Partition{3, 2, 1});
    CHECK(Partition{3, 1}.str() == "(3,1)");
}

TEST_CASE("parameter conversions") {
    Params p = params_from_ebar_hbar(-1.0, 0.5);
    CHECK(p.ebar() == doctest::Approx(-1.0));
    CHECK(p.hbar() == doctest::Approx(0.5));
    CHECK(p.eps1 > 0.0);
    CHECK(p.eps2 < 0.0);
    Params q = params_from_alpha_hbar(2.0, 1.0);
    CHECK(q.alpha() == doctest::Approx(2.0));
    CHECK(q.hbar() == doctest::Approx(1.0));
    ExactParams e = exact_params_from_ebar_hbar(Rational(1), Rational(2));
    CHECK(e.eps1 == Rational(2));
    CHECK(e.eps2 == Rational(-1));
    CHECK_THROWS_AS(exact_params_from_ebar_hbar(Rational(0), Rational(2)), DomainError);
    CHECK(content(2, 3, e) == Rational(-1 + 4));
}

TEST_CASE("specializations read from JSON") {
    ExactSpecialization v =
        exact_specialization_from_json(R"({"coeffs": {"1": ["1", "0"], "3": ["1/3", "-2"]}, "decay": null})");
    CHECK(v.support_bound() == 3);
    CHECK(v.at(3) == GaussRational(Rational(1, 3), Rational(-2)));
    CHECK(v.at(2) == GaussRational(0));
    CHECK(exact_specialization_from_json(specialization_to_json(v)) == v);
    CHECK_THROWS_AS(exact_specialization_from_json("{not json"), DomainError);
    CHECK_THROWS_AS(exact_specialization_from_json(R"({"coeffs": {"0": [1, 0]}})"), DomainError);
    CHECK(kernel_exponent(to_numeric(v)) == doctest::Approx(1.0 + (1.0 / 9 + 4.0) / 3));
    CHECK(plancherel_specialization<Complex>().at(1) == Complex(1.0, 0.0));
}
