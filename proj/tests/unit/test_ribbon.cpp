#include <doctest.h>

#include "jm/errors.hpp"
#include "jm/ribbon.hpp"
#include "oracles.hpp"

using namespace jm;

namespace {

const ExactSpecialization kPl = plancherel_specialization<GaussRational>();

ExactSpecialization two_term() {
    return ExactSpecialization(std::map<int, GaussRational>{{1, GaussRational(1)}, {2, GaussRational(Rational(1, 2))}});
}

ExactSpecialization skewed() {
    return ExactSpecialization(std::map<int, GaussRational>{{1, GaussRational(Rational(1), Rational(1, 2))}, {2, GaussRational(Rational(-1, 3))}});
}

Specialization skewed_numeric_in() { return Specialization(std::map<int, Complex>{{1, Complex(0.7, -0.2)}, {2, Complex(0.3, 0.4)}}); }

// Σ over paths with steps in {-1, 0, +1} staying at heights >= 0 of Π (height at each flat step) ebar^(flat steps):
// coefficients of ebar^m, computed by a height/slide-count table.
std::vector<std::int64_t> weighted_motzkin(int ell) {
    // table[h][m]
    std::vector<std::vector<std::int64_t>> table(static_cast<std::size_t>(ell) + 2,
                                                 std::vector<std::int64_t>(static_cast<std::size_t>(ell) + 1, 0));
    table[0][0] = 1;
    for (int step = 0; step < ell; ++step) {
        std::vector<std::vector<std::int64_t>> next(table.size(), std::vector<std::int64_t>(table[0].size(), 0));
        for (std::size_t h = 0; h < table.size(); ++h) {
            for (std::size_t m = 0; m < table[h].size(); ++m) {
                std::int64_t w = table[h][m];
                if (w == 0) continue;
                if (h + 1 < table.size()) next[h + 1][m] += w;
                if (h > 0) next[h - 1][m] += w;
                if (h > 0 && m + 1 < table[h].size()) next[h][m + 1] += w * static_cast<std::int64_t>(h);
            }
        }
        table = next;
    }
    return table[0];
}

template <class S>
void check_equal(const BiPolynomial<S>& a, const BiPolynomial<S>& b) {
    CHECK(a == b);
}

void check_close(const BiPolynomial<Complex>& a, const BiPolynomial<Complex>& b, double tol = 1e-10) {
    BiPolynomial<Complex> diff = a - b;
    for (const auto& [key, c] : diff.terms()) {
        CAPTURE(key.first);
        CAPTURE(key.second);
        CHECK(std::abs(c) <= tol * (1.0 + std::abs(a.coeff(key.first, key.second))));
    }
}

}  // namespace

TEST_CASE("sliding path counts are Motzkin numbers for unit jumps") {
    for (int ell = 1; ell <= 10; ++ell) {
        CHECK(static_cast<std::int64_t>(enumerate_sliding_paths(ell, 1).size()) == oracle::motzkin(ell));
    }
    for (const SlidingPath& p : enumerate_sliding_paths(6, 2)) {
        CHECK(p.heights.front() == 0);
        CHECK(p.heights.back() == 0);
        for (int h : p.heights) CHECK(h >= 0);
    }
    CHECK_THROWS_AS(enumerate_sliding_paths(0, 1), DomainError);
}

TEST_CASE("single-site sums for the Plancherel specialization") {
    CHECK(W_sum<GaussRational>({2}, kPl, kPl) == BiPolynomial<GaussRational>::constant(GaussRational(1)));
    BiPolynomial<GaussRational> w4 = W_sum<GaussRational>({4}, kPl, kPl);
    CHECK(w4.coeff(0, 0) == GaussRational(2));
    CHECK(w4.coeff(0, 2) == GaussRational(1));
    CHECK(w4.coeff(1, 0) == GaussRational(1));
    CHECK(w4.terms().size() == 3);
    for (int m = 1; m <= 6; ++m) {
        CHECK(W_sum<GaussRational>({2 * m}, kPl, kPl).coeff(0, 0) == GaussRational(Rational(oracle::catalan(m))));
    }
}

TEST_CASE("pairing-free single-site sums match the weighted Motzkin count") {
    for (int ell = 1; ell <= 9; ++ell) {
        BiPolynomial<GaussRational> got = single_site_unpaired<GaussRational>(ell, kPl, kPl);
        std::vector<std::int64_t> want = weighted_motzkin(ell);
        for (int m = 0; m <= ell; ++m) {
            CAPTURE(ell);
            CAPTURE(m);
            CHECK(got.coeff(0, m) == GaussRational(Rational(want[m])));
        }
        CHECK(got.max_q() <= 0);
    }
}

TEST_CASE("transfer-matrix sums equal the brute-force path listing") {
    const std::vector<std::vector<int>> cases{{3}, {4}, {2, 2}, {3, 2}, {2, 1, 1}, {4, 2}};
    for (const auto& lengths : cases) {
        CAPTURE(lengths.size());
        check_equal(Y_sum<GaussRational>(lengths, two_term(), skewed()),
                    enumerate_paths_sum<GaussRational>(lengths, two_term(), skewed(), nullptr));
        Decoration all(lengths.size(), 1);
        check_equal(W_sum<GaussRational>(lengths, skewed(), two_term()),
                    enumerate_paths_sum<GaussRational>(lengths, skewed(), two_term(), &all));
    }
    Specialization vo = to_numeric(skewed());
    Specialization vi = skewed_numeric_in();
    check_close(Y_sum<Complex>({3, 3}, vo, vi), enumerate_paths_sum<Complex>({3, 3}, vo, vi, nullptr));
}

TEST_CASE("moments are recovered from cumulants over set partitions") {
    const std::vector<int> lengths{2, 3, 2};
    ExactSpecialization v = two_term();
    BiPolynomial<GaussRational> y = Y_sum<GaussRational>(lengths, v, v);
    BiPolynomial<GaussRational> from_w = moment_from_cumulants<GaussRational>(3, [&](const std::vector<int>& block) {
        std::vector<int> sub;
        for (int i : block) sub.push_back(lengths[i]);
        return W_sum<GaussRational>(sub, v, v);
    });
    CHECK(y == from_w);
}

TEST_CASE("cumulants start at hbar^(n-1)") {
    for (const ExactSpecialization& v : {kPl, two_term()}) {
        for (int a = 1; a <= 4; ++a) {
            for (int b = a; b <= 4; ++b) {
                BiPolynomial<GaussRational> w = W_sum<GaussRational>({a, b}, v, v);
                if (!w.is_zero()) CHECK(w.min_q() >= 1);
                for (int c = b; c <= 3; ++c) {
                    BiPolynomial<GaussRational> w3 = W_sum<GaussRational>({a, b, c}, v, v);
                    if (!w3.is_zero()) CHECK(w3.min_q() >= 2);
                }
            }
        }
    }
    BiPolynomial<GaussRational> k22 = W_sum<GaussRational>({2, 2}, kPl, kPl);
    CHECK(k22.terms().size() == 1);
    CHECK(k22.coeff(1, 0) == GaussRational(1));
}

TEST_CASE("decorated cumulants agree with the products-of-cumulants formula") {
    for (const std::vector<int>& p : std::vector<std::vector<int>>{{2}, {3}, {2, 2}, {2, 3}, {4}, {3, 3}, {2, 2, 2}}) {
        CHECK(decorated_cumulants_poly<GaussRational>(p, kPl, kPl) ==
              decorated_cumulants_poly_from_plain<GaussRational>(p, kPl, kPl));
        CHECK(decorated_cumulants_poly<GaussRational>(p, two_term(), skewed()) ==
              decorated_cumulants_poly_from_plain<GaussRational>(p, two_term(), skewed()));
    }
    BiPolynomial<GaussRational> cov = decorated_cumulants_poly<GaussRational>({2, 2}, kPl, kPl);
    CHECK(cov.coeff(1, 0) == GaussRational(4));
}

TEST_CASE("connected counts with prescribed unpaired jumps") {
    BiPolynomial<Rational> c = C_count({3}, Partition{1}, Partition{1});
    CHECK(c.coeff(0, 1) == Rational(1));
    BiPolynomial<Rational> c2 = C_count({2}, Partition{1}, Partition{1});
    CHECK(c2.coeff(0, 0) == Rational(1));
    CHECK_THROWS_AS(C_count({2}, Partition{2}, Partition{1}), DomainError);
}

TEST_CASE("threaded reductions reproduce the single-threaded result") {
    RibbonOptions one{1}, four{4};
    CHECK(Y_sum<GaussRational>({4, 3}, two_term(), skewed(), one) ==
          Y_sum<GaussRational>({4, 3}, two_term(), skewed(), four));
}

TEST_CASE("ribbon path invariants") {
    RibbonPath bad;
    bad.sites.push_back(SlidingPath{{0, 1, 2}});
    CHECK_THROWS_AS(validate_ribbon_path(bad), DomainError);
    RibbonPath pairing_backwards;
    pairing_backwards.sites.push_back(SlidingPath{{0, 1, 0}});
    pairing_backwards.pairings.push_back({StepRef{0, 0}, StepRef{0, 1}});
    CHECK_THROWS_AS(validate_ribbon_path(pairing_backwards), DomainError);
    CHECK(height_bound({4, 2}, 2) == 6);
    CHECK(set_partitions(4).size() == 15);
    CHECK(set_partitions(5).size() == 52);
}
