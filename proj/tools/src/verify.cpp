#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>

#include <json.hpp>

#include "cli_common.hpp"
#include "jm/asymptotics.hpp"
#include "jm/fock.hpp"
#include "jm/jack.hpp"
#include "jm/ribbon.hpp"
#include "jm/sampler.hpp"

#ifndef JM_DEFAULT_GOLDEN
#define JM_DEFAULT_GOLDEN "verify.json"
#endif

namespace jmtool {

using jm::Complex;

namespace {

using json = nlohmann::json;

struct Check {
    std::string name;
    // Returns an empty string on success and a mismatch description otherwise.
    std::function<std::string(const json&)> run;
};

std::string expect_string(const json& golden, const std::string& actual) {
    std::string want = golden.get<std::string>();
    return want == actual ? "" : "expected " + want + ", got " + actual;
}

std::string expect_close(const json& golden, double actual, double tol) {
    double want = golden.get<double>();
    if (std::abs(want - actual) <= tol) return "";
    return "expected " + fmt_double(want) + ", got " + fmt_double(actual);
}

std::string hex_word(std::uint32_t w) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%08x", w);
    return buf;
}

std::vector<Check> build_checks() {
    const jm::ExactSpecialization pl = jm::plancherel_specialization<jm::GaussRational>();
    const jm::Specialization pln = jm::plancherel_specialization<Complex>();
    std::vector<Check> checks;

    checks.push_back({"catalan_single_site", [pl](const json& g) {
        for (int m = 1; m <= 5; ++m) {
            jm::BiPolynomial<jm::GaussRational> w = jm::W_sum<jm::GaussRational>({2 * m}, pl, pl);
            std::string err = expect_string(g.at(m - 1), jm::to_string(w.coeff(0, 0).re));
            if (!err.empty()) return "m=" + std::to_string(m) + ": " + err;
        }
        return std::string();
    }});

    checks.push_back({"w_table_length_4", [pl](const json& g) {
        jm::BiPolynomial<jm::GaussRational> w = jm::W_sum<jm::GaussRational>({4}, pl, pl);
        if (g.size() != w.terms().size()) return std::string("term count differs");
        std::size_t i = 0;
        for (const auto& [key, c] : w.terms()) {
            const json& t = g.at(i++);
            if (t.at(0).get<int>() != key.first || t.at(1).get<int>() != key.second) return std::string("key differs");
            std::string err = expect_string(t.at(2), jm::format_scalar(c));
            if (!err.empty()) return err;
        }
        return std::string();
    }});

    checks.push_back({"cumulant_t2_t2", [pl](const json& g) {
        jm::BiPolynomial<jm::GaussRational> w = jm::W_sum<jm::GaussRational>({2, 2}, pl, pl);
        if (w.terms().size() != 1) return std::string("expected a single term");
        return expect_string(g, "hbar^" + std::to_string(w.terms().begin()->first.first) + " ebar^" +
                                    std::to_string(w.terms().begin()->first.second) + " * " +
                                    jm::format_scalar(w.terms().begin()->second));
    }});

    checks.push_back({"covariance_2_2_three_routes", [pln](const json& g) {
        const double tol = 1e-5;
        for (double value : {jm::covariance_welding(pln, 0.0, 2, 2), jm::covariance_paths(pln, 0.0, 2, 2),
                             jm::covariance_bd(pln, 2, 2)}) {
            std::string err = expect_close(g, value, tol);
            if (!err.empty()) return err;
        }
        return std::string();
    }});

    checks.push_back({"chebyshev_variances", [](const json& g) {
        for (int k = 1; k <= 4; ++k) {
            std::string err = expect_close(g.at(k - 1), jm::chebyshev_variance(k), 1e-9);
            if (!err.empty()) return "k=" + std::to_string(k) + ": " + err;
        }
        return std::string();
    }});

    checks.push_back({"convex_moments_plancherel", [pln](const json& g) {
        std::vector<double> m = jm::convex_profile_moments_quadrature(pln, 8);
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::string err = expect_close(g.at(i), m[2 * (i + 1)], 1e-9);
            if (!err.empty()) return "p=" + std::to_string(2 * (i + 1)) + ": " + err;
        }
        return std::string();
    }});

    checks.push_back({"hook_law_degree_2_ratio", [](const json& g) {
        jm::ExactParams params = jm::exact_params_from_eps(jm::Rational(2), jm::Rational(-1));
        jm::Rational row = jm::jack_plancherel_prob<jm::Rational>(jm::Partition({2}), params);
        jm::Rational column = jm::jack_plancherel_prob<jm::Rational>(jm::Partition({1, 1}), params);
        return expect_string(g, jm::to_string(row / column));
    }});

    checks.push_back({"conditioned_t2", [pl](const json& g) {
        jm::ExactParams params = jm::exact_params_from_eps(jm::Rational(3), jm::Rational(-1, 2));
        for (int d = 1; d <= 4; ++d) {
            jm::GaussRational t = jm::conditioned_moments<jm::GaussRational>({2}, pl, pl, params, d);
            std::string err = expect_string(g.at(d - 1), jm::format_scalar(t));
            if (!err.empty()) return "d=" + std::to_string(d) + ": " + err;
        }
        return std::string();
    }});

    checks.push_back({"philox_known_answer", [](const json& g) {
        jm::Philox4x32::Block b = jm::Philox4x32::generate({0, 0, 0, 0}, {0, 0});
        std::string got = hex_word(b[0]) + " " + hex_word(b[1]) + " " + hex_word(b[2]) + " " + hex_word(b[3]);
        return expect_string(g, got);
    }});

    checks.push_back({"sample_stream_seed_42", [pln](const json& g) {
        jm::MeasureTable table = jm::build_table(pln, jm::params_from_ebar_hbar(0.0, 1.0), 20);
        jm::SampleResult draws = jm::sample(table, 42, static_cast<long long>(g.size()));
        for (std::size_t i = 0; i < g.size(); ++i) {
            std::string err = expect_string(g.at(i), draws.draws[i].str());
            if (!err.empty()) return "draw " + std::to_string(i) + ": " + err;
        }
        return std::string();
    }});

    return checks;
}

}  // namespace

int cmd_verify(const RunConfig& cfg) {
    std::string path = cfg.golden.empty() ? std::string(JM_DEFAULT_GOLDEN) : cfg.golden;
    std::string text = read_file(path);
    Table table({"check", "status", "detail"});
    add_common_meta(table, cfg);
    table.meta("golden", path);
    json golden;
    bool ok = true;
    try {
        golden = json::parse(text);
    } catch (const json::parse_error& e) {
        table.row({"golden_file", "FAIL", std::string("unreadable JSON: ") + e.what()});
        table.write(cfg);
        std::cerr << "verify: golden file '" << path << "' is not valid JSON\n";
        return 1;
    }
    int passed = 0;
    std::vector<Check> checks = build_checks();
    for (const Check& check : checks) {
        std::string detail;
        try {
            if (!golden.contains(check.name)) {
                detail = "missing from golden file";
            } else {
                detail = check.run(golden.at(check.name));
            }
        } catch (const std::exception& e) {
            detail = std::string("error: ") + e.what();
        }
        bool pass = detail.empty();
        ok = ok && pass;
        passed += pass ? 1 : 0;
        table.row({check.name, pass ? "PASS" : "FAIL", detail});
    }
    table.write(cfg);
    std::cerr << "verify: " << passed << "/" << checks.size() << " checks passed\n";
    return ok ? 0 : 1;
}

}  // namespace jmtool
