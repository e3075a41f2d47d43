#include <algorithm>
#include <cmath>
#include <iostream>

#include "cli_common.hpp"
#include "jm/asymptotics.hpp"
#include "jm/errors.hpp"
#include "jm/fock.hpp"
#include "jm/ribbon.hpp"
#include "jm/sampler.hpp"

namespace jmtool {

using jm::Complex;

namespace {

constexpr double kRouteTolerance = 1e-8;

bool agree(Complex a, Complex b, double slack = 0.0) {
    return std::abs(a - b) <= kRouteTolerance * std::max(1.0, std::abs(a)) + slack;
}

template <class S>
void emit_bipoly(Table& table, const jm::BiPolynomial<S>& poly) {
    for (const auto& [key, c] : poly.terms()) {
        if constexpr (std::is_same_v<S, jm::GaussRational>) {
            table.row({std::to_string(key.first), std::to_string(key.second), jm::to_string(c.re), jm::to_string(c.im)});
        } else {
            table.row({std::to_string(key.first), std::to_string(key.second), fmt_double(c.real()), fmt_double(c.imag())});
        }
    }
}

jm::Partition partition_arg(const std::vector<int>& parts) {
    for (int x : parts) {
        if (x <= 0) throw UsageError("partition parts must be positive");
    }
    return jm::partition_from_multiset(parts);
}

void require_lengths(const RunConfig& cfg) {
    if (cfg.lengths.empty()) throw UsageError("--lengths is required");
    for (int l : cfg.lengths) {
        if (l < 0) throw UsageError("--lengths entries must be nonnegative");
    }
}

std::string path_heights(const jm::RibbonPath& path) {
    std::string out;
    for (std::size_t s = 0; s < path.sites.size(); ++s) {
        if (s) out += '|';
        out += join_ints(path.sites[s].heights);
    }
    return out;
}

std::string path_pairings(const jm::RibbonPath& path) {
    std::string out;
    for (const auto& [down, up] : path.pairings) {
        if (!out.empty()) out += ' ';
        out += std::to_string(down.site) + ":" + std::to_string(down.step) + "-" + std::to_string(up.site) + ":" +
               std::to_string(up.step);
    }
    return out;
}

}  // namespace

int cmd_enumerate(const RunConfig& cfg) {
    require_lengths(cfg);
    auto [v_out, v_in] = load_specializations(cfg);
    jm::RibbonOptions opts{cfg.threads};
    const bool exact = cfg.mode == "exact";
    if (!exact && cfg.mode != "numeric") throw UsageError("--mode must be 'exact' or 'numeric'");

    if (cfg.table == "paths") {
        Table table({"index", "heights", "pairings", "q", "m", "weight_re", "weight_im"});
        add_common_meta(table, cfg);
        table.meta("lengths", join_ints(cfg.lengths));
        jm::Specialization vo = jm::to_numeric(v_out);
        jm::Specialization vi = jm::to_numeric(v_in);
        long long index = 0;
        jm::for_each_ribbon_path<Complex>(cfg.lengths, vo, vi, [&](const jm::RibbonPath& path) {
            jm::PathWeight<Complex> w = jm::path_weight(path, vo, vi);
            table.row({std::to_string(index++), path_heights(path), path_pairings(path), std::to_string(w.q),
                       std::to_string(w.m), fmt_double(w.value.real()), fmt_double(w.value.imag())});
        });
        table.write(cfg);
        return 0;
    }

    Table table({"q", "m", "coeff_re", "coeff_im"});
    add_common_meta(table, cfg);
    table.meta("table", cfg.table);
    table.meta("lengths", join_ints(cfg.lengths));
    if (cfg.table == "C") {
        jm::Partition mo = partition_arg(cfg.mu_out);
        jm::Partition mi = partition_arg(cfg.mu_in);
        table.meta("mu_out", mo.str());
        table.meta("mu_in", mi.str());
        jm::BiPolynomial<jm::Rational> counts = jm::C_count(cfg.lengths, mo, mi);
        for (const auto& [key, c] : counts.terms()) {
            table.row({std::to_string(key.first), std::to_string(key.second), jm::to_string(c), "0"});
        }
    } else if (cfg.table == "W" || cfg.table == "Y") {
        if (!cfg.decoration.empty()) {
            if (cfg.table != "W") throw UsageError("--decoration applies to the W table only");
            table.meta("decoration", join_ints(cfg.decoration));
        }
        if (exact) {
            jm::BiPolynomial<jm::GaussRational> poly =
                !cfg.decoration.empty() ? jm::W_sum_decorated(cfg.lengths, cfg.decoration, v_out, v_in, opts)
                : cfg.table == "W"      ? jm::W_sum(cfg.lengths, v_out, v_in, opts)
                                        : jm::Y_sum(cfg.lengths, v_out, v_in, opts);
            emit_bipoly(table, poly);
        } else {
            jm::Specialization vo = jm::to_numeric(v_out);
            jm::Specialization vi = jm::to_numeric(v_in);
            jm::BiPolynomial<Complex> poly = !cfg.decoration.empty()
                                                 ? jm::W_sum_decorated(cfg.lengths, cfg.decoration, vo, vi, opts)
                                             : cfg.table == "W" ? jm::W_sum(cfg.lengths, vo, vi, opts)
                                                                : jm::Y_sum(cfg.lengths, vo, vi, opts);
            emit_bipoly(table, poly);
        }
    } else {
        throw UsageError("--table must be one of W, Y, C, paths");
    }
    table.write(cfg);
    return 0;
}

int cmd_moments(const RunConfig& cfg) {
    require_lengths(cfg);
    auto [v_out, v_in] = load_specializations(cfg);
    jm::RibbonOptions opts{cfg.threads};
    const int K = std::max(v_out.support_bound(), v_in.support_bound());
    const int reach = jm::operator_reach(cfg.lengths, K);
    Table table({"route", "value_re", "value_im", "tail_bound", "agrees"});
    add_common_meta(table, cfg);
    table.meta("lengths", join_ints(cfg.lengths));
    table.meta("operator_degree_cutoff", std::to_string(reach));
    bool ok = true;

    if (cfg.mode == "exact") {
        auto [ebar, hbar] = exact_ebar_hbar(cfg);
        table.meta("ebar", jm::to_string(ebar));
        table.meta("hbar", jm::to_string(hbar));
        jm::GaussRational ribbon =
            jm::Y_sum(cfg.lengths, v_out, v_in, opts).evaluate(jm::GaussRational(hbar), jm::GaussRational(ebar));
        jm::ExactParams params;
        try {
            params = jm::exact_params_from_ebar_hbar(ebar, hbar);
        } catch (const jm::DomainError& e) {
            throw UsageError(std::string("exact operator route: ") + e.what());
        }
        jm::OperatorMoment<jm::GaussRational> op =
            jm::joint_moments_operator(cfg.lengths, v_out, v_in, params, reach);
        bool same = ribbon == op.value;
        ok = ok && same;
        table.row({"ribbon", jm::to_string(ribbon.re), jm::to_string(ribbon.im), "0", "reference"});
        table.row({"operator", jm::to_string(op.value.re), jm::to_string(op.value.im), "0", same ? "yes" : "no"});
        table.write(cfg);
        return ok ? 0 : 1;
    }

    jm::Params params = numeric_params(cfg);
    table.meta("ebar", fmt_double(params.ebar()));
    table.meta("hbar", fmt_double(params.hbar()));
    table.meta("degree_cutoff", std::to_string(cfg.degree_cutoff));
    jm::Specialization vo = jm::to_numeric(v_out);
    jm::Specialization vi = jm::to_numeric(v_in);
    Complex ribbon = jm::Y_sum(cfg.lengths, vo, vi, opts).evaluate(params.hbar(), params.ebar());
    table.row({"ribbon", fmt_double(ribbon.real()), fmt_double(ribbon.imag()), "0", "reference"});
    jm::OperatorMoment<Complex> op = jm::joint_moments_operator(cfg.lengths, vo, vi, params, reach);
    bool op_ok = agree(ribbon, op.value);
    ok = ok && op_ok;
    table.row({"operator", fmt_double(op.value.real()), fmt_double(op.value.imag()), "0", op_ok ? "yes" : "no"});
    if (v_out == v_in) {
        jm::MeasureTable measure = jm::build_table(vo, params, cfg.degree_cutoff);
        jm::PartitionSumMoment ps = jm::partition_sum_moment(measure, cfg.lengths, vo, params);
        bool ps_ok = agree(ribbon, Complex(ps.value, 0.0), ps.tail_bound);
        ok = ok && ps_ok;
        table.meta("tail_mass", fmt_double(ps.tail_mass));
        table.row({"partition_sum", fmt_double(ps.value), "0", fmt_double(ps.tail_bound), ps_ok ? "yes" : "no"});
    }
    table.write(cfg);
    return ok ? 0 : 1;
}

int cmd_limit_shape(const RunConfig& cfg) {
    jm::Specialization v = jm::to_numeric(load_single_specialization(cfg));
    double ebar = jm::to_double(jm::parse_rational(cfg.ebar));
    std::string regime = cfg.regime;
    if (regime.empty()) regime = ebar == 0.0 ? "convex" : "dispersive";
    if (regime == "convex") {
        if (ebar != 0.0) throw UsageError("the convex profile belongs to ebar = 0");
        if (cfg.grid_points < 2 || !(cfg.grid_max > cfg.grid_min)) throw UsageError("invalid grid");
        const bool plancherel = v == jm::plancherel_specialization<Complex>();
        std::vector<std::string> columns{"c", "f"};
        if (plancherel) columns.push_back("vkls");
        Table table(columns);
        add_common_meta(table, cfg);
        table.meta("regime", "convex");
        for (int i = 0; i < cfg.grid_points; ++i) {
            double c = cfg.grid_min + (cfg.grid_max - cfg.grid_min) * i / (cfg.grid_points - 1);
            std::vector<std::string> r{fmt_double(c), fmt_double(jm::convex_profile_value(v, c))};
            if (plancherel) r.push_back(fmt_double(jm::vkls_profile(c)));
            table.row(r);
        }
        table.write(cfg);
        return 0;
    }
    if (regime != "dispersive") throw UsageError("--regime must be 'convex' or 'dispersive'");
    if (ebar == 0.0) throw UsageError("the dispersive profile needs ebar != 0");
    // ebar > 0 is read off the data at (-v, -ebar) with the profile mirrored.
    const bool reflected = ebar > 0.0;
    jm::DispersiveProfileData data = jm::dispersive_profile(reflected ? v.negated() : v, reflected ? -ebar : ebar,
                                                            cfg.matrix_size, cfg.weight_floor);
    Table table({"index", "minimum", "maximum", "gap_ratio"});
    add_common_meta(table, cfg);
    table.meta("regime", "dispersive");
    table.meta("ebar", fmt_double(ebar));
    table.meta("matrix_size", std::to_string(cfg.matrix_size));
    table.meta("reflected", reflected ? "yes" : "no");
    table.meta("dropped_weight", fmt_double(data.dropped_weight));
    jm::InterlacingProfile<double> profile = data.as_profile();
    if (reflected) {
        jm::InterlacingProfile<double> mirrored;
        for (auto it = profile.minima.rbegin(); it != profile.minima.rend(); ++it) mirrored.minima.push_back(-*it);
        for (auto it = profile.maxima.rbegin(); it != profile.maxima.rend(); ++it) mirrored.maxima.push_back(-*it);
        profile = mirrored;
    }
    for (std::size_t i = 0; i < profile.minima.size(); ++i) {
        std::string maximum = i < profile.maxima.size() ? fmt_double(profile.maxima[i]) : "";
        std::string gap;
        if (!reflected && i < data.gap_ratios.size()) gap = fmt_double(data.gap_ratios[data.gap_ratios.size() - 1 - i]);
        if (reflected && i < data.gap_ratios.size()) gap = fmt_double(data.gap_ratios[i]);
        table.row({std::to_string(i), fmt_double(profile.minima[i]), maximum, gap});
    }
    table.write(cfg);
    return 0;
}

int cmd_fluctuations(const RunConfig& cfg) {
    jm::ExactSpecialization exact_v = load_single_specialization(cfg);
    jm::Specialization v = jm::to_numeric(exact_v);
    double ebar = jm::to_double(jm::parse_rational(cfg.ebar));
    int P = cfg.p.empty() ? 4 : *std::max_element(cfg.p.begin(), cfg.p.end());
    if (P < 1) throw UsageError("--p must be positive");
    Table table({"quantity", "i", "j", "route", "value"});
    add_common_meta(table, cfg);
    table.meta("ebar", fmt_double(ebar));
    table.meta("max_order", std::to_string(P));
    table.meta("series_order", std::to_string(cfg.series_order));
    std::vector<Complex> t = jm::limit_moments_paths(v, ebar, cfg.series_order);
    for (int l = 0; l <= cfg.series_order; ++l) {
        table.row({"limit_moment", std::to_string(l), "", "paths", fmt_double(t[l].real())});
    }
    for (int p1 = 1; p1 <= P; ++p1) {
        for (int p2 = p1; p2 <= P; ++p2) {
            auto add = [&](const char* route, double value) {
                table.row({"covariance", std::to_string(p1), std::to_string(p2), route, fmt_double(value)});
            };
            add("welding", jm::covariance_welding(v, ebar, p1, p2, cfg.delta));
            add("paths", jm::covariance_paths(v, ebar, p1, p2));
            if (ebar == 0.0) add("fourier", jm::covariance_bd(v, p1, p2));
        }
    }
    if (ebar == 0.0) {
        std::vector<double> fd = jm::mean_shift_moments(v, P, cfg.delta);
        std::vector<jm::Rational> ex = jm::mean_shift_moments_exact(exact_v, P);
        for (int p = 1; p <= P; ++p) {
            table.row({"mean_shift", std::to_string(p), "", "finite_difference", fmt_double(fd[p])});
            table.row({"mean_shift", std::to_string(p), "", "paths", jm::to_string(ex[p])});
        }
        for (int k1 = 1; k1 <= cfg.chebyshev; ++k1) {
            for (int k2 = k1; k2 <= cfg.chebyshev; ++k2) {
                table.row({"chebyshev", std::to_string(k1), std::to_string(k2), "fourier",
                           fmt_double(jm::chebyshev_covariance(k1, k2))});
            }
        }
    }
    table.write(cfg);
    return 0;
}

int cmd_sample(const RunConfig& cfg) {
    jm::Specialization v = jm::to_numeric(load_single_specialization(cfg));
    jm::Params params = numeric_params(cfg);
    jm::MeasureTable measure = jm::build_table(v, params, cfg.degree_cutoff);
    jm::SampleResult result = jm::sample(measure, cfg.seed, cfg.count, cfg.max_tail);
    Table table({"draw", "partition"});
    add_common_meta(table, cfg);
    table.meta("ebar", fmt_double(params.ebar()));
    table.meta("hbar", fmt_double(params.hbar()));
    table.meta("degree_cutoff", std::to_string(cfg.degree_cutoff));
    table.meta("seed", std::to_string(cfg.seed));
    table.meta("count", std::to_string(cfg.count));
    table.meta("rng", "philox4x32-10");
    table.meta("tail_mass", fmt_double(measure.tail_mass));
    table.meta("tail_resamples", std::to_string(result.tail_resamples));
    std::cerr << "jmtool sample: " << result.tail_resamples << " tail draws resampled\n";
    for (std::size_t i = 0; i < result.draws.size(); ++i) {
        table.row({std::to_string(i), join_ints(result.draws[i].parts())});
    }
    table.write(cfg);
    return 0;
}

}  // namespace jmtool
