#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "cli_common.hpp"
#include "jm/errors.hpp"

namespace {

using jmtool::RunConfig;

void add_spec_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--spec", cfg.spec, "Specialization JSON used for both sides");
    cmd->add_option("--spec-out", cfg.spec_out, "Specialization JSON for the outgoing side");
    cmd->add_option("--spec-in", cfg.spec_in, "Specialization JSON for the incoming side");
}

void add_param_flags(CLI::App* cmd, RunConfig& cfg) {
    auto* ebar = cmd->add_option("--ebar", cfg.ebar, "eps1 + eps2 (decimal or p/q)");
    cmd->add_option("--hbar", cfg.hbar, "-eps1 eps2 (decimal or p/q)");
    auto* alpha = cmd->add_option("--alpha", cfg.alpha, "eps1 / (-eps2); replaces --ebar");
    ebar->excludes(alpha);
    alpha->excludes(ebar);
}

void add_output_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("--format", cfg.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", cfg.out, "Output path (stdout when omitted)");
    cmd->add_option("--mode", cfg.mode, "exact or numeric")->check(CLI::IsMember({"exact", "numeric"}));
    cmd->add_option("--threads", cfg.threads, "Worker threads; 1 keeps canonical reduction order")
        ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    cfg.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    CLI::App app{"Jack measure ribbon-path, Fock-space and asymptotics toolkit"};
    app.set_version_flag("--version", std::string(jmtool::kVersion));
    app.require_subcommand(1, 1);

    auto* enumerate = app.add_subcommand("enumerate", "Ribbon paths and W, Y, C tables");
    add_spec_flags(enumerate, cfg);
    add_output_flags(enumerate, cfg);
    enumerate->add_option("--lengths", cfg.lengths, "Site lengths")->delimiter(',');
    enumerate->add_option("--table", cfg.table, "W, Y, C or paths")->check(CLI::IsMember({"W", "Y", "C", "paths"}));
    enumerate->add_option("--mu-out", cfg.mu_out, "Unpaired down-jump profile for C")->delimiter(',');
    enumerate->add_option("--mu-in", cfg.mu_in, "Unpaired up-jump profile for C")->delimiter(',');
    enumerate->add_option("--decoration", cfg.decoration, "Block sizes for decorated connectivity")->delimiter(',');

    auto* moments = app.add_subcommand("moments", "Joint moments by ribbon paths, Fock operators and partition sums");
    add_spec_flags(moments, cfg);
    add_param_flags(moments, cfg);
    add_output_flags(moments, cfg);
    moments->add_option("--lengths", cfg.lengths, "Site lengths")->delimiter(',');
    moments->add_option("--degree-cutoff,-D", cfg.degree_cutoff, "Partition-sum degree cutoff")
        ->check(CLI::PositiveNumber);

    auto* limit = app.add_subcommand("limit-shape", "Convex or dispersive limit profile");
    add_spec_flags(limit, cfg);
    add_output_flags(limit, cfg);
    limit->add_option("--ebar", cfg.ebar, "eps1 + eps2 in the limit");
    limit->add_option("--regime", cfg.regime, "convex or dispersive")->check(CLI::IsMember({"convex", "dispersive"}));
    limit->add_option("--matrix-size,-M", cfg.matrix_size, "Lax truncation size")->check(CLI::PositiveNumber);
    limit->add_option("--grid-min", cfg.grid_min, "Left end of the c grid");
    limit->add_option("--grid-max", cfg.grid_max, "Right end of the c grid");
    limit->add_option("--grid-points", cfg.grid_points, "Number of grid points")->check(CLI::PositiveNumber);
    limit->add_option("--weight-floor", cfg.weight_floor, "Spectral weight below which poles are dropped");

    auto* fluct = app.add_subcommand("fluctuations", "Covariance table, mean shift and Chebyshev variances");
    add_spec_flags(fluct, cfg);
    add_output_flags(fluct, cfg);
    fluct->add_option("--ebar", cfg.ebar, "eps1 + eps2 in the limit");
    fluct->add_option("--p", cfg.p, "Largest statistic order")->delimiter(',');
    fluct->add_option("--series-order,-L", cfg.series_order, "Series order for the Lax moments");
    fluct->add_option("--chebyshev", cfg.chebyshev, "Chebyshev table size (ebar = 0)");
    fluct->add_option("--delta", cfg.delta, "Finite-difference step")->check(CLI::PositiveNumber);

    auto* samp = app.add_subcommand("sample", "Exact draws from a tabulated Jack measure");
    add_spec_flags(samp, cfg);
    add_param_flags(samp, cfg);
    add_output_flags(samp, cfg);
    samp->add_option("--degree-cutoff,-D", cfg.degree_cutoff, "Table degree cutoff")->check(CLI::NonNegativeNumber);
    samp->add_option("--seed", cfg.seed, "Philox key");
    samp->add_option("--count", cfg.count, "Number of draws")->check(CLI::NonNegativeNumber);
    samp->add_option("--max-tail", cfg.max_tail, "Refuse tables whose tail mass reaches this value");

    auto* verify = app.add_subcommand("verify", "Property suite against a golden file");
    add_output_flags(verify, cfg);
    verify->add_option("--golden", cfg.golden, "Golden JSON file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }
    // Exact arithmetic is the default for enumerate, numeric for everything else.
    if (cfg.mode.empty()) cfg.mode = enumerate->parsed() ? "exact" : "numeric";
    cfg.subcommand = app.get_subcommands().front()->get_name();

    try {
        if (cfg.subcommand == "enumerate") return jmtool::cmd_enumerate(cfg);
        if (cfg.subcommand == "moments") return jmtool::cmd_moments(cfg);
        if (cfg.subcommand == "limit-shape") return jmtool::cmd_limit_shape(cfg);
        if (cfg.subcommand == "fluctuations") return jmtool::cmd_fluctuations(cfg);
        if (cfg.subcommand == "sample") return jmtool::cmd_sample(cfg);
        if (cfg.subcommand == "verify") return jmtool::cmd_verify(cfg);
    } catch (const jmtool::UsageError& e) {
        std::cerr << "jmtool: " << e.what() << '\n';
        return 2;
    } catch (const jm::DomainError& e) {
        std::cerr << "jmtool: " << e.what() << '\n';
        return 2;
    } catch (const jmtool::VerificationFailure& e) {
        std::cerr << "jmtool: " << e.what() << '\n';
        return 1;
    } catch (const jm::ConsistencyError& e) {
        std::cerr << "jmtool: numerical consistency: " << e.what() << '\n';
        return 3;
    } catch (const jm::TruncationError& e) {
        std::cerr << "jmtool: numerical consistency: " << e.what() << '\n';
        return 3;
    } catch (const jm::LabelingError& e) {
        std::cerr << "jmtool: numerical consistency: " << e.what() << '\n';
        return 3;
    }
    return 2;
}
