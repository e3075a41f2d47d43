#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "jm/params.hpp"
#include "jm/scalar.hpp"
#include "jm/specialization.hpp"

namespace jmtool {

inline constexpr const char* kVersion = "0.1.0";

// Bad flags, unreadable inputs, parameters outside the domain: exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A check or a route comparison came out wrong: exit code 1.
struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string subcommand;
    std::string spec;
    std::string spec_out;
    std::string spec_in;
    std::string ebar = "0";
    std::string hbar = "1";
    std::string alpha;
    std::string regime;
    std::vector<int> lengths;
    std::vector<int> p;
    int degree_cutoff = 10;
    int matrix_size = 400;
    int series_order = 8;
    int threads = 1;
    std::uint64_t seed = 0;
    long long count = 1000;
    double max_tail = 1e-3;
    std::string mode;  // empty until resolved per subcommand
    std::string format = "csv";
    std::string out;

    // enumerate
    std::string table = "W";
    std::vector<int> mu_out;
    std::vector<int> mu_in;
    std::vector<int> decoration;

    // limit-shape
    double grid_min = -3.0;
    double grid_max = 3.0;
    int grid_points = 61;
    double weight_floor = 1e-10;

    // fluctuations
    int chebyshev = 0;
    double delta = 1e-4;

    // verify
    std::string golden;
};

std::string read_file(const std::string& path);

// Specialization pair (out, in) chosen by --spec or by --spec-out/--spec-in; Plancherel when none is given.
std::pair<jm::ExactSpecialization, jm::ExactSpecialization> load_specializations(const RunConfig& cfg);
jm::ExactSpecialization load_single_specialization(const RunConfig& cfg);

// Numeric parameters from --ebar/--hbar or --alpha/--hbar.
jm::Params numeric_params(const RunConfig& cfg);
// Exact (ebar, hbar) from the same flags; alpha is rejected.
std::pair<jm::Rational, jm::Rational> exact_ebar_hbar(const RunConfig& cfg);

// Table emitter: CSV with a #-prefixed metadata block and a header row, or a JSON document.
class Table {
public:
    explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}
    void meta(const std::string& key, const std::string& value) { meta_.emplace_back(key, value); }
    void row(std::vector<std::string> cells);
    const std::vector<std::vector<std::string>>& rows() const { return rows_; }
    // Writes to cfg.out, or to stdout when it is empty.
    void write(const RunConfig& cfg) const;

private:
    std::vector<std::string> columns_;
    std::vector<std::pair<std::string, std::string>> meta_;
    std::vector<std::vector<std::string>> rows_;
};

void add_common_meta(Table& table, const RunConfig& cfg);

std::string fmt_double(double x);
std::string join_ints(const std::vector<int>& v, char sep = ' ');

int cmd_enumerate(const RunConfig& cfg);
int cmd_moments(const RunConfig& cfg);
int cmd_limit_shape(const RunConfig& cfg);
int cmd_fluctuations(const RunConfig& cfg);
int cmd_sample(const RunConfig& cfg);
int cmd_verify(const RunConfig& cfg);

}  // namespace jmtool
