#include "cli_common.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "jm/errors.hpp"

namespace jmtool {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

namespace {

jm::ExactSpecialization load_spec_file(const std::string& path) {
    std::string text = read_file(path);
    try {
        return jm::exact_specialization_from_json(text);
    } catch (const jm::DomainError& e) {
        throw UsageError("invalid specialization file '" + path + "': " + e.what());
    }
}

bool is_numeric_mode(const RunConfig& cfg) {
    if (cfg.mode == "numeric") return true;
    if (cfg.mode == "exact") return false;
    throw UsageError("--mode must be 'exact' or 'numeric'");
}

std::string csv_escape(const std::string& cell) {
    if (cell.find_first_of(",\"\n") == std::string::npos) return cell;
    std::string out = "\"";
    for (char c : cell) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::pair<jm::ExactSpecialization, jm::ExactSpecialization> load_specializations(const RunConfig& cfg) {
    if (!cfg.spec.empty() && (!cfg.spec_out.empty() || !cfg.spec_in.empty())) {
        throw UsageError("--spec cannot be combined with --spec-out/--spec-in");
    }
    if (!cfg.spec.empty()) {
        jm::ExactSpecialization v = load_spec_file(cfg.spec);
        return {v, v};
    }
    if (cfg.spec_out.empty() != cfg.spec_in.empty()) {
        throw UsageError("--spec-out and --spec-in must be given together");
    }
    if (!cfg.spec_out.empty()) return {load_spec_file(cfg.spec_out), load_spec_file(cfg.spec_in)};
    jm::ExactSpecialization pl = jm::plancherel_specialization<jm::GaussRational>();
    return {pl, pl};
}

jm::ExactSpecialization load_single_specialization(const RunConfig& cfg) {
    auto [out, in] = load_specializations(cfg);
    if (!(out == in)) throw UsageError("this subcommand needs a single specialization (--spec)");
    return out;
}

jm::Params numeric_params(const RunConfig& cfg) {
    is_numeric_mode(cfg);
    try {
        double hbar = jm::to_double(jm::parse_rational(cfg.hbar));
        if (!cfg.alpha.empty()) {
            double alpha = jm::to_double(jm::parse_rational(cfg.alpha));
            return jm::params_from_alpha_hbar(alpha, hbar);
        }
        double ebar = jm::to_double(jm::parse_rational(cfg.ebar));
        return jm::params_from_ebar_hbar(ebar, hbar);
    } catch (const jm::DomainError& e) {
        throw UsageError(std::string("invalid parameters: ") + e.what());
    }
}

std::pair<jm::Rational, jm::Rational> exact_ebar_hbar(const RunConfig& cfg) {
    if (!cfg.alpha.empty()) throw UsageError("--alpha is only available in numeric mode");
    try {
        jm::Rational hbar = jm::parse_rational(cfg.hbar);
        if (!(hbar > 0)) throw UsageError("--hbar must be positive");
        return {jm::parse_rational(cfg.ebar), hbar};
    } catch (const jm::DomainError& e) {
        throw UsageError(std::string("invalid parameters: ") + e.what());
    }
}

void Table::row(std::vector<std::string> cells) {
    if (cells.size() != columns_.size()) throw std::logic_error("row width does not match the header");
    rows_.push_back(std::move(cells));
}

void Table::write(const RunConfig& cfg) const {
    std::ostringstream os;
    if (cfg.format == "csv") {
        for (const auto& [k, v] : meta_) os << "# " << k << ": " << v << '\n';
        for (std::size_t i = 0; i < columns_.size(); ++i) os << (i ? "," : "") << csv_escape(columns_[i]);
        os << '\n';
        for (const auto& r : rows_) {
            for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_escape(r[i]);
            os << '\n';
        }
    } else if (cfg.format == "json") {
        json doc;
        json meta = json::object();
        for (const auto& [k, v] : meta_) meta[k] = v;
        doc["metadata"] = meta;
        doc["columns"] = columns_;
        json rows = json::array();
        for (const auto& r : rows_) {
            json obj = json::object();
            for (std::size_t i = 0; i < r.size(); ++i) obj[columns_[i]] = r[i];
            rows.push_back(obj);
        }
        doc["rows"] = rows;
        os << doc.dump(2) << '\n';
    } else {
        throw UsageError("--format must be 'csv' or 'json'");
    }
    if (cfg.out.empty()) {
        std::cout << os.str();
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw UsageError("cannot write output file '" + cfg.out + "'");
    f << os.str();
}

void add_common_meta(Table& table, const RunConfig& cfg) {
    table.meta("tool", std::string("jmtool ") + kVersion);
    table.meta("subcommand", cfg.subcommand);
    table.meta("mode", cfg.mode);
    if (!cfg.spec.empty()) table.meta("spec", cfg.spec);
    if (!cfg.spec_out.empty()) table.meta("spec_out", cfg.spec_out);
    if (!cfg.spec_in.empty()) table.meta("spec_in", cfg.spec_in);
    if (cfg.spec.empty() && cfg.spec_out.empty()) table.meta("spec", "plancherel (default)");
}

std::string fmt_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string join_ints(const std::vector<int>& v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(v[i]);
    }
    return out;
}

}  // namespace jmtool
