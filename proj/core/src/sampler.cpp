#include "jm/sampler.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/poisson.hpp>

#include "jm/errors.hpp"
#include "jm/jack.hpp"
#include "jm/profile.hpp"
#include "jm/ribbon.hpp"

namespace jm {

namespace {

constexpr double kNegativeTolerance = 1e-12;

bool is_plancherel(const Specialization& v) { return v == plancherel_specialization<Complex>(); }

double checked_probability(double p, const Partition& lambda) {
    if (p < -kNegativeTolerance) {
        throw ConsistencyError("negative probability " + std::to_string(p) + " for " + lambda.str());
    }
    return std::max(p, 0.0);
}

}  // namespace

double MeasureTable::prob(const Partition& lambda) const {
    for (const auto& [mu, p] : rows) {
        if (mu == lambda) return p;
    }
    return 0.0;
}

double MeasureTable::total() const {
    double s = 0.0;
    for (const auto& row : rows) s += row.second;
    return s;
}

double poisson_upper_tail(double mean, int D) {
    if (mean <= 0.0) return 0.0;
    boost::math::poisson_distribution<double> law(mean);
    return boost::math::cdf(boost::math::complement(law, static_cast<double>(D)));
}

MeasureTable build_table(const Specialization& v, const Params& params, int D, const JackOptions& opts) {
    if (D < 0) throw DomainError("degree cutoff must be nonnegative");
    if (!(params.hbar() > 0)) throw DomainError("hbar must be positive");
    MeasureTable table;
    table.cutoff = D;
    if (v.empty()) {
        table.rows.emplace_back(Partition{}, 1.0);
        return table;
    }
    if (is_plancherel(v)) {
        const double mean = 1.0 / params.hbar();
        boost::math::poisson_distribution<double> law(mean);
        for (int d = 0; d <= D; ++d) {
            double weight = boost::math::pdf(law, static_cast<double>(d));
            for (const Partition& lambda : partitions_of_size(d)) {
                double p = weight * jack_plancherel_prob<double>(lambda, params);
                table.rows.emplace_back(lambda, checked_probability(p, lambda));
            }
        }
        table.tail_mass = poisson_upper_tail(mean, D);
        return table;
    }
    for (int d = 0; d <= D; ++d) {
        JackBasis basis = jack_basis(d, params, 2, opts);
        for (const Partition& lambda : partitions_of_size(d)) {
            Complex p = jack_measure_prob(basis, lambda, v, v);
            table.rows.emplace_back(lambda, checked_probability(p.real(), lambda));
        }
    }
    table.tail_mass = std::max(0.0, 1.0 - table.total());
    return table;
}

PartitionSumMoment partition_sum_moment(const MeasureTable& table, const std::vector<int>& lengths,
                                        const Specialization& v, const Params& params) {
    int L = 0;
    for (int l : lengths) {
        if (l < 0) throw DomainError("lengths must be nonnegative");
        L = std::max(L, l);
    }
    PartitionSumMoment out;
    out.tail_mass = table.tail_mass;
    for (const auto& [lambda, p] : table.rows) {
        if (p == 0.0) continue;
        std::vector<double> t = transition_moments(profile_of(lambda, params), L);
        double prod = p;
        for (int l : lengths) prod *= t[l];
        out.value += prod;
    }
    if (table.tail_mass > 0.0) {
        std::vector<int> doubled = lengths;
        doubled.insert(doubled.end(), lengths.begin(), lengths.end());
        double second = Y_sum<Complex>(doubled, v, v).evaluate(params.hbar(), params.ebar()).real();
        out.tail_bound = std::sqrt(table.tail_mass * std::max(second, 0.0));
    }
    return out;
}

Philox4x32::Block Philox4x32::generate(Block ctr, Key key) {
    constexpr std::uint32_t kM0 = 0xD2511F53u;
    constexpr std::uint32_t kM1 = 0xCD9E8D57u;
    constexpr std::uint32_t kW0 = 0x9E3779B9u;
    constexpr std::uint32_t kW1 = 0xBB67AE85u;
    for (int round = 0; round < 10; ++round) {
        if (round > 0) {
            key[0] += kW0;
            key[1] += kW1;
        }
        std::uint64_t p0 = static_cast<std::uint64_t>(kM0) * ctr[0];
        std::uint64_t p1 = static_cast<std::uint64_t>(kM1) * ctr[2];
        auto hi0 = static_cast<std::uint32_t>(p0 >> 32);
        auto lo0 = static_cast<std::uint32_t>(p0);
        auto hi1 = static_cast<std::uint32_t>(p1 >> 32);
        auto lo1 = static_cast<std::uint32_t>(p1);
        ctr = {hi1 ^ ctr[1] ^ key[0], lo1, hi0 ^ ctr[3] ^ key[1], lo0};
    }
    return ctr;
}

double Philox4x32::uniform(const Block& block) {
    std::uint64_t a = block[0] >> 5;
    std::uint64_t b = block[1] >> 6;
    return static_cast<double>((a << 26) | b) * 0x1.0p-53;
}

SampleResult sample(const MeasureTable& table, std::uint64_t seed, long long count, double max_tail) {
    if (count < 0) throw DomainError("sample count must be nonnegative");
    if (table.tail_mass >= max_tail) {
        throw DomainError("table tail mass " + std::to_string(table.tail_mass) + " exceeds the threshold " +
                          std::to_string(max_tail));
    }
    if (table.rows.empty()) throw DomainError("cannot sample from an empty table");
    std::vector<double> cdf;
    cdf.reserve(table.rows.size());
    double acc = 0.0;
    for (const auto& row : table.rows) {
        acc += row.second;
        cdf.push_back(acc);
    }
    const Philox4x32::Key key{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};
    SampleResult out;
    out.draws.reserve(static_cast<std::size_t>(count));
    for (long long i = 0; i < count; ++i) {
        auto index = static_cast<std::uint64_t>(i);
        for (std::uint32_t attempt = 0;; ++attempt) {
            Philox4x32::Block ctr{static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32), attempt, 0u};
            double u = Philox4x32::uniform(Philox4x32::generate(ctr, key));
            if (u >= acc) {
                ++out.tail_resamples;
                continue;
            }
            auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
            out.draws.push_back(table.rows[static_cast<std::size_t>(it - cdf.begin())].first);
            break;
        }
    }
    return out;
}

double statistic_value(const Statistic& s, const Partition& lambda, const Params& params) {
    if (s.index < 0) throw DomainError("statistic index must be nonnegative");
    InterlacingProfile<double> profile = profile_of(lambda, params);
    if (s.kind == StatisticKind::Transition) return transition_moments(profile, s.index)[s.index];
    return linear_statistics(profile, s.index)[s.index];
}

double KStatistics::stderr_k1() const { return n > 0 ? std::sqrt(std::max(k[1], 0.0) / n) : 0.0; }

double KStatistics::stderr_k2() const {
    if (n < 2) return 0.0;
    double var = k[3] / n + 2.0 * k[1] * k[1] / (n - 1);
    return std::sqrt(std::max(var, 0.0));
}

KStatistics k_statistics(const std::vector<double>& values) {
    KStatistics out;
    out.n = static_cast<long long>(values.size());
    if (values.empty()) return out;
    const double n = static_cast<double>(values.size());
    double mean = 0.0;
    for (double x : values) mean += x;
    mean /= n;
    double m2 = 0.0, m3 = 0.0, m4 = 0.0;
    for (double x : values) {
        double d = x - mean;
        m2 += d * d;
        m3 += d * d * d;
        m4 += d * d * d * d;
    }
    m2 /= n;
    m3 /= n;
    m4 /= n;
    out.k[0] = mean;
    if (n >= 2) out.k[1] = n / (n - 1) * m2;
    if (n >= 3) out.k[2] = n * n / ((n - 1) * (n - 2)) * m3;
    if (n >= 4) {
        out.k[3] = n * n * ((n + 1) * m4 - 3 * (n - 1) * m2 * m2) / ((n - 1) * (n - 2) * (n - 3));
    }
    return out;
}

double empirical_cumulants(const std::vector<Partition>& samples, const Statistic& s, int order, const Params& params) {
    if (order < 1 || order > 4) throw DomainError("k-statistics are available for orders 1 to 4");
    std::vector<double> values;
    values.reserve(samples.size());
    for (const Partition& lambda : samples) values.push_back(statistic_value(s, lambda, params));
    return k_statistics(values).k[static_cast<std::size_t>(order - 1)];
}

}  // namespace jm
