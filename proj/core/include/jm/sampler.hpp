#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "jm/jack.hpp"
#include "jm/params.hpp"
#include "jm/partition.hpp"
#include "jm/specialization.hpp"

namespace jm {

// Probabilities of every partition with |λ| <= cutoff, in canonical order
// (by size, then reverse lexicographic within a size).
struct MeasureTable {
    std::vector<std::pair<Partition, double>> rows;
    double tail_mass = 0.0;  // 1 - Σ rows
    int cutoff = 0;

    double prob(const Partition& lambda) const;
    double total() const;
};

// Diagonal Jack measure with v_out = v_in = v. The Plancherel specialization uses the Poisson
// mixture of the hook-product law; any other v goes through the Jack eigenbasis degree by degree.
// Throws ConsistencyError on a probability below -1e-12. opts bounds the Jack degrees that may be used.
MeasureTable build_table(const Specialization& v, const Params& params, int D, const JackOptions& opts = {});

// Σ_{|λ| <= D} Prob(λ) Π_a T_{ℓ_a}|_λ over a table. The neglected part is bounded by Cauchy-Schwarz,
// sqrt(tail_mass * E[(Π_a T_{ℓ_a})^2]), with the second moment taken from the ribbon-path sum over
// the doubled length list.
struct PartitionSumMoment {
    double value = 0.0;
    double tail_bound = 0.0;
    double tail_mass = 0.0;
};
PartitionSumMoment partition_sum_moment(const MeasureTable& table, const std::vector<int>& lengths,
                                        const Specialization& v, const Params& params);

// Poisson(mean) mass strictly above D.
double poisson_upper_tail(double mean, int D);

// Philox4x32 with 10 rounds.
class Philox4x32 {
public:
    using Block = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    static Block generate(Block counter, Key key);
    // Uniform in [0, 1) with 53 random bits taken from the first two words of the block.
    static double uniform(const Block& block);
};

struct SampleResult {
    std::vector<Partition> draws;
    long long tail_resamples = 0;
};

// count i.i.d. draws by inverse CDF over the table rows. Draw i, attempt r uses the counter
// (i mod 2^32, i div 2^32, r, 0) under the key (seed mod 2^32, seed div 2^32); a tail hit moves on to
// attempt r + 1. Throws DomainError when tail_mass >= max_tail.
SampleResult sample(const MeasureTable& table, std::uint64_t seed, long long count, double max_tail = 1e-3);

enum class StatisticKind { Transition, Linear };

// T_ℓ|_λ (Transition, index ℓ) or O_p|_λ (Linear, index p).
struct Statistic {
    StatisticKind kind = StatisticKind::Transition;
    int index = 0;
};

double statistic_value(const Statistic& s, const Partition& lambda, const Params& params);

// Unbiased k-statistics k_1..k_4 of a sample.
struct KStatistics {
    long long n = 0;
    std::array<double, 4> k{};
    // Large-sample standard errors of k_1 and k_2.
    double stderr_k1() const;
    double stderr_k2() const;
};

KStatistics k_statistics(const std::vector<double>& values);

// k-statistic of the given order (1..4) of the statistic evaluated on every draw.
double empirical_cumulants(const std::vector<Partition>& samples, const Statistic& s, int order, const Params& params);

}  // namespace jm
