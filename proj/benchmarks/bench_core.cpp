#include <benchmark/benchmark.h>

#include "jm/asymptotics.hpp"
#include "jm/fock.hpp"
#include "jm/jack.hpp"
#include "jm/ribbon.hpp"
#include "jm/sampler.hpp"

namespace {

const jm::ExactSpecialization kExactPl = jm::plancherel_specialization<jm::GaussRational>();
const jm::Specialization kPl = jm::plancherel_specialization<jm::Complex>();

void BM_PartitionsOfSize(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(jm::partitions_of_size(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_PartitionsOfSize)->Arg(10)->Arg(20)->Arg(30);

void BM_CumulantsExact(benchmark::State& state) {
    int l = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(jm::W_sum<jm::GaussRational>({l, l}, kExactPl, kExactPl));
}
BENCHMARK(BM_CumulantsExact)->Arg(4)->Arg(6)->Arg(8);

void BM_OperatorMoment(benchmark::State& state) {
    int l = static_cast<int>(state.range(0));
    jm::Params params = jm::params_from_ebar_hbar(-1.0, 0.5);
    int reach = jm::operator_reach({l, l}, 1);
    for (auto _ : state) benchmark::DoNotOptimize(jm::joint_moments_operator<jm::Complex>({l, l}, kPl, kPl, params, reach));
}
BENCHMARK(BM_OperatorMoment)->Arg(4)->Arg(6);

void BM_JackBasis(benchmark::State& state) {
    jm::Params params = jm::params_from_ebar_hbar(0.7, 1.1);
    for (auto _ : state) benchmark::DoNotOptimize(jm::jack_basis(static_cast<int>(state.range(0)), params, 4));
}
BENCHMARK(BM_JackBasis)->Arg(4)->Arg(6)->Arg(8);

void BM_LaxResolvent(benchmark::State& state) {
    jm::TruncatedLax lax = jm::truncated_lax(kPl, -1.0, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(jm::resolvent_00(lax, jm::Complex(0.0, 3.0)));
}
BENCHMARK(BM_LaxResolvent)->Arg(100)->Arg(400);

void BM_Sample(benchmark::State& state) {
    jm::MeasureTable table = jm::build_table(kPl, jm::params_from_ebar_hbar(0.0, 0.25), 35);
    std::uint64_t seed = 1;
    for (auto _ : state) benchmark::DoNotOptimize(jm::sample(table, seed++, state.range(0)));
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sample)->Arg(1000)->Arg(10000);

}  // namespace

BENCHMARK_MAIN();
