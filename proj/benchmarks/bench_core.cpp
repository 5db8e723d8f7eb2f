// Microbenchmarks for the hot paths: basis enumeration, Hamiltonian
// assembly, sparse matvec, sector construction, FSA stepping, half-cut
// entropy.

#include <benchmark/benchmark.h>

#include <random>

#include "pxp1/dynamics.hpp"
#include "pxp1/fsa.hpp"
#include "pxp1/hamiltonian.hpp"
#include "pxp1/linalg.hpp"
#include "pxp1/spectral.hpp"
#include "pxp1/symmetry.hpp"

using namespace pxp1;

namespace {

ConstrainedBasis model_basis(ModelPreset m, int L) {
    return ConstrainedBasis::enumerate(ConstraintSet::preset(m), L, Boundary::PBC);
}

void bm_enumerate(benchmark::State& state) {
    const int L = static_cast<int>(state.range(0));
    for (auto _ : state) {
        auto basis = model_basis(ModelPreset::ModelI, L);
        benchmark::DoNotOptimize(basis.dimension());
    }
}
BENCHMARK(bm_enumerate)->Arg(10)->Arg(14)->Arg(16);

void bm_build_hamiltonian(benchmark::State& state) {
    const int L = static_cast<int>(state.range(0));
    auto basis = model_basis(ModelPreset::ModelII, L);
    for (auto _ : state) {
        auto h = build_hamiltonian(basis);
        benchmark::DoNotOptimize(h.nnz());
    }
}
BENCHMARK(bm_build_hamiltonian)->Arg(8)->Arg(10)->Arg(12);

void bm_matvec(benchmark::State& state) {
    const int L = static_cast<int>(state.range(0));
    auto basis = model_basis(ModelPreset::ModelII, L);
    auto h = build_hamiltonian(basis);
    std::vector<double> x(static_cast<std::size_t>(h.dim)), y(static_cast<std::size_t>(h.dim));
    std::mt19937_64 rng(1);
    for (auto& v : x) v = std::uniform_real_distribution<double>(-1, 1)(rng);
    for (auto _ : state) {
        h.apply(x.data(), y.data());
        benchmark::DoNotOptimize(y.data());
    }
    state.SetItemsProcessed(state.iterations() * h.nnz());
}
BENCHMARK(bm_matvec)->Arg(10)->Arg(12);

void bm_sector_build(benchmark::State& state) {
    const int L = static_cast<int>(state.range(0));
    auto basis = model_basis(ModelPreset::ModelI, L);
    for (auto _ : state) {
        auto sector = SymmetrySector::build(basis, 0, +1);
        benchmark::DoNotOptimize(sector.dimension());
    }
}
BENCHMARK(bm_sector_build)->Arg(12)->Arg(14);

void bm_fsa(benchmark::State& state) {
    const int L = static_cast<int>(state.range(0));
    auto basis = model_basis(ModelPreset::ModelIII, L);
    auto h = build_hamiltonian(basis);
    auto split = split_hamiltonian(h, basis);
    for (auto _ : state) {
        auto run = forward_scatter(split, basis);
        benchmark::DoNotOptimize(run.delta_total);
    }
}
BENCHMARK(bm_fsa)->Arg(10)->Arg(12);

void bm_half_cut_entropy(benchmark::State& state) {
    const int L = static_cast<int>(state.range(0));
    auto basis = model_basis(ModelPreset::ModelI, L);
    HalfCutSplitter split(basis, L / 2);
    std::vector<double> v(static_cast<std::size_t>(basis.dimension()));
    std::mt19937_64 rng(2);
    double n2 = 0.0;
    for (auto& x : v) {
        x = std::uniform_real_distribution<double>(-1, 1)(rng);
        n2 += x * x;
    }
    for (auto& x : v) x /= std::sqrt(n2);
    for (auto _ : state) {
        benchmark::DoNotOptimize(split.entropy(v));
    }
}
BENCHMARK(bm_half_cut_entropy)->Arg(12)->Arg(14);

void bm_krylov_quench_step(benchmark::State& state) {
    const int L = static_cast<int>(state.range(0));
    auto basis = model_basis(ModelPreset::ModelII, L);
    auto h = build_hamiltonian(basis);
    QuenchParams p;
    p.t_max = 0.5;
    for (auto _ : state) {
        auto res = evolve_z2(h, basis, p);
        benchmark::DoNotOptimize(res.norm.back());
    }
}
BENCHMARK(bm_krylov_quench_step)->Arg(10);

}  // namespace

int main(int argc, char** argv) {
    pxp1::linalg::pin_blas_single_thread();
    benchmark::Initialize(&argc, argv);
    benchmark::RunSpecifiedBenchmarks();
    return 0;
}
