// Microbenchmarks for the hot paths: field arithmetic, matrix products,
// elimination, key derivation and the measured (cost-accounted) derivation.

#include <benchmark/benchmark.h>

#include "blomkit/cost_model.hpp"
#include "blomkit/modified.hpp"
#include "blomkit/rng.hpp"
#include "blomkit/scheme_instance.hpp"
#include "blomkit/security.hpp"

using namespace blomkit;

namespace {

FieldMatrix random_square(std::size_t n, const PrimeField& f, Rng& rng) {
    FieldMatrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) m.at(r, c) = rng.residue(f);
    }
    return m;
}

void BM_field_mul(benchmark::State& state) {
    const PrimeField f(2147483629);  // largest prime below 2^31
    Rng rng(1);
    const Residue a = rng.residue(f);
    Residue x = rng.residue(f);
    for (auto _ : state) {
        x = f.mul(x, a);
        benchmark::DoNotOptimize(x);
    }
}
BENCHMARK(BM_field_mul);

void BM_mat_mul(benchmark::State& state) {
    const PrimeField f(2147483629);
    Rng rng(2);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const FieldMatrix a = random_square(n, f, rng);
    const FieldMatrix b = random_square(n, f, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(mat_mul(a, b, f));
    }
}
BENCHMARK(BM_mat_mul)->Arg(8)->Arg(32)->Arg(64);

void BM_rank_mod(benchmark::State& state) {
    const PrimeField f(104729);
    Rng rng(3);
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    const FieldMatrix m = random_square(n, f, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(rank_mod(m, f));
    }
}
BENCHMARK(BM_rank_mod)->Arg(16)->Arg(64);

void BM_setup_vandermonde(benchmark::State& state) {
    const PrimeField f(349);
    const SchemeParams params(f, 8, 6);
    for (auto _ : state) {
        benchmark::DoNotOptimize(setup_vandermonde_scheme(params, find_primitive_element(f), 7));
    }
}
BENCHMARK(BM_setup_vandermonde);

void BM_setup_modified(benchmark::State& state) {
    const PrimeField f(349);
    Rng rng(5);
    const auto topo = random_connected_topology(8, 0.5, rng);
    for (auto _ : state) {
        benchmark::DoNotOptimize(setup_modified_scheme(topo, 6, f, std::uint64_t{7}));
    }
}
BENCHMARK(BM_setup_modified);

void BM_pairwise_key(benchmark::State& state) {
    const PrimeField f(349);
    const SchemeParams params(f, 8, 6);
    const auto instance = setup_vandermonde_scheme(params, find_primitive_element(f), 7);
    const auto column = acquire_public_column(instance, 5);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pairwise_key(instance.materials[1].private_row, column, f));
    }
}
BENCHMARK(BM_pairwise_key);

void BM_measured_key_agreement(benchmark::State& state) {
    const PrimeField f(349);
    const SchemeParams params(f, 8, 6);
    const auto instance = setup_vandermonde_scheme(params, find_primitive_element(f), 7);
    const CostModelSpec spec;
    for (auto _ : state) {
        benchmark::DoNotOptimize(measured_key_agreement(instance, 2, 5, spec));
    }
}
BENCHMARK(BM_measured_key_agreement);

void BM_recover_secret_matrix(benchmark::State& state) {
    const PrimeField f(349);
    const SchemeParams params(f, 8, 6);
    const auto instance = setup_vandermonde_scheme(params, find_primitive_element(f), 7);
    std::vector<CompromisedNode> rows;
    for (NodeId id = 1; id <= 7; ++id) {
        const auto row = instance.shares.matrix.row(id - 1);
        rows.push_back(CompromisedNode{id, {row.begin(), row.end()}});
    }
    for (auto _ : state) {
        benchmark::DoNotOptimize(recover_secret_matrix(rows, instance.public_matrix, f));
    }
}
BENCHMARK(BM_recover_secret_matrix);

} // namespace

BENCHMARK_MAIN();
