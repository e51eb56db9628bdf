// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

// Serial reference kernels against their OpenMP counterparts, plus Slater
// sampling cost as the orbital count doubles.

#include <numeric>

#include <benchmark/benchmark.h>

#include "fermisim/kernels.hpp"
#include "fermisim/linalg.hpp"
#include "fermisim/sampling.hpp"
#include "fermisim/statevector.hpp"

namespace fermisim {
namespace {

using kernels::AmplitudeMatrix;
using kernels::ConstAmplitudeMatrix;

SectorShape half_filled(int norb) { return {norb, norb / 2, norb / 2}; }

AmplitudeMatrix view(StateVector& v) { return {v.data(), v.dim_alpha(), v.dim_beta()}; }
ConstAmplitudeMatrix cview(const StateVector& v) { return {v.data(), v.dim_alpha(), v.dim_beta()}; }

template <auto Kernel>
void BM_RotateRowPairs(benchmark::State& state) {
  const auto shape = half_filled(static_cast<int>(state.range(0)));
  const auto pairs = string_pairs(StringSpace(shape.norb, shape.nalpha), 0, 1);
  auto vec = random_state_vector(shape, 1);
  const cplx s = std::polar(0.8, 0.3);
  for (auto _ : state) {
    Kernel(view(vec), pairs, 0.6, s);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(vec.size()));
}

template <auto Kernel>
void BM_RotateColumnPairs(benchmark::State& state) {
  const auto shape = half_filled(static_cast<int>(state.range(0)));
  const auto pairs = string_pairs(StringSpace(shape.norb, shape.nbeta), 0, 1);
  auto vec = random_state_vector(shape, 2);
  const cplx s = std::polar(0.8, 0.3);
  for (auto _ : state) {
    Kernel(view(vec), pairs, 0.6, s);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(vec.size()));
}

template <auto Kernel>
void BM_OneBodyRows(benchmark::State& state) {
  const auto shape = half_filled(static_cast<int>(state.range(0)));
  const ExcitationTable table(shape.norb, shape.nalpha);
  const Matrix h = random_hermitian(shape.norb, 3);
  const auto in = random_state_vector(shape, 4);
  StateVector out(shape);
  for (auto _ : state) {
    Kernel(view(out), cview(in), table, h);
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(in.size()));
}

// range(0) orbitals, range(1) electrons per spin (0 means half filling).
void BM_SampleSlater(benchmark::State& state) {
  const int norb = static_cast<int>(state.range(0));
  const int nocc = state.range(1) > 0 ? static_cast<int>(state.range(1)) : norb / 2;
  SlaterSpec spec;
  spec.norb = norb;
  spec.occ_alpha.resize(nocc);
  std::iota(spec.occ_alpha.begin(), spec.occ_alpha.end(), 0);
  spec.occ_beta = spec.occ_alpha;
  const Matrix u = random_unitary(norb, 5);
  spec.rotation = OrbitalRotationSpec{u, u};
  constexpr std::size_t kShots = 1000;
  for (auto _ : state) benchmark::DoNotOptimize(sample_slater(spec, kShots, 6));
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(kShots));
}

BENCHMARK(BM_RotateRowPairs<kernels::serial::rotate_row_pairs>)->Name("rotate_rows/serial")->DenseRange(8, 14, 2);
BENCHMARK(BM_RotateRowPairs<kernels::parallel::rotate_row_pairs>)->Name("rotate_rows/parallel")->DenseRange(8, 14, 2);
BENCHMARK(BM_RotateColumnPairs<kernels::serial::rotate_column_pairs>)->Name("rotate_columns/serial")->DenseRange(8, 14, 2);
BENCHMARK(BM_RotateColumnPairs<kernels::parallel::rotate_column_pairs>)->Name("rotate_columns/parallel")->DenseRange(8, 14, 2);
BENCHMARK(BM_OneBodyRows<kernels::serial::one_body_rows>)->Name("one_body_rows/serial")->DenseRange(8, 12, 2);
BENCHMARK(BM_OneBodyRows<kernels::parallel::one_body_rows>)->Name("one_body_rows/parallel")->DenseRange(8, 12, 2);
BENCHMARK(BM_SampleSlater)->Name("sample_slater/half_filled")->ArgsProduct({{8, 16, 32, 64}, {0}});
BENCHMARK(BM_SampleSlater)->Name("sample_slater/fixed_eta")->ArgsProduct({{8, 16, 32, 64}, {4}});

}  // namespace
}  // namespace fermisim

BENCHMARK_MAIN();
