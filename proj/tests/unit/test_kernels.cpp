// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

// Serial and OpenMP kernels must agree bitwise for every thread count.

#include <cstring>

#include <gtest/gtest.h>

#include "fermisim/kernels.hpp"
#include "fermisim/linalg.hpp"
#include "fermisim/parallel.hpp"
#include "fermisim/random.hpp"

namespace fermisim {
namespace {

using kernels::AmplitudeMatrix;
using kernels::ConstAmplitudeMatrix;

constexpr SectorShape kShape{11, 4, 3};  // 330 x 165, above the parallel threshold

bool bitwise_equal(const StateVector& a, const StateVector& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(cplx)) == 0;
}

AmplitudeMatrix view(StateVector& v) { return {v.data(), v.dim_alpha(), v.dim_beta()}; }
ConstAmplitudeMatrix cview(const StateVector& v) { return {v.data(), v.dim_alpha(), v.dim_beta()}; }

std::vector<cplx> random_phases(std::size_t n, std::uint64_t seed) {
  CounterRng rng(seed, 0);
  std::vector<cplx> out(n);
  for (auto& z : out) z = std::polar(1.0, 6.283185307179586 * rng.uniform());
  return out;
}

class KernelParity : public ::testing::TestWithParam<int> {
 protected:
  void SetUp() override {
    saved_ = num_threads();
    set_num_threads(GetParam());
  }
  void TearDown() override { set_num_threads(saved_); }

 private:
  int saved_ = 1;
};

TEST_P(KernelParity, RotateRowPairs) {
  const StringSpace space(kShape.norb, kShape.nalpha);
  const auto pairs = string_pairs(space, 2, 7);
  const cplx s = std::polar(std::sqrt(1.0 - 0.36), 0.4);
  auto a = random_state_vector(kShape, 1);
  auto b = a;
  kernels::serial::rotate_row_pairs(view(a), pairs, 0.6, s);
  kernels::parallel::rotate_row_pairs(view(b), pairs, 0.6, s);
  EXPECT_TRUE(bitwise_equal(a, b));
}

TEST_P(KernelParity, RotateColumnPairs) {
  const StringSpace space(kShape.norb, kShape.nbeta);
  const auto pairs = string_pairs(space, 5, 1);
  const cplx s = std::polar(0.8, -1.1);
  auto a = random_state_vector(kShape, 2);
  auto b = a;
  kernels::serial::rotate_column_pairs(view(a), pairs, 0.6, s);
  kernels::parallel::rotate_column_pairs(view(b), pairs, 0.6, s);
  EXPECT_TRUE(bitwise_equal(a, b));
}

TEST_P(KernelParity, ScaleOuter) {
  auto a = random_state_vector(kShape, 3);
  auto b = a;
  const auto rows = random_phases(a.dim_alpha(), 4);
  const auto cols = random_phases(a.dim_beta(), 5);
  kernels::serial::scale_outer(view(a), rows, cols);
  kernels::parallel::scale_outer(view(b), rows, cols);
  EXPECT_TRUE(bitwise_equal(a, b));
}

TEST_P(KernelParity, ScaleDiagCoulomb) {
  auto a = random_state_vector(kShape, 6);
  auto b = a;
  const auto rows = random_phases(a.dim_alpha(), 7);
  const auto cols = random_phases(a.dim_beta(), 8);
  const auto cross = random_phases(a.dim_alpha() * kShape.norb, 9);
  const auto beta_occ = StringSpace(kShape.norb, kShape.nbeta).occupied_lists();
  kernels::serial::scale_diag_coulomb(view(a), rows, cols, cross, kShape.norb, beta_occ, kShape.nbeta);
  kernels::parallel::scale_diag_coulomb(view(b), rows, cols, cross, kShape.norb, beta_occ,
                                        kShape.nbeta);
  EXPECT_TRUE(bitwise_equal(a, b));
}

TEST_P(KernelParity, OneBodyRowsAndColumns) {
  const auto in = random_state_vector(kShape, 10);
  const Matrix h = random_hermitian(kShape.norb, 11);
  const ExcitationTable ta(kShape.norb, kShape.nalpha);
  const ExcitationTable tb(kShape.norb, kShape.nbeta);
  StateVector a(kShape);
  StateVector b(kShape);
  kernels::serial::one_body_rows(view(a), cview(in), ta, h);
  kernels::parallel::one_body_rows(view(b), cview(in), ta, h);
  EXPECT_TRUE(bitwise_equal(a, b));
  kernels::serial::one_body_columns(view(a), cview(in), tb, h);
  kernels::parallel::one_body_columns(view(b), cview(in), tb, h);
  EXPECT_TRUE(bitwise_equal(a, b));
}

INSTANTIATE_TEST_SUITE_P(Threads, KernelParity, ::testing::Values(1, 2, 4));

TEST(Kernels, RotateRowPairsDefinition) {
  const SectorShape shape{5, 2, 2};
  const StringSpace space(5, 2);
  const auto pairs = string_pairs(space, 1, 3);
  const double c = 0.28;
  const cplx s = std::polar(0.96, 0.7);
  const auto in = random_state_vector(shape, 12);
  auto out = in;
  kernels::serial::rotate_row_pairs(view(out), pairs, c, s);
  const std::size_t cols = in.dim_beta();
  std::vector<bool> touched(in.dim_alpha(), false);
  for (const auto& pr : pairs) {
    touched[pr.first] = touched[pr.second] = true;
    for (std::size_t j = 0; j < cols; ++j) {
      const cplx x = in.at(pr.first, j);
      const cplx y = in.at(pr.second, j);
      EXPECT_NEAR(std::abs(out.at(pr.first, j) - (c * x + s * pr.sign * y)), 0.0, 1e-15);
      EXPECT_NEAR(std::abs(out.at(pr.second, j) - (-std::conj(s) * pr.sign * x + c * y)), 0.0, 1e-15);
    }
  }
  for (std::size_t i = 0; i < in.dim_alpha(); ++i) {
    if (touched[i]) continue;
    for (std::size_t j = 0; j < cols; ++j) EXPECT_EQ(out.at(i, j), in.at(i, j));
  }
}

TEST(Kernels, OneBodyRowsDefinition) {
  const SectorShape shape{4, 2, 1};
  const auto in = random_state_vector(shape, 13);
  const Matrix h = random_hermitian(4, 14);
  const ExcitationTable table(4, 2);
  StateVector out(shape);
  kernels::serial::one_body_rows(view(out), cview(in), table, h);
  // Scatter form of the same sum, straight from the table definition.
  StateVector ref(shape);
  for (std::size_t s = 0; s < table.num_strings(); ++s) {
    for (const auto& e : table[s]) {
      for (std::size_t j = 0; j < in.dim_beta(); ++j) {
        ref.at(e.target, j) += h(e.q, e.p) * static_cast<double>(e.sign) * in.at(s, j);
      }
    }
  }
  EXPECT_LT(max_abs_diff(out, ref), 1e-14);
}

TEST(Parallel, EnvironmentOverride) {
  const int saved = num_threads();
  setenv(kThreadsEnv, "3", 1);
  EXPECT_EQ(init_threads_from_env(), 3);
  EXPECT_EQ(num_threads(), 3);
  setenv(kThreadsEnv, "bogus", 1);
  EXPECT_EQ(init_threads_from_env(), 3);
  unsetenv(kThreadsEnv);
  set_num_threads(saved);
}

}  // namespace
}  // namespace fermisim
