// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#include <fstream>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "fermisim/experiments.hpp"
#include "fermisim/gate_count.hpp"
#include "fermisim/gates.hpp"
#include "fermisim/hubbard.hpp"
#include "fermisim/linalg.hpp"

namespace fermisim {
namespace {

// Nearest-neighbour pairs by scanning every site pair of the torus distance.
std::set<std::pair<int, int>> edges_by_distance(int nx, int ny, bool periodic_x) {
  std::set<std::pair<int, int>> out;
  for (int a = 0; a < nx * ny; ++a)
    for (int b = a + 1; b < nx * ny; ++b) {
      const int ax = a % nx;
      const int ay = a / nx;
      const int bx = b % nx;
      const int by = b / nx;
      int dx = std::abs(ax - bx);
      if (periodic_x) dx = std::min(dx, nx - dx);
      const int dy = std::abs(ay - by);
      if (dx + dy == 1) out.insert({a, b});
    }
  return out;
}

CircuitPlan parse_plan(const std::string& text) {
  std::istringstream in(text);
  return parse_plan_json(in);
}

TEST(Hubbard, SingleSite) {
  const auto ham = build_hubbard({1, 1, 1.0, 8.0, true});
  EXPECT_EQ(ham.one_body.cwiseAbs().maxCoeff(), 0.0);
  ASSERT_EQ(ham.j_ab.rows(), 1);
  EXPECT_EQ(ham.j_ab(0, 0), 8.0);
  EXPECT_EQ(ham.j_aa(0, 0), 0.0);
  EXPECT_EQ(ham.j_bb(0, 0), 0.0);
}

TEST(Hubbard, EdgesMatchGridDistance) {
  for (int nx = 1; nx <= 5; ++nx)
    for (int ny = 1; ny <= 4; ++ny)
      for (bool periodic : {false, true}) {
        const auto edges = hubbard_edges({nx, ny, 1.0, 8.0, periodic});
        const std::set<std::pair<int, int>> unique(edges.begin(), edges.end());
        EXPECT_EQ(unique.size(), edges.size()) << "duplicate edge";
        EXPECT_EQ(unique, edges_by_distance(nx, ny, periodic)) << nx << "x" << ny << " " << periodic;
      }
  EXPECT_EQ(hubbard_edges({2, 2, 1.0, 8.0, true}).size(), 4u);
}

TEST(Hubbard, Matrices) {
  const auto ham = build_hubbard({3, 2, 0.5, 4.0, true});
  EXPECT_NO_THROW(ham.validate());
  const auto edges = hubbard_edges({3, 2, 0.5, 4.0, true});
  Matrix expected = Matrix::Zero(6, 6);
  for (auto [p, q] : edges) expected(p, q) = expected(q, p) = -0.5;
  EXPECT_EQ((ham.one_body - expected).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ((ham.j_ab - 4.0 * RealMatrix::Identity(6, 6)).cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(ham.j_aa.cwiseAbs().maxCoeff(), 0.0);
  EXPECT_EQ(ham.constant, 0.0);
}

TEST(Hubbard, Filling) {
  EXPECT_EQ(electrons_per_spin(32, 0.125), 4);
  EXPECT_EQ(electrons_per_spin(8, 0.25), 2);
  EXPECT_EQ(electrons_per_spin(4, 0.25), 1);
  EXPECT_THROW(electrons_per_spin(4, 0.3), std::invalid_argument);
  EXPECT_THROW(electrons_per_spin(4, 1.5), std::invalid_argument);
  EXPECT_THROW(build_hubbard({0, 2, 1.0, 8.0, true}), std::invalid_argument);
}

TEST(GivensCount, StandardPatterns) {
  for (int n = 1; n <= 8; ++n) {
    EXPECT_EQ(givens_count(SparsityMask::dense(n)), static_cast<std::size_t>(n * (n - 1) / 2));
    EXPECT_EQ(givens_count(SparsityMask::identity(n)), 0u);
  }
}

TEST(GivensCount, BoundsNontrivialRotations) {
  // Block-diagonal unitaries: the decomposition never needs more rotations than the pattern predicts.
  for (int split = 1; split < 6; ++split) {
    Matrix u = Matrix::Zero(6, 6);
    u.topLeftCorner(split, split) = random_unitary(split, split);
    u.bottomRightCorner(6 - split, 6 - split) = random_unitary(6 - split, 10 + split);
    const auto dec = givens_decompose(u);
    std::size_t nontrivial = 0;
    for (const auto& rot : dec.rotations) nontrivial += !rot.is_identity();
    const std::size_t predicted = givens_count(SparsityMask::of(u, 1e-14));
    EXPECT_LE(nontrivial, predicted);
    EXPECT_LT(predicted, 15u);
  }
}

TEST(GateCount, Examples) {
  EXPECT_EQ(count_two_qubit_gates({4, {RotationOp{SparsityMask::dense(4), SparsityMask::dense(4)}}}), 12u);
  const int n = 6;
  const DiagCoulombOp onsite{SparsityMask::zero(n), SparsityMask::identity(n), SparsityMask::zero(n)};
  EXPECT_EQ(count_two_qubit_gates({n, {onsite}}), static_cast<std::size_t>(n));
  EXPECT_EQ(count_two_qubit_gates({n, {}}), 0u);
  const DiagCoulombOp dense{SparsityMask::dense(n), SparsityMask::dense(n), SparsityMask::dense(n)};
  EXPECT_EQ(count_two_qubit_gates({n, {dense}}), static_cast<std::size_t>(n * (n - 1) + n * n));
  EXPECT_EQ(count_two_qubit_gates({8, {SlaterPrepOp{8, 3, 2}}}), 3u * 5 + 2u * 6);
}

TEST(GateCount, AdjacentRotationsMerge) {
  const RotationOp a{SparsityMask::dense(4), std::nullopt};
  const RotationOp b{std::nullopt, SparsityMask::dense(4)};
  const CircuitPlan plan{4, {a, b, a}};
  EXPECT_EQ(merge_rotations(plan).ops.size(), 1u);
  EXPECT_EQ(count_two_qubit_gates(plan), 12u);
  const DiagCoulombOp c{SparsityMask::zero(4), SparsityMask::identity(4), SparsityMask::zero(4)};
  EXPECT_EQ(count_two_qubit_gates({4, {a, c, a}}), 6u + 4u + 6u);
  // Product of two identity patterns stays free.
  const RotationOp phase{SparsityMask::identity(4), SparsityMask::identity(4)};
  EXPECT_EQ(count_two_qubit_gates({4, {phase, phase}}), 0u);
}

TEST(GateCount, TrotterCircuits) {
  const auto ham = build_hubbard({2, 2, 1.0, 8.0, true});
  EXPECT_EQ(trotter_gate_count(ham, 0, 1), 16u);
  EXPECT_EQ(trotter_gate_count(ham, 0, 4), 64u);
  EXPECT_EQ(trotter_gate_count(ham, 1, 1), 12u + 4u + 12u);
  EXPECT_EQ(trotter_gate_count(ham, 1, 2), 3u * 12u + 2u * 4u);
  EXPECT_GT(trotter_gate_count(ham, 2, 1), trotter_gate_count(ham, 1, 1));
}

TEST(PlanJson, ParsesAndCounts) {
  std::ifstream in(std::string(FERMISIM_TEST_DATA_DIR) + "/hubbard_step.json");
  ASSERT_TRUE(in);
  EXPECT_EQ(count_two_qubit_gates(parse_plan_json(in)), 16u);

  const auto plan = parse_plan(R"({"norb": 3, "ops": [
      {"type": "orbital_rotation", "alpha": [[1, 1, 0], [1, 1, 0], [0, 0, true]]},
      {"type": "slater_prep", "nalpha": 1, "nbeta": 2},
      {"type": "diag_coulomb", "j_aa": "dense"}]})");
  ASSERT_EQ(plan.ops.size(), 3u);
  EXPECT_EQ(count_two_qubit_gates(plan), 1u + (1u * 2 + 2u * 1) + 3u);
}

TEST(PlanJson, Errors) {
  const char* bad[] = {
      "not json",
      R"({"ops": []})",
      R"({"norb": 2})",
      R"({"norb": 2, "ops": [{"type": "teleport"}]})",
      R"({"norb": 2, "ops": [{"type": "orbital_rotation", "alpha": "sparse"}]})",
      R"({"norb": 2, "ops": [{"type": "orbital_rotation", "alpha": [[1, 0]]}]})",
      R"({"norb": 2, "ops": [{"type": "slater_prep", "nalpha": 3, "nbeta": 0}]})",
      R"({"norb": 2, "ops": [{"nalpha": 1}]})",
  };
  for (const char* text : bad) EXPECT_THROW(parse_plan(text), std::invalid_argument) << text;
}

}  // namespace
}  // namespace fermisim
