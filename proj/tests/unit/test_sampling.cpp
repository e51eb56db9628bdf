// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#include <bit>
#include <cmath>
#include <map>
#include <sstream>

#include <gtest/gtest.h>

#include "fermisim/gates.hpp"
#include "fermisim/linalg.hpp"
#include "fermisim/parallel.hpp"
#include "fermisim/random.hpp"
#include "fermisim/sampling.hpp"
#include "fock_oracle.hpp"

namespace fermisim {
namespace {

std::map<Configuration, double> frequencies(const std::vector<Configuration>& shots) {
  std::map<Configuration, double> out;
  for (const auto& c : shots) out[c] += 1.0 / static_cast<double>(shots.size());
  return out;
}

// Exact distribution from the amplitudes of a state vector.
std::map<Configuration, double> exact_distribution(const StateVector& v) {
  const StringSpace sa(v.norb(), v.shape().nalpha);
  const StringSpace sb(v.norb(), v.shape().nbeta);
  std::map<Configuration, double> out;
  for (std::size_t a = 0; a < sa.size(); ++a)
    for (std::size_t b = 0; b < sb.size(); ++b) out[{sa[a], sb[b]}] = std::norm(v.at(a, b));
  return out;
}

double tv_distance(const std::map<Configuration, double>& p, const std::map<Configuration, double>& q) {
  double out = 0.0;
  for (const auto& [c, x] : p) {
    const auto it = q.find(c);
    out += std::abs(x - (it == q.end() ? 0.0 : it->second));
  }
  for (const auto& [c, y] : q) {
    if (!p.count(c)) out += y;
  }
  return 0.5 * out;
}

SlaterSpec random_spec(int norb, std::vector<int> occ_a, std::vector<int> occ_b, std::uint64_t seed) {
  return {norb, std::move(occ_a), std::move(occ_b), {random_unitary(norb, seed), random_unitary(norb, seed + 1)}};
}

TEST(SampleStateVector, BasisState) {
  const SectorShape shape{5, 2, 1};
  const auto v = StateVector::configuration(shape, 0b10010, 0b00100);
  for (const auto& c : sample_state_vector(v, 1000, 1)) {
    EXPECT_EQ(c.alpha, 0b10010u);
    EXPECT_EQ(c.beta, 0b00100u);
  }
}

TEST(SampleStateVector, TwoConfigurationSuperposition) {
  const SectorShape shape{3, 1, 1};
  auto v = StateVector::configuration(shape, 0b001, 0b001);
  v += StateVector::configuration(shape, 0b100, 0b010);
  v *= 1.0 / std::sqrt(2.0);
  const std::size_t shots = 100000;
  const auto samples = sample_state_vector(v, shots, 2);
  double hits = 0.0;
  for (const auto& c : samples) {
    if (c.alpha == 0b001) hits += 1.0;
    else EXPECT_EQ(c, (Configuration{0b100, 0b010}));
  }
  const double sigma = std::sqrt(0.25 / shots);
  EXPECT_LT(std::abs(hits / shots - 0.5), 5.0 * sigma);
}

TEST(SampleStateVector, MatchesAmplitudes) {
  const auto v = random_state_vector({4, 2, 1}, 3);
  const auto samples = sample_state_vector(v, 1000000, 3);
  EXPECT_LT(tv_distance(frequencies(samples), exact_distribution(v)), 0.005);
}

TEST(SampleStateVector, ReproducibleAcrossThreadCounts) {
  const auto v = random_state_vector({5, 2, 2}, 4);
  const int saved = num_threads();
  set_num_threads(1);
  const auto a = sample_state_vector(v, 5000, 4);
  set_num_threads(4);
  const auto b = sample_state_vector(v, 5000, 4);
  set_num_threads(saved);
  EXPECT_EQ(a, b);
  EXPECT_NE(a, sample_state_vector(v, 5000, 5));
}

TEST(SampleStateVector, RejectsUnnormalized) {
  const auto v = cplx(2.0) * StateVector::hartree_fock({3, 1, 1});
  EXPECT_THROW(sample_state_vector(v, 10, 0), std::invalid_argument);
}

TEST(SlaterProbability, IdentityRotation) {
  const SlaterSpec spec{4, {0, 2}, {1}, {Matrix::Identity(4, 4), Matrix::Identity(4, 4)}};
  EXPECT_DOUBLE_EQ(slater_probability(spec, {0b0101, 0b0010}), 1.0);
  EXPECT_DOUBLE_EQ(slater_probability(spec, {0b0011, 0b0010}), 0.0);
  EXPECT_THROW(slater_probability(spec, {0b0001, 0b0010}), std::invalid_argument);
}

TEST(SlaterProbability, SingleOrbital) {
  Matrix u(1, 1);
  u(0, 0) = std::polar(1.0, 0.4);
  const SlaterSpec spec{1, {0}, {}, {u, u}};
  EXPECT_NEAR(slater_probability(spec, {1, 0}), std::norm(u(0, 0)), 1e-15);
}

TEST(SlaterProbability, MatchesRotatedStateVector) {
  const int n = 4;
  const auto spec = random_spec(n, {0, 1}, {2}, 5);
  const SectorShape shape = spec.shape();
  // Oracle: rotate the reference configuration on the Fock space.
  const oracle::FockSpace fock(n);
  const auto ref = StateVector::configuration(shape, 0b0011, 0b0100);
  const Vector psi =
      oracle::orbital_rotation(fock, spec.rotation.u_alpha, spec.rotation.u_beta, shape) * oracle::to_eigen(ref);
  const StringSpace sa(n, 2);
  const StringSpace sb(n, 1);
  double total = 0.0;
  for (std::size_t a = 0; a < sa.size(); ++a)
    for (std::size_t b = 0; b < sb.size(); ++b) {
      const double p = slater_probability(spec, {sa[a], sb[b]});
      total += p;
      EXPECT_NEAR(p, std::norm(psi[static_cast<Eigen::Index>(a * sb.size() + b)]), 1e-12);
    }
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(SampleSlater, IdentityGivesReference) {
  const SlaterSpec spec{5, {1, 3}, {0, 4}, {Matrix::Identity(5, 5), Matrix::Identity(5, 5)}};
  for (const auto& c : sample_slater(spec, 500, 6)) EXPECT_EQ(c, (Configuration{0b01010, 0b10001}));
}

TEST(SampleSlater, SpinlessStatistics) {
  const int n = 6;
  const auto spec = random_spec(n, {0, 1, 2}, {}, 7);
  const std::size_t shots = 100000;
  const auto samples = sample_slater(spec, shots, 7);
  std::map<Configuration, double> exact;
  const StringSpace space(n, 3);
  for (std::size_t i = 0; i < space.size(); ++i) {
    exact[{space[i], 0}] = slater_probability(spec, {space[i], 0});
  }
  EXPECT_LT(tv_distance(frequencies(samples), exact), 0.01);

  const Matrix q = spec.rotation.u_alpha.leftCols(3);
  const RealVector marginal = (q * q.adjoint()).diagonal().real();
  for (int p = 0; p < n; ++p) {
    double hits = 0.0;
    for (const auto& c : samples) hits += (c.alpha >> p) & 1;
    const double sigma = std::sqrt(marginal[p] * (1.0 - marginal[p]) / shots);
    EXPECT_LT(std::abs(hits / shots - marginal[p]), 4.0 * sigma + 1e-12) << p;
  }
}

TEST(SampleSlater, AgreesWithStateVectorSampling) {
  const int n = 4;
  const auto spec = random_spec(n, {0, 2}, {1}, 8);
  auto v = StateVector::configuration(spec.shape(), 0b0101, 0b0010);
  apply_orbital_rotation_inplace(v, spec.rotation);
  const auto from_vector = frequencies(sample_state_vector(v, 100000, 9));
  const auto from_slater = frequencies(sample_slater(spec, 100000, 10));
  EXPECT_LT(tv_distance(from_vector, from_slater), 0.02);
}

TEST(SampleProjectionDpp, SamplesHaveFullRank) {
  const Matrix q = random_unitary(8, 11).leftCols(5);
  CounterRng rng(11, 0);
  for (int k = 0; k < 200; ++k) EXPECT_EQ(std::popcount(sample_projection_dpp(q, rng)), 5);
}

TEST(SlaterSpec, Validation) {
  SlaterSpec spec{3, {0, 0}, {}, {Matrix::Identity(3, 3), Matrix::Identity(3, 3)}};
  EXPECT_THROW(spec.validate(), std::invalid_argument);
  spec.occ_alpha = {3};
  EXPECT_THROW(spec.validate(), std::invalid_argument);
  spec.occ_alpha = {2};
  spec.rotation.u_beta(1, 1) = 0.5;
  EXPECT_THROW(spec.validate(), std::invalid_argument);
}

TEST(SlaterSpec, ParseJson) {
  std::istringstream in(R"({"norb": 2, "occ_alpha": [1], "occ_beta": [0],
                            "u_alpha": [[0, 1], [[1, 0], 0]]})");
  const auto spec = parse_slater_spec_json(in);
  EXPECT_EQ(spec.norb, 2);
  EXPECT_EQ(spec.occ_alpha, std::vector<int>{1});
  EXPECT_EQ(spec.occ_beta, std::vector<int>{0});
  EXPECT_EQ(spec.rotation.u_alpha(0, 1), cplx(1.0));
  EXPECT_EQ(spec.rotation.u_alpha(1, 0), cplx(1.0));
  EXPECT_EQ(spec.rotation.u_beta, spec.rotation.u_alpha);

  std::istringstream bad_json("{norb: 2}");
  EXPECT_THROW(parse_slater_spec_json(bad_json), std::invalid_argument);
  std::istringstream not_unitary(R"({"norb": 2, "occ_alpha": [0], "u_alpha": [[1, 1], [0, 1]]})");
  EXPECT_THROW(parse_slater_spec_json(not_unitary), std::invalid_argument);
  std::istringstream bad_shape(R"({"norb": 2, "u_alpha": [[1, 0]]})");
  EXPECT_THROW(parse_slater_spec_json(bad_shape), std::invalid_argument);
}

TEST(FormatConfiguration, BetaThenAlphaOrbitalZeroRightmost) {
  EXPECT_EQ(format_configuration({0b0011, 0b0001}, 4), "0001/0011");
  EXPECT_EQ(format_configuration({0b1000, 0b0110}, 4), "0110/1000");
  EXPECT_EQ(format_configuration({0, 0}, 0), "/");
}

}  // namespace
}  // namespace fermisim
