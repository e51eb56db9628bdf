// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermisim/sampling.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <istream>
#include <stdexcept>

#include <json.hpp>

#include "fermisim/linalg.hpp"

namespace fermisim {

namespace {

constexpr double kNormalizationTol = 1e-8;

void check_reference(const std::vector<int>& occ, int norb, const char* name) {
  StringMask seen = 0;
  for (int p : occ) {
    if (p < 0 || p >= norb) {
      throw std::invalid_argument(std::string(name) + " reference orbital out of range");
    }
    if (seen & (StringMask{1} << p)) {
      throw std::invalid_argument(std::string(name) + " reference orbital repeated");
    }
    seen |= StringMask{1} << p;
  }
}

Matrix reference_columns(const Matrix& u, const std::vector<int>& occ) {
  Matrix q(u.rows(), static_cast<Eigen::Index>(occ.size()));
  for (std::size_t k = 0; k < occ.size(); ++k) q.col(static_cast<Eigen::Index>(k)) = u.col(occ[k]);
  return q;
}

double spin_probability(const Matrix& u, const std::vector<int>& ref, StringMask occ, int norb) {
  if (std::popcount(occ) != static_cast<int>(ref.size())) {
    throw std::invalid_argument("configuration particle number does not match the reference");
  }
  if (norb < kMaxOrbitals && (occ >> norb) != 0) {
    throw std::invalid_argument("configuration occupies an orbital outside the system");
  }
  if (ref.empty()) return 1.0;
  const auto k = static_cast<Eigen::Index>(ref.size());
  Matrix sub(k, k);
  Eigen::Index row = 0;
  for (StringMask m = occ; m; m &= m - 1, ++row) {
    const int p = std::countr_zero(m);
    for (Eigen::Index c = 0; c < k; ++c) sub(row, c) = u(p, ref[static_cast<std::size_t>(c)]);
  }
  return std::norm(Eigen::PartialPivLU<Matrix>(sub).determinant());
}

}  // namespace

void SlaterSpec::validate(double tol) const {
  if (norb < 0 || norb > kMaxOrbitals) throw std::invalid_argument("norb out of range");
  check_reference(occ_alpha, norb, "alpha");
  check_reference(occ_beta, norb, "beta");
  for (const Matrix* u : {&rotation.u_alpha, &rotation.u_beta}) {
    if (u->rows() != norb || u->cols() != norb) {
      throw std::invalid_argument("rotation must be " + std::to_string(norb) + "x" +
                                  std::to_string(norb));
    }
    if (!is_unitary(*u, tol)) throw std::invalid_argument("rotation is not unitary");
  }
}

SectorShape SlaterSpec::shape() const {
  return {norb, static_cast<int>(occ_alpha.size()), static_cast<int>(occ_beta.size())};
}

std::vector<Configuration> sample_state_vector(const StateVector& vec, std::size_t shots,
                                               std::uint64_t seed) {
  const double norm2 = vec.norm() * vec.norm();
  if (std::abs(norm2 - 1.0) > kNormalizationTol) {
    throw std::invalid_argument("state vector is not normalized (norm^2 = " +
                                std::to_string(norm2) + ")");
  }
  std::vector<double> cdf(vec.size());
  double running = 0.0;
  for (std::size_t i = 0; i < vec.size(); ++i) {
    running += std::norm(vec[i]);
    cdf[i] = running;
  }
  const StringSpace alpha(vec.norb(), vec.shape().nalpha);
  const StringSpace beta(vec.norb(), vec.shape().nbeta);
  const std::size_t db = vec.dim_beta();

  std::vector<Configuration> out(shots);
  const auto n = static_cast<std::int64_t>(shots);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k) {
    CounterRng rng(seed, static_cast<std::uint64_t>(k));
    const double x = rng.uniform() * running;
    auto idx = static_cast<std::size_t>(std::upper_bound(cdf.begin(), cdf.end(), x) - cdf.begin());
    idx = std::min(idx, cdf.size() - 1);
    out[static_cast<std::size_t>(k)] = {alpha[idx / db], beta[idx % db]};
  }
  return out;
}

double slater_probability(const SlaterSpec& spec, const Configuration& config) {
  spec.validate();
  const double pa = spin_probability(spec.rotation.u_alpha, spec.occ_alpha, config.alpha, spec.norb);
  const double pb = spin_probability(spec.rotation.u_beta, spec.occ_beta, config.beta, spec.norb);
  return pa * pb;
}

StringMask sample_projection_dpp(const Matrix& q, CounterRng& rng) {
  const Eigen::Index n = q.rows();
  Matrix w = q;
  StringMask chosen = 0;
  std::vector<double> weight(static_cast<std::size_t>(n));
  // Each step picks row j with probability |w_j|^2 / rank, then rotates the
  // columns so row j lives in the first column alone and drops that column.
  while (w.cols() > 0) {
    double total = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      const double r = (chosen >> j) & 1 ? 0.0 : std::max(0.0, w.row(j).squaredNorm());
      weight[static_cast<std::size_t>(j)] = r;
      total += r;
    }
    if (!(total > 0.0)) throw std::invalid_argument("projection kernel lost rank while sampling");
    const double x = rng.uniform() * total;
    Eigen::Index pick = -1;
    double acc = 0.0;
    for (Eigen::Index j = 0; j < n; ++j) {
      if (weight[static_cast<std::size_t>(j)] <= 0.0) continue;
      pick = j;
      acc += weight[static_cast<std::size_t>(j)];
      if (x < acc) break;
    }
    chosen |= StringMask{1} << pick;

    const Eigen::Index k = w.cols();
    if (k == 1) break;
    // Householder reflection P with first column proportional to y = row^dagger / |row|.
    Vector y = w.row(pick).adjoint();
    y /= y.norm();
    const double a0 = std::abs(y[0]);
    const cplx phase = a0 > 0.0 ? y[0] / a0 : cplx(1.0);
    Vector u = y;
    u[0] += phase;  // u = y - alpha e1 with alpha = -phase
    const double unorm2 = u.squaredNorm();
    const Vector wu = w * u;
    Matrix reduced(n, k - 1);
    const cplx scale = 2.0 / unorm2;
    for (Eigen::Index c = 1; c < k; ++c) {
      reduced.col(c - 1) = w.col(c) - scale * std::conj(u[c]) * wu;
    }
    w = std::move(reduced);
  }
  return chosen;
}

std::vector<Configuration> sample_slater(const SlaterSpec& spec, std::size_t shots,
                                         std::uint64_t seed) {
  spec.validate();
  const Matrix qa = reference_columns(spec.rotation.u_alpha, spec.occ_alpha);
  const Matrix qb = reference_columns(spec.rotation.u_beta, spec.occ_beta);
  std::vector<Configuration> out(shots);
  const auto n = static_cast<std::int64_t>(shots);
#pragma omp parallel for schedule(static)
  for (std::int64_t k = 0; k < n; ++k) {
    CounterRng rng(seed, static_cast<std::uint64_t>(k));
    Configuration c;
    c.alpha = sample_projection_dpp(qa, rng);
    c.beta = sample_projection_dpp(qb, rng);
    out[static_cast<std::size_t>(k)] = c;
  }
  return out;
}

namespace {

using nlohmann::json;

cplx json_scalar(const json& v, const std::string& where) {
  if (v.is_number()) return v.get<double>();
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw std::invalid_argument(where + ": entries must be numbers or [re, im] pairs");
}

Matrix json_matrix(const json& j, int n, const std::string& where) {
  if (!j.is_array() || j.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument(where + " must have " + std::to_string(n) + " rows");
  }
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
      throw std::invalid_argument(where + " row " + std::to_string(i) + " has the wrong length");
    }
    for (int k = 0; k < n; ++k) m(i, k) = json_scalar(row[static_cast<std::size_t>(k)], where);
  }
  return m;
}

std::vector<int> json_orbitals(const json& doc, const char* key) {
  if (!doc.contains(key)) return {};
  if (!doc[key].is_array()) throw std::invalid_argument(std::string(key) + " must be an array");
  std::vector<int> out;
  for (const json& v : doc[key]) {
    if (!v.is_number_integer()) throw std::invalid_argument(std::string(key) + " must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

}  // namespace

SlaterSpec parse_slater_spec_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("Slater spec is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("norb") || !doc["norb"].is_number_integer()) {
    throw std::invalid_argument("Slater spec needs an integer 'norb'");
  }
  SlaterSpec spec;
  spec.norb = doc["norb"].get<int>();
  if (spec.norb < 0 || spec.norb > kMaxOrbitals) throw std::invalid_argument("norb out of range");
  spec.occ_alpha = json_orbitals(doc, "occ_alpha");
  spec.occ_beta = json_orbitals(doc, "occ_beta");
  if (doc.contains("u_alpha")) {
    spec.rotation.u_alpha = json_matrix(doc["u_alpha"], spec.norb, "u_alpha");
  } else {
    spec.rotation.u_alpha = Matrix::Identity(spec.norb, spec.norb);
  }
  spec.rotation.u_beta = doc.contains("u_beta") ? json_matrix(doc["u_beta"], spec.norb, "u_beta")
                                                : spec.rotation.u_alpha;
  spec.validate();
  return spec;
}

std::string format_configuration(const Configuration& config, int norb) {
  std::string out(static_cast<std::size_t>(2 * norb + 1), '0');
  out[static_cast<std::size_t>(norb)] = '/';
  for (int p = 0; p < norb; ++p) {
    if ((config.beta >> p) & 1) out[static_cast<std::size_t>(norb - 1 - p)] = '1';
    if ((config.alpha >> p) & 1) out[static_cast<std::size_t>(2 * norb - p)] = '1';
  }
  return out;
}

}  // namespace fermisim
