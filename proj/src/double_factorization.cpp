// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "fermisim/hamiltonians.hpp"

namespace fermisim {

namespace {
constexpr double kInputSymmetryTol = 1e-8;
}  // namespace

DoubleFactorization double_factorize(const TwoBodyTensor& two_body, double tol,
                                     std::optional<std::size_t> max_terms) {
  const int n = two_body.norb();
  if (!(tol >= 0.0)) throw std::invalid_argument("tolerance must be non-negative");
  const double asym = two_body.symmetry_error();
  if (asym > kInputSymmetryTol) {
    throw std::invalid_argument("two-body tensor lacks real 8-fold symmetry (error " +
                                std::to_string(asym) + ")");
  }
  DoubleFactorization out;
  if (n == 0) return out;

  const Eigen::Index n2 = static_cast<Eigen::Index>(n) * n;
  RealMatrix mat(n2, n2);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) mat(p * n + q, r * n + s) = two_body(p, q, r, s).real();
  mat = 0.5 * (mat + mat.transpose()).eval();

  Eigen::SelfAdjointEigenSolver<RealMatrix> eig(mat);
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n2));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  const RealVector& w = eig.eigenvalues();
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index a, Eigen::Index b) { return std::abs(w[a]) > std::abs(w[b]); });

  const std::size_t limit = max_terms.value_or(order.size());
  for (Eigen::Index idx : order) {
    const double wt = w[idx];
    if (std::abs(wt) <= tol || out.terms.size() >= limit) {
      if (wt != 0.0) out.dropped_eigenvalues.push_back(wt);
      continue;
    }
    RealMatrix g(n, n);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) g(p, q) = eig.eigenvectors()(p * n + q, idx);
    g = 0.5 * (g + g.transpose()).eval();
    Eigen::SelfAdjointEigenSolver<RealMatrix> geig(g);
    const RealVector& mu = geig.eigenvalues();
    DoubleFactorizedTerm term;
    term.u = geig.eigenvectors().cast<cplx>();
    term.j.resize(n, n);
    for (int k = 0; k < n; ++k)
      for (int l = k; l < n; ++l) {
        const double value = wt * mu[k] * mu[l];
        term.j(k, l) = value;
        term.j(l, k) = value;
      }
    out.terms.push_back(std::move(term));
    out.eigenvalues.push_back(wt);
  }
  return out;
}

TwoBodyTensor reconstruct_two_body(const std::vector<DoubleFactorizedTerm>& terms, int norb) {
  const int n = norb;
  const Eigen::Index n2 = static_cast<Eigen::Index>(n) * n;
  Matrix total = Matrix::Zero(n2, n2);
  for (const DoubleFactorizedTerm& term : terms) {
    if (term.u.rows() != n || term.j.rows() != n) {
      throw std::invalid_argument("factorized term dimension does not match norb");
    }
    // A(pq, k) = U_pk conj(U_qk) is the rotated number operator n_k in E_pq coordinates.
    Matrix a(n2, n);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q)
        for (int k = 0; k < n; ++k) a(p * n + q, k) = term.u(p, k) * std::conj(term.u(q, k));
    total += a * term.j.cast<cplx>() * a.transpose();
  }
  TwoBodyTensor out(n);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) out(p, q, r, s) = total(p * n + q, r * n + s);
  return out;
}

DoubleFactorizedHamiltonian df_from_molecular(const MolecularHamiltonian& ham, double tol,
                                              std::optional<std::size_t> max_terms) {
  ham.validate();
  const int n = ham.norb();
  DoubleFactorizedHamiltonian out;
  out.one_body = ham.one_body;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r) out.one_body(p, q) -= 0.5 * ham.two_body(p, r, r, q);
  out.terms = double_factorize(ham.two_body, tol, max_terms).terms;
  out.constant = ham.constant;
  return out;
}

}  // namespace fermisim
