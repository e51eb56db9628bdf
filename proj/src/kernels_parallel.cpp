// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermisim/kernels.hpp"

#include <cstdint>

#include "kernel_rows.hpp"

namespace fermisim::kernels::parallel {

namespace {
// Below this many amplitudes the fork/join overhead dominates.
constexpr std::size_t kMinParallelWork = 1 << 14;
}  // namespace

void rotate_row_pairs(AmplitudeMatrix mat, std::span<const StringPair> pairs, double c, cplx s) {
  const auto n = static_cast<std::int64_t>(pairs.size());
  // The pairs for a fixed (p, q) touch disjoint rows.
#pragma omp parallel for schedule(static) if (pairs.size() * mat.cols >= kMinParallelWork)
  for (std::int64_t i = 0; i < n; ++i) {
    const StringPair& pr = pairs[i];
    detail::rotate_rows(mat.data + pr.first * mat.cols, mat.data + pr.second * mat.cols, mat.cols,
                        c, s, pr.sign);
  }
}

void rotate_column_pairs(AmplitudeMatrix mat, std::span<const StringPair> pairs, double c, cplx s) {
  const auto rows = static_cast<std::int64_t>(mat.rows);
#pragma omp parallel for schedule(static) if (mat.rows * pairs.size() >= kMinParallelWork)
  for (std::int64_t a = 0; a < rows; ++a) {
    detail::rotate_columns_in_row(mat.data + a * mat.cols, pairs, c, s);
  }
}

void scale_outer(AmplitudeMatrix mat, std::span<const cplx> row_phase,
                 std::span<const cplx> col_phase) {
  const auto rows = static_cast<std::int64_t>(mat.rows);
#pragma omp parallel for schedule(static) if (mat.rows * mat.cols >= kMinParallelWork)
  for (std::int64_t a = 0; a < rows; ++a) {
    detail::scale_row(mat.data + a * mat.cols, mat.cols, row_phase[a], col_phase);
  }
}

void scale_diag_coulomb(AmplitudeMatrix mat, std::span<const cplx> row_phase,
                        std::span<const cplx> col_phase, std::span<const cplx> cross, int norb,
                        std::span<const int> beta_occ, int nbeta) {
  const auto rows = static_cast<std::int64_t>(mat.rows);
#pragma omp parallel for schedule(static) if (mat.rows * mat.cols >= kMinParallelWork)
  for (std::int64_t a = 0; a < rows; ++a) {
    detail::scale_row_coulomb(mat.data + a * mat.cols, mat.cols, row_phase[a], col_phase,
                              cross.data() + a * static_cast<std::size_t>(norb), beta_occ, nbeta);
  }
}

void one_body_rows(AmplitudeMatrix out, ConstAmplitudeMatrix in, const ExcitationTable& table,
                   const Matrix& h) {
  const auto rows = static_cast<std::int64_t>(out.rows);
#pragma omp parallel for schedule(dynamic, 16) if (out.rows * out.cols >= kMinParallelWork)
  for (std::int64_t t = 0; t < rows; ++t) {
    detail::gather_row(out.data + t * out.cols, in, table[t], h);
  }
}

void one_body_columns(AmplitudeMatrix out, ConstAmplitudeMatrix in, const ExcitationTable& table,
                      const Matrix& h) {
  const auto rows = static_cast<std::int64_t>(out.rows);
#pragma omp parallel for schedule(dynamic, 16) if (out.rows * out.cols >= kMinParallelWork)
  for (std::int64_t a = 0; a < rows; ++a) {
    detail::gather_columns_in_row(out.data + a * out.cols, in.data + a * in.cols, table, h);
  }
}

}  // namespace fermisim::kernels::parallel
