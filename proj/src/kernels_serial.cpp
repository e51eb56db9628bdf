// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermisim/kernels.hpp"

#include "kernel_rows.hpp"

namespace fermisim::kernels::serial {

void rotate_row_pairs(AmplitudeMatrix mat, std::span<const StringPair> pairs, double c, cplx s) {
  for (const StringPair& pr : pairs) {
    detail::rotate_rows(mat.data + pr.first * mat.cols, mat.data + pr.second * mat.cols, mat.cols,
                        c, s, pr.sign);
  }
}

void rotate_column_pairs(AmplitudeMatrix mat, std::span<const StringPair> pairs, double c, cplx s) {
  for (std::size_t a = 0; a < mat.rows; ++a) {
    detail::rotate_columns_in_row(mat.data + a * mat.cols, pairs, c, s);
  }
}

void scale_outer(AmplitudeMatrix mat, std::span<const cplx> row_phase,
                 std::span<const cplx> col_phase) {
  for (std::size_t a = 0; a < mat.rows; ++a) {
    detail::scale_row(mat.data + a * mat.cols, mat.cols, row_phase[a], col_phase);
  }
}

void scale_diag_coulomb(AmplitudeMatrix mat, std::span<const cplx> row_phase,
                        std::span<const cplx> col_phase, std::span<const cplx> cross, int norb,
                        std::span<const int> beta_occ, int nbeta) {
  for (std::size_t a = 0; a < mat.rows; ++a) {
    detail::scale_row_coulomb(mat.data + a * mat.cols, mat.cols, row_phase[a], col_phase,
                              cross.data() + a * static_cast<std::size_t>(norb), beta_occ, nbeta);
  }
}

void one_body_rows(AmplitudeMatrix out, ConstAmplitudeMatrix in, const ExcitationTable& table,
                   const Matrix& h) {
  for (std::size_t t = 0; t < out.rows; ++t) {
    detail::gather_row(out.data + t * out.cols, in, table[t], h);
  }
}

void one_body_columns(AmplitudeMatrix out, ConstAmplitudeMatrix in, const ExcitationTable& table,
                      const Matrix& h) {
  for (std::size_t a = 0; a < out.rows; ++a) {
    detail::gather_columns_in_row(out.data + a * out.cols, in.data + a * in.cols, table, h);
  }
}

}  // namespace fermisim::kernels::serial
