// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

// Per-row bodies shared by the serial and parallel kernels. Keeping the
// arithmetic in one place is what makes the two variants agree bitwise.

#pragma once

#include "fermisim/kernels.hpp"

namespace fermisim::kernels::detail {

inline void rotate_rows(cplx* x, cplx* y, std::size_t n, double c, cplx s, double sign) {
  const cplx s_fwd = s * sign;
  const cplx s_bwd = -std::conj(s) * sign;
  for (std::size_t k = 0; k < n; ++k) {
    const cplx xv = x[k];
    const cplx yv = y[k];
    x[k] = c * xv + s_fwd * yv;
    y[k] = s_bwd * xv + c * yv;
  }
}

inline void rotate_columns_in_row(cplx* row, std::span<const StringPair> pairs, double c, cplx s) {
  for (const StringPair& pr : pairs) {
    const cplx s_fwd = s * pr.sign;
    const cplx s_bwd = -std::conj(s) * pr.sign;
    const cplx xv = row[pr.first];
    const cplx yv = row[pr.second];
    row[pr.first] = c * xv + s_fwd * yv;
    row[pr.second] = s_bwd * xv + c * yv;
  }
}

inline void scale_row(cplx* row, std::size_t cols, cplx row_phase, std::span<const cplx> col_phase) {
  for (std::size_t b = 0; b < cols; ++b) row[b] *= row_phase * col_phase[b];
}

inline void scale_row_coulomb(cplx* row, std::size_t cols, cplx row_phase,
                              std::span<const cplx> col_phase, const cplx* cross_row,
                              std::span<const int> beta_occ, int nbeta) {
  for (std::size_t b = 0; b < cols; ++b) {
    cplx f = row_phase * col_phase[b];
    const int* occ = beta_occ.data() + b * static_cast<std::size_t>(nbeta);
    for (int k = 0; k < nbeta; ++k) f *= cross_row[occ[k]];
    row[b] *= f;
  }
}

inline void gather_row(cplx* out_row, ConstAmplitudeMatrix in, std::span<const Excitation> links,
                       const Matrix& h) {
  for (const Excitation& e : links) {
    const cplx w = h(e.p, e.q) * static_cast<double>(e.sign);
    if (w == cplx(0.0)) continue;
    const cplx* src = in.data + static_cast<std::size_t>(e.target) * in.cols;
    for (std::size_t k = 0; k < in.cols; ++k) out_row[k] += w * src[k];
  }
}

inline void gather_columns_in_row(cplx* out_row, const cplx* in_row, const ExcitationTable& table,
                                  const Matrix& h) {
  for (std::size_t t = 0; t < table.num_strings(); ++t) {
    cplx acc = 0.0;
    for (const Excitation& e : table[t]) {
      acc += h(e.p, e.q) * static_cast<double>(e.sign) * in_row[e.target];
    }
    out_row[t] += acc;
  }
}

}  // namespace fermisim::kernels::detail
