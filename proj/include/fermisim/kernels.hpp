// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

// Hot loops over the (dim_alpha x dim_beta) amplitude matrix. Each kernel
// exists twice with identical signatures: `serial` is the reference loop nest
// and `parallel` distributes independent rows or row pairs over OpenMP
// threads. Every output element is produced by the same arithmetic in both,
// so the results agree bitwise for any thread count.

#pragma once

#include <cstddef>
#include <span>

#include "fermisim/common.hpp"
#include "fermisim/sector.hpp"

namespace fermisim::kernels {

/// Row-major amplitude matrix, rows indexed by alpha strings.
struct AmplitudeMatrix {
  cplx* data;
  std::size_t rows;
  std::size_t cols;
};

struct ConstAmplitudeMatrix {
  const cplx* data;
  std::size_t rows;
  std::size_t cols;
};

// Excitation tables are read in gather form: an entry (p, q, s, sign) stored
// under string t satisfies <t| a^dagger_p a_q |s> = sign.

namespace serial {

/// Mixes row pairs: (x, y) <- (c x + s sign y, -conj(s) sign x + c y).
void rotate_row_pairs(AmplitudeMatrix mat, std::span<const StringPair> pairs, double c, cplx s);
/// Same 2x2 update applied to column pairs within every row.
void rotate_column_pairs(AmplitudeMatrix mat, std::span<const StringPair> pairs, double c, cplx s);
/// mat(a, b) *= row_phase[a] * col_phase[b].
void scale_outer(AmplitudeMatrix mat, std::span<const cplx> row_phase, std::span<const cplx> col_phase);
/// mat(a, b) *= row_phase[a] * col_phase[b] * prod over q in beta_occ row b of cross(a, q).
/// `cross` is rows x norb, `beta_occ` is cols x nbeta.
void scale_diag_coulomb(AmplitudeMatrix mat, std::span<const cplx> row_phase,
                        std::span<const cplx> col_phase, std::span<const cplx> cross, int norb,
                        std::span<const int> beta_occ, int nbeta);
/// out(t, :) += h(p, q) sign in(s, :) for every excitation (p, q, s, sign) listed under t.
void one_body_rows(AmplitudeMatrix out, ConstAmplitudeMatrix in, const ExcitationTable& table,
                   const Matrix& h);
/// out(:, t) += h(p, q) sign in(:, s), the beta counterpart of one_body_rows.
void one_body_columns(AmplitudeMatrix out, ConstAmplitudeMatrix in, const ExcitationTable& table,
                      const Matrix& h);

}  // namespace serial

namespace parallel {

/// Mixes row pairs: (x, y) <- (c x + s sign y, -conj(s) sign x + c y).
void rotate_row_pairs(AmplitudeMatrix mat, std::span<const StringPair> pairs, double c, cplx s);
/// Same 2x2 update applied to column pairs within every row.
void rotate_column_pairs(AmplitudeMatrix mat, std::span<const StringPair> pairs, double c, cplx s);
/// mat(a, b) *= row_phase[a] * col_phase[b].
void scale_outer(AmplitudeMatrix mat, std::span<const cplx> row_phase, std::span<const cplx> col_phase);
/// mat(a, b) *= row_phase[a] * col_phase[b] * prod over q in beta_occ row b of cross(a, q).
/// `cross` is rows x norb, `beta_occ` is cols x nbeta.
void scale_diag_coulomb(AmplitudeMatrix mat, std::span<const cplx> row_phase,
                        std::span<const cplx> col_phase, std::span<const cplx> cross, int norb,
                        std::span<const int> beta_occ, int nbeta);
/// out(t, :) += h(p, q) sign in(s, :) for every excitation (p, q, s, sign) listed under t.
void one_body_rows(AmplitudeMatrix out, ConstAmplitudeMatrix in, const ExcitationTable& table,
                   const Matrix& h);
/// out(:, t) += h(p, q) sign in(:, s), the beta counterpart of one_body_rows.
void one_body_columns(AmplitudeMatrix out, ConstAmplitudeMatrix in, const ExcitationTable& table,
                      const Matrix& h);

}  // namespace parallel

}  // namespace fermisim::kernels
