// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "fermisim/common.hpp"
#include "fermisim/statevector.hpp"

namespace fermisim {

enum class Action : std::uint8_t { create = 0, annihilate = 1 };

/// A single creation or annihilation operator on spin orbital (orbital, spin).
struct Primitive {
  Action action = Action::create;
  Spin spin = Spin::alpha;
  int orbital = 0;

  friend auto operator<=>(const Primitive&, const Primitive&) = default;
};

inline Primitive cre(int orbital, Spin spin) { return {Action::create, spin, orbital}; }
inline Primitive des(int orbital, Spin spin) { return {Action::annihilate, spin, orbital}; }

/// Product of primitives, leftmost acting last.
using Term = std::vector<Primitive>;

/// Linear combination of products of fermionic creation and annihilation operators.
///
/// Text form, one term per line (blank lines and lines starting with '#' are skipped):
///
///     term      := coeff [ '*' primitive { primitive } ]
///     coeff     := real | '(' real ',' real ')'
///     primitive := ( "a+" | "a" ) '_' orbital '(' spin ')'
///     spin      := 'a' | 'b' | "alpha" | "beta"
///
/// e.g. `(0.5,-1) * a+_0(a) a_1(b)`; a bare coefficient is a multiple of the identity.
class FermionOperator {
 public:
  using TermMap = std::map<Term, cplx>;

  FermionOperator() = default;
  explicit FermionOperator(TermMap terms) : terms_(std::move(terms)) {}
  FermionOperator(std::initializer_list<std::pair<const Term, cplx>> terms) : terms_(terms) {}

  static FermionOperator identity(cplx coeff = 1.0) { return FermionOperator{{Term{}, coeff}}; }

  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  /// Coefficient of `term`, zero when absent.
  cplx coeff(const Term& term) const;

  /// Adds coeff to the coefficient of `term`.
  FermionOperator& add(const Term& term, cplx coeff);
  FermionOperator& operator+=(const FermionOperator& other);
  FermionOperator& operator-=(const FermionOperator& other);
  FermionOperator& operator*=(cplx factor);

  /// Drops terms with |coeff| <= tol.
  FermionOperator pruned(double tol = 0.0) const;
  FermionOperator adjoint() const;

  /// Every term has, per spin, as many creations as annihilations.
  bool conserves_particle_number_and_spin_z() const;
  /// Largest orbital index referenced, or -1 for operators without primitives.
  int max_orbital() const;

  std::string to_string() const;
  static FermionOperator parse(std::string_view text);

 private:
  TermMap terms_;
};

FermionOperator operator+(FermionOperator lhs, const FermionOperator& rhs);
FermionOperator operator-(FermionOperator lhs, const FermionOperator& rhs);
FermionOperator operator*(cplx factor, FermionOperator op);
FermionOperator operator*(const FermionOperator& lhs, const FermionOperator& rhs);

std::string term_to_string(const Term& term);

/// Canonical form: creations left of annihilations, each block sorted by strictly
/// descending (spin, orbital), equivalently by descending spin * N + orbital. Terms
/// with a repeated creation or annihilation vanish and zero coefficients are dropped.
FermionOperator normal_order(const FermionOperator& op);

/// Sum over terms of coeff * term |vec>. Throws std::invalid_argument naming the
/// first term that changes N_alpha or N_beta, or that references an orbital outside the sector.
StateVector apply_fermion_operator(const FermionOperator& op, const StateVector& vec);

}  // namespace fermisim
