// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace fermisim {

/// Occupation bitmask of one spin species; bit p set iff orbital p is occupied.
using StringMask = std::uint64_t;

inline constexpr int kMaxOrbitals = 64;

/// Symmetry sector: spatial orbital count and electrons per spin.
struct SectorShape {
  int norb = 0;
  int nalpha = 0;
  int nbeta = 0;

  /// Throws std::invalid_argument unless 0 <= nalpha, nbeta <= norb <= 64.
  void validate() const;
  int eta() const { return nalpha > nbeta ? nalpha : nbeta; }
  int nocc(bool beta) const { return beta ? nbeta : nalpha; }

  friend bool operator==(const SectorShape&, const SectorShape&) = default;
};

/// Binomial coefficient from a precomputed Pascal table (n <= 64). Zero when k is out of [0, n].
std::uint64_t binomial(int n, int k);

/// (binom(N, N_alpha), binom(N, N_beta)).
std::pair<std::uint64_t, std::uint64_t> sector_dimension(const SectorShape& shape);

/// Length of the state vector; throws std::overflow_error if the product does not fit.
std::size_t sector_size(const SectorShape& shape);

/// Combinadic address of an occupation string: sum over occupied o_i (ascending) of binom(o_i, i + 1).
/// Strings are thereby ordered by ascending integer value of their bitmask.
std::uint64_t rank_string(StringMask occ, int norb, int nocc);

/// Inverse of rank_string.
StringMask unrank_string(std::uint64_t addr, int norb, int nocc);

/// Parity (0 or 1) of the number of set bits of `mask` strictly between orbitals p and q.
inline int parity_between(StringMask mask, int p, int q) {
  const int lo = p < q ? p : q;
  const int hi = p < q ? q : p;
  if (hi - lo <= 1) return 0;
  const StringMask between = ((StringMask{1} << hi) - 1) & ~((StringMask{2} << lo) - 1);
  return __builtin_popcountll(mask & between) & 1;
}

/// All occupation strings of (norb, nocc) listed in address order.
class StringSpace {
 public:
  StringSpace(int norb, int nocc);

  int norb() const { return norb_; }
  int nocc() const { return nocc_; }
  std::size_t size() const { return strings_.size(); }
  StringMask operator[](std::size_t addr) const { return strings_[addr]; }
  std::span<const StringMask> strings() const { return strings_; }
  std::uint64_t index(StringMask occ) const { return rank_string(occ, norb_, nocc_); }

  /// Occupied orbitals of every string, row-major (size() x nocc()), ascending within a row.
  std::vector<int> occupied_lists() const;

 private:
  int norb_;
  int nocc_;
  std::vector<StringMask> strings_;
};

/// Pair of strings connected by moving one electron between two fixed orbitals.
/// `first` has p occupied and q empty, `second` = first with p -> q.
/// `sign` is (-1)^(occupied orbitals strictly between p and q).
struct StringPair {
  std::uint32_t first;
  std::uint32_t second;
  double sign;
};

/// Every (first, second) pair for the orbital pair (p, q) in address order of `first`.
std::vector<StringPair> string_pairs(const StringSpace& space, int p, int q);

/// One-body excitation: a^dagger_q a_p |source> = sign |target>.
struct Excitation {
  std::uint8_t p;
  std::uint8_t q;
  std::int8_t sign;
  std::uint32_t target;
};

/// Link index: for each source string, all a^dagger_q a_p excitations including
/// the diagonal q == p, sorted by (p, q).
class ExcitationTable {
 public:
  ExcitationTable(int norb, int nocc);

  int norb() const { return norb_; }
  int nocc() const { return nocc_; }
  std::size_t num_strings() const { return num_strings_; }
  std::size_t entries_per_string() const { return per_string_; }
  std::span<const Excitation> operator[](std::size_t source) const {
    return {entries_.data() + source * per_string_, per_string_};
  }

 private:
  int norb_;
  int nocc_;
  std::size_t num_strings_;
  std::size_t per_string_;
  std::vector<Excitation> entries_;
};

inline ExcitationTable build_excitation_table(int norb, int nocc) { return {norb, nocc}; }

}  // namespace fermisim
