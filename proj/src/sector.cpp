// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermisim/sector.hpp"

#include <array>
#include <limits>
#include <stdexcept>
#include <string>

namespace fermisim {

namespace {

using PascalTable = std::array<std::array<std::uint64_t, kMaxOrbitals + 1>, kMaxOrbitals + 1>;

// Every entry with n <= 64 fits in 64 bits; C(64, 32) ~ 1.8e18.
const PascalTable& pascal() {
  static const PascalTable table = [] {
    PascalTable t{};
    for (int n = 0; n <= kMaxOrbitals; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + (k <= n - 1 ? t[n - 1][k] : 0);
    }
    return t;
  }();
  return table;
}

void check_norb_nocc(int norb, int nocc) {
  if (norb < 0 || norb > kMaxOrbitals) {
    throw std::invalid_argument("orbital count " + std::to_string(norb) + " outside [0, 64]");
  }
  if (nocc < 0 || nocc > norb) {
    throw std::invalid_argument("occupation " + std::to_string(nocc) + " outside [0, " +
                                std::to_string(norb) + "]");
  }
}

}  // namespace

void SectorShape::validate() const {
  check_norb_nocc(norb, nalpha);
  check_norb_nocc(norb, nbeta);
}

std::uint64_t binomial(int n, int k) {
  if (n < 0 || n > kMaxOrbitals || k < 0 || k > n) return 0;
  return pascal()[n][k];
}

std::pair<std::uint64_t, std::uint64_t> sector_dimension(const SectorShape& shape) {
  shape.validate();
  return {binomial(shape.norb, shape.nalpha), binomial(shape.norb, shape.nbeta)};
}

std::size_t sector_size(const SectorShape& shape) {
  const auto [da, db] = sector_dimension(shape);
  std::uint64_t total = 0;
  if (__builtin_mul_overflow(da, db, &total) || total > std::numeric_limits<std::size_t>::max()) {
    throw std::overflow_error("sector dimension " + std::to_string(da) + " x " +
                              std::to_string(db) + " overflows the size type");
  }
  return static_cast<std::size_t>(total);
}

std::uint64_t rank_string(StringMask occ, int norb, int nocc) {
  check_norb_nocc(norb, nocc);
  if (norb < kMaxOrbitals && (occ >> norb) != 0) {
    throw std::invalid_argument("occupation string has bits beyond orbital " +
                                std::to_string(norb - 1));
  }
  if (__builtin_popcountll(occ) != nocc) {
    throw std::invalid_argument("occupation string has " +
                                std::to_string(__builtin_popcountll(occ)) +
                                " electrons, expected " + std::to_string(nocc));
  }
  std::uint64_t addr = 0;
  int i = 0;
  while (occ) {
    const int o = __builtin_ctzll(occ);
    addr += binomial(o, i + 1);
    occ &= occ - 1;
    ++i;
  }
  return addr;
}

StringMask unrank_string(std::uint64_t addr, int norb, int nocc) {
  check_norb_nocc(norb, nocc);
  if (addr >= binomial(norb, nocc)) {
    throw std::invalid_argument("string address " + std::to_string(addr) + " out of range for (" +
                                std::to_string(norb) + ", " + std::to_string(nocc) + ")");
  }
  StringMask occ = 0;
  int o = norb - 1;
  for (int i = nocc - 1; i >= 0; --i) {
    while (binomial(o, i + 1) > addr) --o;
    occ |= StringMask{1} << o;
    addr -= binomial(o, i + 1);
    --o;
  }
  return occ;
}

StringSpace::StringSpace(int norb, int nocc) : norb_(norb), nocc_(nocc) {
  check_norb_nocc(norb, nocc);
  const std::uint64_t count = binomial(norb, nocc);
  if (count > std::numeric_limits<std::uint32_t>::max()) {
    throw std::overflow_error("string space too large to index with 32 bits");
  }
  strings_.reserve(count);
  if (nocc == 0) {
    strings_.push_back(0);
    return;
  }
  // Gosper's hack walks same-popcount masks in increasing order, i.e. address order.
  StringMask v = nocc == 64 ? ~StringMask{0} : (StringMask{1} << nocc) - 1;
  for (std::uint64_t i = 0; i < count; ++i) {
    strings_.push_back(v);
    if (i + 1 == count) break;
    const StringMask t = v | (v - 1);
    v = (t + 1) | (((~t & -~t) - 1) >> (__builtin_ctzll(v) + 1));
  }
}

std::vector<int> StringSpace::occupied_lists() const {
  std::vector<int> occ(strings_.size() * nocc_);
  for (std::size_t a = 0; a < strings_.size(); ++a) {
    StringMask m = strings_[a];
    for (int i = 0; i < nocc_; ++i) {
      occ[a * nocc_ + i] = __builtin_ctzll(m);
      m &= m - 1;
    }
  }
  return occ;
}

std::vector<StringPair> string_pairs(const StringSpace& space, int p, int q) {
  if (p == q || p < 0 || q < 0 || p >= space.norb() || q >= space.norb()) {
    throw std::invalid_argument("invalid orbital pair (" + std::to_string(p) + ", " +
                                std::to_string(q) + ")");
  }
  const StringMask bp = StringMask{1} << p;
  const StringMask bq = StringMask{1} << q;
  std::vector<StringPair> pairs;
  pairs.reserve(binomial(space.norb() - 2, space.nocc() - 1));
  for (std::size_t a = 0; a < space.size(); ++a) {
    const StringMask m = space[a];
    if ((m & bp) && !(m & bq)) {
      const StringMask moved = (m ^ bp) | bq;
      pairs.push_back({static_cast<std::uint32_t>(a),
                       static_cast<std::uint32_t>(space.index(moved)),
                       parity_between(m, p, q) ? -1.0 : 1.0});
    }
  }
  return pairs;
}

ExcitationTable::ExcitationTable(int norb, int nocc)
    : norb_(norb),
      nocc_(nocc),
      num_strings_(0),
      per_string_(static_cast<std::size_t>(nocc) * (norb - nocc) + nocc) {
  const StringSpace space(norb, nocc);
  num_strings_ = space.size();
  entries_.reserve(num_strings_ * per_string_);
  for (std::size_t a = 0; a < num_strings_; ++a) {
    const StringMask m = space[a];
    for (int p = 0; p < norb; ++p) {
      const StringMask bp = StringMask{1} << p;
      if (!(m & bp)) continue;
      for (int q = 0; q < norb; ++q) {
        const StringMask bq = StringMask{1} << q;
        if (q == p) {
          entries_.push_back({static_cast<std::uint8_t>(p), static_cast<std::uint8_t>(q), 1,
                              static_cast<std::uint32_t>(a)});
        } else if (!(m & bq)) {
          const StringMask moved = (m ^ bp) | bq;
          entries_.push_back({static_cast<std::uint8_t>(p), static_cast<std::uint8_t>(q),
                              static_cast<std::int8_t>(parity_between(m, p, q) ? -1 : 1),
                              static_cast<std::uint32_t>(space.index(moved))});
        }
      }
    }
  }
}

}  // namespace fermisim
