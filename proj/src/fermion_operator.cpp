// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermisim/fermion_operator.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace fermisim {

cplx FermionOperator::coeff(const Term& term) const {
  const auto it = terms_.find(term);
  return it == terms_.end() ? cplx(0.0) : it->second;
}

FermionOperator& FermionOperator::add(const Term& term, cplx coeff) {
  terms_[term] += coeff;
  return *this;
}

FermionOperator& FermionOperator::operator+=(const FermionOperator& other) {
  for (const auto& [term, c] : other.terms_) terms_[term] += c;
  return *this;
}

FermionOperator& FermionOperator::operator-=(const FermionOperator& other) {
  for (const auto& [term, c] : other.terms_) terms_[term] -= c;
  return *this;
}

FermionOperator& FermionOperator::operator*=(cplx factor) {
  for (auto& entry : terms_) entry.second *= factor;
  return *this;
}

FermionOperator FermionOperator::pruned(double tol) const {
  TermMap kept;
  for (const auto& [term, c] : terms_) {
    if (std::abs(c) > tol) kept.emplace(term, c);
  }
  return FermionOperator(std::move(kept));
}

FermionOperator FermionOperator::adjoint() const {
  TermMap out;
  for (const auto& [term, c] : terms_) {
    Term adj(term.rbegin(), term.rend());
    for (Primitive& prim : adj) {
      prim.action = prim.action == Action::create ? Action::annihilate : Action::create;
    }
    out[adj] += std::conj(c);
  }
  return FermionOperator(std::move(out));
}

namespace {

// (creations - annihilations) per spin.
std::array<int, 2> particle_change(const Term& term) {
  std::array<int, 2> delta{0, 0};
  for (const Primitive& prim : term) {
    delta[static_cast<int>(prim.spin)] += prim.action == Action::create ? 1 : -1;
  }
  return delta;
}

}  // namespace

bool FermionOperator::conserves_particle_number_and_spin_z() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& entry) {
    return particle_change(entry.first) == std::array<int, 2>{0, 0};
  });
}

int FermionOperator::max_orbital() const {
  int out = -1;
  for (const auto& entry : terms_) {
    for (const Primitive& prim : entry.first) out = std::max(out, prim.orbital);
  }
  return out;
}

std::string term_to_string(const Term& term) {
  std::string out;
  for (const Primitive& prim : term) {
    if (!out.empty()) out += ' ';
    out += prim.action == Action::create ? "a+_" : "a_";
    out += std::to_string(prim.orbital);
    out += prim.spin == Spin::alpha ? "(a)" : "(b)";
  }
  return out;
}

std::string FermionOperator::to_string() const {
  std::string out;
  char buf[96];
  for (const auto& [term, c] : terms_) {
    std::snprintf(buf, sizeof buf, "(%.17g,%.17g)", c.real(), c.imag());
    out += buf;
    if (!term.empty()) {
      out += " * ";
      out += term_to_string(term);
    }
    out += '\n';
  }
  return out;
}

namespace {

class LineParser {
 public:
  LineParser(std::string_view text, int line) : text_(text), line_(line) {}

  void skip_space() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) {
      ++pos_;
    }
  }
  bool done() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char ch) {
    if (!accept(ch)) fail(std::string("expected '") + ch + "'");
  }
  double number() {
    skip_space();
    double value = 0.0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    if (begin != end && *begin == '+') ++begin;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) fail("expected a number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }
  int integer() {
    skip_space();
    int value = 0;
    const char* begin = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(begin, text_.data() + text_.size(), value);
    if (ec != std::errc() || ptr == begin || value < 0) fail("expected an orbital index");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }
  std::string_view word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return text_.substr(start, pos_ - start);
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(line_, what + " at column " + std::to_string(pos_ + 1));
  }

  cplx coefficient() {
    if (accept('(')) {
      const double re = number();
      expect(',');
      const double im = number();
      expect(')');
      return {re, im};
    }
    return number();
  }

  Primitive primitive() {
    skip_space();
    Primitive prim;
    if (!accept('a')) fail("expected a primitive 'a+_p(s)' or 'a_p(s)'");
    prim.action = accept('+') ? Action::create : Action::annihilate;
    expect('_');
    prim.orbital = integer();
    if (prim.orbital >= kMaxOrbitals) fail("orbital index too large");
    expect('(');
    const std::string_view spin = word();
    if (spin == "a" || spin == "alpha") {
      prim.spin = Spin::alpha;
    } else if (spin == "b" || spin == "beta") {
      prim.spin = Spin::beta;
    } else {
      fail("spin must be a, b, alpha or beta");
    }
    expect(')');
    return prim;
  }

 private:
  std::string_view text_;
  int line_;
  std::size_t pos_ = 0;
};

}  // namespace

FermionOperator FermionOperator::parse(std::string_view text) {
  FermionOperator op;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t stop = text.find('\n', start);
    if (stop == std::string_view::npos) stop = text.size();
    const std::string_view line = text.substr(start, stop - start);
    start = stop + 1;
    ++line_no;

    LineParser parser(line, line_no);
    if (parser.done() || parser.accept('#')) continue;
    const cplx c = parser.coefficient();
    Term term;
    if (parser.accept('*')) {
      do {
        term.push_back(parser.primitive());
      } while (!parser.done());
    }
    if (!parser.done()) parser.fail("unexpected trailing input");
    op.add(term, c);
  }
  return op;
}

FermionOperator operator+(FermionOperator lhs, const FermionOperator& rhs) { return lhs += rhs; }
FermionOperator operator-(FermionOperator lhs, const FermionOperator& rhs) { return lhs -= rhs; }
FermionOperator operator*(cplx factor, FermionOperator op) { return op *= factor; }

FermionOperator operator*(const FermionOperator& lhs, const FermionOperator& rhs) {
  FermionOperator out;
  for (const auto& [lt, lc] : lhs.terms()) {
    for (const auto& [rt, rc] : rhs.terms()) {
      Term term = lt;
      term.insert(term.end(), rt.begin(), rt.end());
      out.add(term, lc * rc);
    }
  }
  return out;
}

namespace {

// Position in the canonical order: creations first, then descending (spin, orbital).
auto order_key(const Primitive& prim) {
  return std::make_tuple(static_cast<int>(prim.action), -static_cast<int>(prim.spin), -prim.orbital);
}

}  // namespace

FermionOperator normal_order(const FermionOperator& op) {
  FermionOperator::TermMap out;
  std::vector<std::pair<Term, cplx>> work(op.terms().begin(), op.terms().end());
  while (!work.empty()) {
    auto [term, c] = std::move(work.back());
    work.pop_back();
    if (c == cplx(0.0)) continue;

    bool vanished = false;
    bool sorted = false;
    while (!sorted && !vanished) {
      sorted = true;
      for (std::size_t i = 0; i + 1 < term.size(); ++i) {
        const Primitive x = term[i];
        const Primitive y = term[i + 1];
        if (x == y) {
          vanished = true;
          break;
        }
        if (order_key(x) < order_key(y)) continue;
        sorted = false;
        if (x.action == Action::annihilate && y.action == Action::create && x.spin == y.spin &&
            x.orbital == y.orbital) {
          // a a^dagger = 1 - a^dagger a
          Term contracted;
          contracted.reserve(term.size() - 2);
          contracted.insert(contracted.end(), term.begin(), term.begin() + i);
          contracted.insert(contracted.end(), term.begin() + i + 2, term.end());
          work.emplace_back(std::move(contracted), c);
        }
        std::swap(term[i], term[i + 1]);
        c = -c;
      }
    }
    if (!vanished) out[term] += c;
  }
  return FermionOperator(std::move(out)).pruned();
}

StateVector apply_fermion_operator(const FermionOperator& op, const StateVector& vec) {
  const SectorShape& shape = vec.shape();
  const int n = shape.norb;
  for (const auto& [term, c] : op.terms()) {
    if (particle_change(term) != std::array<int, 2>{0, 0}) {
      throw std::invalid_argument("term '" + term_to_string(term) +
                                  "' does not conserve particle number and spin");
    }
    for (const Primitive& prim : term) {
      if (prim.orbital >= n) {
        throw std::invalid_argument("term '" + term_to_string(term) +
                                    "' references an orbital outside the sector");
      }
    }
  }

  const StringSpace alpha(n, shape.nalpha);
  const StringSpace beta(n, shape.nbeta);
  StateVector out(shape);
  for (const auto& [term, c] : op.terms()) {
    if (c == cplx(0.0)) continue;
    for (std::size_t a = 0; a < alpha.size(); ++a) {
      for (std::size_t b = 0; b < beta.size(); ++b) {
        const cplx amp = vec.at(a, b);
        if (amp == cplx(0.0)) continue;
        // Modes: alpha orbital p is mode p, beta orbital p is mode n + p. The
        // sign of each primitive counts occupied modes above it.
        StringMask masks[2] = {alpha[a], beta[b]};
        int sign = 1;
        bool zero = false;
        for (auto it = term.rbegin(); it != term.rend(); ++it) {
          const int s = static_cast<int>(it->spin);
          const StringMask bit = StringMask{1} << it->orbital;
          const bool occupied = masks[s] & bit;
          if (occupied == (it->action == Action::create)) {
            zero = true;
            break;
          }
          int above = std::popcount(masks[s] & ~((bit << 1) - 1));
          if (s == 0) above += std::popcount(masks[1]);
          if (above & 1) sign = -sign;
          masks[s] ^= bit;
        }
        if (zero) continue;
        out.at(alpha.index(masks[0]), beta.index(masks[1])) += c * static_cast<double>(sign) * amp;
      }
    }
  }
  return out;
}

}  // namespace fermisim
