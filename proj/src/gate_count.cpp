// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

#include "fermisim/gate_count.hpp"

#include <istream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "fermisim/sector.hpp"

namespace fermisim {

SparsityMask SparsityMask::dense(int n) {
  return {n, std::vector<bool>(static_cast<std::size_t>(n) * n, true)};
}

SparsityMask SparsityMask::identity(int n) {
  SparsityMask m = zero(n);
  for (int i = 0; i < n; ++i) m.set(i, i);
  return m;
}

SparsityMask SparsityMask::zero(int n) {
  return {n, std::vector<bool>(static_cast<std::size_t>(n) * n, false)};
}

SparsityMask SparsityMask::of(const RealMatrix& m, double tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("mask source must be square");
  SparsityMask out = zero(static_cast<int>(m.rows()));
  for (int i = 0; i < out.n; ++i)
    for (int j = 0; j < out.n; ++j) out.set(i, j, std::abs(m(i, j)) > tol);
  return out;
}

SparsityMask SparsityMask::of(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) throw std::invalid_argument("mask source must be square");
  SparsityMask out = zero(static_cast<int>(m.rows()));
  for (int i = 0; i < out.n; ++i)
    for (int j = 0; j < out.n; ++j) out.set(i, j, std::abs(m(i, j)) > tol);
  return out;
}

std::size_t givens_count(const SparsityMask& mask) {
  SparsityMask w = mask;
  const int n = w.n;
  std::size_t count = 0;
  // Mirrors givens_decompose: zero row i left of the diagonal with rotations
  // on adjacent column pairs; a rotation fills both columns with their union.
  for (int i = n - 1; i >= 1; --i) {
    for (int j = 0; j < i; ++j) {
      if (!w(i, j)) continue;
      ++count;
      for (int r = 0; r < n; ++r) {
        const bool both = w(r, j) || w(r, j + 1);
        w.set(r, j, both);
        w.set(r, j + 1, both);
      }
      w.set(i, j, false);
    }
  }
  return count;
}

namespace {

SparsityMask product(const SparsityMask& later, const SparsityMask& earlier) {
  if (later.n != earlier.n) throw std::invalid_argument("rotation masks differ in size");
  SparsityMask out = SparsityMask::zero(later.n);
  for (int i = 0; i < later.n; ++i)
    for (int j = 0; j < later.n; ++j)
      for (int k = 0; k < later.n; ++k) {
        if (later(i, k) && earlier(k, j)) {
          out.set(i, j);
          break;
        }
      }
  return out;
}

std::optional<SparsityMask> compose(const std::optional<SparsityMask>& later,
                                    const std::optional<SparsityMask>& earlier) {
  if (!later) return earlier;
  if (!earlier) return later;
  return product(*later, *earlier);
}

std::size_t strict_upper(const SparsityMask& m) {
  std::size_t out = 0;
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j) out += m(i, j);
  return out;
}

std::size_t nonzeros(const SparsityMask& m) {
  std::size_t out = 0;
  for (bool b : m.bits) out += b;
  return out;
}

struct OpCounter {
  std::size_t operator()(const RotationOp& op) const {
    return (op.alpha ? givens_count(*op.alpha) : 0) + (op.beta ? givens_count(*op.beta) : 0);
  }
  std::size_t operator()(const DiagCoulombOp& op) const {
    return strict_upper(op.j_aa) + strict_upper(op.j_bb) + nonzeros(op.j_ab);
  }
  std::size_t operator()(const SlaterPrepOp& op) const {
    return static_cast<std::size_t>(op.nalpha) * (op.norb - op.nalpha) +
           static_cast<std::size_t>(op.nbeta) * (op.norb - op.nbeta);
  }
};

}  // namespace

CircuitPlan merge_rotations(const CircuitPlan& plan) {
  CircuitPlan out{plan.norb, {}};
  for (const PlanOp& op : plan.ops) {
    const auto* rot = std::get_if<RotationOp>(&op);
    auto* last = out.ops.empty() ? nullptr : std::get_if<RotationOp>(&out.ops.back());
    if (rot && last) {
      last->alpha = compose(rot->alpha, last->alpha);
      last->beta = compose(rot->beta, last->beta);
    } else {
      out.ops.push_back(op);
    }
  }
  return out;
}

std::size_t count_two_qubit_gates(const CircuitPlan& plan) {
  std::size_t total = 0;
  for (const PlanOp& op : merge_rotations(plan).ops) total += std::visit(OpCounter{}, op);
  return total;
}

namespace {

using nlohmann::json;

SparsityMask parse_mask(const json& j, int n, const std::string& where) {
  if (j.is_string()) {
    const std::string kind = j.get<std::string>();
    if (kind == "dense") return SparsityMask::dense(n);
    if (kind == "identity" || kind == "diagonal") return SparsityMask::identity(n);
    if (kind == "zero") return SparsityMask::zero(n);
    throw std::invalid_argument(where + ": unknown mask '" + kind + "'");
  }
  if (!j.is_array() || j.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument(where + ": mask must be a keyword or an " + std::to_string(n) +
                                "x" + std::to_string(n) + " array");
  }
  SparsityMask m = SparsityMask::zero(n);
  for (int i = 0; i < n; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
      throw std::invalid_argument(where + ": row " + std::to_string(i) + " has the wrong length");
    }
    for (int k = 0; k < n; ++k) {
      const json& v = row[static_cast<std::size_t>(k)];
      if (v.is_boolean()) {
        m.set(i, k, v.get<bool>());
      } else if (v.is_number()) {
        m.set(i, k, v.get<double>() != 0.0);
      } else {
        throw std::invalid_argument(where + ": mask entries must be numbers or booleans");
      }
    }
  }
  return m;
}

int get_count(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || !obj[key].is_number_integer() || obj[key].get<int>() < 0) {
    throw std::invalid_argument(where + ": '" + key + "' must be a non-negative integer");
  }
  return obj[key].get<int>();
}

}  // namespace

CircuitPlan parse_plan_json(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("plan is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("plan must be a JSON object");
  CircuitPlan plan;
  plan.norb = get_count(doc, "norb", "plan");
  if (plan.norb > kMaxOrbitals) throw std::invalid_argument("plan: norb too large");
  const int n = plan.norb;
  if (!doc.contains("ops") || !doc["ops"].is_array()) {
    throw std::invalid_argument("plan: 'ops' must be an array");
  }
  std::size_t index = 0;
  for (const json& op : doc["ops"]) {
    const std::string where = "ops[" + std::to_string(index++) + "]";
    if (!op.is_object() || !op.contains("type") || !op["type"].is_string()) {
      throw std::invalid_argument(where + ": missing 'type'");
    }
    const std::string type = op["type"].get<std::string>();
    if (type == "orbital_rotation") {
      RotationOp rot;
      if (op.contains("alpha")) rot.alpha = parse_mask(op["alpha"], n, where + ".alpha");
      if (op.contains("beta")) rot.beta = parse_mask(op["beta"], n, where + ".beta");
      plan.ops.emplace_back(std::move(rot));
    } else if (type == "diag_coulomb") {
      const auto field = [&](const char* key) {
        return op.contains(key) ? parse_mask(op[key], n, where + "." + key) : SparsityMask::zero(n);
      };
      plan.ops.emplace_back(DiagCoulombOp{field("j_aa"), field("j_ab"), field("j_bb")});
    } else if (type == "slater_prep") {
      SlaterPrepOp prep{n, get_count(op, "nalpha", where), get_count(op, "nbeta", where)};
      if (prep.nalpha > n || prep.nbeta > n) {
        throw std::invalid_argument(where + ": more electrons than orbitals");
      }
      plan.ops.emplace_back(prep);
    } else {
      throw std::invalid_argument(where + ": unknown op type '" + type + "'");
    }
  }
  return plan;
}

}  // namespace fermisim
