// Copyright 2026 The fermisim Authors
// SPDX-License-Identifier: Apache-2.0

// Command-line front end: Trotter-error and Krylov experiments, sampling,
// gate counting and FCIDUMP inspection. Exit status 2 means bad input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fermisim/evolution.hpp"
#include "fermisim/experiments.hpp"
#include "fermisim/fcidump.hpp"
#include "fermisim/gate_count.hpp"
#include "fermisim/hubbard.hpp"
#include "fermisim/parallel.hpp"
#include "fermisim/sampling.hpp"
#include "fermisim/trotter.hpp"
#include "fermisim/version.hpp"

namespace fs = fermisim;

namespace {

constexpr int kExitInput = 2;
constexpr int kExitFailure = 1;

/// Input problems the user can fix; reported with exit status 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

/// Writes to the file given by --out, or stdout for "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw InputError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

fs::HubbardSpec parse_lattice(const std::string& text) {
  static const std::regex pattern(R"((\d+)[xX](\d+))");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw InputError("lattice must look like NXxNY, got '" + text + "'");
  }
  fs::HubbardSpec spec;
  spec.nx = std::stoi(m[1]);
  spec.ny = std::stoi(m[2]);
  if (spec.nx < 1 || spec.ny < 1) throw InputError("lattice dimensions must be positive");
  return spec;
}

struct HubbardArgs {
  double t_hop = 1.0;
  double u_int = 8.0;
  bool open_x = false;
};

void add_hubbard_options(CLI::App* cmd, HubbardArgs& args) {
  cmd->add_option("--t", args.t_hop, "Hopping amplitude")->capture_default_str();
  cmd->add_option("--u", args.u_int, "Onsite interaction")->capture_default_str();
  cmd->add_flag("--open-x", args.open_x, "Open instead of periodic boundaries along x");
}

// ---------------------------------------------------------------- trotter-error

struct TrotterErrorArgs {
  int nx = 2;
  int ny = 2;
  double filling = 0.25;
  HubbardArgs hubbard;
  fs::TrotterErrorConfig config;
  std::string out = "-";
};

void run_trotter_error(const TrotterErrorArgs& args) {
  fs::HubbardSpec spec{args.nx, args.ny, args.hubbard.t_hop, args.hubbard.u_int,
                       !args.hubbard.open_x};
  if (spec.nx < 1 || spec.ny < 1) throw InputError("lattice dimensions must be positive");
  const int n_sigma = fs::electrons_per_spin(spec.norb(), args.filling);
  const fs::SectorShape shape{spec.norb(), n_sigma, n_sigma};
  const auto records = fs::trotter_error_experiment(fs::build_hubbard(spec), shape, args.config);
  Output out(args.out);
  out.stream() << "time,order,n_steps,gate_count,mean_error,std_error\n";
  for (const auto& r : records) {
    out.stream() << fmt(args.config.time) << ',' << r.order << ',' << r.n_steps << ','
                 << r.gate_count << ',' << fmt(r.mean_error) << ',' << fmt(r.std_error) << '\n';
  }
}

// ---------------------------------------------------------------- kqd

struct KqdArgs {
  std::string fcidump;
  std::string hubbard_lattice;
  std::optional<double> filling;
  HubbardArgs hubbard;
  fs::KrylovConfig krylov;
  std::string evolve = "exact";
  int trotter_order = 1;
  int trotter_steps = 1;
  std::uint64_t seed = 0;
  std::string out = "-";
};

void run_kqd(const KqdArgs& args) {
  fs::LinearOperator h;
  fs::EvolutionStep step;
  fs::SectorShape shape;
  const bool trotter = args.evolve == "trotter";
  if (!args.fcidump.empty()) {
    std::ifstream in = open_input(args.fcidump);
    const fs::FcidumpData data = fs::parse_fcidump(in);
    shape = data.sector();
    if (args.filling) {
      const int n_sigma = fs::electrons_per_spin(shape.norb, *args.filling);
      shape.nalpha = shape.nbeta = n_sigma;
    }
    h = fs::linear_operator(data.hamiltonian);
    if (trotter) {
      const auto df = fs::df_from_molecular(data.hamiltonian);
      step = [df, dt = args.krylov.dt, order = args.trotter_order,
              n = args.trotter_steps](const fs::StateVector& v) {
        return fs::simulate_trotter_double_factorized(v, df, dt, n, order);
      };
    }
  } else {
    fs::HubbardSpec spec = parse_lattice(args.hubbard_lattice);
    spec.t_hop = args.hubbard.t_hop;
    spec.u_int = args.hubbard.u_int;
    spec.periodic_x = !args.hubbard.open_x;
    const int n_sigma = fs::electrons_per_spin(spec.norb(), args.filling.value_or(0.25));
    shape = {spec.norb(), n_sigma, n_sigma};
    const auto ham = fs::build_hubbard(spec);
    h = fs::linear_operator(ham);
    if (trotter) {
      step = [ham, dt = args.krylov.dt, order = args.trotter_order,
              n = args.trotter_steps](const fs::StateVector& v) {
        return fs::simulate_trotter_diag_coulomb(v, ham, dt, n, order);
      };
    }
  }
  if (!trotter) step = fs::exact_step(h, args.krylov.dt);

  const auto ref = fs::StateVector::hartree_fock(shape);
  const auto records = fs::krylov_diagonalize(h, ref, step, args.krylov);
  std::optional<double> ground;
  if (fs::sector_size(shape) <= 4000) ground = fs::dense_ground_energy(h, shape);

  Output out(args.out);
  out.stream() << "dim,energy,kept,ground_energy,error\n";
  for (const auto& r : records) {
    out.stream() << r.dim << ',' << fmt(r.energy) << ',' << r.kept << ',';
    if (ground) out.stream() << fmt(*ground) << ',' << fmt(r.energy - *ground);
    else out.stream() << ',';
    out.stream() << '\n';
  }
}

// ---------------------------------------------------------------- sample

struct SampleArgs {
  std::string statevector;
  std::string slater;
  std::size_t shots = 1000;
  std::uint64_t seed = 0;
  std::string out = "-";
};

void run_sample(const SampleArgs& args) {
  std::vector<fs::Configuration> samples;
  int norb = 0;
  if (!args.statevector.empty()) {
    std::ifstream in = open_input(args.statevector);
    fs::StateVector vec = [&] {
      try {
        return fs::read_statevector(in);
      } catch (const std::runtime_error& e) {
        throw InputError(e.what());
      }
    }();
    norb = vec.norb();
    samples = fs::sample_state_vector(vec, args.shots, args.seed);
  } else {
    std::ifstream in = open_input(args.slater);
    const fs::SlaterSpec spec = fs::parse_slater_spec_json(in);
    norb = spec.norb;
    samples = fs::sample_slater(spec, args.shots, args.seed);
  }
  Output out(args.out);
  for (const auto& c : samples) out.stream() << fs::format_configuration(c, norb) << '\n';
}

// ---------------------------------------------------------------- gate-count

const char* op_name(const fs::PlanOp& op) {
  if (std::holds_alternative<fs::RotationOp>(op)) return "orbital_rotation";
  if (std::holds_alternative<fs::DiagCoulombOp>(op)) return "diag_coulomb";
  return "slater_prep";
}

void run_gate_count(const std::string& plan_path) {
  std::ifstream in = open_input(plan_path);
  const fs::CircuitPlan plan = fs::merge_rotations(fs::parse_plan_json(in));
  std::cout << "index,op,two_qubit_gates\n";
  std::size_t total = 0;
  for (std::size_t i = 0; i < plan.ops.size(); ++i) {
    const std::size_t count = fs::count_two_qubit_gates({plan.norb, {plan.ops[i]}});
    total += count;
    std::cout << i << ',' << op_name(plan.ops[i]) << ',' << count << '\n';
  }
  std::cout << "total,," << total << '\n';
}

// ---------------------------------------------------------------- fcidump-info

void run_fcidump_info(const std::string& path) {
  std::ifstream in = open_input(path);
  const fs::FcidumpData data = fs::parse_fcidump(in);
  const auto& ham = data.hamiltonian;
  const int n = ham.norb();
  const fs::SectorShape shape = data.sector();
  std::size_t one_body = 0;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q <= p; ++q) one_body += ham.one_body(p, q) != fs::cplx(0.0);
  std::size_t two_body = 0;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q <= p; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s <= r; ++s) {
          if (p * (p + 1) / 2 + q >= r * (r + 1) / 2 + s) two_body += ham.two_body(p, q, r, s) != fs::cplx(0.0);
        }
  const std::size_t dim = fs::sector_size(shape);
  std::cout << "key,value\n"
            << "norb," << n << "\n"
            << "nelec," << data.nelec << "\n"
            << "ms2," << data.ms2 << "\n"
            << "nalpha," << shape.nalpha << "\n"
            << "nbeta," << shape.nbeta << "\n"
            << "sector_dimension," << dim << "\n"
            << "statevector_bytes," << dim * sizeof(fs::cplx) << "\n"
            << "constant," << fmt(ham.constant) << "\n"
            << "one_body_unique_nonzeros," << one_body << "\n"
            << "two_body_unique_nonzeros," << two_body << "\n";
  constexpr std::size_t kMaxEnergyDim = 1u << 20;
  if (dim <= kMaxEnergyDim) {
    const auto hf = fs::StateVector::hartree_fock(shape);
    std::cout << "hartree_fock_energy," << fmt(fs::expectation(fs::linear_operator(ham), hf).real())
              << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fermionic state-vector simulation in fixed particle-number sectors", "fermisim"};
  app.set_version_flag("--version", std::string(fs::kVersion));
  app.require_subcommand(1);
  std::optional<int> threads;
  app.add_option("--threads", threads,
                 std::string("OpenMP thread count (overrides ") + fs::kThreadsEnv + ")")
      ->check(CLI::PositiveNumber);

  TrotterErrorArgs te;
  te.config.orders = {0, 1, 2};
  te.config.steps = {1, 2, 4, 8, 16};
  auto* te_cmd = app.add_subcommand("trotter-error", "Trotter error of Hubbard-model evolution");
  te_cmd->add_option("--nx", te.nx, "Lattice sites along x")->capture_default_str();
  te_cmd->add_option("--ny", te.ny, "Lattice sites along y")->capture_default_str();
  te_cmd->add_option("--filling", te.filling, "Electrons per spin orbital")->capture_default_str();
  te_cmd->add_option("--time", te.config.time, "Total evolution time T")->capture_default_str();
  te_cmd->add_option("--orders", te.config.orders, "Product-formula orders")
      ->delimiter(',')
      ->capture_default_str();
  te_cmd->add_option("--steps", te.config.steps, "Trotter step counts")
      ->delimiter(',')
      ->capture_default_str();
  te_cmd->add_option("--n-vectors", te.config.n_vectors, "Random initial states")
      ->capture_default_str();
  te_cmd->add_option("--seed", te.config.seed, "Random seed")->capture_default_str();
  te_cmd->add_option("--workers", te.config.workers, "Cells evaluated concurrently")
      ->capture_default_str();
  te_cmd->add_option("--out", te.out, "CSV output file ('-' for stdout)")->capture_default_str();
  add_hubbard_options(te_cmd, te.hubbard);

  KqdArgs kq;
  auto* kq_cmd = app.add_subcommand("kqd", "Krylov quantum diagonalization");
  auto* kq_fcidump = kq_cmd->add_option("--fcidump", kq.fcidump, "FCIDUMP Hamiltonian");
  auto* kq_hubbard = kq_cmd->add_option("--hubbard", kq.hubbard_lattice, "Hubbard lattice NXxNY");
  kq_fcidump->excludes(kq_hubbard);
  kq_cmd->add_option("--filling", kq.filling,
                     "Electrons per spin orbital (default 0.25 for Hubbard, FCIDUMP header otherwise)");
  kq_cmd->add_option("--dt", kq.krylov.dt, "Time step")->capture_default_str();
  kq_cmd->add_option("--dim", kq.krylov.dim, "Krylov dimension D")->capture_default_str();
  kq_cmd->add_option("--evolve", kq.evolve, "Time evolution")
      ->check(CLI::IsMember({"exact", "trotter"}))
      ->capture_default_str();
  kq_cmd->add_option("--trotter-order", kq.trotter_order, "Product-formula order")
      ->capture_default_str();
  kq_cmd->add_option("--trotter-steps", kq.trotter_steps, "Trotter steps per time step")
      ->capture_default_str();
  kq_cmd->add_option("--threshold", kq.krylov.threshold, "Overlap eigenvalue cutoff")
      ->capture_default_str();
  kq_cmd->add_option("--seed", kq.seed, "Accepted for interface symmetry; the run is deterministic");
  kq_cmd->add_option("--out", kq.out, "CSV output file ('-' for stdout)")->capture_default_str();
  add_hubbard_options(kq_cmd, kq.hubbard);

  SampleArgs sa;
  auto* sa_cmd = app.add_subcommand("sample", "Sample configurations");
  auto* sa_vec = sa_cmd->add_option("--statevector", sa.statevector, "FSV1 state-vector file");
  auto* sa_slater = sa_cmd->add_option("--slater", sa.slater, "Slater determinant JSON spec");
  sa_vec->excludes(sa_slater);
  sa_cmd->add_option("--shots", sa.shots, "Number of samples")->capture_default_str();
  sa_cmd->add_option("--seed", sa.seed, "Random seed")->capture_default_str();
  sa_cmd->add_option("--out", sa.out, "Output file ('-' for stdout)")->capture_default_str();

  std::string plan_path;
  auto* gc_cmd = app.add_subcommand("gate-count", "Count two-qubit gates of a circuit plan");
  gc_cmd->add_option("--plan", plan_path, "Plan JSON file")->required();

  std::string fcidump_path;
  auto* fi_cmd = app.add_subcommand("fcidump-info", "Summarize a FCIDUMP file");
  fi_cmd->add_option("file", fcidump_path, "FCIDUMP file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  fs::init_threads_from_env();
  if (threads) fs::set_num_threads(*threads);

  try {
    if (*te_cmd) {
      run_trotter_error(te);
    } else if (*kq_cmd) {
      if (kq.fcidump.empty() == kq.hubbard_lattice.empty()) {
        throw InputError("kqd needs exactly one of --fcidump or --hubbard");
      }
      run_kqd(kq);
    } else if (*sa_cmd) {
      if (sa.statevector.empty() == sa.slater.empty()) {
        throw InputError("sample needs exactly one of --statevector or --slater");
      }
      run_sample(sa);
    } else if (*gc_cmd) {
      run_gate_count(plan_path);
    } else if (*fi_cmd) {
      run_fcidump_info(fcidump_path);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const fs::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return 0;
}
