// Copyright (c) the entangle contributors.
// SPDX-License-Identifier: Apache-2.0
//
// entangle — command-line front end: schmidt, twins, steer, purify, selfcheck.
// Exit codes: 0 success, 1 property/verdict failure, 2 usage or parse error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "entangle/entangle.hpp"

namespace {

using entangle::Complex;
using entangle::Index;
using entangle::Matrix;
using entangle::Vector;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitUsage = 2;

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.8f", x);
  return buf;
}

std::string format_residual(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3e", x);
  return buf;
}

std::string format_vector(const Vector& v) {
  std::string out = "[";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += "[" + format_double(v(i).real()) + ", " + format_double(v(i).imag()) + "]";
  }
  return out + "]";
}

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 1099511628211ULL;
  }
  return hash;
}

json vector_to_json(const Vector& v) {
  json arr = json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(json::array({v(i).real(), v(i).imag()}));
  return arr;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) {
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Machine-readable report: command, input digests, structured results, and
/// the residual of every numeric claim made.
struct Report {
  json doc;

  explicit Report(const std::string& command) {
    doc["command"] = command;
    doc["inputs"] = json::object();
    doc["results"] = json::object();
    doc["residuals"] = json::object();
  }

  void add_input(const std::string& name, const std::string& path, const std::string& text) {
    char digest[32];
    std::snprintf(digest, sizeof(digest), "%016llx",
                  static_cast<unsigned long long>(fnv1a(text)));
    doc["inputs"][name] = json{{"path", path}, {"digest", digest}};
  }

  void add_inline_input(const std::string& name, const std::string& text) {
    char digest[32];
    std::snprintf(digest, sizeof(digest), "%016llx",
                  static_cast<unsigned long long>(fnv1a(text)));
    doc["inputs"][name] = json{{"inline", true}, {"digest", digest}};
  }

  void result(const std::string& key, json value) { doc["results"][key] = std::move(value); }
  void residual(const std::string& key, double value) { doc["residuals"][key] = value; }

  void print_json() const { std::cout << doc.dump(2) << "\n"; }

  void print_residuals_text() const {
    std::string line = "residuals:";
    for (const auto& [key, value] : doc["residuals"].items()) {
      line += " " + key + "=" + format_residual(value.get<double>());
    }
    std::cout << line << "\n";
  }
};

struct Cli {
  entangle::TolerancePolicy tol;
  bool json_output = false;
};

// Reads a vector argument that is either inline JSON or a path to a file
// holding the JSON array.
Vector read_vector_argument(const std::string& arg, Report& report, const std::string& name) {
  if (std::filesystem::exists(arg)) {
    const std::string text = entangle::read_text_file(arg);
    report.add_input(name, arg, text);
    return entangle::parse_vector(text);
  }
  report.add_inline_input(name, arg);
  return entangle::parse_vector(arg);
}

Vector normalize_with_warning(Vector v, const entangle::TolerancePolicy& tol, const char* what) {
  const double norm = v.norm();
  if (norm == 0.0) throw entangle::ParseError(std::string(what) + ": zero vector");
  if (std::abs(norm - 1.0) > tol.eps_check) {
    std::cerr << "warning: " << what << " renormalized (|norm - 1| = " << std::abs(norm - 1.0)
              << ")\n";
    v /= norm;
  }
  return v;
}

int cmd_schmidt(const Cli& cli, const std::string& state_path) {
  Report report("schmidt");
  const std::string text = entangle::read_text_file(state_path);
  report.add_input("state", state_path, text);
  const entangle::StateFile sf = entangle::parse_state(text, cli.tol);
  if (sf.normalization_warning) {
    std::cerr << "warning: state file was not normalized; normalization applied\n";
  }
  const auto& state = sf.state;
  const entangle::SchmidtDecomposition dec = entangle::schmidt(state, cli.tol);
  const entangle::SubsystemPicture sp = entangle::subsystem_picture(state, cli.tol);
  const entangle::EprResult epr = entangle::is_epr(state, cli.tol);
  const bool entangled = dec.rank() >= 2;

  const double recon = (entangle::reconstruct(dec, state.dim_a(), state.dim_b(), cli.tol).coeff() -
                        state.coeff())
                           .norm();
  double weight_sum = 0.0;
  Matrix rho_b_rebuilt = Matrix::Zero(state.dim_b(), state.dim_b());
  for (std::size_t j = 0; j < sp.size(); ++j) {
    weight_sum +=
        sp.distinct_r(static_cast<Index>(j)) * static_cast<double>(sp.multiplicities[j]);
    rho_b_rebuilt += sp.distinct_r(static_cast<Index>(j)) * sp.proj_b[j];
  }
  const double picture_res = std::abs(weight_sum - 1.0);
  const double rho_res = (rho_b_rebuilt - entangle::reduced_rho_b(state)).norm();

  report.result("dims", json::array({state.dim_a(), state.dim_b()}));
  if (!sf.label.empty()) report.result("label", sf.label);
  report.result("rank", dec.rank());
  report.result("entangled", entangled);
  json coeffs = json::array();
  for (Index i = 0; i < dec.rank(); ++i) coeffs.push_back(dec.coefficients(i));
  report.result("coefficients", coeffs);
  report.result("epr", epr.is_epr);
  json picture = json::array();
  for (std::size_t j = 0; j < sp.size(); ++j) {
    picture.push_back(json{{"r", sp.distinct_r(static_cast<Index>(j))},
                           {"multiplicity", sp.multiplicities[j]}});
  }
  report.result("subsystem_picture", picture);
  report.residual("normalization", std::abs(state.coeff().norm() - 1.0));
  report.residual("schmidt_reconstruction", recon);
  report.residual("picture_weight_sum", picture_res);
  report.residual("picture_rho_b", rho_res);

  if (cli.json_output) {
    report.print_json();
    return kExitOk;
  }
  std::cout << "state: " << (sf.label.empty() ? state_path : sf.label) << " (" << state.dim_a()
            << "x" << state.dim_b() << ")\n";
  std::cout << "rank=" << dec.rank() << "\n";
  std::cout << "entangled=" << (entangled ? "true" : "false") << "\n";
  std::string coeff_text = "coefficients=[";
  for (Index i = 0; i < dec.rank(); ++i) {
    if (i) coeff_text += ", ";
    coeff_text += format_double(dec.coefficients(i));
  }
  std::cout << coeff_text << "]\n";
  std::cout << "EPR=" << (epr.is_epr ? "true" : "false");
  if (epr.is_epr) {
    std::cout << " (r=" << format_double(sp.distinct_r(static_cast<Index>(epr.degenerate_index)))
              << " multiplicity=" << epr.multiplicity << ")";
  }
  std::cout << "\nsubsystem picture:\n";
  for (std::size_t j = 0; j < sp.size(); ++j) {
    std::cout << "  j=" << j << " r=" << format_double(sp.distinct_r(static_cast<Index>(j)))
              << " multiplicity=" << sp.multiplicities[j] << "\n";
  }
  report.print_residuals_text();
  return kExitOk;
}

int cmd_twins(const Cli& cli, const std::string& state_path, const std::string& obs_path,
              const std::optional<std::string>& obs2_path) {
  Report report(obs2_path ? "twins.pair" : "twins.single");
  const std::string state_text = entangle::read_text_file(state_path);
  report.add_input("state", state_path, state_text);
  const entangle::BipartiteState state = entangle::parse_state(state_text, cli.tol).state;

  const std::string obs_text = entangle::read_text_file(obs_path);
  report.add_input(obs2_path ? "observable_a" : "observable_b", obs_path, obs_text);
  const entangle::ObservableFile of1 = entangle::parse_observable(obs_text, cli.tol);

  if (!obs2_path) {
    // Single observable: has_twin verdict, constructed twin and the
    // twin-correlated decomposition.
    if (of1.side != entangle::Side::B) {
      throw entangle::SideMismatch("twins: single-observable mode expects a B-side observable");
    }
    const entangle::Observable& o_b = of1.observable;
    if (o_b.dim() != state.dim_b()) {
      throw entangle::SideMismatch("twins: observable dimension does not match dim_b");
    }
    const double comm = entangle::commutator(o_b.matrix, entangle::reduced_rho_b(state)).norm();
    const bool verdict = entangle::has_twin(state, o_b, cli.tol);
    report.result("has_twin", verdict);
    report.residual("commutator", comm);
    if (verdict) {
      const entangle::Observable o_a = entangle::construct_twin(state, o_b, {}, cli.tol);
      const entangle::TwinPair twin = entangle::is_twin_pair(state, o_a, o_b, cli.tol);
      const entangle::TwinCorrelatedSchmidt dec =
          entangle::twin_correlated_schmidt(state, o_b, cli.tol);
      const double reassembly =
          (dec.reassemble(state.dim_a(), state.dim_b()) - state.coeff()).norm();
      json twin_json;
      twin_json["eigenvalues"] = o_a.spectral.eigenvalues;
      twin_json["matrix"] = matrix_to_json(o_a.matrix);
      report.result("constructed_twin", twin_json);
      json blocks = json::array();
      for (const auto& block : dec.blocks) {
        blocks.push_back(json{{"j", block.j},
                              {"m", block.m},
                              {"r", block.r},
                              {"dim", block.vectors_b.cols()}});
      }
      report.result("twin_correlated_blocks", blocks);
      report.residual("twin_roundtrip", twin.ok ? twin.max_residual : 1.0);
      report.residual("decomposition_reassembly", reassembly);
      if (cli.json_output) {
        report.print_json();
        return kExitOk;
      }
      std::cout << "has_twin=true\n";
      std::cout << "constructed twin eigenvalues: [";
      for (std::size_t k = 0; k < o_a.spectral.eigenvalues.size(); ++k) {
        if (k) std::cout << ", ";
        std::cout << o_a.spectral.eigenvalues[k];
      }
      std::cout << "]\n";
      std::cout << "twin-correlated blocks:\n";
      for (const auto& block : dec.blocks) {
        std::cout << "  j=" << block.j << " m=" << block.m << " r=" << format_double(block.r)
                  << " dim=" << block.vectors_b.cols() << "\n";
      }
      report.print_residuals_text();
      return kExitOk;
    }
    if (cli.json_output) {
      report.print_json();
    } else {
      std::cout << "has_twin=false\n";
      report.print_residuals_text();
    }
    return kExitVerdict;
  }

  // Two observables: is_twin_pair verdict with the matching and residuals.
  const std::string obs2_text = entangle::read_text_file(*obs2_path);
  report.add_input("observable_b", *obs2_path, obs2_text);
  const entangle::ObservableFile of2 = entangle::parse_observable(obs2_text, cli.tol);
  if (of1.side != entangle::Side::A || of2.side != entangle::Side::B) {
    throw entangle::SideMismatch("twins: pass the A-side observable first, the B-side second");
  }
  const entangle::TwinPair twin = entangle::is_twin_pair(state, of1.observable, of2.observable, cli.tol);
  report.result("twin", twin.ok);
  json matching = json::array();
  for (std::size_t m = 0; m < twin.matched.size(); ++m) {
    matching.push_back(
        json{{"m", m},
             {"eigenvalue_a", of1.observable.spectral.eigenvalues[twin.matched[m].index_a]},
             {"eigenvalue_b", of2.observable.spectral.eigenvalues[twin.matched[m].index_b]},
             {"residual", twin.matched[m].residual}});
  }
  report.result("matching", matching);
  report.result("nullifying_rank_a", static_cast<long>(std::lround(twin.nullify_a.trace().real())));
  report.result("nullifying_rank_b", static_cast<long>(std::lround(twin.nullify_b.trace().real())));
  report.residual("max_match", twin.max_residual);

  if (cli.json_output) {
    report.print_json();
    return twin.ok ? kExitOk : kExitVerdict;
  }
  std::cout << "twin=" << (twin.ok ? "true" : "false") << "\n";
  std::cout << "matching:\n";
  for (std::size_t m = 0; m < twin.matched.size(); ++m) {
    std::cout << "  m=" << m
              << " a=" << of1.observable.spectral.eigenvalues[twin.matched[m].index_a]
              << " <-> b=" << of2.observable.spectral.eigenvalues[twin.matched[m].index_b]
              << " residual=" << format_residual(twin.matched[m].residual) << "\n";
  }
  report.print_residuals_text();
  return twin.ok ? kExitOk : kExitVerdict;
}

int cmd_steer(const Cli& cli, const std::string& state_path, const std::string& vector_arg,
              bool target_mode) {
  Report report(target_mode ? "steer.target" : "steer");
  const std::string state_text = entangle::read_text_file(state_path);
  report.add_input("state", state_path, state_text);
  const entangle::BipartiteState state = entangle::parse_state(state_text, cli.tol).state;

  if (!target_mode) {
    Vector n_bar = read_vector_argument(vector_arg, report, "n_bar");
    if (n_bar.size() != state.dim_b()) {
      throw entangle::ParseError("steer: n_bar length does not match dim_b");
    }
    n_bar = normalize_with_warning(std::move(n_bar), cli.tol, "n_bar");
    const entangle::SteeringResult sr = entangle::steer(state, n_bar, cli.tol);
    // Brute-force collapse cross-check backs every printed number.
    const Matrix collapsed = entangle::act_b(n_bar * n_bar.adjoint(), state.coeff());
    const double prob_res = std::abs(sr.probability - collapsed.squaredNorm());
    double overlap_res = 0.0;
    if (sr.target_a) {
      const entangle::EigenSystem sys =
          entangle::hermitian_eig(collapsed * collapsed.adjoint(), cli.tol);
      const Vector oracle = sys.vectors.col(sys.values.size() - 1);
      overlap_res = 1.0 - std::abs(Complex(oracle.adjoint() * *sr.target_a));
    }
    report.result("probability", sr.probability);
    report.result("steered", sr.target_a.has_value());
    if (sr.target_a) report.result("target_A", vector_to_json(*sr.target_a));
    report.residual("collapse_probability", prob_res);
    report.residual("collapse_overlap", overlap_res);
    if (cli.json_output) {
      report.print_json();
      return kExitOk;
    }
    std::cout << "probability=" << format_double(sr.probability) << "\n";
    if (sr.target_a) {
      std::cout << "target_A=" << format_vector(*sr.target_a) << "\n";
    } else {
      std::cout << "target_A=none (n_bar has no component in range(rho_B))\n";
    }
    report.print_residuals_text();
    return kExitOk;
  }

  Vector phi = read_vector_argument(vector_arg, report, "target");
  if (phi.size() != state.dim_a()) {
    throw entangle::ParseError("steer: target length does not match dim_a");
  }
  phi = normalize_with_warning(std::move(phi), cli.tol, "target");
  const entangle::ReachabilityResult rr = entangle::reachable(state, phi, cli.tol);
  report.result("reachable", rr.reachable);
  report.residual("outside_range", rr.outside_norm);
  double roundtrip_res = 0.0;
  if (rr.reachable) {
    const entangle::SteeringResult sr = entangle::steer(state, *rr.n_bar, cli.tol);
    roundtrip_res = sr.target_a ? 1.0 - std::abs(Complex(sr.target_a->adjoint() * phi)) : 1.0;
    report.result("n_bar", vector_to_json(*rr.n_bar));
    report.result("probability", rr.probability);
    report.residual("roundtrip_overlap", roundtrip_res);
  }
  if (cli.json_output) {
    report.print_json();
    return rr.reachable ? kExitOk : kExitVerdict;
  }
  std::cout << "reachable=" << (rr.reachable ? "true" : "false") << "\n";
  if (rr.reachable) {
    std::cout << "n_bar=" << format_vector(*rr.n_bar) << "\n";
    std::cout << "probability=" << format_double(rr.probability) << "\n";
  }
  report.print_residuals_text();
  return rr.reachable ? kExitOk : kExitVerdict;
}

int cmd_purify(const Cli& cli, const std::string& rho_path, Index dim_b,
               const std::optional<std::string>& out_path) {
  Report report("purify");
  const std::string rho_text = entangle::read_text_file(rho_path);
  report.add_input("rho", rho_path, rho_text);
  const Matrix rho = entangle::parse_matrix_file(rho_text);
  const entangle::BipartiteState state = entangle::purify(rho, dim_b, cli.tol);
  const double residual = (entangle::reduced_rho_a(state) - rho).norm();
  const std::string label = "purification of " + rho_path;
  report.result("dims", json::array({state.dim_a(), state.dim_b()}));
  report.result("schmidt_rank", entangle::schmidt_rank(state, cli.tol));
  report.residual("reduced_rho_match", residual);
  if (out_path) {
    entangle::save_state(*out_path, state, label);
    report.result("written", *out_path);
  } else {
    report.result("state", json::parse(entangle::state_to_json(state, label)));
  }
  if (cli.json_output) {
    report.print_json();
    return kExitOk;
  }
  if (out_path) {
    std::cout << "written: " << *out_path << "\n";
  } else {
    std::cout << entangle::state_to_json(state, label);
  }
  report.print_residuals_text();
  return kExitOk;
}

int cmd_selfcheck(const Cli& cli, std::uint64_t seed, const std::string& dims, int trials) {
  entangle::SelfCheckOptions opts;
  opts.seed = seed;
  opts.trials = trials;
  opts.tol = cli.tol;
  long long da = 0, db = 0;
  if (std::sscanf(dims.c_str(), "%lld,%lld", &da, &db) != 2 || da < 1 || db < 1) {
    throw CLI::ValidationError("--dims", "expected \"dA,dB\" with positive integers");
  }
  if (trials < 1) throw CLI::ValidationError("--trials", "must be positive");
  opts.dim_a = static_cast<Index>(da);
  opts.dim_b = static_cast<Index>(db);

  const auto started = std::chrono::steady_clock::now();
  const std::vector<entangle::SuiteResult> results = entangle::run_selfcheck(opts);
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  Report report("selfcheck");
  report.result("seed", seed);
  report.result("dims", json::array({da, db}));
  report.result("trials", trials);
  report.result("elapsed_seconds", elapsed);
  std::size_t passed = 0;
  std::string first_failure;
  json suites = json::array();
  for (const auto& suite : results) {
    suites.push_back(json{{"name", suite.name},
                          {"max_residual", suite.max_residual},
                          {"tolerance", suite.tolerance},
                          {"pass", suite.pass}});
    report.residual(suite.name, suite.max_residual);
    if (suite.pass) {
      ++passed;
    } else if (first_failure.empty()) {
      first_failure = suite.name;
    }
  }
  report.result("suites", suites);
  report.result("passed", passed);
  report.result("total", results.size());

  if (cli.json_output) {
    report.print_json();
  } else {
    for (const auto& suite : results) {
      std::cout << (suite.pass ? "[PASS] " : "[FAIL] ") << suite.name
                << " max_residual=" << format_residual(suite.max_residual)
                << " (tol " << format_residual(suite.tolerance) << ")\n";
    }
    std::cout << "selfcheck: " << passed << "/" << results.size() << " suites passed (seed="
              << seed << " dims=" << da << "x" << db << " trials=" << trials << ", "
              << format_double(elapsed) << " s)\n";
    if (!first_failure.empty()) std::cout << "first failing property: " << first_failure << "\n";
  }
  return first_failure.empty() ? kExitOk : kExitVerdict;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"entangle — bipartite pure-state analysis: Schmidt decompositions, correlation "
               "operators, twin observables, distant measurement and steering"};
  app.require_subcommand(1);

  Cli cli;
  if (const char* env = std::getenv("ENTANGLE_EPS_CHECK")) {
    try {
      cli.tol.eps_check = std::stod(env);
    } catch (const std::exception&) {
      std::cerr << "error: ENTANGLE_EPS_CHECK is not a number\n";
      return kExitUsage;
    }
  }
  app.add_option("--eps-rank", cli.tol.eps_rank, "Singular/eigenvalue cutoff");
  app.add_option("--eps-degeneracy", cli.tol.eps_degeneracy, "Eigenvalue grouping width");
  app.add_option("--eps-check", cli.tol.eps_check, "Identity-verification tolerance");
  app.add_flag("--json", cli.json_output, "Machine-readable report on stdout");

  std::string state_path, obs_path, vector_arg, rho_path;
  std::optional<std::string> obs2_path, out_path;
  std::string target_arg;
  std::uint64_t seed = 42;
  std::string dims = "3,4";
  int trials = 100;
  Index dim_b = 0;

  CLI::App* schmidt_cmd = app.add_subcommand("schmidt", "Schmidt decomposition report");
  schmidt_cmd->add_option("state", state_path, "State file (JSON)")->required();

  CLI::App* twins_cmd =
      app.add_subcommand("twins", "Twin-observable detection and construction");
  twins_cmd->add_option("state", state_path, "State file (JSON)")->required();
  twins_cmd->add_option("observable", obs_path, "Observable file (side B, or side A when a second file is given)")
      ->required();
  twins_cmd->add_option("observable_b", [&obs2_path](const std::vector<std::string>& v) {
    obs2_path = v.front();
    return true;
  }, "Optional second observable file (side B)");

  CLI::App* steer_cmd = app.add_subcommand("steer", "Steering targets and probabilities");
  steer_cmd->add_option("state", state_path, "State file (JSON)")->required();
  steer_cmd->add_option("n_bar", vector_arg,
                        "B-side vector as [re,im]-pair JSON (inline or a file path)");
  steer_cmd->add_option("--target", target_arg,
                        "A-side target vector: report reachability and the required n_bar");

  CLI::App* purify_cmd = app.add_subcommand("purify", "Purify a density matrix");
  purify_cmd->add_option("rho", rho_path, "Density matrix file (JSON)")->required();
  purify_cmd->add_option("--dimB", dim_b, "Dimension of the ancillary B space")->required();
  purify_cmd->add_option("-o,--out", [&out_path](const std::vector<std::string>& v) {
    out_path = v.front();
    return true;
  }, "Write the state file here instead of stdout");

  CLI::App* selfcheck_cmd =
      app.add_subcommand("selfcheck", "Run every module's invariant suite on random instances");
  selfcheck_cmd->add_option("--seed", seed, "RNG seed")->capture_default_str();
  selfcheck_cmd->add_option("--dims", dims, "Factor dimensions \"dA,dB\"")->capture_default_str();
  selfcheck_cmd->add_option("--trials", trials, "Trials per suite")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    cli.tol.validate();
    if (schmidt_cmd->parsed()) return cmd_schmidt(cli, state_path);
    if (twins_cmd->parsed()) return cmd_twins(cli, state_path, obs_path, obs2_path);
    if (steer_cmd->parsed()) {
      const bool target_mode = !target_arg.empty();
      if (target_mode == !vector_arg.empty()) {
        std::cerr << "error: steer needs exactly one of n_bar or --target\n";
        return kExitUsage;
      }
      return cmd_steer(cli, state_path, target_mode ? target_arg : vector_arg, target_mode);
    }
    if (purify_cmd->parsed()) return cmd_purify(cli, rho_path, dim_b, out_path);
    if (selfcheck_cmd->parsed()) return cmd_selfcheck(cli, seed, dims, trials);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const entangle::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const entangle::SideMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const entangle::ZeroState& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const entangle::NotPSD& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const entangle::NotUnitTrace& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const entangle::DimBTooSmall& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const entangle::DimensionMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const entangle::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerdict;
  }
  return kExitUsage;
}
