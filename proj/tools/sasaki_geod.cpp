// Batch front end: solves, distances, CAT(0) audits, energies and the
// conformal example. Reports are JSON with a fixed field order.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sasaki/errors.hpp"
#include "sasaki/geometry.hpp"
#include "sasaki/io.hpp"
#include "sasaki/metric.hpp"
#include "sasaki/oracle.hpp"
#include "sasaki/samples.hpp"
#include "sasaki/sasaki.hpp"
#include "sasaki/solver.hpp"

namespace fs = std::filesystem;
using namespace sasaki;
using io::Json;

namespace {

struct GridOptions {
  double half_width = kDefaultHalfWidth;
  std::size_t scount = 257;
  std::size_t tcount = 65;
  std::string eps_schedule;
  double newton_tol = 1e-10;
  int max_newton_iters = 50;
};

void add_grid_options(CLI::App* cmd, GridOptions& g) {
  cmd->add_option("--L", g.half_width, "half-width of the s interval");
  cmd->add_option("--ns", g.scount, "s nodes");
  cmd->add_option("--nt", g.tcount, "t nodes");
  cmd->add_option("--eps-schedule", g.eps_schedule, "comma-separated decreasing eps values");
  cmd->add_option("--newton-tol", g.newton_tol);
  cmd->add_option("--max-newton-iters", g.max_newton_iters);
}

SolverConfig make_config(const GridOptions& g) {
  SolverConfig cfg;
  cfg.grid = SGrid(g.half_width, g.scount);
  cfg.tcount = g.tcount;
  cfg.newton_tol = g.newton_tol;
  cfg.max_newton_iters = g.max_newton_iters;
  if (!g.eps_schedule.empty()) {
    cfg.eps_schedule.clear();
    std::stringstream in(g.eps_schedule);
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        cfg.eps_schedule.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw ValidationError("bad eps value: " + item);
      }
    }
  }
  cfg.validate();
  return cfg;
}

void write_text(const std::string& path, const std::string& text) {
  if (const fs::path parent = fs::path(path).parent_path(); !parent.empty())
    fs::create_directories(parent);
  std::ofstream f(path);
  if (!f) throw ValidationError("cannot write " + path);
  f << text << '\n';
}

void write_json(const std::string& path, const Json& j) { write_text(path, io::dump(j)); }

Json ok(Json body) {
  Json j;
  j["status"] = "ok";
  for (auto& [k, v] : body.items()) j[k] = v;
  return j;
}

// ---- solve ---------------------------------------------------------------

struct SolveArgs {
  std::string phi0, phi1, out;
  GridOptions grid;
};

void run_solve(const SolveArgs& a) {
  const SolverConfig cfg = make_config(a.grid);
  auto load = [&](const std::string& f) {
    const InvariantPotential phi = io::read_potential_csv(f);
    return phi.grid() == cfg.grid ? phi : resample(phi, cfg.grid);
  };
  const auto sols = solve_eps_geodesic(load(a.phi0), load(a.phi1), cfg);
  fs::create_directories(a.out);
  Json runs = Json::array();
  for (std::size_t k = 0; k < sols.size(); ++k) {
    const std::string stem = "solution_" + std::to_string(k);
    io::write_path_csv(sols[k].path, (fs::path(a.out) / (stem + ".csv")).string());
    Json sidecar = io::solution_json(sols[k]);
    write_json((fs::path(a.out) / (stem + ".json")).string(), sidecar);
    sidecar["file"] = stem + ".csv";
    sidecar["length"] = path_length(sols[k].path);
    runs.push_back(sidecar);
  }
  Json body;
  body["config"] = io::config_json(cfg);
  body["solutions"] = runs;
  write_json((fs::path(a.out) / "summary.json").string(), ok(body));
}

// ---- distance / sasaki ---------------------------------------------------

struct PairArgs {
  std::string phi0, phi1, out, method = "eps_limit";
  GridOptions grid;
};

void run_distance(const PairArgs& a) {
  const SolverConfig cfg = make_config(a.grid);
  const DistanceMethod method = parse_distance_method(a.method);
  const auto report =
      distance(io::read_potential_csv(a.phi0), io::read_potential_csv(a.phi1), cfg, method);
  Json body = io::distance_json(report);
  body["config"] = io::config_json(cfg);
  write_json(a.out, ok(body));
}

void run_sasaki(const PairArgs& a) {
  const SolverConfig cfg = make_config(a.grid);
  const DistanceMethod method = parse_distance_method(a.method);
  const InvariantPotential phi0 = io::read_potential_csv(a.phi0);
  const InvariantPotential phi1 = io::read_potential_csv(a.phi1);
  const auto report = distance(phi0, phi1, cfg, method);
  Json body;
  body["sasaki_distance"] = std::sqrt(2.0 * std::numbers::pi) * report.value;
  body["distance"] = io::distance_json(report);
  body["contact_volume_phi0"] = contact_volume(phi0);
  body["contact_volume_phi1"] = contact_volume(phi1);
  body["config"] = io::config_json(cfg);
  write_json(a.out, ok(body));
}

// ---- cat0 ----------------------------------------------------------------

struct Cat0Args {
  std::string p, q, r, out, method = "oracle";
  double lambda = 0.5;
  bool random = false;
  std::size_t trials = 1;
  double tol = 1e-3;
  GridOptions grid;
  std::size_t random_nodes = kDefaultPotentialNodes;
};

void run_cat0(const Cat0Args& a) {
  const SolverConfig cfg = make_config(a.grid);
  const DistanceMethod method = parse_distance_method(a.method);
  Json body;
  if (!a.random) {
    if (a.p.empty() || a.q.empty() || a.r.empty())
      throw ValidationError("cat0 needs --p --q --r or --random");
    Cat0Report rep = cat0_check(io::read_potential_csv(a.p), io::read_potential_csv(a.q),
                                io::read_potential_csv(a.r), a.lambda, cfg, method, a.tol);
    rep.p_id = a.p;
    rep.q_id = a.q;
    rep.r_id = a.r;
    body["report"] = io::cat0_json(rep);
    body["config"] = io::config_json(cfg);
    write_json(a.out, ok(body));
    return;
  }

  const std::uint64_t seed = samples::seed_from_env();
  const SGrid grid(a.grid.half_width, a.random_nodes);
  const auto trials = static_cast<std::ptrdiff_t>(a.trials);
  std::vector<std::optional<Cat0Report>> reports(a.trials);
  std::vector<std::string> failures(a.trials);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k < trials; ++k) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(k)};
    std::mt19937_64 rng(seq);
    try {
      const auto tri = samples::random_toric_triple(grid, rng);
      Cat0Report rep = cat0_check(tri.p, tri.q, tri.r, a.lambda, cfg, method, a.tol);
      rep.p_id = "trial" + std::to_string(k) + ".p";
      rep.q_id = "trial" + std::to_string(k) + ".q";
      rep.r_id = "trial" + std::to_string(k) + ".r";
      reports[k] = rep;
    } catch (const Error& e) {
      failures[k] = e.what();
    }
  }

  Json rows = Json::array();
  double min_rel = INFINITY, max_abs_rel = 0.0;
  std::size_t passed = 0, failed_runs = 0;
  for (std::size_t k = 0; k < a.trials; ++k) {
    if (!reports[k]) {
      Json row;
      row["trial"] = k;
      row["status"] = "error";
      row["message"] = failures[k];
      rows.push_back(row);
      ++failed_runs;
      continue;
    }
    const Cat0Report& rep = *reports[k];
    const double d2 = rep.d_qr * rep.d_qr;
    min_rel = std::min(min_rel, rep.slack / d2);
    max_abs_rel = std::max(max_abs_rel, std::abs(rep.slack) / d2);
    passed += rep.passed ? 1 : 0;
    Json row = io::cat0_json(rep);
    row["trial"] = k;
    rows.push_back(row);
  }
  Json stats;
  stats["trials"] = a.trials;
  stats["passed"] = passed;
  stats["errors"] = failed_runs;
  stats["min_relative_slack"] = min_rel;
  stats["max_abs_relative_slack"] = max_abs_rel;
  body["seed"] = seed;
  body["statistics"] = stats;
  body["trials"] = rows;
  body["random_grid"] = io::grid_json(grid, 0);
  body["config"] = io::config_json(cfg);
  Json j = ok(body);
  if (failed_runs > 0) j["status"] = "partial_failure";
  write_json(a.out, j);
}

// ---- energy --------------------------------------------------------------

struct EnergyArgs {
  std::string phi, out;
};

void run_energy(const EnergyArgs& a) {
  const InvariantPotential phi = io::read_potential_csv(a.phi);
  const MassTest mass = full_mass_test(phi);
  const double energy = energy_E(phi);
  Json body;
  body["energy"] = energy;
  body["mass"] = total_mass(phi);
  body["deficit"] = mass.deficit;
  body["full_mass"] = mass.full_mass;
  body["finite_energy"] = std::isfinite(energy);
  body["in_E2"] = mass.full_mass && std::isfinite(energy);
  body["grid"] = io::grid_json(phi.grid(), 0);
  write_json(a.out, ok(body));
}

// ---- example -------------------------------------------------------------

struct ExampleArgs {
  std::string name = "conformal", out;
  GridOptions grid;
};

void run_example(const ExampleArgs& a) {
  if (a.name != "conformal") throw ValidationError("unknown example: " + a.name);
  const SGrid grid(a.grid.half_width, a.grid.scount);
  const auto phi0 = InvariantPotential::zero(grid);
  const auto phi1 = samples::conformal_endpoint(grid);
  fs::create_directories(a.out);
  io::write_potential_csv(phi0, (fs::path(a.out) / "phi0.csv").string());
  io::write_potential_csv(phi1, (fs::path(a.out) / "phi1.csv").string());
  const SpacetimePath path = samples::conformal_path(grid, a.grid.tcount);
  io::write_path_csv(path, (fs::path(a.out) / "geodesic.csv").string());

  const auto e = speed_squared(path);
  std::ostringstream speed;
  speed << "t,speed_squared\n";
  for (std::size_t j = 0; j < e.size(); ++j)
    speed << io::dump(Json(path.time(j))) << ',' << io::dump(Json(e[j])) << '\n';
  write_text((fs::path(a.out) / "speed.csv").string(), speed.str());

  Json body;
  body["name"] = a.name;
  body["phi0"] = "phi0.csv";
  body["phi1"] = "phi1.csv";
  body["geodesic"] = "geodesic.csv";
  body["oracle_distance"] = oracle_distance(phi0, phi1);
  body["exact_distance"] = samples::conformal_distance();
  body["path_length"] = path_length(path);
  body["grid"] = io::grid_json(grid, a.grid.tcount);
  write_json((fs::path(a.out) / "example.json").string(), ok(body));
}

// Numerical failures still produce a report when an output path is known.
void write_failure(const std::string& out, bool out_is_dir, const char* status, const Error& e) {
  if (out.empty()) return;
  Json j;
  j["status"] = status;
  j["message"] = e.what();
  try {
    write_json(out_is_dir ? (fs::path(out) / "summary.json").string() : out, j);
  } catch (const std::exception&) {
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geodesics and distances on S^1-invariant potentials of CP^1 and their Sasaki lifts"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* c_solve = app.add_subcommand("solve", "eps-continuation solve between two potentials");
  c_solve->add_option("--phi0", solve.phi0)->required()->check(CLI::ExistingFile);
  c_solve->add_option("--phi1", solve.phi1)->required()->check(CLI::ExistingFile);
  c_solve->add_option("--out", solve.out, "output directory")->required();
  add_grid_options(c_solve, solve.grid);

  PairArgs dist;
  auto* c_dist = app.add_subcommand("distance", "distance between two potentials");
  c_dist->add_option("--phi0", dist.phi0)->required()->check(CLI::ExistingFile);
  c_dist->add_option("--phi1", dist.phi1)->required()->check(CLI::ExistingFile);
  c_dist->add_option("--method", dist.method)->check(CLI::IsMember({"oracle", "eps_limit"}));
  c_dist->add_option("--out", dist.out)->required();
  add_grid_options(c_dist, dist.grid);

  Cat0Args cat0;
  auto* c_cat0 = app.add_subcommand("cat0", "CAT(0) comparison check");
  c_cat0->add_option("--p", cat0.p)->check(CLI::ExistingFile);
  c_cat0->add_option("--q", cat0.q)->check(CLI::ExistingFile);
  c_cat0->add_option("--r", cat0.r)->check(CLI::ExistingFile);
  c_cat0->add_option("--lambda", cat0.lambda)->check(CLI::Range(0.0, 1.0));
  c_cat0->add_flag("--random", cat0.random, "random toric triples");
  c_cat0->add_option("--trials", cat0.trials)->check(CLI::PositiveNumber);
  c_cat0->add_option("--method", cat0.method)->check(CLI::IsMember({"oracle", "eps_limit"}));
  c_cat0->add_option("--tol", cat0.tol, "tolerance factor on d(q,r)^2");
  c_cat0->add_option("--random-nodes", cat0.random_nodes, "s nodes of random potentials");
  c_cat0->add_option("--out", cat0.out)->required();
  add_grid_options(c_cat0, cat0.grid);

  EnergyArgs energy;
  auto* c_energy = app.add_subcommand("energy", "energy, mass and class membership");
  c_energy->add_option("--phi", energy.phi)->required()->check(CLI::ExistingFile);
  c_energy->add_option("--out", energy.out)->required();

  ExampleArgs example;
  auto* c_example = app.add_subcommand("example", "write a closed-form example");
  c_example->add_option("--name", example.name)->check(CLI::IsMember({"conformal"}));
  c_example->add_option("--out", example.out, "output directory")->required();
  c_example->add_option("--L", example.grid.half_width);
  c_example->add_option("--ns", example.grid.scount);
  c_example->add_option("--nt", example.grid.tcount);

  PairArgs sasaki;
  auto* c_sasaki = app.add_subcommand("sasaki", "lifted distance and contact volumes");
  c_sasaki->add_option("--phi0", sasaki.phi0)->required()->check(CLI::ExistingFile);
  c_sasaki->add_option("--phi1", sasaki.phi1)->required()->check(CLI::ExistingFile);
  c_sasaki->add_option("--method", sasaki.method)->check(CLI::IsMember({"oracle", "eps_limit"}));
  c_sasaki->add_option("--out", sasaki.out)->required();
  add_grid_options(c_sasaki, sasaki.grid);

  CLI11_PARSE(app, argc, argv);

  std::string out;
  bool out_is_dir = false;
  try {
    if (c_solve->parsed()) {
      out = solve.out;
      out_is_dir = true;
      run_solve(solve);
    } else if (c_dist->parsed()) {
      out = dist.out;
      run_distance(dist);
    } else if (c_cat0->parsed()) {
      out = cat0.out;
      run_cat0(cat0);
    } else if (c_energy->parsed()) {
      out = energy.out;
      run_energy(energy);
    } else if (c_example->parsed()) {
      out = example.out;
      out_is_dir = true;
      run_example(example);
    } else if (c_sasaki->parsed()) {
      out = sasaki.out;
      run_sasaki(sasaki);
    }
  } catch (const SolverError& e) {
    std::cerr << "solver failure: " << e.what() << '\n';
    write_failure(out, out_is_dir, "solver_failure", e);
    return 3;
  } catch (const ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    write_failure(out, out_is_dir, "validation_error", e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
