#include "sasaki/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "sasaki/errors.hpp"

namespace sasaki::io {

namespace {

std::string number(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        emit(value, out);
      }
      out += '}';
      break;
    }
    case Json::value_t::array: {
      out += '[';
      for (std::size_t k = 0; k < j.size(); ++k) {
        if (k) out += ',';
        emit(j[k], out);
      }
      out += ']';
      break;
    }
    case Json::value_t::number_float:
      out += number(j.get<double>());
      break;
    default:
      out += j.dump();
  }
}

std::ofstream open_out(const std::string& path) {
  std::ofstream f(path);
  if (!f) throw ValidationError("cannot open " + path + " for writing");
  return f;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ValidationError("cannot open " + path);
  return f;
}

// Parses `# k1=v1 k2=v2 ...` into values, in order.
std::vector<double> header_fields(const std::string& line, std::size_t expected) {
  if (line.rfind("# ", 0) != 0) throw ValidationError("missing CSV header: " + line);
  std::istringstream in(line.substr(2));
  std::vector<double> out;
  std::string token;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw ValidationError("bad header field: " + token);
    try {
      out.push_back(std::stod(token.substr(eq + 1)));
    } catch (const std::exception&) {
      throw ValidationError("bad header value: " + token);
    }
  }
  if (out.size() != expected) throw ValidationError("unexpected header: " + line);
  return out;
}

double phi_column(const std::string& line) {
  const auto comma = line.find(',');
  if (comma == std::string::npos) throw ValidationError("bad CSV row: " + line);
  try {
    return std::stod(line.substr(comma + 1));
  } catch (const std::exception&) {
    throw ValidationError("bad CSV row: " + line);
  }
}

}  // namespace

std::string dump(const Json& j) {
  std::string out;
  emit(j, out);
  return out;
}

void write_potential_csv(const InvariantPotential& phi, const std::string& path) {
  auto f = open_out(path);
  const SGrid& g = phi.grid();
  f << "# L=" << number(g.half_width()) << " N=" << g.size()
    << " left_slope=" << number(phi.left_slope()) << " right_slope=" << number(phi.right_slope())
    << "\ns,phi\n";
  for (std::size_t i = 0; i < phi.size(); ++i) f << number(g.node(i)) << ',' << number(phi[i]) << '\n';
}

InvariantPotential read_potential_csv(const std::string& path) {
  auto f = open_in(path);
  std::string line;
  std::getline(f, line);
  const auto h = header_fields(line, 4);
  std::getline(f, line);
  if (line != "s,phi") throw ValidationError("expected column header s,phi");
  std::vector<double> values;
  while (std::getline(f, line))
    if (!line.empty()) values.push_back(phi_column(line));
  const SGrid grid(h[0], static_cast<std::size_t>(h[1]));
  if (values.size() != grid.size()) throw ValidationError("row count does not match N");
  return InvariantPotential(grid, std::move(values), h[2], h[3]);
}

void write_path_csv(const SpacetimePath& path, const std::string& filename) {
  auto f = open_out(filename);
  const SGrid& g = path.grid();
  f << "# L=" << number(g.half_width()) << " N=" << g.size() << " M=" << path.tcount() << '\n';
  for (std::size_t j = 0; j < path.tcount(); ++j) {
    f << "# t=" << number(path.time(j)) << "\ns,phi\n";
    for (std::size_t i = 0; i < g.size(); ++i)
      f << number(g.node(i)) << ',' << number(path.at(j, i)) << '\n';
  }
}

SpacetimePath read_path_csv(const std::string& filename) {
  auto f = open_in(filename);
  std::string line;
  std::getline(f, line);
  const auto h = header_fields(line, 3);
  const SGrid grid(h[0], static_cast<std::size_t>(h[1]));
  const auto tcount = static_cast<std::size_t>(h[2]);
  std::vector<double> values;
  values.reserve(grid.size() * tcount);
  while (std::getline(f, line)) {
    if (line.empty() || line[0] == '#' || line == "s,phi") continue;
    values.push_back(phi_column(line));
  }
  if (values.size() != grid.size() * tcount) throw ValidationError("row count does not match N*M");
  return SpacetimePath(grid, tcount, std::move(values));
}

Json grid_json(const SGrid& grid, std::size_t tcount) {
  Json j;
  j["L"] = grid.half_width();
  j["N"] = grid.size();
  j["M"] = tcount;
  return j;
}

Json solution_json(const GeodesicSolution& sol) {
  Json j;
  j["eps"] = sol.eps;
  j["residual"] = sol.residual;
  j["newton_iters"] = sol.newton_iters;
  j["monotone_flag"] = sol.monotone_flag;
  j["grid"] = grid_json(sol.path.grid(), sol.path.tcount());
  return j;
}

Json config_json(const SolverConfig& cfg) {
  Json j;
  j["grid"] = grid_json(cfg.grid, cfg.tcount);
  j["eps_schedule"] = cfg.eps_schedule;
  j["newton_tol"] = cfg.newton_tol;
  j["max_newton_iters"] = cfg.max_newton_iters;
  j["damping"] = cfg.damping;
  return j;
}

Json distance_json(const DistanceReport& report) {
  Json j;
  j["value"] = report.value;
  j["method"] = std::string(to_string(report.method));
  Json trace = Json::array();
  for (const auto& e : report.eps_trace) {
    Json row;
    row["eps"] = e.eps;
    row["length"] = e.length;
    row["residual"] = e.residual;
    row["newton_iters"] = e.newton_iters;
    trace.push_back(row);
  }
  j["eps_trace"] = trace;
  j["grid"] = grid_json(report.grid, report.tcount);
  j["moment_nodes"] = report.xnodes;
  return j;
}

Json cat0_json(const Cat0Report& report) {
  Json j;
  j["p"] = report.p_id;
  j["q"] = report.q_id;
  j["r"] = report.r_id;
  j["lambda"] = report.lambda;
  j["method"] = std::string(to_string(report.method));
  j["d_pq"] = report.d_pq;
  j["d_pr"] = report.d_pr;
  j["d_qr"] = report.d_qr;
  j["d_pa"] = report.d_pa;
  j["d_qa"] = report.d_qa;
  j["slack"] = report.slack;
  j["tolerance"] = report.tolerance;
  j["passed"] = report.passed;
  return j;
}

}  // namespace sasaki::io
