#pragma once

#include <string>

#include <json.hpp>

#include "sasaki/mabuchi.hpp"
#include "sasaki/metric.hpp"
#include "sasaki/potential.hpp"
#include "sasaki/solver.hpp"

namespace sasaki::io {

using Json = nlohmann::ordered_json;

/// Compact JSON with keys in insertion order and every double printed with
/// 17 significant digits, so identical inputs give byte-identical output.
std::string dump(const Json& j);

/// Header `# L=<L> N=<N> left_slope=<a> right_slope=<b>`, then `s,phi` rows.
void write_potential_csv(const InvariantPotential& phi, const std::string& path);
/// Throws ValidationError on a malformed file.
InvariantPotential read_potential_csv(const std::string& path);

/// Header `# L=<L> N=<N> M=<tcount>`, then one `# t=<t>` block of `s,phi`
/// rows per time slice.
void write_path_csv(const SpacetimePath& path, const std::string& filename);
SpacetimePath read_path_csv(const std::string& filename);

Json grid_json(const SGrid& grid, std::size_t tcount);
/// {eps, residual, newton_iters, monotone_flag, grid}
Json solution_json(const GeodesicSolution& sol);

/// Effective solver configuration: grid, eps schedule and tolerances.
Json config_json(const SolverConfig& cfg);
Json distance_json(const DistanceReport& report);
Json cat0_json(const Cat0Report& report);

}  // namespace sasaki::io
