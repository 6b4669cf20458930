#include "sasaki/sasaki.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "sasaki/background.hpp"
#include "sasaki/geometry.hpp"

namespace sasaki {

double sasaki_inner_product(const InvariantPotential& phi, const TangentField& a,
                            const TangentField& b) {
  return 2.0 * std::numbers::pi * inner_product(phi, a, b);
}

double sasaki_distance(const InvariantPotential& phi0, const InvariantPotential& phi1,
                       const SolverConfig& cfg, DistanceMethod method) {
  return std::sqrt(2.0 * std::numbers::pi) * distance(phi0, phi1, cfg, method).value;
}

double contact_volume(const InvariantPotential& phi) {
  return 2.0 * std::numbers::pi * total_mass(phi);
}

double cone_residual(const SpacetimePath& path, double eps) {
  const SGrid& g = path.grid();
  const std::size_t n = g.size();
  const std::size_t m = path.tcount();
  const double dr = 0.5 * path.dt();
  const double h = g.spacing();
  std::vector<double> radial(m);
  for (std::size_t j = 0; j < m; ++j) radial[j] = 4.0 * std::log(1.0 + 0.5 * path.time(j));

  // psi differences are assembled as (phi part + radial part); psi itself is
  // never formed, so the O(1) radial values do not swamp small defects.
  double worst = 0.0;
  for (std::size_t j = 1; j + 1 < m; ++j) {
    const double r = 1.0 + 0.5 * path.time(j);
    const double radial_d2 = radial[j + 1] - 2.0 * radial[j] + radial[j - 1];
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const double f2 = background::f0_d2(g.node(i));
      const double psi_rr_d2 =
          (path.at(j + 1, i) - 2.0 * path.at(j, i) + path.at(j - 1, i)) + radial_d2;
      const double g_rr = (psi_rr_d2 - radial_d2) / (dr * dr);
      const double g_ss =
          f2 + (path.at(j, i + 1) - 2.0 * path.at(j, i) + path.at(j, i - 1)) / (h * h);
      // The radial term is constant in s and drops out of the mixed difference.
      const double g_rs = (path.at(j + 1, i + 1) - path.at(j + 1, i - 1) - path.at(j - 1, i + 1) +
                           path.at(j - 1, i - 1)) /
                          (4.0 * dr * h);
      const double defect = r * r * (0.25 * (g_rr * g_ss - g_rs * g_rs) - eps * f2);
      worst = std::max(worst, std::abs(defect));
    }
  }
  return worst;
}

}  // namespace sasaki
