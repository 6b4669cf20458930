#include "sasaki/solver.hpp"

#include <lapacke.h>

#include <algorithm>
#include <cmath>

#include "sasaki/background.hpp"
#include "sasaki/errors.hpp"
#include "sasaki/geometry.hpp"
#include "sasaki/kernels.hpp"

namespace sasaki {

namespace {

constexpr double kMonotoneSlack = 1e-8;
constexpr double kArmijo = 1e-4;
constexpr double kMinStep = 1e-10;

double max_abs(std::span<const double> v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

double norm2(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s);
}

std::vector<double> background_d2(const SGrid& g) {
  std::vector<double> d2(g.size());
  for (std::size_t i = 0; i < d2.size(); ++i) d2[i] = background::f0_d2(g.node(i));
  return d2;
}

class StripNewton {
 public:
  StripNewton(const SolverConfig& cfg, std::vector<double> initial)
      : cfg_(cfg),
        n_(cfg.grid.size()),
        tcount_(cfg.tcount),
        unknowns_(n_ * (tcount_ - 2)),
        f0d2_(background_d2(cfg.grid)),
        values_(std::move(initial)),
        defect_(unknowns_),
        band_((3 * (tcount_ - 1) + 1) * unknowns_),
        pivots_(unknowns_) {}

  kernels::StripView view(std::span<const double> values) const {
    return {values, f0d2_, tcount_, n_, 1.0 / static_cast<double>(tcount_ - 1),
            cfg_.grid.spacing()};
  }

  bool admissible() const { return kernels::omp::strip_admissible(view(values_)); }

  // Runs Newton at fixed eps; returns {residual, iterations}.
  std::pair<double, int> solve(double eps) {
    kernels::omp::strip_defect(view(values_), eps, defect_);
    double residual = max_abs(defect_);
    int iters = 0;
    std::vector<double> step(unknowns_);
    std::vector<double> trial(values_.size());
    std::vector<double> trial_defect(unknowns_);
    const auto m = static_cast<lapack_int>(tcount_ - 1);
    while (residual > cfg_.newton_tol) {
      if (iters == cfg_.max_newton_iters) throw NewtonDivergence(eps, residual);
      ++iters;
      kernels::omp::strip_jacobian_band(view(values_), band_);
      for (std::size_t k = 0; k < unknowns_; ++k) step[k] = -defect_[k];
      const lapack_int info =
          LAPACKE_dgbsv(LAPACK_COL_MAJOR, static_cast<lapack_int>(unknowns_), m, m, 1,
                        band_.data(), 3 * m + 1, pivots_.data(), step.data(),
                        static_cast<lapack_int>(unknowns_));
      if (info != 0) throw NewtonDivergence(eps, residual);

      const double base = norm2(defect_);
      bool any_admissible = false;
      bool accepted = false;
      for (double alpha = 1.0; alpha >= kMinStep; alpha *= cfg_.damping) {
        trial = values_;
        for (std::size_t i = 0; i < n_; ++i)
          for (std::size_t j = 1; j + 1 < tcount_; ++j)
            trial[j * n_ + i] += alpha * step[kernels::unknown_index(j, i, tcount_)];
        if (!kernels::omp::strip_admissible(view(trial))) continue;
        any_admissible = true;
        kernels::omp::strip_defect(view(trial), eps, trial_defect);
        if (norm2(trial_defect) <= (1.0 - kArmijo * alpha) * base) {
          accepted = true;
          break;
        }
      }
      if (!accepted) {
        if (!any_admissible) throw PositivityLoss(eps);
        throw NewtonDivergence(eps, residual);
      }
      values_.swap(trial);
      defect_.swap(trial_defect);
      residual = max_abs(defect_);
    }
    return {residual, iters};
  }

  const std::vector<double>& values() const { return values_; }

 private:
  const SolverConfig& cfg_;
  std::size_t n_;
  std::size_t tcount_;
  std::size_t unknowns_;
  std::vector<double> f0d2_;
  std::vector<double> values_;
  std::vector<double> defect_;
  std::vector<double> band_;
  std::vector<lapack_int> pivots_;
};

// Affine interpolation minus c t (1 - t), with c large enough that the
// discrete Hessian of F is positive definite with margin eps f0''.
std::vector<double> initial_guess(const InvariantPotential& phi0, const InvariantPotential& phi1,
                                  const SolverConfig& cfg, double eps) {
  const std::size_t n = cfg.grid.size();
  const std::size_t tc = cfg.tcount;
  const std::vector<double> f0d2 = background_d2(cfg.grid);
  std::vector<double> v(n * tc);
  for (std::size_t j = 0; j < tc; ++j) {
    const double t = static_cast<double>(j) / static_cast<double>(tc - 1);
    for (std::size_t i = 0; i < n; ++i) v[j * n + i] = (1.0 - t) * phi0[i] + t * phi1[i];
  }
  const kernels::StripView view{v, f0d2, tc, n, 1.0 / static_cast<double>(tc - 1),
                                cfg.grid.spacing()};
  double c = 0.0;
  for (std::size_t j = 1; j + 1 < tc; ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const auto hs = kernels::strip_hessian(view, j, i);
      if (!(hs.fss > 0.0)) throw PositivityLoss(eps);
      c = std::max(c, (hs.fts * hs.fts + eps * f0d2[i]) / hs.fss);
    }
  c += eps;
  for (std::size_t j = 1; j + 1 < tc; ++j) {
    const double t = static_cast<double>(j) / static_cast<double>(tc - 1);
    for (std::size_t i = 0; i < n; ++i) v[j * n + i] -= c * t * (1.0 - t);
  }
  return v;
}

}  // namespace

void SolverConfig::validate() const {
  if (eps_schedule.empty()) throw ValidationError("eps schedule is empty");
  for (std::size_t k = 0; k < eps_schedule.size(); ++k) {
    if (!(eps_schedule[k] > 0.0)) throw ValidationError("eps schedule must be positive");
    if (k > 0 && !(eps_schedule[k] < eps_schedule[k - 1]))
      throw ValidationError("eps schedule must be strictly decreasing");
  }
  if (!(newton_tol > 0.0)) throw ValidationError("newton_tol must be positive");
  if (max_newton_iters < 1) throw ValidationError("max_newton_iters must be >= 1");
  if (!(damping > 0.0 && damping < 1.0)) throw ValidationError("damping must lie in (0, 1)");
  if (tcount < 3) throw ValidationError("tcount must be >= 3");
}

std::vector<GeodesicSolution> solve_eps_geodesic(const InvariantPotential& phi0,
                                                 const InvariantPotential& phi1,
                                                 const SolverConfig& cfg) {
  cfg.validate();
  if (!(phi0.grid() == cfg.grid) || !(phi1.grid() == cfg.grid))
    throw GridMismatch("endpoints must be sampled on the solver grid");
  if (!phi0.smooth_class() || !phi1.smooth_class())
    throw ValidationError("endpoints must have zero asymptotic slopes");
  ma_density(phi0);
  ma_density(phi1);

  StripNewton newton(cfg, initial_guess(phi0, phi1, cfg, cfg.eps_schedule.front()));
  if (!newton.admissible()) throw PositivityLoss(cfg.eps_schedule.front());

  std::vector<GeodesicSolution> out;
  out.reserve(cfg.eps_schedule.size());
  for (double eps : cfg.eps_schedule) {
    const auto [residual, iters] = newton.solve(eps);
    out.push_back({SpacetimePath(cfg.grid, cfg.tcount, newton.values()), eps, residual, iters, true});
  }
  for (std::size_t k = 0; k + 1 < out.size(); ++k) {
    const auto lo = out[k].path.values();
    const auto hi = out[k + 1].path.values();
    bool ok = true;
    for (std::size_t q = 0; q < lo.size() && ok; ++q) ok = lo[q] <= hi[q] + kMonotoneSlack;
    out[k].monotone_flag = ok;
  }
  return out;
}

double geodesic_residual(const SpacetimePath& path, double eps) {
  const SGrid& g = path.grid();
  const std::size_t n = g.size();
  const double dt = path.dt();
  const double h = g.spacing();
  double worst = 0.0;
  for (std::size_t j = 1; j + 1 < path.tcount(); ++j) {
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const double c = path.at(j, i);
      const double ftt = (path.at(j + 1, i) - 2.0 * c + path.at(j - 1, i)) / (dt * dt);
      const double fss =
          background::f0_d2(g.node(i)) + (path.at(j, i + 1) - 2.0 * c + path.at(j, i - 1)) / (h * h);
      const double fts = (path.at(j + 1, i + 1) - path.at(j + 1, i - 1) - path.at(j - 1, i + 1) +
                          path.at(j - 1, i - 1)) /
                         (4.0 * dt * h);
      worst = std::max(worst, std::abs(ftt * fss - fts * fts - eps * background::f0_d2(g.node(i))));
    }
  }
  return worst;
}

std::vector<double> geodesic_acceleration(const SpacetimePath& path) {
  const std::size_t n = path.grid().size();
  const std::vector<double> f0d2 = background_d2(path.grid());
  const kernels::StripView view{path.values(), f0d2, path.tcount(), n, path.dt(),
                                path.grid().spacing()};
  std::vector<double> out(path.values().size(), 0.0);
  for (std::size_t j = 1; j + 1 < path.tcount(); ++j)
    for (std::size_t i = 0; i < n; ++i) {
      const auto hs = kernels::strip_hessian(view, j, i);
      out[j * n + i] = hs.ftt - hs.fts * hs.fts / hs.fss;
    }
  return out;
}

}  // namespace sasaki
