#include "sasaki/kernels.hpp"

#include <algorithm>
#include <cmath>

#include "sasaki/background.hpp"

namespace sasaki::kernels {

namespace {

using background::sigmoid;
using background::softplus;

constexpr int kMaxRootIters = 100;

// Safeguarded Newton for an increasing function g on [lo, hi] with
// g(lo) <= 0 <= g(hi). `eval` returns {g, g'}.
template <class Eval>
double bracketed_root(Eval&& eval, double lo, double hi, double guess) {
  double x = std::clamp(guess, lo, hi);
  for (int it = 0; it < kMaxRootIters; ++it) {
    const auto [g, dg] = eval(x);
    if (g == 0.0) return x;
    if (g < 0.0)
      lo = x;
    else
      hi = x;
    double next = dg > 0.0 ? x - g / dg : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (std::abs(next - x) <= 4e-16 * std::max(1.0, std::abs(x)) || hi - lo <= 4e-16 * std::max(1.0, std::abs(x)))
      return next;
    x = next;
  }
  return x;
}

double conjugate_at(const UniformSpline& phi, std::span<const double> slopes, double x,
                    bool& truncated) {
  const std::size_t n = slopes.size();
  if (x < slopes.front() || x > slopes.back()) {
    truncated = true;
    return 0.0;
  }
  auto it = std::upper_bound(slopes.begin(), slopes.end(), x);
  std::size_t i = it == slopes.end() ? n - 2 : static_cast<std::size_t>(it - slopes.begin()) - 1;
  i = std::min(i, n - 2);
  const double lo = phi.node(i);
  const double hi = phi.node(i + 1);
  const double span = slopes[i + 1] - slopes[i];
  const double guess = span > 0.0 ? lo + (x - slopes[i]) / span * (hi - lo) : 0.5 * (lo + hi);
  const double s = bracketed_root(
      [&](double t) {
        return std::pair{sigmoid(t) + phi.derivative(t) - x,
                         background::f0_d2(t) + phi.second_derivative(t)};
      },
      lo, hi, guess);
  const double y = background::logit(x);
  return x * (s - y) + softplus(y) - softplus(s) - phi.value(s);
}

double inverse_at(const UniformSpline& rem, std::span<const double> slopes, double bound,
                  double s, bool& truncated) {
  // slopes[k], k = 1..K, at closed-grid nodes; work in y = logit(x).
  const std::size_t last = slopes.size() - 1;
  const double dx = rem.node(1) - rem.node(0);
  const auto node_logit = [&](std::size_t k) { return background::logit(dx * static_cast<double>(k)); };
  double lo, hi;
  if (s < slopes[1]) {
    lo = s - bound - 1.0;
    hi = node_logit(1);
  } else if (s >= slopes[last]) {
    lo = node_logit(last);
    hi = s + bound + 1.0;
  } else {
    auto it = std::upper_bound(slopes.begin() + 1, slopes.end(), s);
    const auto k = static_cast<std::size_t>(it - slopes.begin()) - 1;
    lo = node_logit(k);
    hi = node_logit(k + 1);
  }
  const auto eval = [&](double y) {
    const double x = sigmoid(y);
    const double w = x * sigmoid(-y);
    return std::pair{y + rem.derivative(x) - s, 1.0 + rem.second_derivative(x) * w};
  };
  if (eval(lo).first > 0.0 || eval(hi).first < 0.0) {
    truncated = true;
    return 0.0;
  }
  const double y = bracketed_root(eval, lo, hi, s - rem.derivative(sigmoid(s)));
  const double x = sigmoid(y);
  return x * (s - y) + softplus(y) - softplus(s) - rem.value(x);
}

template <bool Parallel>
ConjugateStatus conjugate_impl(const UniformSpline& phi, std::span<const double> slopes,
                               const XGrid& xgrid, std::span<double> out) {
  const auto count = static_cast<std::ptrdiff_t>(xgrid.size());
  std::ptrdiff_t first_bad = count;
#pragma omp parallel for schedule(static) reduction(min : first_bad) if (Parallel)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    bool truncated = false;
    out[static_cast<std::size_t>(k)] =
        conjugate_at(phi, slopes, xgrid.node(static_cast<std::size_t>(k)), truncated);
    if (truncated) first_bad = std::min(first_bad, k);
  }
  return {first_bad == count ? -1 : first_bad};
}

template <bool Parallel>
ConjugateStatus inverse_impl(const UniformSpline& rem, std::span<const double> slopes,
                             double bound, const SGrid& grid, std::span<double> out) {
  const auto count = static_cast<std::ptrdiff_t>(grid.size());
  std::ptrdiff_t first_bad = count;
#pragma omp parallel for schedule(static) reduction(min : first_bad) if (Parallel)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    bool truncated = false;
    out[static_cast<std::size_t>(i)] =
        inverse_at(rem, slopes, bound, grid.node(static_cast<std::size_t>(i)), truncated);
    if (truncated) first_bad = std::min(first_bad, i);
  }
  return {first_bad == count ? -1 : first_bad};
}

template <bool Parallel>
void defect_impl(const StripView& v, double eps, std::span<double> out) {
  const auto n = static_cast<std::ptrdiff_t>(v.scount);
  const std::size_t m = v.tcount - 1;
#pragma omp parallel for schedule(static) if (Parallel)
  for (std::ptrdiff_t ii = 0; ii < n; ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t j = 1; j < m; ++j) {
      const StripHessian hs = strip_hessian(v, j, i);
      out[unknown_index(j, i, v.tcount)] =
          hs.ftt * hs.fss - hs.fts * hs.fts - eps * v.background_d2[i];
    }
  }
}

template <bool Parallel>
void jacobian_impl(const StripView& v, std::span<double> band) {
  const std::size_t n = v.scount;
  const std::size_t m = v.tcount - 1;
  const std::size_t kl = m;
  const std::size_t ldab = 3 * m + 1;
  const double r = tail_ratio(v.ds);
  const double itt = 1.0 / (v.dt * v.dt);
  const double iss = 1.0 / (v.ds * v.ds);
  const double its = 1.0 / (4.0 * v.dt * v.ds);
  std::fill(band.begin(), band.end(), 0.0);
#pragma omp parallel for schedule(static) if (Parallel)
  for (std::ptrdiff_t ii = 0; ii < static_cast<std::ptrdiff_t>(n); ++ii) {
    const auto i = static_cast<std::size_t>(ii);
    for (std::size_t j = 1; j < m; ++j) {
      const StripHessian hs = strip_hessian(v, j, i);
      const std::size_t row = unknown_index(j, i, v.tcount);
      const auto add = [&](std::size_t jj, std::size_t cc, double value) {
        if (jj == 0 || jj == m) return;  // Dirichlet data
        const std::size_t col = unknown_index(jj, cc, v.tcount);
        band[(kl + kl + row - col) + col * ldab] += value;
      };
      // Neighbour i -+ 1 as a combination of stored nodes (tail ghost at the ends).
      const auto add_below = [&](std::size_t jj, double value) {
        if (i == 0) {
          add(jj, 0, (1.0 + r) * value);
          add(jj, 1, -r * value);
        } else {
          add(jj, i - 1, value);
        }
      };
      const auto add_above = [&](std::size_t jj, double value) {
        if (i + 1 == n) {
          add(jj, n - 1, (1.0 + r) * value);
          add(jj, n - 2, -r * value);
        } else {
          add(jj, i + 1, value);
        }
      };
      add(j + 1, i, hs.fss * itt);
      add(j - 1, i, hs.fss * itt);
      add(j, i, -2.0 * hs.fss * itt - 2.0 * hs.ftt * iss);
      add_above(j, hs.ftt * iss);
      add_below(j, hs.ftt * iss);
      const double c = -2.0 * hs.fts * its;
      add_above(j + 1, c);
      add_below(j + 1, -c);
      add_above(j - 1, -c);
      add_below(j - 1, c);
    }
  }
}

template <bool Parallel>
bool admissible_impl(const StripView& v) {
  const auto n = static_cast<std::ptrdiff_t>(v.scount);
  const std::size_t m = v.tcount - 1;
  bool ok = true;
#pragma omp parallel for schedule(static) reduction(&& : ok) if (Parallel)
  for (std::ptrdiff_t ii = 0; ii < n; ++ii) {
    for (std::size_t j = 1; j < m; ++j) {
      const StripHessian hs = strip_hessian(v, j, static_cast<std::size_t>(ii));
      ok = ok && hs.ftt > 0.0 && hs.fss > 0.0;
    }
  }
  return ok;
}

}  // namespace

namespace serial {

ConjugateStatus conjugate(const UniformSpline& phi, std::span<const double> node_slopes,
                          const XGrid& xgrid, std::span<double> out) {
  return conjugate_impl<false>(phi, node_slopes, xgrid, out);
}
ConjugateStatus inverse_conjugate(const UniformSpline& remainder,
                                  std::span<const double> node_slopes, double slope_bound,
                                  const SGrid& grid, std::span<double> out) {
  return inverse_impl<false>(remainder, node_slopes, slope_bound, grid, out);
}
void strip_defect(const StripView& view, double eps, std::span<double> out) {
  defect_impl<false>(view, eps, out);
}
void strip_jacobian_band(const StripView& view, std::span<double> band) {
  jacobian_impl<false>(view, band);
}
bool strip_admissible(const StripView& view) { return admissible_impl<false>(view); }

}  // namespace serial

namespace omp {

ConjugateStatus conjugate(const UniformSpline& phi, std::span<const double> node_slopes,
                          const XGrid& xgrid, std::span<double> out) {
  return conjugate_impl<true>(phi, node_slopes, xgrid, out);
}
ConjugateStatus inverse_conjugate(const UniformSpline& remainder,
                                  std::span<const double> node_slopes, double slope_bound,
                                  const SGrid& grid, std::span<double> out) {
  return inverse_impl<true>(remainder, node_slopes, slope_bound, grid, out);
}
void strip_defect(const StripView& view, double eps, std::span<double> out) {
  defect_impl<true>(view, eps, out);
}
void strip_jacobian_band(const StripView& view, std::span<double> band) {
  jacobian_impl<true>(view, band);
}
bool strip_admissible(const StripView& view) { return admissible_impl<true>(view); }

}  // namespace omp

}  // namespace sasaki::kernels
