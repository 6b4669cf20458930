// Serial reference vs OpenMP kernels on the conformal example.
//   kernel_bench [repeats]

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <vector>

#include "sasaki/background.hpp"
#include "sasaki/geometry.hpp"
#include "sasaki/kernels.hpp"
#include "sasaki/samples.hpp"
#include "sasaki/spline.hpp"

using namespace sasaki;

namespace {

double median_ms(int repeats, const std::function<void()>& fn) {
  std::vector<double> ms;
  for (int k = 0; k < repeats; ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    ms.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  }
  std::sort(ms.begin(), ms.end());
  return ms[ms.size() / 2];
}

void row(const char* name, int repeats, const std::function<void()>& serial,
         const std::function<void()>& parallel) {
  const double a = median_ms(repeats, serial);
  const double b = median_ms(repeats, parallel);
  std::printf("%-28s %10.3f %10.3f %8.2fx\n", name, a, b, a / b);
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 5;
  std::printf("threads: %d, repeats: %d, median wall time in ms\n", omp_get_max_threads(), repeats);
  std::printf("%-28s %10s %10s %9s\n", "kernel", "serial", "omp", "speedup");

  const SGrid grid(15.0, 8193);
  const auto phi = samples::conformal_endpoint(grid);
  const UniformSpline spline(grid.node(0), grid.spacing(), phi.values());
  std::vector<double> slopes(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    slopes[i] = background::f0_d1(grid.node(i)) + spline.derivative(grid.node(i));

  for (std::size_t k : {4097u, 65535u}) {
    const XGrid xg(k);
    std::vector<double> out(k);
    char name[64];
    std::snprintf(name, sizeof name, "conjugate K=%zu", k);
    row(name, repeats, [&] { kernels::serial::conjugate(spline, slopes, xg, out); },
        [&] { kernels::omp::conjugate(spline, slopes, xg, out); });
  }

  {
    const XGrid xg(kDefaultMomentNodes);
    const auto u = legendre(phi, xg);
    const auto closed = u.closed_remainder();
    const UniformSpline rem(0.0, xg.spacing(), closed);
    std::vector<double> node_slopes(closed.size());
    double bound = 0.0;
    for (std::size_t k = 1; k + 1 < closed.size(); ++k) {
      const double x = xg.spacing() * static_cast<double>(k);
      node_slopes[k] = background::logit(x) + rem.derivative(x);
      bound = std::max(bound, std::abs(rem.derivative(x)));
    }
    std::vector<double> out(grid.size());
    row("inverse_conjugate N=8193", repeats,
        [&] { kernels::serial::inverse_conjugate(rem, node_slopes, 2.0 * bound + 1.0, grid, out); },
        [&] { kernels::omp::inverse_conjugate(rem, node_slopes, 2.0 * bound + 1.0, grid, out); });
  }

  for (auto [m, n] : {std::pair<std::size_t, std::size_t>{65, 257}, {129, 513}}) {
    const SGrid g(15.0, n);
    const auto path = samples::conformal_path(g, m);
    std::vector<double> f0d2(n);
    for (std::size_t i = 0; i < n; ++i) f0d2[i] = background::f0_d2(g.node(i));
    const kernels::StripView view{path.values(), f0d2, m, n, path.dt(), g.spacing()};
    std::vector<double> defect((m - 2) * n);
    std::vector<double> band((3 * (m - 1) + 1) * defect.size());
    char name[64];
    std::snprintf(name, sizeof name, "strip_defect %zux%zu", m, n);
    row(name, repeats, [&] { kernels::serial::strip_defect(view, 1e-2, defect); },
        [&] { kernels::omp::strip_defect(view, 1e-2, defect); });
    std::snprintf(name, sizeof name, "strip_jacobian %zux%zu", m, n);
    row(name, repeats, [&] { kernels::serial::strip_jacobian_band(view, band); },
        [&] { kernels::omp::strip_jacobian_band(view, band); });
    std::snprintf(name, sizeof name, "strip_admissible %zux%zu", m, n);
    row(name, repeats, [&] { kernels::serial::strip_admissible(view); },
        [&] { kernels::omp::strip_admissible(view); });
  }
}
