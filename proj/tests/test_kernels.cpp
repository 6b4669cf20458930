#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "sasaki/background.hpp"
#include "sasaki/geometry.hpp"
#include "sasaki/kernels.hpp"
#include "sasaki/samples.hpp"
#include "sasaki/spline.hpp"

using namespace sasaki;

TEST_CASE("spline reproduces cubics") {
  std::vector<double> y(41);
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double x = -1.0 + 0.05 * static_cast<double>(i);
    y[i] = x * x * x - 2.0 * x + 0.5;
  }
  const UniformSpline sp(-1.0, 0.05, y);
  for (double x : {-0.93, -0.2, 0.0, 0.41, 0.999}) {
    CHECK(sp.value(x) == doctest::Approx(x * x * x - 2.0 * x + 0.5).epsilon(1e-12));
    CHECK(sp.derivative(x) == doctest::Approx(3.0 * x * x - 2.0).epsilon(1e-10));
    CHECK(sp.second_derivative(x) == doctest::Approx(6.0 * x).epsilon(1e-8));
  }
}

TEST_CASE("serial and parallel conjugate kernels agree exactly") {
  const SGrid g(15.0, 1025);
  std::mt19937_64 rng(4);
  const auto phi = samples::random_potential(g, rng);
  const UniformSpline sp(g.node(0), g.spacing(), phi.values());
  std::vector<double> slopes(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    slopes[i] = background::f0_d1(g.node(i)) + sp.derivative(g.node(i));
  const XGrid xg(2047);
  std::vector<double> a(xg.size()), b(xg.size());
  const auto sa = kernels::serial::conjugate(sp, slopes, xg, a);
  const auto sb = kernels::omp::conjugate(sp, slopes, xg, b);
  CHECK(sa.truncated_at == sb.truncated_at);
  CHECK(a == b);
}

TEST_CASE("serial and parallel inverse kernels agree exactly") {
  const XGrid xg(2047);
  const auto u = legendre(samples::conformal_endpoint(SGrid(15.0, 1025)), xg);
  const auto closed = u.closed_remainder();
  const UniformSpline rem(0.0, xg.spacing(), closed);
  std::vector<double> slopes(closed.size());
  for (std::size_t k = 1; k + 1 < closed.size(); ++k) {
    const double x = xg.spacing() * static_cast<double>(k);
    slopes[k] = background::logit(x) + rem.derivative(x);
  }
  const SGrid g(15.0, 513);
  std::vector<double> a(g.size()), b(g.size());
  kernels::serial::inverse_conjugate(rem, slopes, 5.0, g, a);
  kernels::omp::inverse_conjugate(rem, slopes, 5.0, g, b);
  CHECK(a == b);
}

TEST_CASE("serial and parallel strip kernels agree exactly") {
  const std::size_t m = 17, n = 129;
  const SGrid g(15.0, n);
  const auto path = samples::conformal_path(g, m);
  std::vector<double> f0d2(n);
  for (std::size_t i = 0; i < n; ++i) f0d2[i] = background::f0_d2(g.node(i));
  const kernels::StripView view{path.values(), f0d2, m, n, path.dt(), g.spacing()};
  const std::size_t unknowns = (m - 2) * n;
  std::vector<double> da(unknowns), db(unknowns);
  kernels::serial::strip_defect(view, 0.01, da);
  kernels::omp::strip_defect(view, 0.01, db);
  CHECK(da == db);
  std::vector<double> ja((3 * (m - 1) + 1) * unknowns), jb(ja.size());
  kernels::serial::strip_jacobian_band(view, ja);
  kernels::omp::strip_jacobian_band(view, jb);
  CHECK(ja == jb);
  CHECK(kernels::serial::strip_admissible(view) == kernels::omp::strip_admissible(view));
}

TEST_CASE("strip jacobian matches finite differences of the defect") {
  const std::size_t m = 7, n = 17;
  const SGrid g(6.0, n);
  auto path = samples::conformal_path(g, m);
  std::vector<double> values(path.values().begin(), path.values().end());
  std::vector<double> f0d2(n);
  for (std::size_t i = 0; i < n; ++i) f0d2[i] = background::f0_d2(g.node(i));
  const std::size_t unknowns = (m - 2) * n;
  const std::size_t kl = m - 1;
  const std::size_t ld = 3 * kl + 1;
  std::vector<double> band(ld * unknowns);
  auto view = [&] { return kernels::StripView{values, f0d2, m, n, path.dt(), g.spacing()}; };
  kernels::serial::strip_jacobian_band(view(), band);

  std::vector<double> base(unknowns), bumped(unknowns);
  kernels::serial::strip_defect(view(), 0.1, base);
  const double step = 1e-6;
  for (std::size_t i : {0u, 5u, 16u}) {
    for (std::size_t j : {1u, 3u, 5u}) {
      const std::size_t col = kernels::unknown_index(j, i, m);
      values[j * n + i] += step;
      kernels::serial::strip_defect(view(), 0.1, bumped);
      values[j * n + i] -= step;
      for (std::size_t row = 0; row < unknowns; ++row) {
        const double fd = (bumped[row] - base[row]) / step;
        const auto offset = static_cast<std::ptrdiff_t>(row) - static_cast<std::ptrdiff_t>(col);
        const double analytic = std::abs(offset) <= static_cast<std::ptrdiff_t>(kl)
                                    ? band[col * ld + 2 * kl + static_cast<std::size_t>(offset)]
                                    : 0.0;
        CHECK(analytic == doctest::Approx(fd).epsilon(1e-4).scale(1.0));
      }
    }
  }
}
