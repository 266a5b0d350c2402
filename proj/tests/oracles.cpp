// Copyright The excite-iter Authors.
// SPDX-License-Identifier: Apache-2.0

#include "oracles.hpp"

#include <lapacke.h>

#include <cmath>
#include <stdexcept>

namespace oracle
{

std::vector<double> FiniteDifferenceEigenvalues(double g, double half_width, double h, int count)
{
  const auto intervals = static_cast<lapack_int>(std::llround(2.0 * half_width / h));
  const lapack_int m = intervals - 1;
  std::vector<double> d(m), e(m - 1, -0.5 / (h * h));
  for (lapack_int j = 0; j < m; ++j)
  {
    const double x = -half_width + static_cast<double>(j + 1) * h;
    const double w = x * x - 1.0;
    d[j] = 1.0 / (h * h) + 0.5 * g * g * w * w;
  }
  std::vector<double> w(m);
  std::vector<lapack_int> iblock(m), isplit(m);
  lapack_int found = 0, nsplit = 0;
  const double abstol = 2.0 * LAPACKE_dlamch('S');
  const lapack_int info =
      LAPACKE_dstebz('I', 'E', m, 0.0, 0.0, 1, count, abstol, d.data(), e.data(), &found, &nsplit,
                     w.data(), iblock.data(), isplit.data());
  if (info != 0 || found != count)
  {
    throw std::runtime_error("dstebz failed");
  }
  w.resize(count);
  return w;
}

std::vector<double> RichardsonEigenvalues(double g, double half_width, double h, int count)
{
  const auto coarse = FiniteDifferenceEigenvalues(g, half_width, h, count);
  const auto fine = FiniteDifferenceEigenvalues(g, half_width, 0.5 * h, count);
  std::vector<double> out(count);
  for (int k = 0; k < count; ++k)
  {
    out[k] = (4.0 * fine[k] - coarse[k]) / 3.0;
  }
  return out;
}

double NumerovResidual(const exciter::GroundState &gs)
{
  const std::size_t n = gs.grid.size();
  const double h = gs.grid.spacing();
  std::vector<double> psi(n), f(n);
  for (std::size_t i = 0; i < n; ++i)
  {
    psi[i] = std::exp(-(gs.s[i] - gs.s[0]));
    f[i] = 2.0 * (gs.potential(gs.grid[i]) - gs.e_gd);
  }
  const double c = h * h / 12.0;
  double r2 = 0.0, p2 = 0.0;
  for (std::size_t i = 1; i + 1 < n; ++i)
  {
    const double r = (psi[i + 1] * (1.0 - c * f[i + 1]) - 2.0 * psi[i] * (1.0 + 5.0 * c * f[i]) +
                      psi[i - 1] * (1.0 - c * f[i - 1])) /
                     (h * h);
    r2 += r * r;
    p2 += psi[i] * psi[i];
  }
  return std::sqrt(r2 / p2);
}

double XSinSquaredAntiderivative(double p, double z)
{
  const double a = 2.0 * p;
  const double u = a * (1.0 - z);
  return 0.25 * z * z + z * std::sin(u) / (2.0 * a) - std::cos(u) / (2.0 * a * a);
}

double SolubleTailLinear(double p, double x)
{
  return XSinSquaredAntiderivative(p, 1.0) - XSinSquaredAntiderivative(p, x);
}

double SinSquaredMoment(double p)
{
  return SolubleTailLinear(p, 0.0);
}

}  // namespace oracle
