// Copyright The excite-iter Authors.
// SPDX-License-Identifier: Apache-2.0

#include "exciter/soluble_reference.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "exciter/error.hpp"
#include "exciter/potential.hpp"

namespace exciter::soluble
{

namespace
{

constexpr double kPi = std::numbers::pi;

double CheckedP(double delta)
{
  return ComputeSolubleParams(delta).p;
}

void CheckUnitInterval(double x)
{
  if (!(x >= 0.0 && x <= 1.0))
  {
    Fail(ErrorCode::OutOfDomain, "x must lie in [0, 1], got " + std::to_string(x));
  }
}

}  // namespace

double ExactEpsilon(double delta)
{
  if (!(delta >= 0.0 && delta <= kPi / 2))
  {
    Fail(ErrorCode::InvalidArgument, "delta must lie in [0, pi/2]");
  }
  // (pi^2 - p^2)/2 without the cancellation.
  return kPi * delta - 0.5 * delta * delta;
}

double ExactChi(double delta, double x)
{
  const double p = CheckedP(delta);
  CheckUnitInterval(x);
  const double t = 1.0 - x;
  if (t == 0.0)
  {
    return kPi / p;
  }
  // sin(pi x) = sin(pi (1 - x)); the second form keeps precision near the wall.
  const double numerator = x <= 0.5 ? std::sin(kPi * x) : std::sin(kPi * t);
  return numerator / std::sin(p * t);
}

double Chi1ClosedForm(double delta, double x)
{
  const double p = CheckedP(delta);
  CheckUnitInterval(x);
  const double t = 1.0 - x;
  return std::sin(p * x) - std::sin(p) * (x / p * std::sin(p * t) + x * x * std::cos(p * t));
}

double Epsilon1ClosedForm(double delta)
{
  const double p = CheckedP(delta);
  // p cot p = -p cot(delta).
  return 2.0 * p * p / (1.0 + p * std::cos(delta) / std::sin(delta));
}

double EpsilonSeries(double delta, int order)
{
  CheckedP(delta);
  const double d = delta;
  const double d2 = d * d;
  const double d3 = d2 * d;
  const double d4 = d3 * d;
  switch (order)
  {
    case 1:
      return 2 * kPi * d - 4 * d2 + 2 * (1 / kPi + kPi / 3) * d3 - 2 * d4;
    case 2:
      // The delta^4 coefficient is 1/3 + 2/pi^2; confirmed against
      // high-precision quadrature of the second iterate.
      return kPi * d + (1 / kPi - kPi / 3) * d3 + (1.0 / 3 + 2 / (kPi * kPi)) * d4;
    case 3:
      return kPi * d - 0.5 * d2 + (kPi * kPi - 6) / (12 * kPi) * d3 - 15 / (8 * kPi * kPi) * d4;
    default:
      Fail(ErrorCode::InvalidArgument,
           "series order must be 1, 2 or 3, got " + std::to_string(order));
  }
}

}  // namespace exciter::soluble
