// Copyright The excite-iter Authors.
// SPDX-License-Identifier: Apache-2.0

#include "exciter/potential.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "exciter/error.hpp"

namespace exciter
{

namespace
{

void CheckDelta(double delta)
{
  if (!(delta > 0.0 && delta <= std::numbers::pi / 2))
  {
    Fail(ErrorCode::InvalidArgument, "delta must lie in (0, pi/2], got " + std::to_string(delta));
  }
}

}  // namespace

Potential Potential::Quartic(double g)
{
  if (!(g > 0.0) || !std::isfinite(g))
  {
    Fail(ErrorCode::InvalidArgument, "quartic coupling g must be positive, got " + std::to_string(g));
  }
  return Potential(Kind::Quartic, g);
}

Potential Potential::DeltaBox(double delta)
{
  CheckDelta(delta);
  return Potential(Kind::DeltaBox, delta);
}

double Potential::p() const
{
  return std::numbers::pi - param_;
}

double Potential::lambda() const
{
  return ComputeSolubleParams(param_).lambda;
}

double Potential::operator()(double x) const
{
  if (kind_ == Kind::Quartic)
  {
    return EvalQuartic(param_, x);
  }
  return std::abs(x) <= 1.0 ? 0.0 : std::numeric_limits<double>::infinity();
}

std::string Potential::Tag() const
{
  return kind_ == Kind::Quartic ? "quartic" : "delta_box";
}

double EvalQuartic(double g, double x)
{
  const double w = x * x - 1.0;
  return 0.5 * g * g * w * w;
}

SolubleParams ComputeSolubleParams(double delta)
{
  CheckDelta(delta);
  const double p = std::numbers::pi - delta;
  // cos/sin rather than 1/tan keeps lambda exactly zero at delta = pi/2.
  const double lambda = p * std::cos(delta) / std::sin(delta);
  return {p, delta == std::numbers::pi / 2 ? 0.0 : lambda};
}

}  // namespace exciter
