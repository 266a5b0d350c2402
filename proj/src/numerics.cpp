// Copyright The excite-iter Authors.
// SPDX-License-Identifier: Apache-2.0

#include "exciter/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "exciter/error.hpp"
#include "exciter/groundstate.hpp"

namespace exciter
{

namespace
{

// Cody-Waite split of ln 2; k * kLn2Hi is exact for |k| < 2^20.
constexpr double kLn2Hi = 6.93147180369123816490e-01;
constexpr double kLn2Lo = 1.90821492927058770002e-10;
constexpr double kInvLn2 = 1.44269504088896338700e+00;

}  // namespace

LogScaledValue LogScaledValue::FromDouble(double v)
{
  if (v == 0.0)
  {
    return Zero();
  }
  if (!std::isfinite(v))
  {
    Fail(ErrorCode::Overflow, "non-finite value cannot be log-scaled");
  }
  int e = 0;
  const double m = std::frexp(std::abs(v), &e);
  return {m, e, v > 0.0 ? 1 : -1};
}

LogScaledValue LogScaledValue::FromLog(double log_magnitude, int sign)
{
  if (sign == 0)
  {
    return Zero();
  }
  return LogScaledValue{0.5, 1, sign > 0 ? 1 : -1}.Scaled(log_magnitude);
}

double LogScaledValue::LogMagnitude() const
{
  if (sign == 0)
  {
    return kLogFloor;
  }
  return std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2;
}

LogScaledValue LogScaledValue::Scaled(double log_factor) const
{
  if (sign == 0)
  {
    return *this;
  }
  if (!std::isfinite(log_factor) || std::abs(log_factor) > 1e6)
  {
    Fail(ErrorCode::Overflow, "log scale factor " + std::to_string(log_factor) + " out of range");
  }
  const double k = std::nearbyint(log_factor * kInvLn2);
  const double r = (log_factor - k * kLn2Hi) - k * kLn2Lo;
  int e = 0;
  const double m = std::frexp(mantissa * std::exp(r), &e);
  return {m, exponent + static_cast<long>(k) + e, sign};
}

double LogScaledValue::ToDouble() const
{
  if (sign == 0)
  {
    return 0.0;
  }
  const long clamped = std::clamp(exponent, -2000L, 2000L);
  return sign * std::ldexp(mantissa, static_cast<int>(clamped));
}

double IntegratePanel(std::span<const double> values, const Grid &grid, std::size_t a_index,
                      std::size_t b_index)
{
  if (values.size() != grid.size())
  {
    Fail(ErrorCode::InvalidArgument, "sample count does not match the grid");
  }
  if (b_index >= grid.size() || a_index >= b_index)
  {
    Fail(ErrorCode::OutOfDomain, "panel indices out of range");
  }
  if ((b_index - a_index) % 2 != 0)
  {
    Fail(ErrorCode::InvalidArgument, "Simpson panel needs an even interval count");
  }
  double sum = 0.0;
  for (std::size_t k = a_index; k < b_index; k += 2)
  {
    sum += values[k] + 4.0 * values[k + 1] + values[k + 2];
  }
  return sum * grid.spacing() / 3.0;
}

namespace
{

void CheckCumulativeInput(std::span<const double> values)
{
  if (values.size() < 3 || values.size() % 2 == 0)
  {
    Fail(ErrorCode::InvalidArgument, "cumulative Simpson needs an odd sample count >= 3");
  }
}

}  // namespace

std::vector<double> CumulativeSimpsonFromLeft(std::span<const double> f, double h)
{
  CheckCumulativeInput(f);
  const std::size_t n = f.size();
  std::vector<double> c(n, 0.0);
  for (std::size_t k = 0; k + 2 < n; k += 2)
  {
    c[k + 2] = c[k] + h / 3.0 * (f[k] + 4.0 * f[k + 1] + f[k + 2]);
    c[k + 1] = c[k] + h / 12.0 * (5.0 * f[k] + 8.0 * f[k + 1] - f[k + 2]);
  }
  return c;
}

std::vector<double> CumulativeSimpsonFromRight(std::span<const double> f, double h)
{
  CheckCumulativeInput(f);
  const std::size_t n = f.size();
  std::vector<double> r(n, 0.0);
  for (std::size_t k = n - 1; k >= 2; k -= 2)
  {
    r[k - 2] = r[k] + h / 3.0 * (f[k - 2] + 4.0 * f[k - 1] + f[k]);
    r[k - 1] = r[k] + h / 12.0 * (-f[k - 2] + 8.0 * f[k - 1] + 5.0 * f[k]);
  }
  return r;
}

double ScaledExp(double log_factor, LogScaledValue value)
{
  if (value.IsZero())
  {
    return 0.0;
  }
  const LogScaledValue out = value.Scaled(log_factor);
  if (!(out.LogMagnitude() <= kMaxExpArgument))
  {
    Fail(ErrorCode::Overflow,
         "exponent " + std::to_string(out.LogMagnitude()) + " exceeds the representable range");
  }
  return out.ToDouble();
}

double WeightedOuterIntegrand(const GroundState &gs, LogScaledValue tail, std::size_t index)
{
  if (index >= gs.SupportEnd())
  {
    Fail(ErrorCode::OutOfDomain, "e^{2S} is unbounded at the wall node");
  }
  return ScaledExp(2.0 * gs.s[index], tail);
}

LogScaledValue TailClosureLog(const GroundState &gs, std::span<const double> chi_prev)
{
  if (gs.hard_wall)
  {
    return LogScaledValue::Zero();
  }
  const std::size_t last = gs.grid.size() - 1;
  const double slope = gs.s_prime[last];
  if (!(slope > 0.0))
  {
    Fail(ErrorCode::InvalidArgument, "ground state does not decay at x_max (S' <= 0)");
  }
  return LogScaledValue::FromDouble(chi_prev[last] / (2.0 * slope)).Scaled(-2.0 * gs.s[last]);
}

double TailClosure(const GroundState &gs, std::span<const double> chi_prev)
{
  return TailClosureLog(gs, chi_prev).ToDouble();
}

}  // namespace exciter
