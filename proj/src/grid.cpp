// Copyright The excite-iter Authors.
// SPDX-License-Identifier: Apache-2.0

#include "exciter/grid.hpp"

#include <cmath>
#include <string>

#include "exciter/error.hpp"

namespace exciter
{

Grid::Grid(double x_max, std::size_t n_points) : x_max_(x_max), n_(n_points), h_(0.0)
{
  if (!(x_max > 0.0) || !std::isfinite(x_max))
  {
    Fail(ErrorCode::InvalidArgument, "grid x_max must be positive");
  }
  if (n_points < 3 || n_points % 2 == 0)
  {
    Fail(ErrorCode::InvalidArgument,
         "grid point count must be odd and at least 3, got " + std::to_string(n_points));
  }
  h_ = x_max / static_cast<double>(n_points - 1);
}

std::vector<double> Grid::Nodes() const
{
  std::vector<double> x(n_);
  for (std::size_t i = 0; i < n_; ++i)
  {
    x[i] = (*this)[i];
  }
  return x;
}

std::optional<std::size_t> Grid::NodeIndex(double x) const
{
  if (!(x >= -1e-9 * h_ && x <= x_max_ + 1e-9 * h_))
  {
    return std::nullopt;
  }
  const std::size_t i = NearestNode(x);
  if (std::abs((*this)[i] - x) > 1e-9 * h_)
  {
    return std::nullopt;
  }
  return i;
}

std::size_t Grid::NearestNode(double x) const
{
  const double r = std::round(x / h_);
  if (r <= 0.0)
  {
    return 0;
  }
  if (r >= static_cast<double>(n_ - 1))
  {
    return n_ - 1;
  }
  return static_cast<std::size_t>(r);
}

}  // namespace exciter
