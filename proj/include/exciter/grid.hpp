// Copyright The excite-iter Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace exciter
{

// Uniform half-line grid x_i = i*h on [0, x_max]. The point count is odd so
// composite Simpson covers the whole range with no leftover panel.
class Grid
{
public:
  Grid(double x_max, std::size_t n_points);

  double x_max() const noexcept { return x_max_; }
  std::size_t size() const noexcept { return n_; }
  double spacing() const noexcept { return h_; }
  double operator[](std::size_t i) const noexcept
  {
    return i + 1 == n_ ? x_max_ : static_cast<double>(i) * h_;
  }
  std::vector<double> Nodes() const;

  // Index of the node at x, if x lies on a node to within 1e-9 h.
  std::optional<std::size_t> NodeIndex(double x) const;
  std::size_t NearestNode(double x) const;

  bool operator==(const Grid &other) const noexcept
  {
    return x_max_ == other.x_max_ && n_ == other.n_;
  }

private:
  double x_max_;
  std::size_t n_;
  double h_;
};

}  // namespace exciter
