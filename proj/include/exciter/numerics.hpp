// Copyright The excite-iter Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

#include "exciter/grid.hpp"

namespace exciter
{

struct GroundState;

// A real number of arbitrary magnitude, stored as sign * mantissa * 2^exponent
// with mantissa in [0.5, 1). Scaling by exp(c) splits c into k ln 2 + r with
// |r| <= ln 2 / 2, so a value never loses more than a few ulp however large
// the exponents involved. Zero is sign 0; its log magnitude is kLogFloor,
// which stays finite so that it can flow through sums of exponents.
struct LogScaledValue
{
  static constexpr double kLogFloor = -std::numeric_limits<double>::max();

  double mantissa = 0.0;
  long exponent = 0;
  int sign = 0;

  static LogScaledValue FromDouble(double v);
  static LogScaledValue FromLog(double log_magnitude, int sign);
  static LogScaledValue Zero() { return {}; }

  bool IsZero() const noexcept { return sign == 0; }
  // Natural log of |value|, or kLogFloor for zero.
  double LogMagnitude() const;
  // value * exp(log_factor).
  LogScaledValue Scaled(double log_factor) const;
  // Underflows to 0 and overflows to +-inf.
  double ToDouble() const;
};

// Largest exponent accepted by a single exp() call.
inline constexpr double kMaxExpArgument = 709.0;

// Composite Simpson over nodes [a_index, b_index] of a uniform grid. The
// panel count b_index - a_index must be even and positive.
double IntegratePanel(std::span<const double> values, const Grid &grid, std::size_t a_index,
                      std::size_t b_index);

// Cumulative composite Simpson on a uniform grid with an even number of
// intervals (odd sample count).
//
// Nodes at an even offset from the starting end are reached by whole
// two-interval Simpson panels accumulated pairwise. A node at an odd offset
// adds the single interval that separates it from the preceding even node,
// integrated with the three-point quadratic rule over the Simpson panel that
// contains it:
//
//   int_{x_k}^{x_{k+1}} f = h/12 (5 f_k + 8 f_{k+1} - f_{k+2})   (first half)
//   int_{x_{k+1}}^{x_{k+2}} f = h/12 (-f_k + 8 f_{k+1} + 5 f_{k+2})  (second half)
//
// Both halves are exact for quadratics, so every node carries an O(h^4)
// error and even nodes coincide bit for bit with IntegratePanel.
//
// FromLeft returns C[k] = int_{x_0}^{x_k} f, FromRight R[k] = int_{x_k}^{x_max} f.
std::vector<double> CumulativeSimpsonFromLeft(std::span<const double> values, double h);
std::vector<double> CumulativeSimpsonFromRight(std::span<const double> values, double h);

// exp(log_factor) * value, combined in the log domain before the single
// exponentiation. Throws Overflow if the combined exponent exceeds
// kMaxExpArgument.
double ScaledExp(double log_factor, LogScaledValue value);

// e^{2 S(y)} I(y) at grid node `index`, with I(y) supplied in log form.
// Throws OutOfDomain at a hard-wall node, where e^{2S} is unbounded.
double WeightedOuterIntegrand(const GroundState &gs, LogScaledValue tail, std::size_t index);

// Leading-order Watson estimate of int_{x_max}^inf e^{-2S} chi dz,
//   e^{-2S(x_max)} chi(x_max) / (2 S'(x_max)).
// Exactly zero for hard-wall ground states. Throws InvalidArgument when the
// ground state does not decay at x_max.
double TailClosure(const GroundState &gs, std::span<const double> chi_prev);

// Same estimate expressed relative to the weight exp(-2 (S - s_ref)).
LogScaledValue TailClosureLog(const GroundState &gs, std::span<const double> chi_prev);

}  // namespace exciter
