// Copyright The excite-iter Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>

namespace exciter
{

// Symmetric one-dimensional potentials with V(x) = V(-x).
//
//   Quartic:  V(x) = (g^2/2) (x^2 - 1)^2, coupling g > 0.
//   DeltaBox: infinite well on [-1, 1] with a spike lambda*delta(x) at the
//             origin. Parameterized by delta in (0, pi/2], where the even
//             ground state is sin(p(1 - |x|)) with p = pi - delta and
//             lambda = (pi - delta) cot(delta). delta = pi/2 is the plain box.
//
// The spike is never evaluated pointwise; DeltaBox only parameterizes the
// analytic ground state and the matching condition at x = 0.
class Potential
{
public:
  enum class Kind
  {
    Quartic,
    DeltaBox
  };

  static Potential Quartic(double g);
  static Potential DeltaBox(double delta);

  Kind kind() const noexcept { return kind_; }
  bool IsQuartic() const noexcept { return kind_ == Kind::Quartic; }

  // Coupling g. Only meaningful for Quartic.
  double g() const noexcept { return param_; }

  // Only meaningful for DeltaBox.
  double delta() const noexcept { return param_; }
  double p() const;
  double lambda() const;

  // Smooth part of V; zero inside the box for DeltaBox.
  double operator()(double x) const;

  // Short tag used in serialized artifacts, e.g. "quartic" / "delta_box".
  std::string Tag() const;

private:
  Potential(Kind kind, double param) : kind_(kind), param_(param) {}

  Kind kind_;
  double param_;
};

double EvalQuartic(double g, double x);

struct SolubleParams
{
  double p;
  double lambda;
};

// p = pi - delta, lambda = (pi - delta) cot(delta).
SolubleParams ComputeSolubleParams(double delta);

}  // namespace exciter
