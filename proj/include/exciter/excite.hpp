// Copyright The excite-iter Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "exciter/groundstate.hpp"
#include "exciter/numerics.hpp"

namespace exciter
{

// Odd seed function chi_0, stored through its x >= 0 restriction.
class TrialFunction
{
public:
  enum class Kind
  {
    Linear,               // chi_0(x) = x
    SaturatingQuadratic,  // x (2 - x) on [0, 1), 1 beyond
    Tabulated
  };

  static TrialFunction Linear();
  static TrialFunction SaturatingQuadratic();
  // Samples must be aligned with `grid` and vanish at x = 0.
  static TrialFunction Tabulated(const Grid &grid, std::vector<double> samples);

  Kind kind() const noexcept { return kind_; }
  std::string Tag() const;

  // Tabulated trials can only be evaluated at their nodes.
  double operator()(double x) const;
  std::vector<double> Sample(const Grid &grid) const;

private:
  explicit TrialFunction(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::optional<Grid> grid_;
  std::vector<double> samples_;
};

// chi_n on the grid. For n >= 1 `eps` holds eps_n and `tail` the inner
// integral I_n(x) = int_x^inf e^{-2S} chi_{n-1}, i.e. the displacement field
// D_n = -eps_n I_n.
struct IterationState
{
  int n = 0;
  std::vector<double> chi;
  std::optional<double> eps;
  std::vector<double> tail;
};

IterationState InitialState(const GroundState &gs, const TrialFunction &trial);

struct IterationOptions
{
  // Add the Watson closure for the part of the inner integral beyond x_max.
  bool tail_closure = true;
};

// Inner integrals I(x_i) for every node, computed once by a right-to-left
// cumulative Simpson sum of e^{-2S} chi_prev plus the tail closure.
std::vector<LogScaledValue> TailIntegrals(const GroundState &gs, std::span<const double> chi_prev,
                                          const IterationOptions &options = {});

double TailIntegral(const GroundState &gs, std::span<const double> chi_prev, double x,
                    const IterationOptions &options = {});

// One step: chi_hat(x) = 2 int_0^x e^{2S(y)} I(y) dy, eps_n = chi0_at_anchor /
// chi_hat(anchor), chi_n = eps_n chi_hat. The anchor must be a grid node.
IterationState IterateOnce(const GroundState &gs, const IterationState &prev, double anchor_x0,
                           double chi0_at_anchor, const IterationOptions &options = {});

enum class RunStatus
{
  Converged,
  MaxIters,
  Stalled
};

const char *ToString(RunStatus status);

struct ConvergenceReport
{
  std::vector<double> eps_sequence;
  // |eps_n - eps_{n-1}| for n >= 2.
  std::vector<double> delta_sequence;
  std::vector<double> orth_residuals;
  RunStatus status = RunStatus::MaxIters;
  double anchor = 0.0;
  std::string trial_tag;
  double e_gd = 0.0;
  double e_odd = 0.0;
  double e_mean = 0.0;
  // chi_0 .. chi_n.
  std::vector<IterationState> states;

  double FinalEps() const { return eps_sequence.back(); }
};

// Iterates until |eps_n - eps_{n-1}| <= tol |eps_n| or max_iters steps. The
// run is marked stalled when the step size fails to shrink three times in a
// row before reaching tol.
ConvergenceReport Run(const GroundState &gs, const TrialFunction &trial, double anchor_x0,
                      int max_iters, double tol, const IterationOptions &options = {});

enum class Parity
{
  Odd,
  Even
};

// int e^{-2S} chi / int e^{-2S} |chi| over the full line, with chi extended
// from x >= 0 by the given parity. Mirror nodes are paired before summation,
// so an odd extension yields exactly zero.
double OrthogonalityResidual(const GroundState &gs, std::span<const double> chi,
                             Parity parity = Parity::Odd);

// e^{-S} chi at each node; zero at a hard wall.
std::vector<double> ExcitedWavefunction(const GroundState &gs, std::span<const double> chi);

}  // namespace exciter
