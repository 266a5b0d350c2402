// Copyright The excite-iter Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <vector>

#include "exciter/grid.hpp"
#include "exciter/potential.hpp"

namespace exciter
{

// Ground state e^{-S(x)} sampled on x >= 0 together with S'(x) and E_gd.
//
// For smooth potentials S(0) = 0 (psi(0) = 1). The analytic DeltaBox state
// keeps its unnormalized form sin p(1 - x), so S(0) = -ln sin(delta); `gauge`
// always records S(0). When `hard_wall` is set the last node is the box edge:
// S is +inf there and the node carries zero weight.
struct GroundState
{
  Potential potential;
  Grid grid;
  std::vector<double> s;
  std::vector<double> s_prime;
  double e_gd = 0.0;
  double gauge = 0.0;
  bool hard_wall = false;

  // One past the last node with finite S.
  std::size_t SupportEnd() const noexcept { return hard_wall ? grid.size() - 1 : grid.size(); }

  // Smallest finite S, used to scale weights so that exp(-2 (S - ref)) <= 1.
  double MinS() const;

  // Copy with S -> S + c.
  GroundState WithGaugeShift(double c) const;
};

GroundState SolubleGroundState(double delta, const Grid &grid);

struct EnergyBracket
{
  double lo;
  double hi;
};

EnergyBracket DefaultBracket(const Potential &potential);

// Domain edge for the quartic well such that the WKB estimate of
// S(x_max) - S(1) reaches ln(1e18) (so e^{-2S} has dropped by far more than
// 1e-20), snapped so that x = 0.5 and x = 1 are grid nodes for the given
// point count. About 3.73 for g = 3 and 2.80 for g = 8.
double DefaultQuarticXMax(double g, std::size_t n_points);

// Shooting eigensolver for the even ground state.
//
// Quartic: the Riccati equation u' = 2 (V - E) - u^2 for u = psi'/psi is
// integrated with RK4 together with S' = -u, outward from u(0) = 0 to the node
// nearest the well minimum and inward from a WKB tail at x_max. E is bisected
// on the log-derivative mismatch at the matching node; a trial energy whose
// solution has a node counts as too high.
//
// DeltaBox: (psi, psi') is integrated from psi(0) = 1, psi'(0+) = lambda to the
// wall, bisecting on psi(1) = 0.
//
// Throws NoEigenvalue if the bracket does not straddle the ground state and
// WrongParity if the lower end already has a node.
GroundState SolveGroundStateNumeric(const Potential &potential, const Grid &grid,
                                    EnergyBracket bracket, double tol = 1e-12);

struct LogWeight
{
  double value;  // -2 S(x); -inf at a hard wall
  bool at_wall;
};

// -2 S(x) by cubic Hermite interpolation on S and S'; exact at nodes.
LogWeight LogWeightAt(const GroundState &gs, double x);

// CSV `x,S,Sprime` plus a JSON sidecar with e_gd, gauge, potential and grid.
void SaveGroundState(const GroundState &gs, const std::filesystem::path &csv_path,
                     const std::filesystem::path &json_path);
GroundState LoadGroundState(const std::filesystem::path &csv_path,
                            const std::filesystem::path &json_path);

}  // namespace exciter
