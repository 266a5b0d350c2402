// Copyright The excite-iter Authors.
// SPDX-License-Identifier: Apache-2.0

#include "exciter/groundstate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "exciter/error.hpp"

namespace exciter
{

namespace
{

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

double GroundState::MinS() const
{
  double m = kInf;
  for (std::size_t i = 0; i < SupportEnd(); ++i)
  {
    m = std::min(m, s[i]);
  }
  return m;
}

GroundState GroundState::WithGaugeShift(double c) const
{
  GroundState out = *this;
  for (double &v : out.s)
  {
    v += c;
  }
  out.gauge += c;
  return out;
}

GroundState SolubleGroundState(double delta, const Grid &grid)
{
  const Potential potential = Potential::DeltaBox(delta);
  if (grid.x_max() != 1.0)
  {
    Fail(ErrorCode::InvalidArgument, "the analytic box ground state needs a grid ending at x = 1");
  }
  const double p = potential.p();
  const std::size_t n = grid.size();
  GroundState gs{potential, grid, std::vector<double>(n), std::vector<double>(n), 0.5 * p * p,
                 0.0, true};
  for (std::size_t i = 0; i + 1 < n; ++i)
  {
    // 1 - x_i computed from the node index so the wall-side nodes stay exact.
    const double t = static_cast<double>(n - 1 - i) * grid.spacing();
    gs.s[i] = -std::log(std::sin(p * t));
    gs.s_prime[i] = p * std::cos(p * t) / std::sin(p * t);
  }
  gs.s[n - 1] = kInf;
  gs.s_prime[n - 1] = kInf;
  gs.gauge = gs.s[0];
  return gs;
}

EnergyBracket DefaultBracket(const Potential &potential)
{
  if (potential.IsQuartic())
  {
    return {0.0, 2.0 * potential.g()};
  }
  return {0.0, std::numbers::pi * std::numbers::pi};
}

double DefaultQuarticXMax(double g, std::size_t n_points)
{
  if (!(g > 0.0))
  {
    Fail(ErrorCode::InvalidArgument, "quartic coupling g must be positive");
  }
  if (n_points < 3 || n_points % 2 == 0)
  {
    Fail(ErrorCode::InvalidArgument, "grid point count must be odd and at least 3");
  }
  // WKB: S(x) - S(1) ~ g (x^3/3 - x + 2/3) for x > 1. The weight e^{-2S}
  // must fall by 1e-20 and the amplitude e^{-S} by 1e-18; the second binds.
  const double required = std::max(46.0, 2.0 * 18.0 * std::numbers::ln10);
  const auto excess = [g](double x) { return 2.0 * g * (x * x * x / 3.0 - x + 2.0 / 3.0); };
  double lo = 1.0;
  double hi = 2.0;
  while (excess(hi) < required)
  {
    hi *= 2.0;
  }
  for (int it = 0; it < 200; ++it)
  {
    const double mid = 0.5 * (lo + hi);
    (excess(mid) < required ? lo : hi) = mid;
  }
  // Snap so that h = 1 / (2 m): x = 0.5 and x = 1 are then nodes.
  const auto intervals = static_cast<double>(n_points - 1);
  const double m = std::floor(intervals / (2.0 * hi));
  if (m < 1.0)
  {
    Fail(ErrorCode::InvalidArgument, "too few grid points for the default quartic domain");
  }
  return intervals / (2.0 * m);
}

namespace
{

// Result of one shooting pass at a trial energy.
struct RiccatiPass
{
  bool node = false;  // the solution crossed zero somewhere
  double mismatch = 0.0;
  std::vector<double> u;
  std::vector<double> s;
  // ds[k] = S[k] - S[k + 1], as integrated.
  std::vector<double> ds;
};

// Compensated running sum; keeps each partial sum within about one ulp of the
// exact sum of its terms.
class KahanSum
{
public:
  explicit KahanSum(double start) : sum_(start) {}
  double Add(double term)
  {
    const double y = term - carry_;
    const double t = sum_ + y;
    carry_ = (t - sum_) - y;
    sum_ = t;
    return sum_;
  }

private:
  double sum_;
  double carry_ = 0.0;
};

// Integrates (u, S) with u' = 2 (V - E) - u^2, S' = -u over the nodes between
// `from` and `to` (either direction), starting from u[from], S[from].
bool IntegrateRiccati(const Potential &potential, const Grid &grid, double energy,
                      std::size_t from, std::size_t to, std::vector<double> &u,
                      std::vector<double> &s, std::vector<double> &ds)
{
  KahanSum sum(s[from]);
  const double step = to > from ? grid.spacing() : -grid.spacing();
  const auto rhs = [&](double x, double uu) { return 2.0 * (potential(x) - energy) - uu * uu; };
  std::size_t i = from;
  while (i != to)
  {
    const std::size_t next = to > from ? i + 1 : i - 1;
    const double x = grid[i];
    const double u0 = u[i];
    const double k1 = rhs(x, u0);
    const double u1 = u0 + 0.5 * step * k1;
    const double k2 = rhs(x + 0.5 * step, u1);
    const double u2 = u0 + 0.5 * step * k2;
    const double k3 = rhs(x + 0.5 * step, u2);
    const double u3 = u0 + step * k3;
    const double k4 = rhs(x + step, u3);
    u[next] = u0 + step / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    // A node of psi is a pole of u. Keeping every stage at |u| h <= 1/2 means
    // a step can never jump over one undetected.
    const double reach = std::max({std::abs(u0), std::abs(u1), std::abs(u2), std::abs(u3),
                                   std::abs(u[next])}) *
                         grid.spacing();
    if (!std::isfinite(u[next]) || !(reach <= 0.5))
    {
      return false;
    }
    const double increment = -step / 6.0 * (u0 + 2.0 * u1 + 2.0 * u2 + u3);
    s[next] = sum.Add(increment);
    ds[std::min(i, next)] = to > from ? -increment : increment;
    i = next;
  }
  return true;
}

RiccatiPass ShootQuartic(const Potential &potential, const Grid &grid, double energy,
                         std::size_t match)
{
  const std::size_t n = grid.size();
  RiccatiPass pass;
  pass.u.assign(n, 0.0);
  pass.s.assign(n, 0.0);
  pass.ds.assign(n, 0.0);

  if (!IntegrateRiccati(potential, grid, energy, 0, match, pass.u, pass.s, pass.ds))
  {
    pass.node = true;
    return pass;
  }
  const double u_out = pass.u[match];
  const double s_out = pass.s[match];

  const double x_max = grid.x_max();
  const double q = 2.0 * (potential(x_max) - energy);
  if (!(q > 0.0))
  {
    Fail(ErrorCode::InvalidArgument, "x_max lies inside the classically allowed region");
  }
  // Decaying WKB branch with its first correction: u = -sqrt(q) - q'/(4q).
  const double dq = 2.0 * potential.g() * potential.g() * (x_max * x_max - 1.0) * 2.0 * x_max;
  pass.u[n - 1] = -std::sqrt(q) - dq / (4.0 * q);
  pass.s[n - 1] = 0.0;
  const double keep_u = pass.u[match];
  if (!IntegrateRiccati(potential, grid, energy, n - 1, match, pass.u, pass.s, pass.ds))
  {
    pass.node = true;
    return pass;
  }
  const double u_in = pass.u[match];
  // The inward pass ran from S(x_max) = 0, so its samples are large near the
  // match. Rebuild them outward from s_out to keep full relative precision.
  KahanSum sum(s_out);
  pass.s[match] = s_out;
  for (std::size_t i = match; i + 1 < n; ++i)
  {
    pass.s[i + 1] = sum.Add(-pass.ds[i]);
  }
  pass.u[match] = keep_u;
  pass.mismatch = u_out - u_in;
  return pass;
}

struct BoxPass
{
  bool node = false;
  double psi_end = 0.0;
  std::vector<double> psi;
  std::vector<double> dpsi;
};

// psi'' = -2 E psi inside the box, psi(0) = 1, psi'(0+) = lambda.
BoxPass ShootBox(const Potential &potential, const Grid &grid, double energy)
{
  const std::size_t n = grid.size();
  const double h = grid.spacing();
  BoxPass pass;
  pass.psi.assign(n, 0.0);
  pass.dpsi.assign(n, 0.0);
  pass.psi[0] = 1.0;
  pass.dpsi[0] = potential.lambda();
  const double w = -2.0 * energy;
  for (std::size_t i = 0; i + 1 < n; ++i)
  {
    const double y = pass.psi[i];
    const double d = pass.dpsi[i];
    const double ky1 = d, kd1 = w * y;
    const double ky2 = d + 0.5 * h * kd1, kd2 = w * (y + 0.5 * h * ky1);
    const double ky3 = d + 0.5 * h * kd2, kd3 = w * (y + 0.5 * h * ky2);
    const double ky4 = d + h * kd3, kd4 = w * (y + h * ky3);
    pass.psi[i + 1] = y + h / 6.0 * (ky1 + 2.0 * ky2 + 2.0 * ky3 + ky4);
    pass.dpsi[i + 1] = d + h / 6.0 * (kd1 + 2.0 * kd2 + 2.0 * kd3 + kd4);
    if (i + 2 < n && pass.psi[i + 1] <= 0.0)
    {
      pass.node = true;
      return pass;
    }
  }
  pass.psi_end = pass.psi[n - 1];
  return pass;
}

GroundState SolveBox(const Potential &potential, const Grid &grid, EnergyBracket bracket,
                     double tol)
{
  if (grid.x_max() != 1.0)
  {
    Fail(ErrorCode::InvalidArgument, "the box ground state needs a grid ending at x = 1");
  }
  const BoxPass lo_pass = ShootBox(potential, grid, bracket.lo);
  if (lo_pass.node)
  {
    Fail(ErrorCode::WrongParity, "solution at the lower bracket end already has a node");
  }
  if (!(lo_pass.psi_end > 0.0))
  {
    Fail(ErrorCode::NoEigenvalue, "lower bracket end is not below the ground state");
  }
  const BoxPass hi_pass = ShootBox(potential, grid, bracket.hi);
  if (!hi_pass.node && hi_pass.psi_end > 0.0)
  {
    Fail(ErrorCode::NoEigenvalue, "bracket does not reach the ground state");
  }
  double lo = bracket.lo;
  double hi = bracket.hi;
  for (int it = 0; it < 400 && hi - lo > tol * std::max(std::abs(hi), 1e-300); ++it)
  {
    const double mid = 0.5 * (lo + hi);
    const BoxPass pass = ShootBox(potential, grid, mid);
    (pass.node || pass.psi_end <= 0.0 ? hi : lo) = mid;
  }
  const double energy = 0.5 * (lo + hi);
  BoxPass pass = ShootBox(potential, grid, energy);
  if (pass.node)
  {
    Fail(ErrorCode::WrongParity, "converged ground state has an interior node");
  }
  const std::size_t n = grid.size();
  GroundState gs{potential, grid, std::vector<double>(n), std::vector<double>(n), energy, 0.0,
                 true};
  for (std::size_t i = 0; i + 1 < n; ++i)
  {
    gs.s[i] = -std::log(pass.psi[i]);
    gs.s_prime[i] = -pass.dpsi[i] / pass.psi[i];
  }
  gs.s[n - 1] = kInf;
  gs.s_prime[n - 1] = kInf;
  return gs;
}

GroundState SolveQuartic(const Potential &potential, const Grid &grid, EnergyBracket bracket,
                         double tol)
{
  const std::size_t match = grid.NearestNode(1.0);
  if (match == 0 || match + 1 >= grid.size())
  {
    Fail(ErrorCode::InvalidArgument, "quartic grid must extend past the well minimum at x = 1");
  }
  const RiccatiPass lo_pass = ShootQuartic(potential, grid, bracket.lo, match);
  if (lo_pass.node)
  {
    Fail(ErrorCode::WrongParity, "solution at the lower bracket end already has a node");
  }
  if (!(lo_pass.mismatch > 0.0))
  {
    Fail(ErrorCode::NoEigenvalue, "lower bracket end is not below the ground state");
  }
  const RiccatiPass hi_pass = ShootQuartic(potential, grid, bracket.hi, match);
  if (!hi_pass.node && hi_pass.mismatch > 0.0)
  {
    Fail(ErrorCode::NoEigenvalue, "bracket does not reach the ground state");
  }
  double lo = bracket.lo;
  double hi = bracket.hi;
  for (int it = 0; it < 400 && hi - lo > tol * std::max(std::abs(hi), 1e-300); ++it)
  {
    const double mid = 0.5 * (lo + hi);
    const RiccatiPass pass = ShootQuartic(potential, grid, mid, match);
    (pass.node || pass.mismatch <= 0.0 ? hi : lo) = mid;
  }
  const double energy = 0.5 * (lo + hi);
  RiccatiPass pass = ShootQuartic(potential, grid, energy, match);
  if (pass.node)
  {
    Fail(ErrorCode::WrongParity, "converged ground state has an interior node");
  }
  const std::size_t n = grid.size();
  GroundState gs{potential, grid, std::move(pass.s), std::vector<double>(n), energy, 0.0, false};
  for (std::size_t i = 0; i < n; ++i)
  {
    gs.s_prime[i] = -pass.u[i];
  }
  return gs;
}

}  // namespace

GroundState SolveGroundStateNumeric(const Potential &potential, const Grid &grid,
                                    EnergyBracket bracket, double tol)
{
  if (!(tol >= 1e-12))
  {
    Fail(ErrorCode::InvalidArgument, "ground-state tolerance must be at least 1e-12");
  }
  if (!(bracket.lo < bracket.hi))
  {
    Fail(ErrorCode::InvalidArgument, "energy bracket must satisfy lo < hi");
  }
  GroundState gs = potential.IsQuartic() ? SolveQuartic(potential, grid, bracket, tol)
                                         : SolveBox(potential, grid, bracket, tol);
  for (std::size_t i = 0; i < gs.SupportEnd(); ++i)
  {
    if (!std::isfinite(gs.s[i]) || !std::isfinite(gs.s_prime[i]))
    {
      Fail(ErrorCode::Overflow, "non-finite ground-state sample at node " + std::to_string(i));
    }
  }
  gs.gauge = gs.s[0];
  return gs;
}

LogWeight LogWeightAt(const GroundState &gs, double x)
{
  const Grid &grid = gs.grid;
  const double h = grid.spacing();
  if (!(x >= 0.0 && x <= grid.x_max()))
  {
    Fail(ErrorCode::OutOfDomain, "x = " + std::to_string(x) + " lies outside the ground-state grid");
  }
  if (auto node = grid.NodeIndex(x))
  {
    if (*node >= gs.SupportEnd())
    {
      return {-kInf, true};
    }
    return {-2.0 * gs.s[*node], false};
  }
  auto i = static_cast<std::size_t>(std::floor(x / h));
  i = std::min(i, grid.size() - 2);
  if (i + 1 >= gs.SupportEnd() && i > 0)
  {
    // No finite data at the wall node; extrapolate from the previous interval.
    --i;
  }
  // With a hard wall, S + ln(x_wall - x) is smooth up to the wall; interpolate
  // that instead of S itself.
  auto wall_log = [&](double at) { return gs.hard_wall ? std::log(grid.x_max() - at) : 0.0; };
  auto wall_slope = [&](double at) { return gs.hard_wall ? -1.0 / (grid.x_max() - at) : 0.0; };
  const double y0 = gs.s[i] + wall_log(grid[i]);
  const double y1 = gs.s[i + 1] + wall_log(grid[i + 1]);
  const double d0 = gs.s_prime[i] + wall_slope(grid[i]);
  const double d1 = gs.s_prime[i + 1] + wall_slope(grid[i + 1]);
  const double t = (x - grid[i]) / h;
  const double t2 = t * t;
  const double t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1;
  const double h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2;
  const double h11 = t3 - t2;
  // Hermite on the amplitude ratio exp(-(y - y0)), which stays smooth where S
  // itself has a nearby logarithmic singularity.
  const double ratio = std::exp(-(y1 - y0));
  const double phi = h00 - h10 * h * d0 + h01 * ratio - h11 * h * d1 * ratio;
  const double y = phi > 0.0 ? y0 - std::log(phi)
                             : h00 * y0 + h10 * h * d0 + h01 * y1 + h11 * h * d1;
  return {-2.0 * (y - wall_log(x)), false};
}

namespace
{

std::string Number(double v)
{
  if (std::isinf(v))
  {
    return v > 0 ? "inf" : "-inf";
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double ParseNumber(const std::string &field, std::size_t line)
{
  char *end = nullptr;
  const double v = std::strtod(field.c_str(), &end);
  if (field.empty() || end != field.c_str() + field.size())
  {
    Fail(ErrorCode::Parse, "bad number '" + field + "' on line " + std::to_string(line));
  }
  return v;
}

}  // namespace

void SaveGroundState(const GroundState &gs, const std::filesystem::path &csv_path,
                     const std::filesystem::path &json_path)
{
  std::ofstream csv(csv_path, std::ios::binary);
  if (!csv)
  {
    Fail(ErrorCode::Io, "cannot write " + csv_path.string());
  }
  csv << "x,S,Sprime\n";
  for (std::size_t i = 0; i < gs.grid.size(); ++i)
  {
    csv << Number(gs.grid[i]) << ',' << Number(gs.s[i]) << ',' << Number(gs.s_prime[i]) << '\n';
  }
  if (!csv)
  {
    Fail(ErrorCode::Io, "failed writing " + csv_path.string());
  }

  nlohmann::json potential{{"kind", gs.potential.Tag()}};
  if (gs.potential.IsQuartic())
  {
    potential["g"] = gs.potential.g();
  }
  else
  {
    potential["delta"] = gs.potential.delta();
  }
  const nlohmann::json sidecar{
      {"e_gd", gs.e_gd},
      {"gauge", gs.gauge},
      {"hard_wall", gs.hard_wall},
      {"potential", potential},
      {"grid", {{"x_max", gs.grid.x_max()}, {"n_points", gs.grid.size()}}},
  };
  std::ofstream js(json_path, std::ios::binary);
  if (!js)
  {
    Fail(ErrorCode::Io, "cannot write " + json_path.string());
  }
  js << sidecar.dump(2) << '\n';
}

GroundState LoadGroundState(const std::filesystem::path &csv_path,
                            const std::filesystem::path &json_path)
{
  std::ifstream js(json_path);
  if (!js)
  {
    Fail(ErrorCode::Io, "cannot read " + json_path.string());
  }
  nlohmann::json sidecar;
  try
  {
    js >> sidecar;
  }
  catch (const nlohmann::json::exception &e)
  {
    Fail(ErrorCode::Parse, json_path.string() + ": " + e.what());
  }

  std::optional<Potential> potential;
  std::optional<Grid> grid;
  double e_gd = 0.0;
  double gauge = 0.0;
  bool hard_wall = false;
  try
  {
    const auto &pot = sidecar.at("potential");
    const std::string kind = pot.at("kind").get<std::string>();
    if (kind == "quartic")
    {
      potential = Potential::Quartic(pot.at("g").get<double>());
    }
    else if (kind == "delta_box")
    {
      potential = Potential::DeltaBox(pot.at("delta").get<double>());
    }
    else
    {
      Fail(ErrorCode::Parse, "unknown potential kind '" + kind + "'");
    }
    grid.emplace(sidecar.at("grid").at("x_max").get<double>(),
                 sidecar.at("grid").at("n_points").get<std::size_t>());
    e_gd = sidecar.at("e_gd").get<double>();
    gauge = sidecar.at("gauge").get<double>();
    hard_wall = sidecar.at("hard_wall").get<bool>();
  }
  catch (const nlohmann::json::exception &e)
  {
    Fail(ErrorCode::Parse, json_path.string() + ": " + e.what());
  }

  std::ifstream csv(csv_path);
  if (!csv)
  {
    Fail(ErrorCode::Io, "cannot read " + csv_path.string());
  }
  std::string line;
  if (!std::getline(csv, line) || line != "x,S,Sprime")
  {
    Fail(ErrorCode::Parse, csv_path.string() + ": missing header x,S,Sprime");
  }
  const std::size_t n = grid->size();
  GroundState gs{*potential, *grid, std::vector<double>(n), std::vector<double>(n), e_gd, gauge,
                 hard_wall};
  std::size_t row = 0;
  while (std::getline(csv, line))
  {
    if (line.empty())
    {
      continue;
    }
    if (row >= n)
    {
      Fail(ErrorCode::Parse, csv_path.string() + ": more rows than grid points");
    }
    std::stringstream ss(line);
    std::string fx, fs, fsp;
    if (!std::getline(ss, fx, ',') || !std::getline(ss, fs, ',') || !std::getline(ss, fsp))
    {
      Fail(ErrorCode::Parse, csv_path.string() + ": malformed row " + std::to_string(row + 2));
    }
    const double x = ParseNumber(fx, row + 2);
    if (std::abs(x - gs.grid[row]) > 1e-9 * gs.grid.spacing())
    {
      Fail(ErrorCode::Parse, csv_path.string() + ": node " + std::to_string(row) +
                                 " does not match the sidecar grid");
    }
    gs.s[row] = ParseNumber(fs, row + 2);
    gs.s_prime[row] = ParseNumber(fsp, row + 2);
    ++row;
  }
  if (row != n)
  {
    Fail(ErrorCode::Parse, csv_path.string() + ": expected " + std::to_string(n) + " rows, found " +
                               std::to_string(row));
  }
  return gs;
}

}  // namespace exciter
