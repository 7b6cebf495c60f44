#include "incent/phase.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "incent/root_finding.hpp"

namespace incent {

namespace {

// Positive real roots of P by sign scanning on a log grid plus Brent polish.
// eval_scaled is continuous, overflow-free and sign-identical to P on u > 0.
std::vector<double> positive_roots(const Polynomial& P) {
  std::vector<double> roots;
  if (P.degree() < 1) return roots;
  auto f = [&](double u) { return P.eval_scaled(u); };
  constexpr double kLo = 1e-9, kHi = 1e9;
  constexpr int kPerDecade = 256;
  const int steps = static_cast<int>(std::log10(kHi / kLo) * kPerDecade);
  double prev_u = kLo, prev_f = f(kLo);
  for (int s = 1; s <= steps; ++s) {
    const double u = kLo * std::pow(10.0, static_cast<double>(s) / kPerDecade);
    const double fu = f(u);
    if (fu == 0.0) {
      roots.push_back(u);
    } else if ((prev_f < 0) != (fu < 0) && prev_f != 0.0) {
      roots.push_back(brent_root(f, prev_u, u, prev_f, fu, 1e-14));
    }
    prev_u = u;
    prev_f = fu;
  }
  return roots;
}

FStarResult f_star_from(const CriticalFunctions& cf) {
  FStarResult r;
  r.p_positive_roots = positive_roots(cf.P);
  if (r.p_positive_roots.empty()) {
    throw std::runtime_error("phase analysis failure: P has no positive root");
  }
  r.p_boundary = r.p_positive_roots.back();

  // F' < 0 just beyond the boundary (F blows up at the pole and then falls);
  // expand to the right until F' turns positive, then solve F'(u*) = 0.
  auto fp = [&](double u) { return cf.F_prime(u); };
  double a = r.p_boundary * (1.0 + 1e-9);
  for (int tries = 0; fp(a) >= 0 && tries < 60; ++tries) {
    a = r.p_boundary + (a - r.p_boundary) / 16.0;
  }
  double fa = fp(a);
  if (fa >= 0) throw std::runtime_error("phase analysis failure: cannot enter F's decreasing leg");
  double b = std::max(2.0 * a, a + 1.0);
  double fb = fp(b);
  int doublings = 0;
  while (fb < 0) {
    if (++doublings > 200) throw std::runtime_error("phase analysis failure: F' never turns positive");
    b *= 2.0;
    fb = fp(b);
  }
  r.u_star = brent_root(fp, a, b, fa, fb, 1e-13);
  r.f_star = cf.F(r.u_star);
  return r;
}

}  // namespace

FStarResult f_star(int N, IncentiveScheme scheme, int symbolic_cap) {
  return f_star_from(critical_functions(derive_psi(N, scheme, symbolic_cap)));
}

double beta_star(const GameSpec& game, int N, IncentiveScheme scheme, int symbolic_cap) {
  const double delta = payoff_gap(game, N);
  return -f_star(N, scheme, symbolic_cap).f_star / delta;
}

double PhaseContext::cost(double beta, double theta) const {
  return theta * psi.eval_log(beta * (theta + delta));
}

double PhaseContext::cost_derivative(double beta, double theta) const {
  const double x = beta * (theta + delta);
  return psi.eval_log(x) + beta * theta * u_psi_prime.eval_log(x);
}

PhaseContext make_phase_context(const GameSpec& game, int N, IncentiveScheme scheme) {
  PhaseContext ctx{game, N, scheme, payoff_gap(game, N), {}, {}, {}, {}, 0.0, N > kTwoSignChangeCapN};
  // Algorithm 1 needs the exact machinery for whatever N it is asked about;
  // the public derive_psi default cap only guards direct misuse.
  ctx.psi = derive_psi(N, scheme, std::max(N, kDefaultSymbolicCap));
  ctx.u_psi_prime = RationalFn(Polynomial::monomial(1)) * ctx.psi.derivative();
  ctx.cf = critical_functions(ctx.psi);
  ctx.fs = f_star_from(ctx.cf);
  ctx.beta_star = -ctx.fs.f_star / ctx.delta;
  return ctx;
}

PhaseAnalysis analyze_phase(const GameSpec& game, int N, IncentiveScheme scheme) {
  const PhaseContext ctx = make_phase_context(game, N, scheme);
  return PhaseAnalysis{scheme,          N,      ctx.fs.f_star,          ctx.fs.u_star,
                       ctx.beta_star,   ctx.fs.p_positive_roots,        ctx.heuristic};
}

namespace {

double find_u2_impl(const CriticalFunctions& cf, const FStarResult& fs, double beta,
                    double delta) {
  if (!(beta > 0)) throw std::invalid_argument("find_u2 requires beta > 0");
  const double target = -beta * delta;
  if (target < fs.f_star) throw std::invalid_argument("find_u2 requires beta > beta_star");
  auto f = [&](double u) { return cf.F(u) - target; };
  const double a = fs.u_star;
  const double fa = fs.f_star - target;  // <= 0
  if (fa == 0) return a;
  double b = a + 1.0;
  double fb = f(b);
  int doublings = 0;
  while (fb < 0) {
    if (++doublings > 200) throw std::runtime_error("find_u2: failed to bracket the root");
    b *= 2.0;
    fb = f(b);
  }
  return brent_root(f, a, b, fa, fb, 1e-12);
}

double find_u1_impl(const CriticalFunctions& cf, const FStarResult& fs, double beta,
                    double delta) {
  const double target = -beta * delta;
  if (target < fs.f_star) throw std::invalid_argument("find_u1 requires beta > beta_star");
  auto f = [&](double u) { return cf.F(u) - target; };
  // F -> +inf at the region boundary and F(u*) <= target: walk toward the pole
  // until F exceeds the target, then bracket.
  const double b = fs.u_star;
  const double fb = fs.f_star - target;
  if (fb == 0) return b;
  double a = 0.5 * (fs.p_boundary + b);
  double fa = f(a);
  int tries = 0;
  while (fa < 0) {
    if (++tries > 200) throw std::runtime_error("find_u1: failed to bracket the root");
    a = 0.5 * (fs.p_boundary + a);
    fa = f(a);
  }
  return brent_root(f, a, b, fa, fb, 1e-12);
}

}  // namespace

double find_u2(const PhaseContext& ctx, double beta) {
  return find_u2_impl(ctx.cf, ctx.fs, beta, ctx.delta);
}

double find_u2(int N, IncentiveScheme scheme, double beta, double delta) {
  const CriticalFunctions cf =
      critical_functions(derive_psi(N, scheme, std::max(N, kDefaultSymbolicCap)));
  return find_u2_impl(cf, f_star_from(cf), beta, delta);
}

double find_u1(const PhaseContext& ctx, double beta) {
  return find_u1_impl(ctx.cf, ctx.fs, beta, ctx.delta);
}

const char* to_string(OptimizeBranch branch) {
  switch (branch) {
    case OptimizeBranch::BelowThreshold: return "below_threshold";
    case OptimizeBranch::AboveThresholdTheta0: return "above_threshold_theta0";
    case OptimizeBranch::AboveThresholdTheta2: return "above_threshold_theta2";
  }
  return "?";
}

OptimizationResult optimize(const PhaseContext& ctx, const PopulationConfig& pop, double omega) {
  if (!(pop.beta > 0)) throw std::invalid_argument("optimize requires beta > 0");
  const double beta = pop.beta;
  OptimizationResult res;
  res.heuristic = ctx.heuristic;
  res.beta_star = ctx.beta_star;
  res.theta0 = theta_min(ctx.game, pop, omega);

  if (beta <= ctx.beta_star) {
    res.branch = OptimizeBranch::BelowThreshold;
    res.theta_star = res.theta0;
    res.cost_star = expected_cost(ctx.game, pop, ctx.scheme, res.theta_star);
    res.cost_theta0 = res.cost_star;
    return res;
  }

  const double u2 = find_u2(ctx, beta);
  const double theta2 = std::log(u2) / beta - ctx.delta;
  res.u2 = u2;
  res.theta2 = theta2;
  const double cost0 = ctx.cost(beta, res.theta0);
  res.cost_theta0 = cost0;
  if (theta2 <= res.theta0) {
    res.branch = OptimizeBranch::AboveThresholdTheta0;
    res.theta_star = res.theta0;
    res.cost_star = expected_cost(ctx.game, pop, ctx.scheme, res.theta_star);
    return res;
  }
  const double cost2 = ctx.cost(beta, theta2);
  res.cost_theta2 = cost2;
  if (cost0 <= cost2) {
    res.branch = OptimizeBranch::AboveThresholdTheta0;
    res.theta_star = res.theta0;
  } else {
    res.branch = OptimizeBranch::AboveThresholdTheta2;
    res.theta_star = theta2;
  }
  res.cost_star = expected_cost(ctx.game, pop, ctx.scheme, res.theta_star);
  return res;
}

OptimizationResult optimize(const GameSpec& game, const PopulationConfig& pop,
                            IncentiveScheme scheme, double omega) {
  pop.validate(game);
  if (!(omega > 0 && omega < 1)) throw std::invalid_argument("omega must lie in (0,1)");
  return optimize(make_phase_context(game, pop.N, scheme), pop, omega);
}

MonotonicityProfile monotonicity_profile(const PhaseContext& ctx, double beta) {
  if (!(beta > 0)) throw std::invalid_argument("monotonicity profile requires beta > 0");
  MonotonicityProfile mp;
  double lo, hi;
  if (beta <= ctx.beta_star) {
    mp.monotone = true;
    lo = std::min(0.0, -ctx.delta - 3.0);
    hi = -ctx.delta + std::max(5.0, 15.0 / beta);
  } else {
    mp.monotone = false;
    const double u1 = find_u1(ctx, beta);
    const double u2 = find_u2(ctx, beta);
    mp.theta1 = std::log(u1) / beta - ctx.delta;
    mp.theta2 = std::log(u2) / beta - ctx.delta;
    lo = std::min(0.0, *mp.theta1 - 1.0);
    hi = *mp.theta2 + (*mp.theta2 - *mp.theta1) + 1.0;
  }
  constexpr int kPoints = 4001;
  int changes = 0;
  int prev_sign = 0;
  for (int k = 0; k < kPoints; ++k) {
    const double theta = lo + (hi - lo) * k / (kPoints - 1);
    const double d = ctx.cost_derivative(beta, theta);
    const int sign = d > 0 ? 1 : (d < 0 ? -1 : 0);
    if (sign != 0) {
      if (prev_sign != 0 && sign != prev_sign) ++changes;
      prev_sign = sign;
    }
  }
  mp.grid_sign_changes = changes;
  mp.consistent = changes == (mp.monotone ? 0 : 2);
  return mp;
}

MonotonicityProfile monotonicity_profile(const GameSpec& game, const PopulationConfig& pop,
                                         IncentiveScheme scheme) {
  pop.validate(game);
  return monotonicity_profile(make_phase_context(game, pop.N, scheme), pop.beta);
}

}  // namespace incent
