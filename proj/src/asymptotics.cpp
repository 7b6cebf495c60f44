#include "incent/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace incent {

double harmonic_number(int N) {
  if (N < 2) throw std::invalid_argument("harmonic_number requires N >= 2");
  double h = 0.0;
  for (int j = N - 1; j >= 1; --j) h += 1.0 / j;  // small terms first
  return h;
}

double weak_selection_cost(int N, double theta) {
  return static_cast<double>(N) * N * theta * harmonic_number(N);
}

ThetaRegime classify_regime(double theta, double delta, double tol) {
  const double gap = theta + delta;
  if (std::abs(gap) <= tol) return ThetaRegime::AtCrossover;
  return gap < 0 ? ThetaRegime::BelowCrossover : ThetaRegime::AboveCrossover;
}

double large_selection_cost(int N, double theta, IncentiveScheme scheme, ThetaRegime regime) {
  const double H = harmonic_number(N);
  const double n2 = static_cast<double>(N) * N;
  if (regime == ThetaRegime::AtCrossover) return n2 * theta * H;
  const bool above = regime == ThetaRegime::AboveCrossover;
  if (scheme == IncentiveScheme::Reward) {
    return above ? 0.5 * n2 * theta * (1.0 + H) : 0.5 * n2 * theta * (H + 1.0 / (N - 1));
  }
  return above ? 0.5 * n2 * theta * (H + 1.0 / (N - 1)) : 0.5 * n2 * theta * (1.0 + H);
}

double infinite_population_ratio(const GameSpec& game, double beta, double theta) {
  if (!(beta > 0)) throw std::invalid_argument("infinite_population_ratio requires beta > 0");
  if (const auto* dg = game.donation_params()) {
    return 1.0 + std::exp(-beta * std::abs(theta - dg->c));
  }
  const auto& pg = *game.public_goods_params();
  return 1.0 + std::exp(-beta * std::abs(theta - pg.c)) * std::exp(beta * pg.c * pg.r / pg.n);
}

std::pair<double, double> cost_bounds(int N, double theta) {
  if (N < 3) throw std::invalid_argument("cost_bounds requires N >= 3");
  if (!(theta > 0)) throw std::invalid_argument("cost_bounds requires theta > 0");
  const double H = harmonic_number(N);
  const double lower = 0.5 * static_cast<double>(N) * N * theta * (H + 1.0 / (N - 1));
  const double upper = static_cast<double>(N) * (N - 1) * theta * (H + 1.0);
  return {lower, upper};
}

LimitReport make_limit_report(LimitReport::Kind kind, double theoretical, double observed) {
  LimitReport r;
  r.kind = kind;
  r.theoretical = theoretical;
  r.observed = observed;
  r.relative_error = std::abs(observed - theoretical) / std::abs(theoretical);
  return r;
}

}  // namespace incent
