#ifndef INCENT_ASYMPTOTICS_HPP
#define INCENT_ASYMPTOTICS_HPP

#include <utility>

#include "incent/chain.hpp"

namespace incent {

inline constexpr double kEulerMascheroni = 0.5772156649;

// H_N = sum_{j=1}^{N-1} 1/j (the paper's convention; the (N-1)-th harmonic
// number in the standard one).
double harmonic_number(int N);

// lim_{beta->0} E(theta) = N^2 theta H_N.
double weak_selection_cost(int N, double theta);

// Position of theta relative to the reward/punishment crossover at -delta.
enum class ThetaRegime { BelowCrossover, AtCrossover, AboveCrossover };

ThetaRegime classify_regime(double theta, double delta, double tol = 0.0);

// lim_{beta->inf} E(theta), per scheme and regime.
double large_selection_cost(int N, double theta, IncentiveScheme scheme, ThetaRegime regime);

// lim_{N->inf} E(theta) / ((N^2 theta/2)(ln N + gamma)).
double infinite_population_ratio(const GameSpec& game, double beta, double theta);

// Finite-N sandwich for theta > 0: (N^2 theta/2)(H_N + 1/(N-1)) <= E <= N(N-1) theta (H_N + 1).
std::pair<double, double> cost_bounds(int N, double theta);

struct LimitReport {
  enum class Kind { WeakSelection, LargeSelection, InfinitePopulation, Bounds };
  Kind kind = Kind::WeakSelection;
  double theoretical = 0;
  double observed = 0;
  double relative_error = 0;
};

LimitReport make_limit_report(LimitReport::Kind kind, double theoretical, double observed);

}  // namespace incent

#endif  // INCENT_ASYMPTOTICS_HPP
