#ifndef INCENT_CHAIN_HPP
#define INCENT_CHAIN_HPP

#include <Eigen/Dense>

#include "incent/games.hpp"

namespace incent {

enum class IncentiveScheme { Reward, Punishment };

const char* to_string(IncentiveScheme scheme);

// Per-step incentive budget while the population sits in S_i:
// i units for reward, N-i units for punishment (times theta).
double incentive_weight(IncentiveScheme scheme, int N, int i);

// 1/(1+exp(-y)), overflow-safe; saturates exactly to {0,1} at the extremes.
double logistic(double y);

// log(1+exp(y)) without overflow.
double log1pexp(double y);

// Birth-death transition probabilities between the transient states S_1..S_{N-1}
// of the imitation chain under the Fermi rule. up[i-1] = u_{i,i+1},
// down[i-1] = u_{i,i-1}; the diagonal is implied by the row sum.
struct TransitionMatrix {
  int N = 0;
  Eigen::VectorXd up;
  Eigen::VectorXd down;

  int transient_states() const { return N - 1; }
  double stay(int i) const { return 1.0 - up[i - 1] - down[i - 1]; }
};

// The chain depends on the game, incentive and selection strength only through
// N and the scaled gap x = beta*(delta + theta). Accepts N >= 2.
TransitionMatrix transition_matrix_from_gap(int N, double x);

TransitionMatrix build_transition_matrix(const GameSpec& game, const PopulationConfig& pop,
                                         double theta);

// Fundamental matrix of the absorbing chain: visits(i-1,j-1) = n_{ij}, the
// expected number of time steps spent in S_j starting from S_i.
struct FundamentalMatrix {
  int N = 0;
  Eigen::MatrixXd visits;
};

FundamentalMatrix fundamental_matrix(const TransitionMatrix& U);

// (n_{1i} + n_{N-1,i})/2: a mutant enters at S_1 or S_{N-1} with equal probability.
double expected_visits(const FundamentalMatrix& fm, int i);

// z_j = n_{1j} + n_{N-1,j} for all j, via a single solve with (I-U)^T.
Eigen::VectorXd combined_visit_counts(const TransitionMatrix& U);

enum class FixationDirection { DtoC, CtoD };

// Fixation probability of a single mutant (C into an all-D population, or the
// reverse), from the product-sum formula accumulated in log domain.
double log_fixation_probability(const GameSpec& game, const PopulationConfig& pop, double theta,
                                FixationDirection direction);
double fixation_probability(const GameSpec& game, const PopulationConfig& pop, double theta,
                            FixationDirection direction);

// Stationary cooperation frequency rho_DC/(rho_DC + rho_CD); reduces to a
// logistic in beta*(N-1)*(delta+theta). Requires beta > 0.
double cooperation_frequency(const GameSpec& game, const PopulationConfig& pop, double theta);

// Same quantity assembled from the two fixation probabilities; the two routes
// must agree and are cross-checked in the tests.
double cooperation_frequency_from_fixation(const GameSpec& game, const PopulationConfig& pop,
                                           double theta);

// theta_0(omega): smallest incentive guaranteeing cooperation frequency >= omega.
double theta_min(const GameSpec& game, const PopulationConfig& pop, double omega);

}  // namespace incent

#endif  // INCENT_CHAIN_HPP
