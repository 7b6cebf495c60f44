#ifndef INCENT_MONTECARLO_HPP
#define INCENT_MONTECARLO_HPP

#include <cstdint>

#include "incent/chain.hpp"

namespace incent {

// Guard against pathological parameters; a run that hits the cap is reported
// as truncated rather than spinning forever.
inline constexpr long long kSimStepCap = 1'000'000'000;

struct SimConfig {
  GameSpec game;
  PopulationConfig pop;
  IncentiveScheme scheme = IncentiveScheme::Reward;
  double theta = 0;
  long long runs = 1;
  std::uint64_t seed = 0;
};

struct SimEstimate {
  Eigen::VectorXd mean_visits;  // index j-1 <-> transient state S_j
  Eigen::VectorXd visits_se;
  double mean_total_cost = 0;
  double total_cost_se = 0;
  long long runs = 0;
  long long truncated_runs = 0;
};

// Direct simulation of the imitation chain: each run starts at S_1 or S_{N-1}
// with probability 1/2, steps i -> i+-1 with probabilities u_{i,i+-1} and stays
// otherwise, accruing step_cost per time step (self-loops included) until
// absorption. Per-run RNG streams are derived from (seed, run index), so the
// result is independent of the thread count.
SimEstimate simulate_chain(const TransitionMatrix& U, const Eigen::VectorXd& step_cost,
                           long long runs, std::uint64_t seed, int threads = 1);

SimEstimate simulate_visits(const SimConfig& cfg, int threads = 1);

// Matrix-path reference values and z-scores for the simulation estimate.
struct SimComparison {
  Eigen::VectorXd matrix_visits;
  double matrix_cost = 0;
  Eigen::VectorXd visit_z;
  double cost_z = 0;
  double max_abs_z = 0;

  bool within(double n_sigma = 3.0) const { return max_abs_z <= n_sigma; }
};

SimComparison compare_with_matrix(const SimConfig& cfg, const SimEstimate& est);

}  // namespace incent

#endif  // INCENT_MONTECARLO_HPP
