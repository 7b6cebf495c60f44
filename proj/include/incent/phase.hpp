#ifndef INCENT_PHASE_HPP
#define INCENT_PHASE_HPP

#include <optional>
#include <vector>

#include "incent/cost.hpp"

namespace incent {

// Theorem window: exactly two sign changes of E' above the threshold is proven
// for N up to this size; beyond it the algorithm still runs, flagged heuristic.
inline constexpr int kTwoSignChangeCapN = 100;

struct FStarResult {
  double f_star = 0;
  double u_star = 0;
  double p_boundary = 0;                  // largest positive root of P
  std::vector<double> p_positive_roots;
};

FStarResult f_star(int N, IncentiveScheme scheme, int symbolic_cap = kDefaultSymbolicCap);

double beta_star(const GameSpec& game, int N, IncentiveScheme scheme,
                 int symbolic_cap = kDefaultSymbolicCap);

struct PhaseAnalysis {
  IncentiveScheme scheme = IncentiveScheme::Reward;
  int N = 0;
  double f_star = 0;
  double u_star = 0;
  double beta_star = 0;
  std::vector<double> p_positive_roots;
  bool heuristic = false;  // N beyond the proven window
};

PhaseAnalysis analyze_phase(const GameSpec& game, int N, IncentiveScheme scheme);

// Everything beta-independent that Algorithm 1 needs, so sweeps can reuse it.
struct PhaseContext {
  GameSpec game;
  int N = 0;
  IncentiveScheme scheme = IncentiveScheme::Reward;
  double delta = 0;
  RationalFn psi;
  RationalFn u_psi_prime;
  CriticalFunctions cf;
  FStarResult fs;
  double beta_star = 0;
  bool heuristic = false;

  double cost(double beta, double theta) const;
  double cost_derivative(double beta, double theta) const;
};

PhaseContext make_phase_context(const GameSpec& game, int N, IncentiveScheme scheme);

// Largest root of F(u) + beta*delta = 0 beyond u*; requires beta > beta*.
double find_u2(const PhaseContext& ctx, double beta);
double find_u2(int N, IncentiveScheme scheme, double beta, double delta);

// Smaller root u1 < u* (exists for beta > beta*).
double find_u1(const PhaseContext& ctx, double beta);

enum class OptimizeBranch { BelowThreshold, AboveThresholdTheta0, AboveThresholdTheta2 };

const char* to_string(OptimizeBranch branch);

struct OptimizationResult {
  double theta_star = 0;
  double cost_star = 0;
  OptimizeBranch branch = OptimizeBranch::BelowThreshold;
  double theta0 = 0;
  double beta_star = 0;
  std::optional<double> u2;
  std::optional<double> theta2;
  std::optional<double> cost_theta0;
  std::optional<double> cost_theta2;
  bool heuristic = false;
};

OptimizationResult optimize(const PhaseContext& ctx, const PopulationConfig& pop, double omega);
OptimizationResult optimize(const GameSpec& game, const PopulationConfig& pop,
                            IncentiveScheme scheme, double omega);

struct MonotonicityProfile {
  bool monotone = true;
  std::optional<double> theta1;
  std::optional<double> theta2;
  int grid_sign_changes = 0;  // observed sign changes of E' on the validation grid
  bool consistent = false;    // grid count matches the classification
};

MonotonicityProfile monotonicity_profile(const PhaseContext& ctx, double beta);
MonotonicityProfile monotonicity_profile(const GameSpec& game, const PopulationConfig& pop,
                                         IncentiveScheme scheme);

}  // namespace incent

#endif  // INCENT_PHASE_HPP
