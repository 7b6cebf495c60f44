#ifndef INCENT_COST_HPP
#define INCENT_COST_HPP

#include "incent/chain.hpp"
#include "incent/polynomial.hpp"

namespace incent {

// Guard for the exact symbolic path; elimination over Q(u) beyond this size is
// opt-in via the cap argument.
inline constexpr int kDefaultSymbolicCap = 40;

// Expected total incentive spend until absorption (matrix path):
// E = (theta/2) * sum_i (n_{1i} + n_{N-1,i}) * weight_i.
double expected_cost(const GameSpec& game, const PopulationConfig& pop, IncentiveScheme scheme,
                     double theta);

// Exact psi_N with E(theta) = theta * psi_N(exp(beta*(theta+delta))), obtained
// by eliminating (I-U(u))^T z = e_1 + e_{N-1} over the field of rational
// functions in u, where u_{i,i+1}/u_{i,i-1} = u.
RationalFn derive_psi(int N, IncentiveScheme scheme, int symbolic_cap = kDefaultSymbolicCap);

struct CostProfile {
  GameSpec game;
  PopulationConfig pop;
  IncentiveScheme scheme;
  RationalFn psi;
  RationalFn psi_prime;
  RationalFn u_psi_prime;  // u*psi'(u), reduced; stays bounded as u -> infinity
  double delta = 0;

  double cost(double theta) const;
  // E'(theta) = psi(u) + beta*theta * u*psi'(u) with u = exp(beta*(theta+delta)).
  double cost_derivative(double theta) const;
};

CostProfile make_cost_profile(const GameSpec& game, const PopulationConfig& pop,
                              IncentiveScheme scheme, int symbolic_cap = kDefaultSymbolicCap);

// F and P of the stationarity analysis. E'(theta) = 0 at u = exp(beta*(theta+delta))
// exactly when F(u) = -beta*delta, and P(u) > 0 exactly where psi is strictly
// decreasing.
struct CriticalFunctions {
  RationalFn g;        // -psi/(u psi'), the algebraic part of F
  RationalFn g_prime;
  Polynomial P;        // primitive integer numerator of -u psi', u^k factor stripped

  double F(double u) const;
  double F_from_log(double x) const;  // F at u = exp(x)
  double F_prime(double u) const;
};

CriticalFunctions critical_functions(const RationalFn& psi);

// dE/dtheta; exact expression when N is within the symbolic cap, centered
// finite differences on the matrix path otherwise.
double cost_derivative(const GameSpec& game, const PopulationConfig& pop, IncentiveScheme scheme,
                       double theta, int symbolic_cap = kDefaultSymbolicCap);

}  // namespace incent

#endif  // INCENT_COST_HPP
