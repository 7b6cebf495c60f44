#include "incent/cost.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace incent {

double expected_cost(const GameSpec& game, const PopulationConfig& pop, IncentiveScheme scheme,
                     double theta) {
  const TransitionMatrix U = build_transition_matrix(game, pop, theta);
  const Eigen::VectorXd z = combined_visit_counts(U);
  double acc = 0.0;
  for (int j = 1; j <= pop.N - 1; ++j) acc += z[j - 1] * incentive_weight(scheme, pop.N, j);
  return 0.5 * theta * acc;
}

RationalFn derive_psi(int N, IncentiveScheme scheme, int symbolic_cap) {
  if (N < 3) throw std::invalid_argument("derive_psi requires N >= 3");
  if (N > symbolic_cap) {
    throw std::domain_error("derive_psi: N exceeds the symbolic cap; use the matrix path");
  }

  const int n = N - 1;
  const Polynomial one_plus_u(std::vector<Rational>{Rational(1), Rational(1)});
  const mpz_class NN = mpz_class(N) * N;
  auto c_of = [&](int i) {
    Rational c(mpz_class(i) * (N - i), NN);
    c.canonicalize();
    return c;
  };

  // Rows of (I-U(u))^T over Q(u): diag_i = c_i,
  // sub_i (couples to i-1) = -c_{i-1} u/(1+u), sup_i (couples to i+1) = -c_{i+1}/(1+u).
  std::vector<RationalFn> diag(n), sub(n), sup(n), rhs(n);
  for (int k = 0; k < n; ++k) {
    const int i = k + 1;
    diag[k] = RationalFn(Polynomial(c_of(i)));
    if (k > 0) sub[k] = RationalFn(Polynomial::monomial(1, -c_of(i - 1)), one_plus_u);
    if (k + 1 < n) sup[k] = RationalFn(Polynomial(-c_of(i + 1)), one_plus_u);
    rhs[k] = RationalFn{};
  }
  rhs[0] += RationalFn(Polynomial(Rational(1)));
  rhs[n - 1] += RationalFn(Polynomial(Rational(1)));

  // Thomas elimination over the rational-function field.
  std::vector<RationalFn> d(n), y(n), z(n);
  d[0] = diag[0];
  y[0] = rhs[0];
  for (int k = 1; k < n; ++k) {
    const RationalFn m = sub[k] / d[k - 1];
    d[k] = diag[k] - m * sup[k - 1];
    y[k] = rhs[k] - m * y[k - 1];
  }
  z[n - 1] = y[n - 1] / d[n - 1];
  for (int k = n - 2; k >= 0; --k) z[k] = (y[k] - sup[k] * z[k + 1]) / d[k];

  // z_j = n_{1j} + n_{N-1,j}; psi = (1/2) sum_j z_j * weight_j.
  RationalFn psi;
  for (int k = 0; k < n; ++k) {
    const long w = scheme == IncentiveScheme::Reward ? (k + 1) : (N - (k + 1));
    psi += z[k] * Rational(w);
  }
  psi *= make_rational(1, 2);
  return psi;
}

double CostProfile::cost(double theta) const {
  const double x = pop.beta * (theta + delta);
  return theta * psi.eval_log(x);
}

double CostProfile::cost_derivative(double theta) const {
  const double x = pop.beta * (theta + delta);
  return psi.eval_log(x) + pop.beta * theta * u_psi_prime.eval_log(x);
}

CostProfile make_cost_profile(const GameSpec& game, const PopulationConfig& pop,
                              IncentiveScheme scheme, int symbolic_cap) {
  pop.validate(game);
  CostProfile p{game, pop, scheme, {}, {}, {}, payoff_gap(game, pop.N)};
  p.psi = derive_psi(pop.N, scheme, symbolic_cap);
  p.psi_prime = p.psi.derivative();
  p.u_psi_prime = RationalFn(Polynomial::monomial(1)) * p.psi_prime;
  return p;
}

CriticalFunctions critical_functions(const RationalFn& psi) {
  CriticalFunctions cf;
  const RationalFn u_psi_prime = RationalFn(Polynomial::monomial(1)) * psi.derivative();
  if (u_psi_prime.is_zero()) throw std::invalid_argument("critical_functions: psi is constant");
  cf.g = -(psi / u_psi_prime);
  cf.g_prime = cf.g.derivative();
  // P: numerator of -u psi' with any u^k factor dropped (positive on u > 0),
  // stored primitive with positive leading coefficient.
  Polynomial p = -u_psi_prime.num();
  p = p.shifted_down(p.trailing_zeros());
  cf.P = p.primitive_integer();
  return cf;
}

double CriticalFunctions::F(double u) const {
  if (!(u > 0)) throw std::domain_error("F is defined for u > 0");
  return g.eval(u) - std::log(u);
}

double CriticalFunctions::F_from_log(double x) const { return g.eval_log(x) - x; }

double CriticalFunctions::F_prime(double u) const {
  if (!(u > 0)) throw std::domain_error("F' is defined for u > 0");
  return g_prime.eval(u) - 1.0 / u;
}

double cost_derivative(const GameSpec& game, const PopulationConfig& pop, IncentiveScheme scheme,
                       double theta, int symbolic_cap) {
  pop.validate(game);
  if (pop.N <= symbolic_cap) {
    return make_cost_profile(game, pop, scheme, symbolic_cap).cost_derivative(theta);
  }
  // centered finite differences on the matrix path
  const double h = 6e-6 * std::max(1.0, std::abs(theta));
  const double plus = expected_cost(game, pop, scheme, theta + h);
  const double minus = expected_cost(game, pop, scheme, theta - h);
  return (plus - minus) / (2.0 * h);
}

}  // namespace incent
