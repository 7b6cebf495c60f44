#include "incent/chain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace incent {

const char* to_string(IncentiveScheme scheme) {
  return scheme == IncentiveScheme::Reward ? "reward" : "punishment";
}

double incentive_weight(IncentiveScheme scheme, int N, int i) {
  return scheme == IncentiveScheme::Reward ? static_cast<double>(i)
                                           : static_cast<double>(N - i);
}

double logistic(double y) {
  if (y >= 0) return 1.0 / (1.0 + std::exp(-y));
  const double e = std::exp(y);
  return e / (1.0 + e);
}

double log1pexp(double y) {
  if (y > 0) return y + std::log1p(std::exp(-y));
  return std::log1p(std::exp(y));
}

TransitionMatrix transition_matrix_from_gap(int N, double x) {
  if (N < 2) throw std::invalid_argument("transition matrix requires N >= 2");
  if (!std::isfinite(x)) throw std::invalid_argument("scaled gap x must be finite");
  TransitionMatrix U;
  U.N = N;
  U.up.resize(N - 1);
  U.down.resize(N - 1);
  const double p_up = logistic(x);    // (1+e^{-x})^{-1}
  const double p_dn = logistic(-x);   // (1+e^{+x})^{-1}
  for (int i = 1; i <= N - 1; ++i) {
    const double c = static_cast<double>(i) * (N - i) / (static_cast<double>(N) * N);
    U.up[i - 1] = c * p_up;
    U.down[i - 1] = c * p_dn;
  }
  return U;
}

TransitionMatrix build_transition_matrix(const GameSpec& game, const PopulationConfig& pop,
                                         double theta) {
  pop.validate(game);
  if (!std::isfinite(theta)) throw std::invalid_argument("theta must be finite");
  const double x = pop.beta * (payoff_gap(game, pop.N) + theta);
  return transition_matrix_from_gap(pop.N, x);
}

namespace {

// LU factors of a tridiagonal system; the chain matrices are weakly diagonally
// dominant M-matrices, so no pivoting is required (pivots stay >= c_i/2).
struct TridiagonalFactor {
  Eigen::VectorXd pivot;  // d_i after elimination
  Eigen::VectorXd mult;   // m_i = sub_i / d_{i-1}
  Eigen::VectorXd sup;

  TridiagonalFactor(const Eigen::VectorXd& sub, const Eigen::VectorXd& diag,
                    const Eigen::VectorXd& super)
      : pivot(diag), mult(sub.size()), sup(super) {
    const int n = static_cast<int>(diag.size());
    for (int i = 1; i < n; ++i) {
      if (!(pivot[i - 1] > 0) || !std::isfinite(pivot[i - 1])) {
        throw std::runtime_error("chain: singular tridiagonal system");
      }
      mult[i - 1] = sub[i - 1] / pivot[i - 1];
      pivot[i] -= mult[i - 1] * sup[i - 1];
    }
    if (!(pivot[n - 1] > 0) || !std::isfinite(pivot[n - 1])) {
      throw std::runtime_error("chain: singular tridiagonal system");
    }
  }

  Eigen::VectorXd solve(Eigen::VectorXd rhs) const {
    const int n = static_cast<int>(pivot.size());
    for (int i = 1; i < n; ++i) rhs[i] -= mult[i - 1] * rhs[i - 1];
    rhs[n - 1] /= pivot[n - 1];
    for (int i = n - 2; i >= 0; --i) rhs[i] = (rhs[i] - sup[i] * rhs[i + 1]) / pivot[i];
    return rhs;
  }
};

// I-U for the transient block: diagonal up+down, off-diagonals -up / -down.
TridiagonalFactor factor_i_minus_u(const TransitionMatrix& U, bool transposed) {
  const int n = U.transient_states();
  Eigen::VectorXd diag = U.up + U.down;
  Eigen::VectorXd sub(n - 1 > 0 ? n - 1 : 0), sup(n - 1 > 0 ? n - 1 : 0);
  for (int k = 0; k + 1 < n; ++k) {
    if (!transposed) {
      sub[k] = -U.down[k + 1];  // row k+1 couples to k
      sup[k] = -U.up[k];
    } else {
      sub[k] = -U.up[k];        // (I-U)^T swaps the couplings
      sup[k] = -U.down[k + 1];
    }
  }
  return TridiagonalFactor(sub, diag, sup);
}

}  // namespace

FundamentalMatrix fundamental_matrix(const TransitionMatrix& U) {
  const int n = U.transient_states();
  if (n < 1) throw std::invalid_argument("fundamental matrix requires N >= 2");
  FundamentalMatrix fm;
  fm.N = U.N;
  fm.visits.resize(n, n);
  const TridiagonalFactor f = factor_i_minus_u(U, /*transposed=*/false);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  for (int j = 0; j < n; ++j) {
    rhs.setZero();
    rhs[j] = 1.0;
    fm.visits.col(j) = f.solve(rhs);
  }
  return fm;
}

double expected_visits(const FundamentalMatrix& fm, int i) {
  const int n = static_cast<int>(fm.visits.rows());
  if (i < 1 || i > n) throw std::out_of_range("expected_visits index out of range");
  return 0.5 * (fm.visits(0, i - 1) + fm.visits(n - 1, i - 1));
}

Eigen::VectorXd combined_visit_counts(const TransitionMatrix& U) {
  const int n = U.transient_states();
  if (n < 1) throw std::invalid_argument("combined visits require N >= 2");
  const TridiagonalFactor f = factor_i_minus_u(U, /*transposed=*/true);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(n);
  rhs[0] += 1.0;
  rhs[n - 1] += 1.0;
  return f.solve(rhs);
}

namespace {

// log rho for a single mutant via rho = (sum_{i=0}^{N-1} prod_{k<=i} gamma_k)^{-1},
// gamma_k = T^-(k)/T^+(k) under the Fermi rule, accumulated in log domain.
double log_fixation_impl(const GameSpec& game, int N, double beta, double theta,
                         FixationDirection direction) {
  std::vector<double> log_terms;
  log_terms.reserve(N);
  log_terms.push_back(0.0);
  double acc = 0.0;
  for (int k = 1; k <= N - 1; ++k) {
    double gap;  // mutant minus resident payoff with k mutants present
    if (direction == FixationDirection::DtoC) {
      gap = payoff_cooperator(game, N, k) - payoff_defector(game, N, k) + theta;
    } else {
      const int i = N - k;  // cooperators remaining
      gap = -(payoff_cooperator(game, N, i) - payoff_defector(game, N, i) + theta);
    }
    acc += log1pexp(-beta * gap) - log1pexp(beta * gap);
    log_terms.push_back(acc);
  }
  const double m = *std::max_element(log_terms.begin(), log_terms.end());
  double s = 0.0;
  for (double t : log_terms) s += std::exp(t - m);
  return -(m + std::log(s));
}

}  // namespace

double log_fixation_probability(const GameSpec& game, const PopulationConfig& pop, double theta,
                                FixationDirection direction) {
  pop.validate(game);
  if (!std::isfinite(theta)) throw std::invalid_argument("theta must be finite");
  return log_fixation_impl(game, pop.N, pop.beta, theta, direction);
}

double fixation_probability(const GameSpec& game, const PopulationConfig& pop, double theta,
                            FixationDirection direction) {
  return std::exp(log_fixation_probability(game, pop, theta, direction));
}

double cooperation_frequency(const GameSpec& game, const PopulationConfig& pop, double theta) {
  pop.validate(game);
  if (!(pop.beta > 0)) throw std::invalid_argument("cooperation frequency requires beta > 0");
  const double delta = payoff_gap(game, pop.N);
  return logistic(pop.beta * (pop.N - 1) * (delta + theta));
}

double cooperation_frequency_from_fixation(const GameSpec& game, const PopulationConfig& pop,
                                           double theta) {
  const double log_dc = log_fixation_probability(game, pop, theta, FixationDirection::DtoC);
  const double log_cd = log_fixation_probability(game, pop, theta, FixationDirection::CtoD);
  return logistic(log_dc - log_cd);
}

double theta_min(const GameSpec& game, const PopulationConfig& pop, double omega) {
  pop.validate(game);
  if (!(pop.beta > 0)) throw std::invalid_argument("theta_min requires beta > 0");
  if (!(omega > 0 && omega < 1)) throw std::invalid_argument("omega must lie in (0,1)");
  const double delta = payoff_gap(game, pop.N);
  return std::log(omega / (1.0 - omega)) / ((pop.N - 1) * pop.beta) - delta;
}

}  // namespace incent
