#include "incent/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "incent/cost.hpp"

namespace incent {

namespace {

constexpr long long kChunkRuns = 1024;  // fixed so aggregation order never depends on threads

struct ChunkAccumulator {
  Eigen::VectorXd visit_sum;
  Eigen::VectorXd visit_sumsq;
  double cost_sum = 0;
  double cost_sumsq = 0;
  long long truncated = 0;

  explicit ChunkAccumulator(int n)
      : visit_sum(Eigen::VectorXd::Zero(n)), visit_sumsq(Eigen::VectorXd::Zero(n)) {}
  ChunkAccumulator() = default;
};

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;  // 53-bit mantissa in [0,1)
}

void run_one(const TransitionMatrix& U, const Eigen::VectorXd& step_cost, std::mt19937_64& rng,
             Eigen::VectorXd& visits, double& cost, bool& truncated) {
  const int N = U.N;
  visits.setZero();
  cost = 0.0;
  truncated = false;
  int state = uniform01(rng) < 0.5 ? 1 : N - 1;
  long long steps = 0;
  while (state != 0 && state != N) {
    if (++steps > kSimStepCap) {
      truncated = true;
      break;
    }
    visits[state - 1] += 1.0;
    cost += step_cost[state - 1];
    const double r = uniform01(rng);
    if (r < U.up[state - 1]) {
      ++state;
    } else if (r < U.up[state - 1] + U.down[state - 1]) {
      --state;
    }
  }
}

}  // namespace

SimEstimate simulate_chain(const TransitionMatrix& U, const Eigen::VectorXd& step_cost,
                           long long runs, std::uint64_t seed, int threads) {
  if (runs < 1) throw std::invalid_argument("simulate_chain requires runs >= 1");
  const int n = U.transient_states();
  if (step_cost.size() != n) throw std::invalid_argument("step_cost size mismatch");
  if (threads < 1) threads = 1;

  const long long n_chunks = (runs + kChunkRuns - 1) / kChunkRuns;
  std::vector<ChunkAccumulator> chunks(n_chunks, ChunkAccumulator(n));
  std::atomic<long long> next_chunk{0};

  auto worker = [&]() {
    Eigen::VectorXd visits(n);
    for (;;) {
      const long long c = next_chunk.fetch_add(1);
      if (c >= n_chunks) return;
      ChunkAccumulator& acc = chunks[c];
      const long long lo = c * kChunkRuns;
      const long long hi = std::min(runs, lo + kChunkRuns);
      for (long long run = lo; run < hi; ++run) {
        std::seed_seq seq{static_cast<std::uint32_t>(seed >> 32), static_cast<std::uint32_t>(seed),
                          static_cast<std::uint32_t>(run >> 32), static_cast<std::uint32_t>(run)};
        std::mt19937_64 rng(seq);
        double cost = 0;
        bool truncated = false;
        run_one(U, step_cost, rng, visits, cost, truncated);
        acc.visit_sum += visits;
        acc.visit_sumsq += visits.cwiseProduct(visits);
        acc.cost_sum += cost;
        acc.cost_sumsq += cost * cost;
        if (truncated) ++acc.truncated;
      }
    }
  };

  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // reduce in chunk order
  ChunkAccumulator total(n);
  for (const auto& c : chunks) {
    total.visit_sum += c.visit_sum;
    total.visit_sumsq += c.visit_sumsq;
    total.cost_sum += c.cost_sum;
    total.cost_sumsq += c.cost_sumsq;
    total.truncated += c.truncated;
  }

  SimEstimate est;
  est.runs = runs;
  est.truncated_runs = total.truncated;
  const double R = static_cast<double>(runs);
  est.mean_visits = total.visit_sum / R;
  est.mean_total_cost = total.cost_sum / R;
  est.visits_se.resize(n);
  if (runs > 1) {
    for (int j = 0; j < n; ++j) {
      const double var =
          std::max(0.0, (total.visit_sumsq[j] - total.visit_sum[j] * total.visit_sum[j] / R) /
                            (R - 1.0));
      est.visits_se[j] = std::sqrt(var / R);
    }
    const double cvar =
        std::max(0.0, (total.cost_sumsq - total.cost_sum * total.cost_sum / R) / (R - 1.0));
    est.total_cost_se = std::sqrt(cvar / R);
  } else {
    est.visits_se.setZero();
    est.total_cost_se = 0;
  }
  return est;
}

SimEstimate simulate_visits(const SimConfig& cfg, int threads) {
  cfg.pop.validate(cfg.game);
  if (cfg.runs < 1) throw std::invalid_argument("simulation requires runs >= 1");
  if (!std::isfinite(cfg.theta)) throw std::invalid_argument("theta must be finite");
  const TransitionMatrix U = build_transition_matrix(cfg.game, cfg.pop, cfg.theta);
  Eigen::VectorXd step_cost(U.transient_states());
  for (int j = 1; j <= U.transient_states(); ++j) {
    step_cost[j - 1] = cfg.theta * incentive_weight(cfg.scheme, cfg.pop.N, j);
  }
  return simulate_chain(U, step_cost, cfg.runs, cfg.seed, threads);
}

SimComparison compare_with_matrix(const SimConfig& cfg, const SimEstimate& est) {
  const TransitionMatrix U = build_transition_matrix(cfg.game, cfg.pop, cfg.theta);
  const Eigen::VectorXd z = combined_visit_counts(U);
  SimComparison cmp;
  const int n = U.transient_states();
  cmp.matrix_visits = 0.5 * z;
  cmp.matrix_cost = expected_cost(cfg.game, cfg.pop, cfg.scheme, cfg.theta);
  cmp.visit_z.resize(n);
  auto zscore = [](double observed, double expected, double se) {
    const double diff = observed - expected;
    if (se > 0) return diff / se;
    return std::abs(diff) < 1e-12 ? 0.0 : std::numeric_limits<double>::infinity();
  };
  for (int j = 0; j < n; ++j) {
    cmp.visit_z[j] = zscore(est.mean_visits[j], cmp.matrix_visits[j], est.visits_se[j]);
  }
  cmp.cost_z = zscore(est.mean_total_cost, cmp.matrix_cost, est.total_cost_se);
  cmp.max_abs_z = std::max(cmp.visit_z.cwiseAbs().maxCoeff(), std::abs(cmp.cost_z));
  return cmp;
}

}  // namespace incent
