#include "incent/games.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace incent {

namespace {

void check(const DonationGame& g) {
  if (!(g.b > g.c && g.c > 0)) {
    throw std::invalid_argument("donation game requires b > c > 0");
  }
}

void check(const PublicGoodsGame& g) {
  if (!(g.c > 0)) throw std::invalid_argument("public goods game requires c > 0");
  if (g.n < 2) throw std::invalid_argument("public goods game requires group size n >= 2");
  if (!(g.r > 1.0 && g.r < g.n)) {
    throw std::invalid_argument("public goods game requires 1 < r < n");
  }
}

}  // namespace

GameSpec::GameSpec(DonationGame g) : game_(g) { check(g); }
GameSpec::GameSpec(PublicGoodsGame g) : game_(g) { check(g); }

GameSpec GameSpec::donation(double b, double c) { return GameSpec(DonationGame{b, c}); }

GameSpec GameSpec::public_goods(double r, int n, double c) {
  return GameSpec(PublicGoodsGame{r, n, c});
}

std::string GameSpec::describe() const {
  std::ostringstream os;
  if (const auto* dg = donation_params()) {
    os << "dg(b=" << dg->b << ",c=" << dg->c << ")";
  } else {
    const auto& pg = *public_goods_params();
    os << "pgg(r=" << pg.r << ",n=" << pg.n << ",c=" << pg.c << ")";
  }
  return os.str();
}

void PopulationConfig::validate(const GameSpec& game) const {
  if (N < 3) throw std::invalid_argument("population size N must be >= 3");
  if (const auto* pg = game.public_goods_params()) {
    if (N < pg->n) throw std::invalid_argument("population size N must be >= group size n");
  }
  if (!(beta >= 0) || !std::isfinite(beta)) {
    throw std::invalid_argument("selection intensity beta must be finite and >= 0");
  }
}

double payoff_cooperator(const GameSpec& game, int N, int i) {
  if (i < 1 || i > N) throw std::out_of_range("payoff_cooperator requires 1 <= i <= N");
  if (const auto* dg = game.donation_params()) {
    return ((i - 1) * (dg->b - dg->c) + (N - i) * (-dg->c)) / (N - 1);
  }
  const auto& pg = *game.public_goods_params();
  if (pg.n > N) throw std::invalid_argument("group size exceeds population size");
  // closed form of the hypergeometric group-composition average
  return pg.r * pg.c / pg.n * (1.0 + (i - 1.0) * (pg.n - 1.0) / (N - 1.0)) - pg.c;
}

double payoff_defector(const GameSpec& game, int N, int i) {
  if (i < 0 || i > N - 1) throw std::out_of_range("payoff_defector requires 0 <= i <= N-1");
  if (const auto* dg = game.donation_params()) {
    return i * dg->b / (N - 1);
  }
  const auto& pg = *game.public_goods_params();
  if (pg.n > N) throw std::invalid_argument("group size exceeds population size");
  return pg.r * pg.c * (pg.n - 1.0) / (pg.n * (N - 1.0)) * i;
}

double payoff_gap(const GameSpec& game, int N) {
  if (N < 2) throw std::invalid_argument("payoff_gap requires N >= 2");
  if (const auto* dg = game.donation_params()) {
    return -(dg->c + dg->b / (N - 1));
  }
  const auto& pg = *game.public_goods_params();
  if (pg.n > N) throw std::invalid_argument("group size exceeds population size");
  return -pg.c * (1.0 - pg.r * (N - pg.n) / (pg.n * (N - 1.0)));
}

}  // namespace incent
