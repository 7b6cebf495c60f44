#ifndef INCENT_GAMES_HPP
#define INCENT_GAMES_HPP

#include <string>
#include <variant>

namespace incent {

// Donation game: a cooperator pays c so that the co-player receives b (b > c > 0).
struct DonationGame {
  double b = 0;
  double c = 0;
};

// Public goods game played in groups of n sampled from the population;
// contributions are multiplied by r (1 < r < n) and shared within the group.
struct PublicGoodsGame {
  double r = 0;
  int n = 0;
  double c = 0;
};

class GameSpec {
 public:
  explicit GameSpec(DonationGame g);
  explicit GameSpec(PublicGoodsGame g);

  static GameSpec donation(double b, double c);
  static GameSpec public_goods(double r, int n, double c);

  bool is_donation() const { return std::holds_alternative<DonationGame>(game_); }
  const DonationGame* donation_params() const { return std::get_if<DonationGame>(&game_); }
  const PublicGoodsGame* public_goods_params() const { return std::get_if<PublicGoodsGame>(&game_); }

  std::string describe() const;

 private:
  std::variant<DonationGame, PublicGoodsGame> game_;
};

struct PopulationConfig {
  int N = 0;         // population size, N >= 3 (and N >= n for the PGG)
  double beta = 0;   // selection intensity, beta >= 0

  void validate(const GameSpec& game) const;
};

// Average payoff Pi_C(i) of a cooperator in a population with i cooperators, 1 <= i <= N.
double payoff_cooperator(const GameSpec& game, int N, int i);

// Average payoff Pi_D(i) of a defector in a population with i cooperators, 0 <= i <= N-1.
double payoff_defector(const GameSpec& game, int N, int i);

// Constant gap delta = Pi_C(i) - Pi_D(i); strictly negative for both dilemmas.
double payoff_gap(const GameSpec& game, int N);

}  // namespace incent

#endif  // INCENT_GAMES_HPP
