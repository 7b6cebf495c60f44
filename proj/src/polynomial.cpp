#include "incent/polynomial.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace incent {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Polynomial::Polynomial(Rational constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(int power, Rational coeff) {
  if (power < 0) throw std::invalid_argument("monomial power must be >= 0");
  if (coeff == 0) return Polynomial{};
  std::vector<Rational> c(power + 1, Rational(0));
  c[power] = std::move(coeff);
  return Polynomial(std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[k];
}

Rational Polynomial::leading() const {
  if (is_zero()) return Rational(0);
  return coeffs_.back();
}

Polynomial Polynomial::derivative() const {
  if (degree() < 1) return Polynomial{};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Polynomial(std::move(d));
}

Rational Polynomial::eval(const Rational& u) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + *it;
  return acc;
}

double Polynomial::eval(double u) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + it->get_d();
  return acc;
}

double Polynomial::eval_scaled(double u) const {
  if (u <= 1.0) return eval(u);
  const double w = 1.0 / u;
  double acc = 0.0;  // Horner on the reversed coefficients: u^{-deg} * P(u)
  for (const Rational& c : coeffs_) acc = acc * w + c.get_d();
  return acc;
}

int Polynomial::trailing_zeros() const {
  if (is_zero()) return 0;
  int k = 0;
  while (coeffs_[k] == 0) ++k;
  return k;
}

Polynomial Polynomial::shifted_down(int k) const {
  if (k == 0) return *this;
  if (trailing_zeros() < k) throw std::invalid_argument("shifted_down: u^k does not divide");
  std::vector<Rational> c(coeffs_.begin() + k, coeffs_.end());
  return Polynomial(std::move(c));
}

Rational Polynomial::content() const {
  if (is_zero()) return Rational(1);
  mpz_class num_gcd(0), den_lcm(1);
  for (const Rational& c : coeffs_) {
    if (c == 0) continue;
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  if (leading() < 0) c = -c;
  return c;
}

Polynomial Polynomial::primitive_integer() const {
  if (is_zero()) return Polynomial{};
  Polynomial p = *this;
  p /= content();
  return p;
}

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (Rational& c : p.coeffs_) c = -c;
  return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    for (size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& s) {
  if (s == 0) {
    coeffs_.clear();
    return *this;
  }
  for (Rational& c : coeffs_) c *= s;
  return *this;
}

Polynomial& Polynomial::operator/=(const Rational& s) {
  if (s == 0) throw std::invalid_argument("polynomial division by zero scalar");
  for (Rational& c : coeffs_) c /= s;
  return *this;
}

std::string Polynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational c = coeff(k);
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    else if (c < 0) os << "-";
    const Rational a = abs(c);
    if (a != 1 || k == 0) os << a.get_str();
    if (k > 0) {
      if (a != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<Rational> rem(a.coeffs());
  const int db = b.degree();
  std::vector<Rational> quo(a.degree() - db + 1, Rational(0));
  const Rational lead = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    if (rem[k] == 0) continue;
    const Rational f = rem[k] / lead;
    quo[k - db] = f;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeff(j);
  }
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  if (a.is_zero() && b.is_zero()) return Polynomial{};
  if (a.is_zero()) return b.primitive_integer();
  if (b.is_zero()) return a.primitive_integer();
  a = a.primitive_integer();
  b = b.primitive_integer();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? Polynomial{} : r.primitive_integer();
  }
  return a;
}

RationalFn::RationalFn() : num_(), den_(Rational(1)) {}

RationalFn::RationalFn(Polynomial numerator) : num_(std::move(numerator)), den_(Rational(1)) {}

RationalFn::RationalFn(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  reduce();
}

void RationalFn::reduce() {
  if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  const Polynomial g = poly_gcd(num_, den_);
  if (g.degree() >= 1) {
    num_ = divmod(num_, g).first;
    den_ = divmod(den_, g).first;
  }
  const Rational c = den_.content();
  den_ /= c;
  num_ /= c;
}

RationalFn RationalFn::derivative() const {
  return RationalFn(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

Rational RationalFn::eval(const Rational& u) const {
  const Rational d = den_.eval(u);
  if (d == 0) throw std::domain_error("rational function evaluated at a pole");
  return num_.eval(u) / d;
}

double RationalFn::eval(double u) const {
  if (u > 1.0) return eval_log(std::log(u));
  return num_.eval(u) / den_.eval(u);
}

double RationalFn::eval_log(double x) const {
  if (num_.is_zero()) return 0.0;
  if (x <= 0.0) {
    const double t = std::exp(x);
    return num_.eval(t) / den_.eval(t);
  }
  // reversed Horner at w = 1/u for both parts, then restore u^{dn-dd}
  const double w = std::exp(-x);
  double accn = 0.0;
  for (const Rational& c : num_.coeffs()) accn = accn * w + c.get_d();
  double accd = 0.0;
  for (const Rational& c : den_.coeffs()) accd = accd * w + c.get_d();
  const int k = num_.degree() - den_.degree();
  const double ratio = accn / accd;
  if (k == 0) return ratio;
  return ratio * std::exp(static_cast<double>(k) * x);
}

RationalFn RationalFn::operator-() const {
  RationalFn r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFn& RationalFn::operator+=(const RationalFn& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) {
  num_ = num_ * o.den_ - o.num_ * den_;
  den_ = den_ * o.den_;
  reduce();
  return *this;
}

RationalFn& RationalFn::operator*=(const RationalFn& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  reduce();
  return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& o) {
  if (o.is_zero()) throw std::invalid_argument("rational function division by zero");
  num_ *= o.den_;
  den_ *= o.num_;
  reduce();
  return *this;
}

RationalFn& RationalFn::operator*=(const Rational& s) {
  num_ *= s;
  if (s == 0) den_ = Polynomial(Rational(1));
  return *this;
}

std::string RationalFn::str(const std::string& var) const {
  std::ostringstream os;
  os << "(" << num_.str(var) << ") / (" << den_.str(var) << ")";
  return os.str();
}

}  // namespace incent
