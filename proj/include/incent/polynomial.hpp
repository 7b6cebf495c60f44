#ifndef INCENT_POLYNOMIAL_HPP
#define INCENT_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

namespace incent {

using Rational = mpq_class;

// mpq_class(n, d) does not canonicalize on its own.
Rational make_rational(long num, long den);

// Dense univariate polynomial over the rationals, coeff(k) * u^k.
class Polynomial {
 public:
  Polynomial() = default;  // the zero polynomial
  explicit Polynomial(Rational constant);
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial monomial(int power, Rational coeff = Rational(1));

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return coeffs_.empty(); }
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational leading() const;

  Polynomial derivative() const;

  Rational eval(const Rational& u) const;
  double eval(double u) const;
  // P(u) scaled by u^{-degree} for u > 1 (plain Horner otherwise); continuous,
  // overflow-free and sign-identical to P(u) on u > 0.
  double eval_scaled(double u) const;

  // Multiplicity of the root u = 0.
  int trailing_zeros() const;
  // Divide by u^k; the k low-order coefficients must vanish.
  Polynomial shifted_down(int k) const;

  // c with *this == c * primitive_integer(); carries the sign of the leading
  // coefficient so the primitive part has a positive leading coefficient.
  Rational content() const;
  Polynomial primitive_integer() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  Polynomial& operator*=(const Rational& s);
  Polynomial& operator/=(const Rational& s);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

  std::string str(const std::string& var = "u") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;  // empty means zero; otherwise back() != 0
};

// Quotient and remainder of a/b over the rationals (b nonzero).
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

// Primitive integer gcd with positive leading coefficient.
Polynomial poly_gcd(Polynomial a, Polynomial b);

// Reduced ratio of two polynomials. The denominator is normalized to a
// primitive integer polynomial with positive leading coefficient, which makes
// the representation canonical.
class RationalFn {
 public:
  RationalFn();  // zero
  explicit RationalFn(Polynomial numerator);
  RationalFn(Polynomial numerator, Polynomial denominator);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFn derivative() const;

  Rational eval(const Rational& u) const;
  double eval(double u) const;
  // Value at u = exp(x), evaluated through 1/u for x > 0 so that large gaps do
  // not overflow; saturates gracefully when the numerator degree is smaller.
  double eval_log(double x) const;

  RationalFn operator-() const;
  RationalFn& operator+=(const RationalFn& o);
  RationalFn& operator-=(const RationalFn& o);
  RationalFn& operator*=(const RationalFn& o);
  RationalFn& operator/=(const RationalFn& o);
  RationalFn& operator*=(const Rational& s);

  friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
  friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
  friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
  friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }
  friend RationalFn operator*(RationalFn a, const Rational& s) { return a *= s; }
  friend RationalFn operator*(const Rational& s, RationalFn a) { return a *= s; }
  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  std::string str(const std::string& var = "u") const;

 private:
  void reduce();
  Polynomial num_;
  Polynomial den_;  // never zero
};

}  // namespace incent

#endif  // INCENT_POLYNOMIAL_HPP
