#ifndef INCENT_ROOT_FINDING_HPP
#define INCENT_ROOT_FINDING_HPP

#include <cmath>
#include <stdexcept>

namespace incent {

// Brent's method on [a,b] with f(a)*f(b) <= 0; relative tolerance on the root.
template <class F>
double brent_root(F&& f, double a, double b, double fa, double fb, double rel_tol = 1e-13,
                  int max_iter = 200) {
  if (fa == 0) return a;
  if (fb == 0) return b;
  if ((fa > 0) == (fb > 0)) throw std::invalid_argument("brent_root: no sign change on [a,b]");
  double c = a, fc = fa, d = b - a, e = d;
  for (int it = 0; it < max_iter; ++it) {
    if ((fb > 0) == (fc > 0)) {
      c = a;
      fc = fa;
      d = e = b - a;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b; b = c; c = a;
      fa = fb; fb = fc; fc = fa;
    }
    const double tol = 2.0 * rel_tol * std::abs(b) + 1e-300;
    const double m = 0.5 * (c - b);
    if (std::abs(m) <= tol || fb == 0) return b;
    if (std::abs(e) < tol || std::abs(fa) <= std::abs(fb)) {
      d = e = m;  // bisection
    } else {
      double p, q;
      const double s = fb / fa;
      if (a == c) {  // secant
        p = 2.0 * m * s;
        q = 1.0 - s;
      } else {  // inverse quadratic
        const double qq = fa / fc, r = fb / fc;
        p = s * (2.0 * m * qq * (qq - r) - (b - a) * (r - 1.0));
        q = (qq - 1.0) * (r - 1.0) * (s - 1.0);
      }
      if (p > 0) q = -q; else p = -p;
      if (2.0 * p < std::min(3.0 * m * q - std::abs(tol * q), std::abs(e * q))) {
        e = d;
        d = p / q;
      } else {
        d = e = m;
      }
    }
    a = b;
    fa = fb;
    b += (std::abs(d) > tol) ? d : (m > 0 ? tol : -tol);
    fb = f(b);
  }
  return b;
}

template <class F>
double brent_root(F&& f, double a, double b, double rel_tol = 1e-13, int max_iter = 200) {
  const double fa = f(a), fb = f(b);
  return brent_root(f, a, b, fa, fb, rel_tol, max_iter);
}

}  // namespace incent

#endif  // INCENT_ROOT_FINDING_HPP
