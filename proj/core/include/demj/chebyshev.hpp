#pragma once

// Monic Chebychev polynomials T_d, characterized by T_d(z + 1/z) = z^d + z^-d.

#include "demj/exact.hpp"
#include "demj/poly.hpp"

#include <map>

namespace demj {

class ChebPoly {
 public:
  /// d >= 1; d == 0 is rejected since the two common conventions for T_0 differ.
  explicit ChebPoly(int d);

  int degree() const { return d_; }
  const IntPoly& poly() const { return poly_; }
  Rational operator()(const Rational& x) const { return poly_.eval(x); }

 private:
  int d_;
  IntPoly poly_;
};

/// T_1 = x, T_2 = x^2 - 2, T_d = x T_{d-1} - T_{d-2}. Cached; thread-safe.
const ChebPoly& cheb(int d);

/// T_d(x). Horner on the coefficients for d <= 64; above that, nesting on
/// the smallest prime factor (T_{pm} = T_p o T_m) and a doubling ladder for
/// prime d.
Rational cheb_eval(int d, const Rational& x);

// The two evaluation routes, exposed so callers can cross-check them.
Rational cheb_eval_horner(int d, const Rational& x);
Rational cheb_eval_nested(int d, const Rational& x);

/// T_d restricted to {0, +-1, +-2} for 3 not dividing d, from the closed-form
/// table (odd: identity; 2 mod 4: 0->-2, +-1->-1, +-2->2; 0 mod 4: 0->2,
/// +-1->-1, +-2->2). Re-verified by evaluation. Throws if 3 | d.
std::map<int, int> special_values(int d);

/// |T_d(x)| >= 7 for d >= 2, |x| >= 3, checked by direct evaluation.
bool growth_floor(int d, const Rational& x);

}  // namespace demj
