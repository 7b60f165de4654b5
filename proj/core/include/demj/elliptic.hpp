#pragma once

// Elliptic curves y^2 = x^3 + a2 x^2 + a4 x + a6 over Q with exact group law,
// reduction mod p, torsion, and Weil / canonical heights.

#include "demj/exact.hpp"

#include <vector>

namespace demj {

class ECPoint {
 public:
  ECPoint() = default;  // point at infinity
  ECPoint(Rational x, Rational y) : infinity_(false), x_(std::move(x)), y_(std::move(y)) {}

  static ECPoint infinity() { return {}; }

  bool is_infinity() const { return infinity_; }
  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }

  friend bool operator==(const ECPoint& p, const ECPoint& q) {
    if (p.infinity_ || q.infinity_) return p.infinity_ == q.infinity_;
    return p.x_ == q.x_ && p.y_ == q.y_;
  }

 private:
  bool infinity_ = true;
  Rational x_;
  Rational y_;
};

std::string to_string(const ECPoint& p);

class EllipticCurve {
 public:
  /// Throws std::invalid_argument if the model is singular.
  EllipticCurve(Rational a2, Rational a4, Rational a6);

  const Rational& a2() const { return a2_; }
  const Rational& a4() const { return a4_; }
  const Rational& a6() const { return a6_; }

  Rational b2() const { return 4 * a2_; }
  Rational b4() const { return 2 * a4_; }
  Rational b6() const { return 4 * a6_; }
  Rational b8() const { return 4 * a2_ * a6_ - a4_ * a4_; }
  Rational c4() const;
  Rational c6() const;
  Rational discriminant() const;

  /// Right-hand side x^3 + a2 x^2 + a4 x + a6.
  Rational rhs(const Rational& x) const { return ((x + a2_) * x + a4_) * x + a6_; }
  bool contains(const ECPoint& p) const;

  /// Smallest u > 0 (by lcm of denominators) with u^2 a2, u^4 a4, u^6 a6 integral.
  BigInt integral_scale() const;
  /// The model with coefficients (u^2 a2, u^4 a4, u^6 a6), u = integral_scale().
  EllipticCurve integral_model() const;

  friend bool operator==(const EllipticCurve& e, const EllipticCurve& f) {
    return e.a2_ == f.a2_ && e.a4_ == f.a4_ && e.a6_ == f.a6_;
  }

 private:
  Rational a2_, a4_, a6_;
};

std::string to_string(const EllipticCurve& e);

ECPoint negate(const EllipticCurve& e, const ECPoint& p);

/// Chord-tangent law, infinity as identity. Inputs off the curve throw
/// std::invalid_argument.
ECPoint add(const EllipticCurve& e, const ECPoint& p, const ECPoint& q);

/// n P by double-and-add; negative n goes through -P.
ECPoint scalar_mul(const EllipticCurve& e, long n, const ECPoint& p);

/// #E(F_p) including infinity, for an odd prime p of good reduction (p does
/// not divide the discriminant or any coefficient denominator).
long count_points_mod_p(const EllipticCurve& e, long p);

/// True when p is an odd prime of good reduction for this model.
bool is_good_prime(const EllipticCurve& e, long p);

/// Order of a torsion point (<= 12), or 0 if p has no order up to 12.
int torsion_order(const EllipticCurve& e, const ECPoint& p);

/// All rational torsion points. Orders are bounded by the gcd of #E(F_p) over
/// ten good primes and by 12; candidates are Lutz-Nagell points of the
/// integral model (y = 0 or y^2 | disc). Infinity first, then sorted by x.
std::vector<ECPoint> torsion_subgroup(const EllipticCurve& e);

/// gcd of #E(F_p) over the first `count` odd primes of good reduction.
long torsion_bound(const EllipticCurve& e, int count = 10);

// ---------------------------------------------------------------------------
// Heights. Convention: h(P) = log max(|num x|, den x) and
// hhat(P) = lim 4^-n h(2^n P), with no factor 1/2.

double naive_height(const ECPoint& p);

/// Canonical height to absolute accuracy tol (> 0). Evaluated as
/// h(P) + sum_n 4^-(n+1) sum_v log |Dup(u_n)|_v, the doubling limit split
/// over the archimedean place and the primes dividing the discriminant, with
/// the duplication map applied to v-adically normalized coordinates.
double canonical_height(const EllipticCurve& e, const ECPoint& p, double tol = 1e-10);

/// Certified bounds on the difference between canonical and naive height:
/// for every P in E(Q-bar),
///   -h_minus_hhat <= hhat(P) - h(P) <= hhat_minus_h.
struct HeightGap {
  double hhat_minus_h = 0;  // sup (hhat - h)
  double h_minus_hhat = 0;  // sup (h - hhat)
};
HeightGap height_gap(const EllipticCurve& e);

}  // namespace demj
