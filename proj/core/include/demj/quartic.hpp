#pragma once

// The symmetric quartics F_(a,b): x^4 + a x^2 + a y^2 + y^4 = b, their
// quadratic twists F_(alpha a, alpha^2 b), the companion curves
// E_(a,b): y^2 = x (x^2 - 4 a x - (16 b + 4 a^2)) and the two covering maps
//   phi1(x, y) = (-4 x^2, x (8 y^2 + 4 a)),  phi2 = phi1 o swap.

#include "demj/elliptic.hpp"
#include "demj/exact.hpp"

#include <optional>
#include <set>

namespace demj {

class SymQuartic {
 public:
  /// alpha must be a nonzero squarefree integer and the twisted discriminant
  /// b (a^2 + 2 b)(a^2 + 4 b) nonzero; otherwise std::invalid_argument.
  SymQuartic(Rational a, Rational b, BigInt alpha = 1);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const BigInt& alpha() const { return alpha_; }

  /// Coefficients of the twisted curve actually being studied.
  Rational twisted_a() const { return a_ * Rational(alpha_); }
  Rational twisted_b() const { return b_ * Rational(alpha_ * alpha_); }

  /// Delta of the twisted curve.
  Rational discriminant() const;

  /// x^4 + a' x^2 + a' y^2 + y^4 - b'.
  Rational equation(const Rational& x, const Rational& y) const;
  bool contains(const RationalPoint& p) const { return equation(p.x, p.y) == 0; }

 private:
  Rational a_, b_;
  BigInt alpha_;
};

std::string to_string(const SymQuartic& f);

/// Delta_(a,b) = b (a^2 + 2b)(a^2 + 4b).
Rational quartic_discriminant(const Rational& a, const Rational& b);

/// E_(alpha a, alpha^2 b), i.e. a2 = -4 a', a4 = -(16 b' + 4 a'^2), a6 = 0.
EllipticCurve companion_curve(const SymQuartic& f);

/// phi_i(P) for i in {1, 2}. P must lie on F.
ECPoint phi(int i, const RationalPoint& p, const SymQuartic& f);

/// Every rational point of F mapping to q under phi_i. q affine on the
/// companion curve.
std::set<RationalPoint> phi_preimages(int i, const ECPoint& q, const SymQuartic& f);

/// Product over all places of max(|1/4|_v, |a/4|_v, |a|_v, |b|_v).
Rational kappa(const Rational& a, const Rational& b);

/// Weil height of [x : y : 1] after clearing denominators.
BigInt projective_height(const RationalPoint& p);

/// Checks 2 h_F(P) - log 12 - log kappa <= h_E(phi_i(P)) <= 2 h_F(P) + log 24
/// for i = 1, 2, in exponentiated form with exact integers. kappa uses the
/// twisted coefficients.
bool height_sandwich_check(const RationalPoint& p, const SymQuartic& f);

/// log 24 + log 12 + log kappa: the bound on |h(phi1(P)) - h(phi2(P))|.
double phi_height_gap(const SymQuartic& f);

/// x(phi1(P) + phi2(P)) from the closed form
///   ((2xy)^2 + (2x+2y)^2 (x^2+y^2) + 4a(x^2+xy+y^2) + a^2) / (x+y)^2
/// at z = 1; nullopt (infinity) when x + y = 0.
std::optional<Rational> phi_sum_x_closed_form(const RationalPoint& p, const SymQuartic& f);

/// Structural evidence that deg(phi1 + phi2) = 8: the closed form is a ratio
/// of degree-4 forms with no common zero on F, so x o (phi1 + phi2) has degree
/// 4 * 4 = 16 = 2 * deg(phi1 + phi2).
struct DegreeEvidence {
  int numerator_degree = 0;
  int denominator_degree = 0;
  int curve_degree = 4;
  bool base_point_free = false;
  int x_map_degree = 0;       // 16 when base point free
  int phi_degree = 4;         // deg phi_i, from x o phi_i = -4x^2/z^2
  int phi_sum_degree = 0;     // 8 when base point free
  int pairing_11 = 0;         // <phi1, phi1> = deg phi1
  int pairing_12 = 0;         // (deg(phi1+phi2) - deg phi1 - deg phi2) / 2
};
DegreeEvidence phi_sum_degree_evidence(const SymQuartic& f);

// ---------------------------------------------------------------------------
// Higher-degree family C: X^2m + a X^m + a Y^m + Y^2m = b with
// B: y^2 = -x^2m - a x^m + (a^2/4 + b), m odd >= 3.

struct HigherSym {
  int m;
  Rational a;
  Rational b;

  HigherSym(int m_, Rational a_, Rational b_);
  Rational c_equation(const Rational& x, const Rational& y) const;
  Rational b_equation(const Rational& x, const Rational& y) const;  // y^2 - rhs
};

/// (x, y^m + a/2) and (y, x^m + a/2) both lie on B. (x, y) must lie on C.
bool higher_membership(const HigherSym& h, const Rational& x, const Rational& y);

struct InfinityReport {
  bool has_rational_point = false;
  std::string description;
};
/// Rational solutions of zeta^2m + 1 = 0 (there are none).
InfinityReport infinity_points(const HigherSym& h);

}  // namespace demj
