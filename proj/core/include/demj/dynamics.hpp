#pragma once

// Polynomial dynamics and the Chebychev curves X_(d,k): T_d(x) + T_d(y) = k,
// with X_d = X_(d,1).

#include "demj/demjanenko.hpp"
#include "demj/exact.hpp"
#include "demj/poly.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace demj {

/// A polynomial f with an affine twist L(x) = u + v x.
struct PolyMap {
  IntPoly f;
  Rational u = 0;
  Rational v = 1;

  Rational apply(const Rational& x) const { return f.eval(x); }
  Rational twist(const Rational& x) const { return u + v * x; }
};

struct OrbitTail {
  std::vector<Rational> values;  // f^n(start), f^(n+1)(start), ... without repeats
  bool cycled = false;           // the next iterate repeats an earlier value
};

/// Up to `horizon` (>= 1) values starting at f^n(start); stops at the first repeat.
OrbitTail orbit_tail(const PolyMap& m, long n, const Rational& start, long horizon);

struct Intersection {
  std::set<Rational> values;
  bool exact = false;  // both orbits closed up within the horizon
};

/// L(O_n(alpha)) intersected with O_n(beta).
Intersection shifted_intersection(const PolyMap& m, long n, const Rational& alpha, const Rational& beta, long horizon);

/// Rational preperiodic points of a monic integer quadratic with |r| <= cap.
/// Monicity forces preperiodic points to be integers; orbits outside the
/// escape radius |b| + |c| + 2 grow without bound.
std::set<Rational> preperiodic_points(const IntPoly& f, long height_cap);

struct ChebCurve {
  int d;
  Rational k = 1;
};

/// Whether X_(d,k) is nonsingular. For d <= 8 the answer comes from
/// resultants: k is singular iff k = c1 + c2 for critical values c1, c2 of T_d.
/// For d >= 3 this agrees with k not in {0, 4, -4}; for d = 2 only k = -4 is
/// singular.
bool nonsingular(const ChebCurve& c);

/// R(t) = Res_x(T_d', T_d - t), whose roots are the critical values of T_d.
RatPoly critical_value_polynomial(int d);

/// Integers x0 with T_d'(x0) in targets. targets must lie in {0, +-1, +-2}, so
/// |T_d'(x)| >= 7 for |x| >= 3 limits the scan to |x0| <= 2.
std::set<BigInt> integral_pullback(int d_prime, const std::set<Rational>& targets);

struct ScanEvidence {
  int d = 0;
  long num_cap = 0;
  long den_cap = 1;
  std::set<RationalPoint> inside;       // found points with x, y in {0, +-1, +-2}
  std::set<RationalPoint> exceptional;  // anything else
  long candidates = 0;
};

/// Rational points x = r/s, y = t/s of X_d with |r| <= num_cap and
/// 1 <= s <= den_cap. For each x the matching y is found exactly by bisection
/// on the monotone branches |t| >= 2s plus a direct check of |t| < 2s.
ScanEvidence conjecture_scan(int d, long num_cap, long den_cap = 1);

struct ChebCertificate {
  int d = 0;
  std::string case_tag;  // "3 | d", "4 | d, 3 !| d", "5 | d, 3 !| d, 4 !| d", "conjectural"
  bool proven = false;
  PointCertificate cert;
  std::optional<ScanEvidence> evidence;
};

/// Proven cases reduce to X_3, X_4 or X_5 through T_d = T_e o T_(d/e).
ChebCertificate chebyshev_curve_points(int d, long scan_cap = 200);

// Imported certificates and the checks that guard them.

/// y^2 = x^3 - 27x + 189/4, which X_3 covers; its rank 0 is imported and its
/// trivial torsion is recomputed here.
EllipticCurve x3_quotient_curve();
bool x3_quotient_torsion_trivial();

/// C': w^2 = 5u^6 - 50u^4 + 125u^2 + 20u, the genus-2 curve with
/// u = x + y on X_5; its rational points {(0,0), (1,+-10)} are imported.
std::vector<RationalPoint> x5_genus2_points();
bool x5_genus2_points_on_curve();

/// With u = x + y, v = x^2 + y^2:
/// T_5(x) + T_5(y) = -u^5/4 + 5u^3/2 + 5uv^2/4 - 15uv/2 + 5u, checked on a
/// 6 x 6 grid, which determines a polynomial of degree <= 5 in each variable.
bool x5_substitution_identity();

/// X_5(Q) recovered from the imported points: v = (w/u + 15)/5 and x, y the
/// roots of t^2 - u t + (u^2 - v)/2.
std::set<RationalPoint> x5_points_from_genus2();

/// The 12 points of X_4, from the Dem'janenko pipeline on F_(-4,-3) with
/// generator (4, -16). Cached.
const std::set<RationalPoint>& x4_points();

}  // namespace demj
