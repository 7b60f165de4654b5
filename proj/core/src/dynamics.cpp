#include "demj/dynamics.hpp"

#include "demj/chebyshev.hpp"
#include "demj/elliptic.hpp"

#include <numeric>
#include <stdexcept>

namespace demj {

OrbitTail orbit_tail(const PolyMap& m, long n, const Rational& start, long horizon) {
  if (horizon < 1) throw std::invalid_argument("orbit_tail: horizon must be >= 1");
  if (n < 0) throw std::invalid_argument("orbit_tail: n must be >= 0");
  Rational x = start;
  for (long i = 0; i < n; ++i) x = m.apply(x);
  OrbitTail out;
  std::set<Rational> seen;
  while (static_cast<long>(out.values.size()) < horizon) {
    if (seen.count(x)) {
      out.cycled = true;
      return out;
    }
    seen.insert(x);
    out.values.push_back(x);
    x = m.apply(x);
  }
  out.cycled = seen.count(x) > 0;
  return out;
}

Intersection shifted_intersection(const PolyMap& m, long n, const Rational& alpha, const Rational& beta, long horizon) {
  OrbitTail a = orbit_tail(m, n, alpha, horizon);
  OrbitTail b = orbit_tail(m, n, beta, horizon);
  std::set<Rational> twisted;
  for (const auto& x : a.values) twisted.insert(m.twist(x));
  Intersection out;
  for (const auto& y : b.values)
    if (twisted.count(y)) out.values.insert(y);
  out.exact = a.cycled && b.cycled;
  return out;
}

std::set<Rational> preperiodic_points(const IntPoly& f, long height_cap) {
  if (f.degree() != 2 || !f.is_monic()) throw std::invalid_argument("preperiodic_points: f must be a monic integer quadratic");
  if (height_cap < 0) throw std::invalid_argument("preperiodic_points: height_cap must be >= 0");
  const BigInt radius = abs(f.coeff(1)) + abs(f.coeff(0)) + 2;
  std::set<Rational> out;
  for (long r = -height_cap; r <= height_cap; ++r) {
    BigInt x = r;
    std::set<BigInt> seen;
    while (abs(x) <= radius) {
      if (!seen.insert(x).second) {
        out.insert(Rational(r));
        break;
      }
      x = f.eval(x);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

RatPoly critical_value_polynomial(int d) {
  if (d < 2) throw std::invalid_argument("critical_value_polynomial: d must be >= 2");
  const RatPoly T = to_rational(cheb(d).poly());
  const RatPoly dT = T.derivative();
  // deg_t R = d - 1, so d samples determine it.
  std::vector<Rational> ts, rs;
  for (int i = 0; i < d; ++i) {
    ts.emplace_back(i);
    rs.push_back(resultant(dT, T - RatPoly::constant(Rational(i))));
  }
  RatPoly out;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    RatPoly basis = RatPoly::constant(rs[i]);
    for (std::size_t j = 0; j < ts.size(); ++j) {
      if (i == j) continue;
      Rational inv = 1 / Rational(ts[i] - ts[j]);
      basis = basis * RatPoly{Rational(-ts[j] * inv), inv};
    }
    out = out + basis;
  }
  return out;
}

bool nonsingular(const ChebCurve& c) {
  if (c.d < 2) throw std::invalid_argument("nonsingular: d must be >= 2");
  const bool criterion = c.k != 0 && c.k != 4 && c.k != -4;
  if (c.d > 8) return criterion;
  const RatPoly R = critical_value_polynomial(c.d);
  const RatPoly shifted = R.compose(RatPoly{c.k, Rational(-1)});
  const bool by_resultant = resultant(R, shifted) != 0;
  if (c.d >= 3 && by_resultant != criterion)
    throw std::logic_error("nonsingular: resultant test disagrees with the critical value criterion");
  return by_resultant;
}

std::set<BigInt> integral_pullback(int d_prime, const std::set<Rational>& targets) {
  if (d_prime < 1) throw std::invalid_argument("integral_pullback: d' must be >= 1");
  for (const auto& t : targets)
    if (t.get_den() != 1 || abs(t) > 2)
      throw std::invalid_argument("integral_pullback: targets must lie in {0, +-1, +-2}, got " + to_string(t));
  std::set<BigInt> out;
  for (long x = -2; x <= 2; ++x)
    if (targets.count(cheb_eval(d_prime, Rational(x)))) out.insert(BigInt(x));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// s^d T_d(t / s) as an integer form.
struct HomCheb {
  const IntPoly& T;
  std::vector<BigInt> spow;

  HomCheb(int d, const BigInt& s) : T(cheb(d).poly()) {
    spow.resize(static_cast<std::size_t>(d) + 1);
    spow[0] = 1;
    for (std::size_t i = 1; i < spow.size(); ++i) spow[i] = spow[i - 1] * s;
  }
  BigInt operator()(const BigInt& t) const {
    const long d = T.degree();
    BigInt acc = 0;
    for (long i = d; i >= 0; --i) acc = acc * t + T.coeff(static_cast<std::size_t>(i)) * spow[static_cast<std::size_t>(d - i)];
    return acc;
  }
};

// t >= lo with H(t) == target, where H is increasing on [lo, inf).
std::optional<BigInt> bisect(const HomCheb& H, const BigInt& lo, const BigInt& target) {
  if (H(lo) > target) return std::nullopt;
  BigInt hi = lo + 1;
  while (H(hi) < target) hi = lo + 2 * (hi - lo);
  BigInt a = lo;  // H(a) <= target <= H(hi)
  while (a < hi) {
    BigInt mid = (a + hi) / 2;
    if (H(mid) < target)
      a = mid + 1;
    else
      hi = mid;
  }
  if (H(a) == target) return a;
  return std::nullopt;
}

bool small_coordinate(const Rational& q) { return q.get_den() == 1 && abs(q) <= 2; }

}  // namespace

ScanEvidence conjecture_scan(int d, long num_cap, long den_cap) {
  if (d < 3) throw std::invalid_argument("conjecture_scan: d must be >= 3");
  if (num_cap < 0 || den_cap < 1) throw std::invalid_argument("conjecture_scan: caps must be positive");
  ScanEvidence ev;
  ev.d = d;
  ev.num_cap = num_cap;
  ev.den_cap = den_cap;
  const BigInt sign = d % 2 == 0 ? 1 : -1;
  for (long s = 1; s <= den_cap; ++s) {
    const HomCheb H(d, BigInt(s));
    const BigInt sd = H.spow.back();
    for (long r = -num_cap; r <= num_cap; ++r) {
      if (std::gcd(r, s) != 1) continue;
      ++ev.candidates;
      const BigInt target = sd - H(BigInt(r));
      std::set<BigInt> ts;
      for (long t = -2 * s + 1; t < 2 * s; ++t)
        if (H(BigInt(t)) == target) ts.insert(BigInt(t));
      if (auto t = bisect(H, BigInt(2 * s), target)) ts.insert(*t);
      if (auto t = bisect(H, BigInt(2 * s), BigInt(sign * target))) ts.insert(BigInt(-*t));
      for (const auto& t : ts) {
        RationalPoint p{make_rational(r, s), make_rational(t, s)};
        if (cheb_eval(d, p.x) + cheb_eval(d, p.y) != 1) throw std::logic_error("conjecture_scan: bisection returned off-curve point");
        (small_coordinate(p.x) && small_coordinate(p.y) ? ev.inside : ev.exceptional).insert(p);
      }
    }
  }
  return ev;
}

// ---------------------------------------------------------------------------

EllipticCurve x3_quotient_curve() { return EllipticCurve(0, -27, Rational(189, 4)); }

bool x3_quotient_torsion_trivial() { return torsion_subgroup(x3_quotient_curve()).size() == 1; }

std::vector<RationalPoint> x5_genus2_points() { return {{0, 0}, {1, 10}, {1, -10}}; }

namespace {

Rational x5_genus2_rhs(const Rational& u) {
  Rational u2 = u * u;
  return ((5 * u2 - 50) * u2 + 125) * u2 + 20 * u;
}

}  // namespace

bool x5_genus2_points_on_curve() {
  for (const auto& p : x5_genus2_points())
    if (p.y * p.y != x5_genus2_rhs(p.x)) return false;
  return true;
}

bool x5_substitution_identity() {
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      Rational x(i - 2), y = make_rational(2 * j - 5, 3);
      Rational u = x + y, v = x * x + y * y;
      Rational lhs = cheb_eval(5, x) + cheb_eval(5, y);
      Rational u3 = u * u * u;
      Rational rhs = -u3 * u * u / 4 + 5 * u3 / 2 + 5 * u * v * v / 4 - 15 * u * v / 2 + 5 * u;
      if (lhs != rhs) return false;
    }
  }
  return true;
}

std::set<RationalPoint> x5_points_from_genus2() {
  std::set<RationalPoint> out;
  for (const auto& p : x5_genus2_points()) {
    const Rational& u = p.x;
    if (u == 0) continue;  // u = 0 gives -1 = 0 in the substitution
    Rational v = (p.y / u + 15) / 5;
    for (const auto& x : rational_roots(RatPoly{Rational((u * u - v) / 2), Rational(-u), Rational(1)})) {
      RationalPoint q{x, u - x};
      if (cheb_eval(5, q.x) + cheb_eval(5, q.y) == 1) out.insert(q);
    }
  }
  return out;
}

const std::set<RationalPoint>& x4_points() {
  static const std::set<RationalPoint> pts = [] {
    CertifyOptions opts;
    opts.min_window = 40;
    return certify_points(SymQuartic(-4, -3), ECPoint(4, -16), 1, opts).points;
  }();
  return pts;
}

ChebCertificate chebyshev_curve_points(int d, long scan_cap) {
  if (d < 3) throw std::invalid_argument("chebyshev_curve_points: d must be >= 3");
  ChebCertificate out;
  out.d = d;
  auto& cert = out.cert;

  auto pull_back = [&](int e, const std::set<RationalPoint>& base) {
    const int dp = d / e;
    for (const auto& b : base)
      for (const auto& x : integral_pullback(dp, {b.x}))
        for (const auto& y : integral_pullback(dp, {b.y})) cert.points.insert({Rational(x), Rational(y)});
    cert.method = "pull-back of X_" + std::to_string(e) + "(Q) through T_" + std::to_string(dp);
  };

  if (d % 3 == 0) {
    out.case_tag = "3 | d";
    if (!x3_quotient_torsion_trivial()) throw std::logic_error("X_3 quotient curve has nontrivial torsion");
    cert.conditional_on.push_back("imported: rank of y^2 = x^3 - 27x + 189/4 is 0");
    cert.method = "X_d covers X_3, and X_3(Q) is empty";
    out.proven = true;
  } else if (d % 4 == 0) {
    out.case_tag = "4 | d, 3 !| d";
    cert.conditional_on.push_back("imported: rank of y^2 = x(x^2 + 16x - 16) is 1, generated by (4, -16)");
    pull_back(4, x4_points());
    out.proven = true;
  } else if (d % 5 == 0) {
    out.case_tag = "5 | d, 3 !| d, 4 !| d";
    if (!x5_genus2_points_on_curve() || !x5_substitution_identity())
      throw std::logic_error("X_5 import failed its consistency checks");
    cert.conditional_on.push_back("imported: w^2 = 5u^6 - 50u^4 + 125u^2 + 20u has rational points {(0,0), (1,+-10)}");
    pull_back(5, x5_points_from_genus2());
    out.proven = true;
  } else {
    out.case_tag = "conjectural";
    cert.method = "bounded search";
  }

  if (!out.proven || scan_cap > 0) {
    out.evidence = conjecture_scan(d, scan_cap);
    if (out.proven) {
      for (const auto& set : {out.evidence->inside, out.evidence->exceptional})
        for (const auto& p : set)
          if (!cert.points.count(p)) throw std::logic_error("bounded search found " + to_string(p) + " outside the certificate");
    } else {
      cert.points = out.evidence->inside;
      cert.points.insert(out.evidence->exceptional.begin(), out.evidence->exceptional.end());
      cert.conditional_on.push_back("search bound |x| <= " + std::to_string(scan_cap));
    }
  }
  for (const auto& p : cert.points)
    if (cheb_eval(d, p.x) + cheb_eval(d, p.y) != 1) throw std::logic_error("certificate point off X_d");
  return out;
}

}  // namespace demj
