#include "demj/elliptic.hpp"

#include "demj/poly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace demj {

std::string to_string(const ECPoint& p) {
  if (p.is_infinity()) return "O";
  return "(" + to_string(p.x()) + ", " + to_string(p.y()) + ")";
}

EllipticCurve::EllipticCurve(Rational a2, Rational a4, Rational a6)
    : a2_(std::move(a2)), a4_(std::move(a4)), a6_(std::move(a6)) {
  if (discriminant() == 0) throw std::invalid_argument("singular cubic model: " + to_string(*this));
}

Rational EllipticCurve::c4() const { return b2() * b2() - 24 * b4(); }

Rational EllipticCurve::c6() const {
  Rational b2v = b2();
  return -b2v * b2v * b2v + 36 * b2v * b4() - 216 * b6();
}

Rational EllipticCurve::discriminant() const {
  Rational b2v = b2(), b4v = b4(), b6v = b6(), b8v = b8();
  return -b2v * b2v * b8v - 8 * b4v * b4v * b4v - 27 * b6v * b6v + 9 * b2v * b4v * b6v;
}

bool EllipticCurve::contains(const ECPoint& p) const {
  return p.is_infinity() || p.y() * p.y() == rhs(p.x());
}

BigInt EllipticCurve::integral_scale() const {
  BigInt u = 1;
  for (const Rational* c : {&a2_, &a4_, &a6_}) mpz_lcm(u.get_mpz_t(), u.get_mpz_t(), c->get_den_mpz_t());
  return u;
}

EllipticCurve EllipticCurve::integral_model() const {
  Rational u2(integral_scale() * integral_scale());
  return EllipticCurve(a2_ * u2, a4_ * u2 * u2, a6_ * u2 * u2 * u2);
}

std::string to_string(const EllipticCurve& e) {
  return "y^2 = x^3 + (" + to_string(e.a2()) + ")x^2 + (" + to_string(e.a4()) + ")x + (" + to_string(e.a6()) + ")";
}

// ---------------------------------------------------------------------------

ECPoint negate(const EllipticCurve&, const ECPoint& p) {
  if (p.is_infinity()) return p;
  return ECPoint(p.x(), -p.y());
}

namespace {

ECPoint add_unchecked(const EllipticCurve& e, const ECPoint& p, const ECPoint& q) {
  if (p.is_infinity()) return q;
  if (q.is_infinity()) return p;
  Rational lambda;
  if (p.x() == q.x()) {
    if (p.y() != q.y() || p.y() == 0) return ECPoint::infinity();
    lambda = (3 * p.x() * p.x() + 2 * e.a2() * p.x() + e.a4()) / (2 * p.y());
  } else {
    lambda = (q.y() - p.y()) / (q.x() - p.x());
  }
  Rational x3 = lambda * lambda - e.a2() - p.x() - q.x();
  Rational y3 = lambda * (p.x() - x3) - p.y();
  return ECPoint(std::move(x3), std::move(y3));
}

}  // namespace

ECPoint add(const EllipticCurve& e, const ECPoint& p, const ECPoint& q) {
  if (!e.contains(p) || !e.contains(q)) throw std::invalid_argument("add: point not on curve");
  return add_unchecked(e, p, q);
}

ECPoint scalar_mul(const EllipticCurve& e, long n, const ECPoint& p) {
  if (!e.contains(p)) throw std::invalid_argument("scalar_mul: point not on curve");
  ECPoint base = n < 0 ? negate(e, p) : p;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1 : static_cast<unsigned long>(n);
  ECPoint acc;
  while (k > 0) {
    if (k & 1) acc = add_unchecked(e, acc, base);
    k >>= 1;
    if (k) base = add_unchecked(e, base, base);
  }
  return acc;
}

// ---------------------------------------------------------------------------

bool is_good_prime(const EllipticCurve& e, long p) {
  if (p < 3 || !is_prime(BigInt(p))) return false;
  for (const Rational* c : {&e.a2(), &e.a4(), &e.a6()})
    if (mpz_divisible_ui_p(c->get_den_mpz_t(), static_cast<unsigned long>(p))) return false;
  return mod_rational(e.discriminant(), BigInt(p)) != 0;
}

long count_points_mod_p(const EllipticCurve& e, long p) {
  if (!is_good_prime(e, p))
    throw std::invalid_argument("count_points_mod_p: " + std::to_string(p) + " is not an odd prime of good reduction");
  BigInt P(p);
  BigInt a2 = mod_rational(e.a2(), P), a4 = mod_rational(e.a4(), P), a6 = mod_rational(e.a6(), P);
  long count = 1;
  for (long x = 0; x < p; ++x) {
    BigInt X(x);
    BigInt f = (((X + a2) * X + a4) * X + a6) % P;
    count += 1 + mpz_legendre(f.get_mpz_t(), P.get_mpz_t());
  }
  return count;
}

long torsion_bound(const EllipticCurve& e, int count) {
  long g = 0;
  int used = 0;
  for (long p = 3; used < count; p += 2) {
    if (!is_good_prime(e, p)) continue;
    g = std::gcd(g, count_points_mod_p(e, p));
    ++used;
  }
  return g;
}

int torsion_order(const EllipticCurve& e, const ECPoint& p) {
  ECPoint acc = p;
  for (int k = 1; k <= 12; ++k) {
    if (acc.is_infinity()) return k;
    acc = add_unchecked(e, acc, p);
  }
  return 0;
}

std::vector<ECPoint> torsion_subgroup(const EllipticCurve& e) {
  const long bound = torsion_bound(e);
  const BigInt u = e.integral_scale();
  const EllipticCurve ei = e.integral_model();
  const BigInt a2 = ei.a2().get_num(), a4 = ei.a4().get_num(), a6 = ei.a6().get_num();
  // Discriminant of the cubic; 16 * D is the curve discriminant.
  const BigInt D = -4 * a2 * a2 * a2 * a6 + a2 * a2 * a4 * a4 + 18 * a2 * a4 * a6 - 4 * a4 * a4 * a4 - 27 * a6 * a6;

  std::vector<BigInt> ys{BigInt(0)};
  {
    std::vector<BigInt> roots{1};
    for (auto& [p, ex] : factorize(D)) {
      std::size_t base = roots.size();
      BigInt pk = 1;
      for (unsigned k = 1; 2 * k <= ex; ++k) {
        pk *= p;
        for (std::size_t i = 0; i < base; ++i) roots.push_back(roots[i] * pk);
      }
    }
    for (auto& y : roots) {
      ys.push_back(y);
      ys.push_back(-y);
    }
  }

  const Rational u2(u * u), u3(u * u * u);
  std::vector<ECPoint> out{ECPoint::infinity()};
  for (const auto& y : ys) {
    IntPoly f{a6 - y * y, a4, a2, 1};
    for (const auto& xr : rational_roots(f)) {
      if (xr.get_den() != 1) continue;
      ECPoint cand(xr / u2, Rational(y) / u3);
      int ord = torsion_order(e, cand);
      if (ord > 0 && bound % ord == 0) out.push_back(cand);
    }
  }
  std::sort(out.begin() + 1, out.end(), [](const ECPoint& a, const ECPoint& b) {
    if (a.x() != b.x()) return a.x() < b.x();
    return a.y() < b.y();
  });
  return out;
}

double naive_height(const ECPoint& p) {
  if (p.is_infinity()) return 0.0;
  return log_height(p.x());
}

}  // namespace demj
