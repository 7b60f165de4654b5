#include "demj/quartic.hpp"

#include "demj/poly.hpp"

#include <cmath>
#include <stdexcept>

namespace demj {

Rational quartic_discriminant(const Rational& a, const Rational& b) {
  return b * (a * a + 2 * b) * (a * a + 4 * b);
}

SymQuartic::SymQuartic(Rational a, Rational b, BigInt alpha)
    : a_(std::move(a)), b_(std::move(b)), alpha_(std::move(alpha)) {
  if (alpha_ == 0 || !is_squarefree(alpha_))
    throw std::invalid_argument("twist parameter must be a nonzero squarefree integer, got " + to_string(alpha_));
  if (discriminant() == 0) throw std::invalid_argument("degenerate quartic: " + to_string(*this));
}

Rational SymQuartic::discriminant() const { return quartic_discriminant(twisted_a(), twisted_b()); }

Rational SymQuartic::equation(const Rational& x, const Rational& y) const {
  Rational x2 = x * x, y2 = y * y;
  Rational a = twisted_a();
  return x2 * x2 + a * x2 + a * y2 + y2 * y2 - twisted_b();
}

std::string to_string(const SymQuartic& f) {
  std::string s = "F(a=" + to_string(f.a()) + ", b=" + to_string(f.b());
  if (f.alpha() != 1) s += ", alpha=" + to_string(f.alpha());
  return s + ")";
}

EllipticCurve companion_curve(const SymQuartic& f) {
  Rational a = f.twisted_a(), b = f.twisted_b();
  return EllipticCurve(-4 * a, -(16 * b + 4 * a * a), 0);
}

ECPoint phi(int i, const RationalPoint& p, const SymQuartic& f) {
  if (i != 1 && i != 2) throw std::invalid_argument("phi: index must be 1 or 2");
  if (!f.contains(p)) throw std::invalid_argument("phi: point " + to_string(p) + " is not on " + to_string(f));
  const RationalPoint q = i == 1 ? p : p.swapped();
  return ECPoint(-4 * q.x * q.x, q.x * (8 * q.y * q.y + 4 * f.twisted_a()));
}

std::set<RationalPoint> phi_preimages(int i, const ECPoint& q, const SymQuartic& f) {
  if (i != 1 && i != 2) throw std::invalid_argument("phi_preimages: index must be 1 or 2");
  if (q.is_infinity()) throw std::invalid_argument("phi_preimages: point at infinity has no affine preimage");
  if (!companion_curve(f).contains(q)) throw std::invalid_argument("phi_preimages: point not on companion curve");

  std::set<RationalPoint> out;
  const Rational a = f.twisted_a();
  auto emit = [&](RationalPoint p) {
    if (!f.contains(p)) return;
    out.insert(i == 1 ? p : p.swapped());
  };

  auto r = rational_sqrt(-q.x() / 4);
  if (!r) return out;
  if (*r == 0) {
    // phi1(0, y) = (0, 0) for every y; y^2 is a rational root of t^2 + a t - b.
    if (q.y() != 0) return out;
    for (const auto& t : rational_roots(RatPoly{-f.twisted_b(), a, Rational(1)})) {
      if (auto y = rational_sqrt(t)) {
        emit({0, *y});
        emit({0, -*y});
      }
    }
    return out;
  }
  for (const Rational& x : {*r, Rational(-*r)}) {
    auto y = rational_sqrt((q.y() / x - 4 * a) / 8);
    if (!y) continue;
    emit({x, *y});
    emit({x, -*y});
  }
  return out;
}

Rational kappa(const Rational& a, const Rational& b) {
  const Rational quarter(1, 4);
  const Rational terms[4] = {quarter, a / 4, a, b};
  Rational arch = quarter;
  for (const auto& t : terms) arch = std::max(arch, Rational(abs(t)));

  std::set<BigInt> primes{2};
  for (const Rational* q : {&a, &b}) {
    if (*q == 0) continue;
    for (const BigInt* n : {&q->get_num(), &q->get_den()})
      for (auto& [p, ex] : factorize(*n)) primes.insert(p);
  }

  Rational result = arch;
  for (const auto& p : primes) {
    // max |t|_p = p^(-min v_p(t)) over the nonzero terms.
    long vmin = 0;
    bool first = true;
    for (const auto& t : terms) {
      auto v = p_valuation(t, p);
      if (!v) continue;
      if (first || *v < vmin) vmin = *v;
      first = false;
    }
    BigInt pk;
    mpz_pow_ui(pk.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(std::labs(vmin)));
    result *= vmin <= 0 ? Rational(pk) : Rational(1) / Rational(pk);
  }
  result.canonicalize();
  return result;
}

BigInt projective_height(const RationalPoint& p) {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), p.x.get_den_mpz_t(), p.y.get_den_mpz_t());
  BigInt X = p.x.get_num() * (l / p.x.get_den());
  BigInt Y = p.y.get_num() * (l / p.y.get_den());
  BigInt h = l;
  if (abs(X) > h) h = abs(X);
  if (abs(Y) > h) h = abs(Y);
  return h;
}

bool height_sandwich_check(const RationalPoint& p, const SymQuartic& f) {
  const BigInt hf = projective_height(p);
  const Rational hf2(hf * hf);
  const Rational k = kappa(f.twisted_a(), f.twisted_b());
  for (int i : {1, 2}) {
    ECPoint q = phi(i, p, f);
    if (q.is_infinity()) return false;
    const Rational he(height(q.x()));
    if (he > 24 * hf2) return false;
    if (hf2 > 12 * k * he) return false;
  }
  return true;
}

double phi_height_gap(const SymQuartic& f) {
  const Rational k = kappa(f.twisted_a(), f.twisted_b());
  return std::log(24.0) + std::log(12.0) + log_abs(k.get_num()) - log_abs(k.get_den());
}

std::optional<Rational> phi_sum_x_closed_form(const RationalPoint& p, const SymQuartic& f) {
  const Rational& x = p.x;
  const Rational& y = p.y;
  if (x + y == 0) return std::nullopt;
  const Rational a = f.twisted_a();
  Rational s = 2 * x + 2 * y;
  Rational num = 4 * x * x * y * y + s * s * (x * x + y * y) + 4 * a * (x * x + x * y + y * y) + a * a;
  Rational den = (x + y) * (x + y);
  return Rational(num / den);
}

DegreeEvidence phi_sum_degree_evidence(const SymQuartic& f) {
  const Rational a = f.twisted_a(), b = f.twisted_b();
  DegreeEvidence ev;
  ev.numerator_degree = 4;    // every monomial of the numerator has total degree 4
  ev.denominator_degree = 4;  // (x + y)^2 z^2

  // Common zeros of numerator, denominator and F split into z = 0 and x = -y.
  // z = 0: F gives x^4 + y^4 = 0 (so y != 0); with y = 1 compare against
  //   N(x, 1, 0) = 4x^2 + 4(x + 1)^2 (x^2 + 1).
  RatPoly at_infinity{1, 0, 0, 0, 1};
  RatPoly n_inf = RatPoly{0, 0, 4} + RatPoly{4, 8, 4} * RatPoly{1, 0, 1};
  bool clear_inf = gcd(at_infinity, n_inf).degree() == 0;
  // x = -y (so x != 0); with x = 1, F gives b z^4 - 2a z^2 - 2 = 0 and
  //   N(1, -1, z) = (a z^2 + 2)^2.
  RatPoly on_line{Rational(-2), Rational(0), Rational(-2 * a), Rational(0), b};
  RatPoly n_line = RatPoly{Rational(2), Rational(0), a} * RatPoly{Rational(2), Rational(0), a};
  bool clear_line = on_line.is_zero() ? false : gcd(on_line, n_line).degree() == 0;

  ev.base_point_free = clear_inf && clear_line;
  if (ev.base_point_free) {
    ev.x_map_degree = ev.curve_degree * ev.numerator_degree;
    ev.phi_sum_degree = ev.x_map_degree / 2;
  }
  ev.pairing_11 = ev.phi_degree;
  ev.pairing_12 = (ev.phi_sum_degree - 2 * ev.phi_degree) / 2;
  return ev;
}

// ---------------------------------------------------------------------------

namespace {

Rational power(const Rational& x, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

HigherSym::HigherSym(int m_, Rational a_, Rational b_) : m(m_), a(std::move(a_)), b(std::move(b_)) {
  if (m < 3 || m % 2 == 0) throw std::invalid_argument("HigherSym: m must be odd and >= 3, got " + std::to_string(m));
}

Rational HigherSym::c_equation(const Rational& x, const Rational& y) const {
  Rational xm = power(x, m), ym = power(y, m);
  return xm * xm + a * xm + a * ym + ym * ym - b;
}

Rational HigherSym::b_equation(const Rational& x, const Rational& y) const {
  Rational xm = power(x, m);
  return y * y - (-xm * xm - a * xm + (a * a / 4 + b));
}

bool higher_membership(const HigherSym& h, const Rational& x, const Rational& y) {
  if (h.c_equation(x, y) != 0) throw std::invalid_argument("higher_membership: point not on C");
  return h.b_equation(x, power(y, h.m) + h.a / 2) == 0 && h.b_equation(y, power(x, h.m) + h.a / 2) == 0;
}

InfinityReport infinity_points(const HigherSym& h) {
  std::vector<Rational> c(static_cast<std::size_t>(2 * h.m + 1), Rational(0));
  c.front() = 1;
  c.back() = 1;
  auto roots = rational_roots(RatPoly(c));
  InfinityReport r;
  r.has_rational_point = !roots.empty();
  r.description = r.has_rational_point
                      ? "rational points at infinity exist"
                      : "zeta^" + std::to_string(2 * h.m) + " + 1 = 0 has no rational root; no rational points at infinity";
  return r;
}

}  // namespace demj
