#include "demj/elliptic.hpp"

#include "demj/poly.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace demj {

namespace {

// Duplication map on the integral model, as binary quartic forms
//   phi(X, Z) = X^4 - b4 X^2 Z^2 - 2 b6 X Z^3 - b8 Z^4
//   psi(X, Z) = 4 X^3 Z + b2 X^2 Z^2 + 2 b4 X Z^3 + b6 Z^4
// Coefficients indexed by the power of X.
struct Duplication {
  std::array<BigInt, 5> phi;
  std::array<BigInt, 5> psi;
};

Duplication duplication(const EllipticCurve& ei) {
  BigInt b2 = ei.b2().get_num(), b4 = ei.b4().get_num(), b6 = ei.b6().get_num(), b8 = ei.b8().get_num();
  Duplication d;
  d.phi = {-b8, BigInt(-2 * b6), BigInt(-b4), BigInt(0), BigInt(1)};
  d.psi = {b6, BigInt(2 * b4), b2, BigInt(4), BigInt(0)};
  return d;
}

long double form_value_ld(const std::array<BigInt, 5>& c, long double X, long double Z) {
  long double acc = 0, xp = 1;
  for (int i = 0; i <= 4; ++i) {
    acc += static_cast<long double>(c[static_cast<std::size_t>(i)].get_d()) * xp * std::pow(Z, 4 - i);
    xp *= X;
  }
  return acc;
}

BigInt form_value_mod(const std::array<BigInt, 5>& c, const BigInt& X, const BigInt& Z, const BigInt& m) {
  BigInt acc = 0, xp = 1;
  for (int i = 0; i <= 4; ++i) {
    BigInt zp;
    mpz_powm_ui(zp.get_mpz_t(), Z.get_mpz_t(), static_cast<unsigned long>(4 - i), m.get_mpz_t());
    acc = (acc + c[static_cast<std::size_t>(i)] * xp * zp) % m;
    xp = (xp * X) % m;
  }
  if (acc < 0) acc += m;
  return acc;
}

// Homogeneous resultant of the duplication forms. phi is monic of degree 4 in
// X, so it equals the resultant of the dehomogenized polynomials.
BigInt duplication_resultant(const Duplication& d) {
  std::vector<Rational> f, g;
  for (auto& c : d.phi) f.emplace_back(c);
  for (auto& c : d.psi) g.emplace_back(c);
  Rational r = resultant(RatPoly(f), RatPoly(g));
  if (r == 0 || r.get_den() != 1) throw std::logic_error("duplication resultant must be a nonzero integer");
  return abs(r.get_num());
}

double sum_abs(const std::array<BigInt, 5>& c) {
  double s = 0;
  for (auto& v : c) s += std::fabs(v.get_d());
  return s;
}

// Chart polynomial in t: the form at (t, 1) or at (1, t).
std::array<long double, 5> chart(const std::array<BigInt, 5>& c, bool x_is_t) {
  std::array<long double, 5> r{};
  for (std::size_t i = 0; i <= 4; ++i) r[x_is_t ? i : 4 - i] = static_cast<long double>(c[i].get_d());
  return r;
}

// Lower bound for |f| on [m - r, m + r] from the exact Taylor expansion at m.
long double interval_floor(const std::array<long double, 5>& f, long double m, long double r, long double& at_mid) {
  std::array<long double, 5> t = f;  // Taylor shift to m
  for (int i = 0; i < 4; ++i)
    for (int j = 3; j >= i; --j) t[static_cast<std::size_t>(j)] += m * t[static_cast<std::size_t>(j + 1)];
  at_mid = std::fabs(t[0]);
  long double rem = 0, rk = 1;
  for (std::size_t k = 1; k <= 4; ++k) {
    rk *= r;
    rem += std::fabs(t[k]) * rk;
  }
  return at_mid - rem;
}

// Lower bound for max(|f|, |g|) on [lo, hi] by bisection until the bound is
// within 10% of the midpoint value.
long double certified_min(const std::array<long double, 5>& f, const std::array<long double, 5>& g, long double lo,
                          long double hi, int depth) {
  long double m = (lo + hi) / 2, r = (hi - lo) / 2, fm, gm;
  long double lb = std::max(interval_floor(f, m, r, fm), interval_floor(g, m, r, gm));
  long double mid = std::max(fm, gm);
  if (lb >= 0.9L * mid) return lb;
  if (depth >= 60) {
    if (lb > 0) return lb;
    throw std::runtime_error("archimedean_floor: could not certify a positive lower bound");
  }
  return std::min(certified_min(f, g, lo, m, depth + 1), certified_min(f, g, m, hi, depth + 1));
}

// Lower bound for log max(|phi|, |psi|) over real (X, Z) with max(|X|, |Z|) = 1.
double archimedean_floor(const Duplication& d) {
  long double best = std::numeric_limits<long double>::infinity();
  for (bool x_is_t : {true, false})
    best = std::min(best, certified_min(chart(d.phi, x_is_t), chart(d.psi, x_is_t), -1.0L, 1.0L, 0));
  return static_cast<double>(std::log(best));
}

struct LocalTerms {
  BigInt u;                      // integral_scale of the original model
  EllipticCurve integral;        // integral model
  Duplication dup;
  BigInt res;                    // resultant of the duplication forms
  std::map<BigInt, unsigned> bad;  // primes dividing res with exponents
  double upper;                  // sup of the per-step term
  double lower;                  // inf of the per-step term
};

LocalTerms local_terms(const EllipticCurve& e) {
  EllipticCurve ei = e.integral_model();
  Duplication dup = duplication(ei);
  BigInt res = duplication_resultant(dup);
  auto bad = factorize(res);
  double upper = std::log(std::max(sum_abs(dup.phi), sum_abs(dup.psi)));
  double lower = archimedean_floor(dup);
  for (auto& [p, ex] : bad) lower -= static_cast<double>(ex) * log_abs(p);
  return {e.integral_scale(), ei, dup, res, bad, upper, lower};
}

}  // namespace

HeightGap height_gap(const EllipticCurve& e) {
  LocalTerms lt = local_terms(e);
  // hhat - h = sum_{n>=0} 4^-(n+1) T_n with lower <= T_n <= upper.
  double model_shift = 2.0 * (lt.u == 1 ? 0.0 : log_abs(lt.u));
  HeightGap g;
  g.hhat_minus_h = std::max(0.0, lt.upper / 3.0) + model_shift;
  g.h_minus_hhat = std::max(0.0, -lt.lower / 3.0) + model_shift;
  return g;
}

double canonical_height(const EllipticCurve& e, const ECPoint& p, double tol) {
  if (!(tol > 0)) throw std::invalid_argument("canonical_height: tol must be positive");
  if (!e.contains(p)) throw std::invalid_argument("canonical_height: point not on curve");
  if (p.is_infinity()) return 0.0;

  LocalTerms lt = local_terms(e);
  const double bound = std::max(std::fabs(lt.upper), std::fabs(lt.lower));
  int steps = 3;
  while (bound * std::pow(4.0, -steps) / 3.0 > tol / 4.0) ++steps;

  const Rational x = p.x() * Rational(lt.u * lt.u);
  const BigInt X0 = x.get_num(), Z0 = x.get_den();
  long double total = static_cast<long double>(log_height(x));

  // Archimedean place.
  {
    long double X, Z;
    if (abs(X0) <= Z0) {
      X = static_cast<long double>(x.get_d());
      Z = 1.0L;
    } else {
      X = 1.0L;
      Z = static_cast<long double>(Rational(1 / x).get_d());
    }
    long double weight = 0.25L;
    for (int n = 0; n < steps; ++n, weight /= 4) {
      long double A = form_value_ld(lt.dup.phi, X, Z);
      long double B = form_value_ld(lt.dup.psi, X, Z);
      long double m = std::max(std::fabs(A), std::fabs(B));
      total += weight * std::log(m);
      X = A / m;
      Z = B / m;
    }
  }

  // Finite places dividing the resultant; coordinates tracked mod p^K.
  for (auto& [prime, ex] : lt.bad) {
    long precision = static_cast<long>(ex) * (steps + 2) + 2;
    BigInt mod;
    mpz_pow_ui(mod.get_mpz_t(), prime.get_mpz_t(), static_cast<unsigned long>(precision));
    BigInt X = X0 % mod, Z = Z0 % mod;
    if (X < 0) X += mod;
    const double logp = log_abs(prime);
    long double weight = 0.25L;
    for (int n = 0; n < steps; ++n, weight /= 4) {
      BigInt A = form_value_mod(lt.dup.phi, X, Z, mod);
      BigInt B = form_value_mod(lt.dup.psi, X, Z, mod);
      long va = A == 0 ? precision : p_valuation(A, prime);
      long vb = B == 0 ? precision : p_valuation(B, prime);
      long v = std::min(va, vb);
      if (v > static_cast<long>(ex) || v >= precision)
        throw std::logic_error("canonical_height: local valuation exceeds resultant bound");
      total -= weight * static_cast<long double>(v) * logp;
      BigInt pv;
      mpz_pow_ui(pv.get_mpz_t(), prime.get_mpz_t(), static_cast<unsigned long>(v));
      precision -= v;
      mpz_pow_ui(mod.get_mpz_t(), prime.get_mpz_t(), static_cast<unsigned long>(precision));
      X = (A / pv) % mod;
      Z = (B / pv) % mod;
    }
  }
  return static_cast<double>(total);
}

}  // namespace demj
