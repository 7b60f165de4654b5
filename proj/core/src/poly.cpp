#include "demj/poly.hpp"

#include <random>
#include <stdexcept>

namespace demj {

std::string to_string(const IntPoly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (long i = f.degree(); i >= 0; --i) {
    BigInt c = f.coeff(static_cast<std::size_t>(i));
    if (c == 0) continue;
    bool neg = c < 0;
    BigInt a = abs(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (a != 1 || i == 0) out += to_string(a);
    if (i >= 1) out += "x";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

RatPoly to_rational(const IntPoly& f) {
  std::vector<Rational> c;
  c.reserve(f.coeffs().size());
  for (const auto& v : f.coeffs()) c.emplace_back(v);
  return RatPoly(std::move(c));
}

IntPoly primitive_part(const RatPoly& f) {
  if (f.is_zero()) return {};
  BigInt l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> ints;
  BigInt g = 0;
  for (const auto& c : f.coeffs()) {
    Rational s = c * l;
    ints.push_back(s.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  if (ints.back() < 0) g = -g;
  for (auto& v : ints) v /= g;
  return IntPoly(std::move(ints));
}

RatDivMod divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r(a.coeffs());
  long db = b.degree();
  if (a.degree() < db) return {RatPoly{}, a};
  std::vector<Rational> q(static_cast<std::size_t>(a.degree() - db + 1), Rational(0));
  Rational lb = b.leading();
  for (long i = a.degree(); i >= db; --i) {
    Rational t = r[static_cast<std::size_t>(i)] / lb;
    q[static_cast<std::size_t>(i - db)] = t;
    if (t == 0) continue;
    for (long j = 0; j <= db; ++j) r[static_cast<std::size_t>(i - db + j)] -= t * b.coeff(static_cast<std::size_t>(j));
  }
  return {RatPoly(std::move(q)), RatPoly(std::move(r))};
}

RatPoly gcd(const RatPoly& a_in, const RatPoly& b_in) {
  RatPoly a = a_in, b = b_in;
  while (!b.is_zero()) {
    RatPoly r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  Rational l = a.leading();
  std::vector<Rational> c(a.coeffs());
  for (auto& v : c) v /= l;
  return RatPoly(std::move(c));
}

Rational resultant(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  long da = a.degree(), db = b.degree();
  if (db == 0) {
    Rational r = 1;
    for (long i = 0; i < da; ++i) r *= b.leading();
    return r;
  }
  if (da < db) {
    Rational r = resultant(b, a);
    return ((da * db) % 2 == 0) ? r : Rational(-r);
  }
  RatPoly rem = divmod(a, b).remainder;
  if (rem.is_zero()) return 0;
  long dr = rem.degree();
  Rational factor = 1;
  for (long i = 0; i < da - dr; ++i) factor *= b.leading();
  if ((da * db) % 2 != 0) factor = -factor;
  return factor * resultant(b, rem);
}

std::set<Rational> rational_roots(const IntPoly& f_in) {
  if (f_in.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  std::set<Rational> roots;
  std::vector<BigInt> c(f_in.coeffs());
  std::size_t shift = 0;
  while (shift < c.size() && c[shift] == 0) ++shift;
  if (shift > 0) {
    roots.insert(Rational(0));
    c.erase(c.begin(), c.begin() + static_cast<long>(shift));
  }
  IntPoly f(std::move(c));
  if (f.degree() <= 0) return roots;
  auto num_cands = divisors(f.coeff(0));
  auto den_cands = divisors(f.leading());
  for (const auto& q : den_cands) {
    for (const auto& p : num_cands) {
      BigInt g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      if (g != 1) continue;
      for (int sign : {1, -1}) {
        Rational r = make_rational(BigInt(p * sign), q);
        if (f.eval(r) == 0) roots.insert(r);
      }
    }
  }
  return roots;
}

std::set<Rational> rational_roots(const RatPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  return rational_roots(primitive_part(f));
}

BigInt eval_mod(const IntPoly& f, const BigInt& x, const BigInt& m) {
  BigInt acc = 0;
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * x + *it) % m;
  if (acc < 0) acc += m;
  return acc;
}

// ---------------------------------------------------------------------------
// Polynomials over F_p, used only for root finding at large p.

namespace {

using ModPoly = std::vector<BigInt>;  // low degree first, trimmed

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly reduce(const IntPoly& f, const BigInt& p) {
  ModPoly r;
  for (const auto& c : f.coeffs()) {
    BigInt v = c % p;
    if (v < 0) v += p;
    r.push_back(v);
  }
  trim(r);
  return r;
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, const BigInt& p) {
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), b.back().get_mpz_t(), p.get_mpz_t());
  while (a.size() >= b.size() && !a.empty()) {
    BigInt t = (a.back() * inv) % p;
    std::size_t off = a.size() - b.size();
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[off + j] = (a[off + j] - t * b[j]) % p;
      if (a[off + j] < 0) a[off + j] += p;
    }
    trim(a);
  }
  return a;
}

ModPoly mod_mul(const ModPoly& a, const ModPoly& b, const ModPoly& m, const BigInt& p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  for (auto& v : r) v %= p;
  trim(r);
  return mod_rem(std::move(r), m, p);
}

ModPoly mod_pow(ModPoly base, BigInt e, const ModPoly& m, const BigInt& p) {
  ModPoly result{BigInt(1)};
  result = mod_rem(result, m, p);
  base = mod_rem(base, m, p);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) result = mod_mul(result, base, m, p);
    base = mod_mul(base, base, m, p);
    e /= 2;
  }
  return result;
}

ModPoly mod_gcd(ModPoly a, ModPoly b, const BigInt& p) {
  while (!b.empty()) {
    ModPoly r = mod_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    BigInt inv;
    mpz_invert(inv.get_mpz_t(), a.back().get_mpz_t(), p.get_mpz_t());
    for (auto& v : a) v = (v * inv) % p;
  }
  return a;
}

ModPoly mod_sub(ModPoly a, const ModPoly& b, const BigInt& p) {
  if (a.size() < b.size()) a.resize(b.size(), BigInt(0));
  for (std::size_t i = 0; i < b.size(); ++i) {
    a[i] = (a[i] - b[i]) % p;
    if (a[i] < 0) a[i] += p;
  }
  trim(a);
  return a;
}

ModPoly mod_quot(ModPoly a, const ModPoly& b, const BigInt& p) {
  BigInt inv;
  mpz_invert(inv.get_mpz_t(), b.back().get_mpz_t(), p.get_mpz_t());
  ModPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, BigInt(0));
  while (a.size() >= b.size() && !a.empty()) {
    BigInt t = (a.back() * inv) % p;
    std::size_t off = a.size() - b.size();
    q[off] = t;
    for (std::size_t j = 0; j < b.size(); ++j) {
      a[off + j] = (a[off + j] - t * b[j]) % p;
      if (a[off + j] < 0) a[off + j] += p;
    }
    a.pop_back();
    trim(a);
  }
  trim(q);
  return q;
}

// g is monic, squarefree, and splits into distinct linear factors over F_p.
void split_linear(const ModPoly& g, const BigInt& p, std::mt19937_64& rng, std::set<BigInt>& out) {
  if (g.size() <= 1) return;
  if (g.size() == 2) {
    BigInt r = (-g[0]) % p;
    if (r < 0) r += p;
    out.insert(r);
    return;
  }
  BigInt half = (p - 1) / 2;
  for (;;) {
    BigInt a(static_cast<unsigned long>(rng()));
    a %= p;
    ModPoly shifted{a, BigInt(1)};
    ModPoly h = mod_pow(shifted, half, g, p);
    h = mod_sub(h, ModPoly{BigInt(1)}, p);
    ModPoly d = mod_gcd(g, h, p);
    if (d.size() > 1 && d.size() < g.size()) {
      split_linear(d, p, rng, out);
      split_linear(mod_quot(g, d, p), p, rng, out);
      return;
    }
  }
}

}  // namespace

std::set<BigInt> roots_mod_p(const IntPoly& f, const BigInt& p) {
  if (!is_prime(p)) throw std::invalid_argument("roots_mod_p: modulus is not prime");
  ModPoly fm = reduce(f, p);
  if (fm.empty()) throw std::invalid_argument("roots_mod_p: polynomial vanishes identically mod p");
  std::set<BigInt> roots;
  if (p < 10000) {
    for (BigInt r = 0; r < p; ++r)
      if (eval_mod(f, r, p) == 0) roots.insert(r);
    return roots;
  }
  if (fm.size() == 1) return roots;
  // Distinct linear factors: gcd(f, x^p - x).
  ModPoly xp = mod_pow(ModPoly{BigInt(0), BigInt(1)}, p, fm, p);
  ModPoly g = mod_gcd(fm, mod_sub(xp, ModPoly{BigInt(0), BigInt(1)}, p), p);
  std::mt19937_64 rng(0x5eed);
  split_linear(g, p, rng, roots);
  return roots;
}

}  // namespace demj
