#include "demj/localglobal.hpp"

#include "demj/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace demj {

std::string to_string(Solvability s) {
  switch (s) {
    case Solvability::Solvable: return "solvable";
    case Solvability::NotSolvable: return "not-solvable";
    case Solvability::Undetermined: return "undetermined";
  }
  return "?";
}

std::string to_string(LocalMethod m) {
  switch (m) {
    case LocalMethod::Real: return "real";
    case LocalMethod::HenselFromFq: return "hensel-from-Fq";
    case LocalMethod::WeilBound: return "weil-bound";
    case LocalMethod::ConstructiveSquare: return "constructive-square";
    case LocalMethod::ConstructiveRootOfUnity: return "constructive-root-of-unity";
    case LocalMethod::HenselSearch: return "hensel-search";
  }
  return "?";
}

bool is_good_place(const SymQuartic& f, long q) {
  if (q <= 3 || !is_prime(BigInt(q))) return false;
  const BigInt Q(q);
  if (mpz_divisible_p(f.alpha().get_mpz_t(), Q.get_mpz_t())) return false;
  for (const Rational* c : {&f.a(), &f.b()})
    if (mpz_divisible_p(c->get_den_mpz_t(), Q.get_mpz_t())) return false;
  return mod_rational(f.discriminant(), Q) != 0;
}

FqCount count_smooth_points_quartic_Fq(const SymQuartic& f, long q) {
  if (!is_good_place(f, q)) throw std::invalid_argument("count_smooth_points_quartic_Fq: bad place " + std::to_string(q));
  const long a = mod_rational(f.twisted_a(), BigInt(q)).get_si();
  const long b = mod_rational(f.twisted_b(), BigInt(q)).get_si();
  using i128 = __int128;
  auto md = [q](i128 v) { return static_cast<long>(((v % q) + q) % q); };
  auto pw = [&](long x, int e) {
    i128 r = 1;
    for (int i = 0; i < e; ++i) r = (r * x) % q;
    return static_cast<long>(r);
  };
  auto value = [&](long x, long y, long z) {
    long z2 = pw(z, 2);
    return md(i128(pw(x, 4)) + i128(a) * pw(x, 2) % q * z2 + i128(a) * pw(y, 2) % q * z2 + pw(y, 4) - i128(b) * pw(z, 4) % q);
  };
  auto smooth = [&](long x, long y, long z) {
    long z2 = pw(z, 2);
    long dx = md(4 * i128(pw(x, 3)) + 2 * i128(a) * x % q * z2);
    long dy = md(4 * i128(pw(y, 3)) + 2 * i128(a) * y % q * z2);
    long dz = md(2 * i128(a) * z % q * ((pw(x, 2) + pw(y, 2)) % q) - 4 * i128(b) * pw(z, 3));
    return dx != 0 || dy != 0 || dz != 0;
  };

  FqCount out;
  auto visit = [&](long x, long y, long z) {
    if (value(x, y, z) != 0) return;
    ++out.count;
    if (!out.smooth_witness && smooth(x, y, z)) out.smooth_witness = std::array<long, 3>{x, y, z};
  };
  for (long x = 0; x < q; ++x)
    for (long y = 0; y < q; ++y) visit(x, y, 1);
  for (long x = 0; x < q; ++x) visit(x, 1, 0);
  visit(1, 0, 0);
  return out;
}

bool within_weil_bound(long count, long q) {
  __int128 dev = static_cast<__int128>(count) - q - 1;
  return dev * dev <= static_cast<__int128>(36) * q;
}

bool real_solvable(const SymQuartic& f) {
  const Rational a = f.twisted_a(), b = f.twisted_b();
  const Rational minimum = a < 0 ? Rational(-a * a / 2) : Rational(0);
  return b >= minimum;
}

namespace {

BigInt pow_ui(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

LocalReport square_root_report(long p, long ell, unsigned k) {
  const BigInt m = pow_ui(BigInt(ell), k);
  const BigInt target = BigInt(p) % m;
  for (BigInt t = 1; t < m; ++t) {
    if ((t * t - target) % m != 0) continue;
    // (theta, theta) on F_(-4p, -6p^2): 2 theta^4 - 8 p theta^2 + 6 p^2 = 0 when theta^2 = p.
    BigInt F = (2 * t * t * t * t - 8 * p * t * t + 6 * BigInt(p) * p) % m;
    if (F != 0) throw std::logic_error("diagonal witness fails to satisfy the quartic");
    LocalReport r;
    r.place = ell;
    r.status = Solvability::Solvable;
    r.method = LocalMethod::ConstructiveSquare;
    r.witness = "(theta, theta), theta = " + to_string(t) + " mod " + std::to_string(ell) + "^" + std::to_string(k) +
                ", theta^2 = p";
    return r;
  }
  throw std::logic_error("p has no square root modulo " + to_string(m));
}

}  // namespace

std::vector<LocalReport> special_place_checks(long p) {
  if (p < 2 || !is_prime(BigInt(p)) || p % 24 != 1)
    throw std::invalid_argument("special_place_checks: requires a prime p = 1 mod 24, got " + std::to_string(p));
  std::vector<LocalReport> out;
  out.push_back(square_root_report(p, 2, 8));
  out.push_back(square_root_report(p, 3, 5));

  const BigInt P(p), P2 = P * P;
  auto roots = roots_mod_p(IntPoly{1, 0, 0, 0, 1}, P);
  if (roots.empty()) throw std::logic_error("x^4 + 1 has no root mod p although p = 1 mod 8");
  BigInt z = *roots.begin();
  // One Newton step lifts a simple root from p to p^2.
  BigInt fz = (z * z * z * z + 1) % P2, dz = (4 * z * z * z) % P2, inv;
  mpz_invert(inv.get_mpz_t(), dz.get_mpz_t(), P2.get_mpz_t());
  z = ((z - fz * inv) % P2 + P2) % P2;
  if ((z * z * z * z + 1) % P2 != 0) throw std::logic_error("Hensel lift of zeta failed");
  LocalReport r;
  r.place = p;
  r.status = Solvability::Solvable;
  r.method = LocalMethod::ConstructiveRootOfUnity;
  r.witness = "[zeta : 1 : 0], zeta = " + to_string(z) + " mod p^2, zeta^4 = -1";
  out.push_back(r);
  return out;
}

LocalReport hensel_search(const SymQuartic& f, long ell, int max_k, long budget) {
  if (ell < 2 || !is_prime(BigInt(ell))) throw std::invalid_argument("hensel_search: place must be prime");
  // Integral model D x^4 + A x^2 z^2 + A y^2 z^2 + D y^4 - B z^4.
  BigInt D;
  mpz_lcm(D.get_mpz_t(), f.twisted_a().get_den_mpz_t(), f.twisted_b().get_den_mpz_t());
  const Rational As = f.twisted_a() * Rational(D), Bs = f.twisted_b() * Rational(D);
  const BigInt A = As.get_num(), B = Bs.get_num();

  LocalReport r;
  r.place = ell;
  r.method = LocalMethod::HenselSearch;
  r.status = Solvability::Undetermined;
  long spent = 0;
  using i128 = __int128;
  for (int k = 1; k <= max_k; ++k) {
    BigInt mk = pow_ui(BigInt(ell), static_cast<unsigned long>(k));
    BigInt M = mk * mk;
    if (!M.fits_slong_p() || M.get_si() > (1L << 62) / 4) break;
    const long lk = mk.get_si(), m = M.get_si();
    const long d = mod_rational(D, M).get_si(), a = mod_rational(A, M).get_si(), b = mod_rational(B, M).get_si();
    auto red = [m](i128 v) { return static_cast<long>(((v % m) + m) % m); };
    auto mul = [&red](long u, long v) { return red(i128(u) * v); };
    auto val = [&](long v) {
      long e = 0;
      while (v != 0 && v % ell == 0 && e < 2 * k) v /= ell, ++e;
      return v == 0 ? 2L * k : e;
    };
    bool any_zero = false;
    // Charts z = 1, y = 1, x = 1 cover every primitive projective point.
    for (int chart = 0; chart < 3; ++chart) {
      for (long s = 0; s < lk; ++s) {
        for (long t = 0; t < lk; ++t) {
          if (++spent > budget) return r;
          long x = chart == 2 ? 1 : s;
          long y = chart == 0 ? t : (chart == 1 ? 1 : s);
          long z = chart == 0 ? 1 : t;
          const long x2 = mul(x, x), y2 = mul(y, y), z2 = mul(z, z);
          const long G = red(i128(mul(d, mul(x2, x2))) + mul(a, mul(x2, z2)) + mul(a, mul(y2, z2)) +
                             mul(d, mul(y2, y2)) - mul(b, mul(z2, z2)));
          if (G % lk == 0) any_zero = true;
          const long gx = red(4 * i128(mul(d, mul(x2, x))) + 2 * i128(mul(a, mul(x, z2))));
          const long gy = red(4 * i128(mul(d, mul(y2, y))) + 2 * i128(mul(a, mul(y, z2))));
          const long gz = red(2 * i128(mul(a, mul(z, red(i128(x2) + y2)))) - 4 * i128(mul(b, mul(z2, z))));
          long vg = std::min({val(gx), val(gy), val(gz)});
          if (vg >= k) continue;
          if (val(G) > 2 * vg) {
            r.status = Solvability::Solvable;
            r.witness = "[" + std::to_string(x) + " : " + std::to_string(y) + " : " + std::to_string(z) + "] mod " +
                        std::to_string(ell) + "^" + std::to_string(2 * k) + ", v(F) > 2 v(grad F)";
            return r;
          }
        }
      }
    }
    if (!any_zero) {
      r.status = Solvability::NotSolvable;
      r.witness = "no primitive solution mod " + std::to_string(ell) + "^" + std::to_string(k);
      return r;
    }
  }
  return r;
}

LocalSolvability everywhere_locally_solvable(long p) {
  if (p < 3 || !is_prime(BigInt(p))) throw std::invalid_argument("everywhere_locally_solvable: p must be an odd prime");
  const SymQuartic f(-4, -6, p);
  LocalSolvability out;

  LocalReport real;
  real.place = 0;
  real.method = LocalMethod::Real;
  real.status = real_solvable(f) ? Solvability::Solvable : Solvability::NotSolvable;
  real.witness = "b' >= min of the quartic form";
  out.reports.push_back(real);

  if (p % 24 == 1) {
    for (auto& r : special_place_checks(p)) out.reports.push_back(r);
  } else {
    for (long ell : {2L, 3L}) out.reports.push_back(hensel_search(f, ell));
    if (p > 3) out.reports.push_back(hensel_search(f, p));
  }

  for (long q : primes_in_range(5, 36)) {
    if (!is_good_place(f, q)) continue;
    FqCount c = count_smooth_points_quartic_Fq(f, q);
    if (!within_weil_bound(c.count, q)) throw std::logic_error("point count violates the Weil bound at q=" + std::to_string(q));
    LocalReport r;
    r.place = q;
    r.count = c.count;
    r.method = LocalMethod::HenselFromFq;
    if (c.smooth_witness) {
      auto& w = *c.smooth_witness;
      r.status = Solvability::Solvable;
      r.witness = "[" + std::to_string(w[0]) + " : " + std::to_string(w[1]) + " : " + std::to_string(w[2]) + "] smooth mod q";
    } else {
      r.status = c.count == 0 ? Solvability::NotSolvable : Solvability::Undetermined;
    }
    out.reports.push_back(r);
  }
  LocalReport weil;
  weil.place = 37;
  weil.method = LocalMethod::WeilBound;
  weil.status = Solvability::Solvable;
  weil.witness = "every good q >= 37: q + 1 - 6 sqrt(q) > 0 and smooth points lift";
  out.reports.push_back(weil);

  std::stable_sort(out.reports.begin(), out.reports.end(),
                   [](const LocalReport& x, const LocalReport& y) { return x.place < y.place; });
  out.solvable = true;
  for (auto& r : out.reports) {
    if (r.status != Solvability::Solvable) out.solvable = false;
    if (r.status == Solvability::Undetermined) out.undetermined = true;
  }
  return out;
}

}  // namespace demj
