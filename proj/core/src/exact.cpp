#include "demj/exact.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace demj {

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

BigInt parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty integer");
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("malformed integer: " + s);
  for (std::size_t j = i; j < s.size(); ++j)
    if (s[j] < '0' || s[j] > '9') throw std::invalid_argument("malformed integer: " + s);
  if (s[0] == '+') s.erase(0, 1);
  return BigInt(s, 10);
}

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  BigInt num = parse_integer(text.substr(0, slash));
  BigInt den = parse_integer(text.substr(slash + 1));
  return make_rational(num, den);
}

std::string to_string(const BigInt& n) { return n.get_str(10); }
std::string to_string(const Rational& q) { return q.get_str(10); }
std::string to_string(const RationalPoint& p) {
  return "(" + to_string(p.x) + ", " + to_string(p.y) + ")";
}

bool is_canonical(const Rational& q) {
  if (q.get_den() <= 0) return false;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return g == 1;
}

// ---------------------------------------------------------------------------

namespace {

const long kSmallPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool miller_rabin_round(const BigInt& n, const BigInt& d, unsigned s, const BigInt& base) {
  BigInt x;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n - 1) return true;
  }
  return false;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

// Brent's variant of Pollard rho. n composite, odd, not a perfect power of a
// small prime. Returns a nontrivial factor.
BigInt pollard_rho(const BigInt& n) {
  for (unsigned long c = 1;; ++c) {
    BigInt y = 2, x, g = 1, q = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 128;
    auto f = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = (q * abs(x - y)) % n;
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  BigInt root;
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    std::map<BigInt, unsigned> half;
    factor_into(root, half);
    for (auto& [p, e] : half) out[p] += 2 * e;
    return;
  }
  BigInt d = pollard_rho(n);
  factor_into(d, out);
  factor_into(BigInt(n / d), out);
}

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  for (long p : kSmallPrimes) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  BigInt d = n - 1;
  unsigned s = 0;
  while (mpz_even_p(d.get_mpz_t())) {
    d /= 2;
    ++s;
  }
  // First 13 prime bases are deterministic for n < 3317044064679887385961981.
  static const BigInt kDeterministicLimit("3317044064679887385961981", 10);
  if (n < kDeterministicLimit) {
    for (long p : kSmallPrimes)
      if (!miller_rabin_round(n, d, s, BigInt(p))) return false;
    return true;
  }
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

BigInt next_prime(const BigInt& n) {
  BigInt c = n + 1;
  if (c <= 2) return 2;
  if (mpz_even_p(c.get_mpz_t())) ++c;
  while (!is_prime(c)) c += 2;
  return c;
}

std::vector<long> primes_in_range(long lo, long hi) {
  std::vector<long> out;
  if (hi < 2 || hi < lo) return out;
  lo = std::max(lo, 2L);
  std::vector<bool> composite(static_cast<std::size_t>(hi + 1), false);
  for (long i = 2; i * i <= hi; ++i)
    if (!composite[i])
      for (long j = i * i; j <= hi; j += i) composite[j] = true;
  for (long i = lo; i <= hi; ++i)
    if (!composite[i]) out.push_back(i);
  return out;
}

std::map<BigInt, unsigned> factorize(const BigInt& n) {
  if (n == 0) throw std::invalid_argument("factorize: zero");
  std::map<BigInt, unsigned> out;
  BigInt m = abs(n);
  for (unsigned long p = 2; p < 10000 && p * p <= m; p += (p == 2 ? 1 : 2)) {
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      ++out[BigInt(p)];
      m /= p;
    }
  }
  factor_into(m, out);
  return out;
}

std::vector<BigInt> divisors(const BigInt& n) {
  std::vector<BigInt> ds{1};
  for (auto& [p, e] : factorize(n)) {
    std::size_t base = ds.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

bool is_squarefree(const BigInt& n) {
  if (n == 0) throw std::invalid_argument("is_squarefree: zero");
  for (auto& [p, e] : factorize(n))
    if (e > 1) return false;
  return true;
}

// ---------------------------------------------------------------------------

int legendre_symbol(const BigInt& a, const BigInt& p) {
  if (p < 3 || mpz_even_p(p.get_mpz_t()) || !is_prime(p))
    throw std::invalid_argument("legendre_symbol: modulus must be an odd prime, got " + to_string(p));
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

long p_valuation(const BigInt& n, const BigInt& p) {
  if (n == 0) throw std::invalid_argument("p_valuation of zero integer");
  BigInt rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

std::optional<long> p_valuation(const Rational& q, const BigInt& p) {
  if (p < 2) throw std::invalid_argument("p_valuation: p must be prime");
  if (q == 0) return std::nullopt;
  return p_valuation(q.get_num(), p) - p_valuation(q.get_den(), p);
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (q < 0) return std::nullopt;
  if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t()))
    return std::nullopt;
  BigInt n, d;
  mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
  return make_rational(n, d);
}

BigInt mod_rational(const Rational& q, const BigInt& m) {
  BigInt inv;
  if (!mpz_invert(inv.get_mpz_t(), q.get_den_mpz_t(), m.get_mpz_t()))
    throw std::domain_error("mod_rational: denominator not invertible");
  BigInt r = (BigInt(q.get_num()) * inv) % m;
  if (r < 0) r += m;
  return r;
}

std::optional<BigInt> sqrt_mod_prime(const BigInt& a_in, const BigInt& p) {
  BigInt a = a_in % p;
  if (a < 0) a += p;
  if (a == 0) return BigInt(0);
  if (p == 2) return a;
  if (mpz_legendre(a.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;
  BigInt q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q /= 2;
    ++s;
  }
  BigInt z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
  BigInt c, x, t, e;
  mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  e = (q + 1) / 2;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  unsigned long m = s;
  while (t != 1) {
    unsigned long i = 0;
    BigInt tt = t;
    while (tt != 1) {
      tt = (tt * tt) % p;
      ++i;
    }
    BigInt b = c;
    for (unsigned long j = 0; j + 1 < m - i; ++j) b = (b * b) % p;
    x = (x * b) % p;
    c = (b * b) % p;
    t = (t * c) % p;
    m = i;
  }
  return x;
}

// ---------------------------------------------------------------------------

double log_abs(const BigInt& n) {
  if (n == 0) throw std::invalid_argument("log_abs of zero");
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

BigInt height(const Rational& q) {
  BigInt n = abs(q.get_num());
  return n > q.get_den() ? n : BigInt(q.get_den());
}

double log_height(const Rational& q) { return log_abs(height(q)); }

}  // namespace demj
