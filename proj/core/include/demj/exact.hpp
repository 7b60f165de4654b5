#pragma once

// Number-theoretic substrate: big integers, exact rationals, primes,
// valuations and square roots. BigInt / Rational are GMP values; every
// Rational produced here is canonical (reduced, positive denominator).

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace demj {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form. Throws std::invalid_argument on den == 0.
Rational make_rational(const BigInt& num, const BigInt& den = 1);

/// Parses "n" or "n/d" (optional sign, decimal digits).
Rational parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

std::string to_string(const BigInt& n);
std::string to_string(const Rational& q);

/// True when q is stored with gcd(|num|, den) = 1 and den > 0.
bool is_canonical(const Rational& q);

/// An affine point with rational coordinates, ordered lexicographically.
struct RationalPoint {
  Rational x;
  Rational y;

  friend bool operator==(const RationalPoint& p, const RationalPoint& q) {
    return p.x == q.x && p.y == q.y;
  }
  friend bool operator<(const RationalPoint& p, const RationalPoint& q) {
    if (p.x != q.x) return p.x < q.x;
    return p.y < q.y;
  }
  RationalPoint swapped() const { return {y, x}; }
};

std::string to_string(const RationalPoint& p);

// ---------------------------------------------------------------------------
// Primes and factorization

/// Miller-Rabin. Deterministic (fixed prime bases) below 3.3e24, otherwise
/// 40 probabilistic rounds.
bool is_prime(const BigInt& n);

/// Next prime strictly greater than n.
BigInt next_prime(const BigInt& n);

/// Primes in [lo, hi], ascending.
std::vector<long> primes_in_range(long lo, long hi);

/// Prime factorization of |n| (n != 0) by trial division and Pollard rho.
std::map<BigInt, unsigned> factorize(const BigInt& n);

/// Positive divisors of |n|, ascending. n != 0.
std::vector<BigInt> divisors(const BigInt& n);

/// n != 0; true iff no prime square divides n.
bool is_squarefree(const BigInt& n);

// ---------------------------------------------------------------------------
// Residues and valuations

/// Legendre symbol (a/p) for an odd prime p. Throws std::invalid_argument if
/// p is even or composite.
int legendre_symbol(const BigInt& a, const BigInt& p);

/// v_p(q); std::nullopt stands for +infinity (q == 0).
std::optional<long> p_valuation(const Rational& q, const BigInt& p);
long p_valuation(const BigInt& n, const BigInt& p);  // n != 0

/// Non-negative r with r*r == q, or nullopt when q is not a rational square.
std::optional<Rational> rational_sqrt(const Rational& q);

/// Least non-negative residue of q modulo m; q's denominator must be a unit mod m.
BigInt mod_rational(const Rational& q, const BigInt& m);

/// Square root of a modulo an odd prime p (Tonelli-Shanks), if one exists.
std::optional<BigInt> sqrt_mod_prime(const BigInt& a, const BigInt& p);

// ---------------------------------------------------------------------------
// Heights

/// Natural log of |n| for n != 0, accurate for arbitrarily large n.
double log_abs(const BigInt& n);

/// log max(|num q|, den q); 0 for q == 0.
double log_height(const Rational& q);

/// max(|num q|, den q).
BigInt height(const Rational& q);

}  // namespace demj
