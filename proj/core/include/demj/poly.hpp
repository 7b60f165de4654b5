#pragma once

// Dense univariate polynomials over Z and Q. Coefficients are stored low
// degree first and trimmed so the leading coefficient is nonzero.

#include "demj/exact.hpp"

#include <initializer_list>
#include <set>
#include <string>
#include <vector>

namespace demj {

template <typename Coeff>
class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Coeff> coeffs) : c_(coeffs) { trim(); }
  explicit Poly(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const Coeff& v) { return Poly(std::vector<Coeff>{v}); }
  static Poly monomial(const Coeff& v, std::size_t deg) {
    std::vector<Coeff> c(deg + 1, Coeff(0));
    c[deg] = v;
    return Poly(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Coeff>& coeffs() const { return c_; }
  Coeff coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Coeff(0); }
  Coeff leading() const { return c_.empty() ? Coeff(0) : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  template <typename T>
  T eval(const T& x) const {
    T acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Coeff> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Coeff(static_cast<long>(i));
    return Poly(std::move(d));
  }

  /// p(q(x)).
  Poly compose(const Poly& q) const {
    Poly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + constant(*it);
    return acc;
  }

  Poly operator-() const {
    std::vector<Coeff> r(c_);
    for (auto& v : r) v = -v;
    return Poly(std::move(r));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Coeff> r(std::max(a.c_.size(), b.c_.size()), Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
    return Poly(std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> r(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(r));
  }
  friend Poly operator*(const Coeff& s, const Poly& a) { return constant(s) * a; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Coeff> c_;
};

using IntPoly = Poly<BigInt>;
using RatPoly = Poly<Rational>;

std::string to_string(const IntPoly& f);
RatPoly to_rational(const IntPoly& f);

/// Clears denominators and divides out the content; result has positive
/// leading coefficient. Same roots as f.
IntPoly primitive_part(const RatPoly& f);

// Field operations over Q.
struct RatDivMod {
  RatPoly quotient;
  RatPoly remainder;
};
RatDivMod divmod(const RatPoly& a, const RatPoly& b);
RatPoly gcd(const RatPoly& a, const RatPoly& b);  // monic, or zero
Rational resultant(const RatPoly& a, const RatPoly& b);

/// All rational roots of a nonzero polynomial (rational root theorem on the
/// primitive part).
std::set<Rational> rational_roots(const RatPoly& f);
std::set<Rational> rational_roots(const IntPoly& f);

/// Exactly the residues r in [0, p) with f(r) = 0 mod p. Exhaustive below
/// 10^4, gcd with x^p - x and equal-degree splitting above. Throws
/// std::invalid_argument if f vanishes identically mod p or p is not prime.
std::set<BigInt> roots_mod_p(const IntPoly& f, const BigInt& p);

/// Evaluation of an integer polynomial modulo m, result in [0, m).
BigInt eval_mod(const IntPoly& f, const BigInt& x, const BigInt& m);

}  // namespace demj
