#include "demj/chebyshev.hpp"

#include <deque>
#include <mutex>
#include <stdexcept>
#include <string>

namespace demj {

namespace {

constexpr int kHornerLimit = 64;

IntPoly build(int d) {
  IntPoly x{0, 1};
  if (d == 1) return x;
  IntPoly prev = x;
  IntPoly cur{-2, 0, 1};
  for (int k = 3; k <= d; ++k) {
    IntPoly next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

int smallest_prime_factor(int d) {
  for (int p = 2; p * p <= d; ++p)
    if (d % p == 0) return p;
  return d;
}

// (T_n(x), T_{n+1}(x)) by binary expansion of n, using
// T_{2n} = T_n^2 - 2 and T_{2n+1} = T_n T_{n+1} - x.
std::pair<Rational, Rational> ladder(int n, const Rational& x) {
  if (n == 0) return {Rational(2), x};
  auto [a, b] = ladder(n / 2, x);
  Rational t2n = a * a - 2;
  Rational t2n1 = a * b - x;
  if (n % 2 == 0) return {t2n, t2n1};
  Rational t2n2 = b * b - 2;
  return {t2n1, t2n2};
}

}  // namespace

ChebPoly::ChebPoly(int d) : d_(d) {
  if (d < 1) throw std::invalid_argument("Chebychev degree must be >= 1, got " + std::to_string(d));
  poly_ = build(d);
}

const ChebPoly& cheb(int d) {
  if (d < 1) throw std::invalid_argument("Chebychev degree must be >= 1, got " + std::to_string(d));
  static std::mutex mu;
  static std::deque<ChebPoly> cache;  // deque keeps references stable
  std::lock_guard lock(mu);
  while (static_cast<int>(cache.size()) < d) cache.emplace_back(static_cast<int>(cache.size()) + 1);
  return cache[static_cast<std::size_t>(d - 1)];
}

Rational cheb_eval_horner(int d, const Rational& x) { return cheb(d)(x); }

Rational cheb_eval_nested(int d, const Rational& x) {
  if (d < 1) throw std::invalid_argument("Chebychev degree must be >= 1");
  int p = smallest_prime_factor(d);
  if (p == d) return ladder(d, x).first;
  return cheb_eval_nested(p, cheb_eval_nested(d / p, x));
}

Rational cheb_eval(int d, const Rational& x) {
  if (d <= kHornerLimit) return cheb_eval_horner(d, x);
  return cheb_eval_nested(d, x);
}

std::map<int, int> special_values(int d) {
  if (d < 1) throw std::invalid_argument("Chebychev degree must be >= 1");
  if (d % 3 == 0) throw std::invalid_argument("special_values: d divisible by 3 is outside the tabulated regime");
  std::map<int, int> table;
  if (d % 2 == 1) {
    for (int v : {-2, -1, 0, 1, 2}) table[v] = v;
  } else {
    table[0] = (d % 4 == 2) ? -2 : 2;
    table[1] = table[-1] = -1;
    table[2] = table[-2] = 2;
  }
  for (auto [x, tx] : table)
    if (cheb_eval(d, Rational(x)) != tx)
      throw std::logic_error("special value table disagrees with evaluation at d=" + std::to_string(d));
  return table;
}

bool growth_floor(int d, const Rational& x) {
  if (d < 2) throw std::invalid_argument("growth_floor requires d >= 2");
  if (abs(x) < 3) throw std::invalid_argument("growth_floor requires |x| >= 3");
  return abs(cheb_eval(d, x)) >= 7;
}

}  // namespace demj
