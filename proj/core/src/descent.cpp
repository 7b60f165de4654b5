#include "demj/descent.hpp"

#include "demj/elliptic.hpp"
#include "demj/localglobal.hpp"
#include "demj/poly.hpp"

#include <stdexcept>
#include <utility>

namespace demj {

namespace {

void require_odd_prime(long p, const char* who) {
  if (p < 3 || !is_prime(BigInt(p))) throw std::invalid_argument(std::string(who) + ": p must be an odd prime");
}

BigInt pow_ui(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

constexpr long kBudget = 4'000'000;

// Whether g takes a nonzero square value (or has a root) on Z_l.
LocalAnswer square_value_exists(const IntPoly& g, const BigInt& ell, long& spent) {
  long c = -1;
  for (const auto& coef : g.coeffs())
    if (coef != 0) {
      long v = p_valuation(coef, ell);
      c = c < 0 ? v : std::min(c, v);
    }
  const BigInt lc = pow_ui(ell, static_cast<unsigned long>(c));
  std::vector<BigInt> hc;
  for (const auto& coef : g.coeffs()) hc.push_back(coef / lc);
  const IntPoly h(hc), dh = h.derivative();
  const bool two = ell == 2;
  const long margin = two ? 3 : 1;

  std::vector<std::pair<BigInt, long>> stack;
  const BigInt start = pow_ui(ell, static_cast<unsigned long>(margin));
  for (BigInt z = 0; z < start; ++z) stack.emplace_back(z, margin);
  while (!stack.empty()) {
    auto [z0, k] = std::move(stack.back());
    stack.pop_back();
    if (++spent > kBudget) return LocalAnswer::Unknown;
    const BigInt val = h.eval(z0);
    if (val == 0) return LocalAnswer::Yes;
    const long v = p_valuation(val, ell);
    if (v + margin <= k) {
      if ((v + c) % 2 != 0) continue;
      BigInt u = val / pow_ui(ell, static_cast<unsigned long>(v));
      bool square = two ? ((u % 8 + 8) % 8 == 1) : legendre_symbol(u, ell) == 1;
      if (square) return LocalAnswer::Yes;
      continue;
    }
    const BigInt dv = dh.eval(z0);
    if (dv != 0 && v > 2 * p_valuation(dv, ell)) return LocalAnswer::Yes;  // Hensel root: w = 0
    const BigInt step = pow_ui(ell, static_cast<unsigned long>(k));
    for (BigInt j = 0; j < ell; ++j) stack.emplace_back(z0 + j * step, k + 1);
  }
  return LocalAnswer::No;
}

}  // namespace

HomSpace HomSpace::dual(long p, const BigInt& d) {
  return {d, BigInt(4 * p), BigInt(2) * p * p, p};
}

HomSpace HomSpace::primary(long p, const BigInt& d) {
  return {d, BigInt(-8 * p), BigInt(8) * p * p, p};
}

std::string to_string(const HomSpace& c) {
  return "(" + to_string(c.d) + ") w^2 = " + to_string(BigInt(c.d * c.d)) + " + (" + to_string(BigInt(c.A * c.d)) + ") z^2 + (" +
         to_string(c.B) + ") z^4";
}

std::vector<BigInt> descent_divisors(long p) {
  std::vector<BigInt> out;
  for (long m : {1L, 2L, p, 2 * p}) {
    out.emplace_back(m);
    out.emplace_back(-m);
  }
  return out;
}

RootNumberReport root_number(long p) {
  require_odd_prime(p, "root_number");
  RootNumberReport r;
  r.p = p;
  r.Wp = legendre_symbol(BigInt(-1), BigInt(p));
  long m = (6 * p + 5) % 8;
  r.W2 = (m == 1 || m == 7) ? 1 : -1;
  r.W = r.W2 * r.Wp;
  r.kodaira_at_p = "I0*";
  r.kodaira_at_2 = "via 6p+5 mod 8";
  EllipticCurve e(Rational(4 * p), Rational(BigInt(2) * p * p), Rational(0));
  r.c4 = e.c4().get_num();
  r.c6 = e.c6().get_num();
  const BigInt P(p);
  if (r.c4 != 160 * P * P || r.c6 != -1792 * P * P * P)
    throw std::logic_error("root_number: c4/c6 of the reduced model disagree with the closed forms");
  return r;
}

LocalAnswer homspace_locally_solvable(const HomSpace& c, long place) {
  const BigInt& d = c.d;
  if (d == 0) throw std::invalid_argument("homspace_locally_solvable: d must be nonzero");
  if (place == 0) {
    // Need d Q(z) = d^3 + A d^2 s + B d s^2 >= 0 for some s = z^2 >= 0, or d B > 0 at infinity.
    const BigInt lead = d * c.B, mid = c.A * d * d, low = d * d * d;
    if (lead > 0 || low >= 0) return LocalAnswer::Yes;
    Rational s(mid, -2 * lead);
    s.canonicalize();
    if (s > 0 && Rational(low) - Rational(mid * mid) / Rational(4 * lead) >= 0) return LocalAnswer::Yes;
    return LocalAnswer::No;
  }
  if (place < 2 || !is_prime(BigInt(place))) throw std::invalid_argument("homspace_locally_solvable: bad place");
  const BigInt ell(place);
  long spent = 0;
  const BigInt d2 = d * d, d3 = d2 * d;
  IntPoly finite{d3, 0, c.A * d2, 0, c.B * d};
  LocalAnswer a = square_value_exists(finite, ell, spent);
  if (a == LocalAnswer::Yes) return a;
  const BigInt l2 = ell * ell;
  IntPoly infinite{c.B * d, 0, c.A * d2 * l2, 0, d3 * l2 * l2};
  LocalAnswer b = square_value_exists(infinite, ell, spent);
  if (b == LocalAnswer::Yes) return b;
  return (a == LocalAnswer::Unknown || b == LocalAnswer::Unknown) ? LocalAnswer::Unknown : LocalAnswer::No;
}

namespace {

int ceil_log2(std::size_t n) {
  int s = 0;
  while ((std::size_t{1} << s) < n) ++s;
  return s;
}

}  // namespace

SelmerReport selmer_report(long p) {
  require_odd_prime(p, "selmer_report");
  SelmerReport r;
  r.p = p;
  for (const auto& d : descent_divisors(p)) {
    for (bool primary : {true, false}) {
      HomSpace c = primary ? HomSpace::primary(p, d) : HomSpace::dual(p, d);
      bool ok = true;
      for (long place : {0L, 2L, p}) {
        LocalAnswer a = homspace_locally_solvable(c, place);
        if (a == LocalAnswer::No) {
          ok = false;
          break;
        }
        if (a == LocalAnswer::Unknown) r.undetermined = true;
      }
      if (ok) (primary ? r.selmer : r.dual_selmer).push_back(d);
    }
  }
  r.s = ceil_log2(r.selmer.size());
  r.s_dual = ceil_log2(r.dual_selmer.size());
  r.bound = r.s + r.s_dual - 2;
  return r;
}

int selmer_rank_bound(long p) { return selmer_report(p).bound; }

bool quartic_residue_criterion(long p) {
  require_odd_prime(p, "quartic_residue_criterion");
  return !roots_mod_p(IntPoly{2, 0, -4, 0, 1}, BigInt(p)).empty();
}

BigInt hasse_threshold() { return BigInt(7) * pow_ui(BigInt(10), 74); }

HasseVerdict hasse_candidate_verdict(long p, bool assume_parity, const BigInt& threshold) {
  require_odd_prime(p, "hasse_candidate_verdict");
  HasseVerdict v;
  v.p = p;
  v.congruence_ok = p % 48 == 25;
  v.above_threshold = BigInt(p) > threshold;
  if (!v.congruence_ok) {
    v.verdict = "fails congruence gate (p != 25 mod 48)";
    return v;
  }
  LocalSolvability loc = everywhere_locally_solvable(p);
  v.locally_solvable = loc.solvable;
  v.local_undetermined = loc.undetermined;
  v.root_number = root_number(p).W;
  SelmerReport sel = selmer_report(p);
  v.selmer_bound = sel.bound;

  if (!assume_parity) {
    v.verdict = "unconditional conclusion unavailable";
    return v;
  }
  v.assumptions.push_back("parity conjecture: (-1)^rank = W");
  if (sel.undetermined || loc.undetermined) {
    v.verdict = "undetermined";
    return v;
  }
  v.conditional_rank_one = v.root_number == -1 && v.selmer_bound <= 2;
  if (!v.locally_solvable || !v.conditional_rank_one) {
    v.verdict = "gate failed";
    return v;
  }
  v.assumptions.push_back("rank = 1 (conditional)");
  if (v.above_threshold) {
    v.assumptions.push_back("explicit height threshold " + to_string(threshold));
    v.verdict = "F^(p)(Q) empty and the Hasse principle fails (conditional)";
  } else {
    v.verdict = "candidate (below explicit threshold)";
  }
  return v;
}

}  // namespace demj
