#include "demj/demjanenko.hpp"

#include "demj/poly.hpp"

#include <cmath>
#include <stdexcept>

namespace demj {

DemjanenkoInput prepare_input(const SymQuartic& F, const std::optional<ECPoint>& G, int rank_claim, double tol) {
  if (rank_claim != 0 && rank_claim != 1) throw std::invalid_argument("rank_claim must be 0 or 1");
  if ((rank_claim == 1) != G.has_value())
    throw std::invalid_argument("a generator is required exactly when rank_claim == 1");

  EllipticCurve E = companion_curve(F);
  DemjanenkoInput inp{F, E, G, torsion_subgroup(E), rank_claim};
  if (G) {
    if (G->is_infinity() || !E.contains(*G))
      throw std::invalid_argument("generator " + to_string(*G) + " is not an affine point of " + to_string(E));
    if (torsion_order(E, *G) != 0) throw std::invalid_argument("generator " + to_string(*G) + " is a torsion point");
    inp.hhat_G = canonical_height(E, *G, tol);
    if (!(inp.hhat_G > 10 * tol)) throw std::invalid_argument("generator has numerically zero canonical height");
  }
  HeightGap gap = height_gap(E);
  inp.height_gap_upper = gap.hhat_minus_h;
  inp.height_gap_lower = gap.h_minus_hhat;
  inp.phi_gap = phi_height_gap(F);
  return inp;
}

long index_bound(const DemjanenkoInput& inp) {
  if (inp.rank_claim == 0) return 0;
  if (!(inp.hhat_G > 0)) throw std::invalid_argument("index_bound: hhat(G) must be positive");
  double numerator = inp.phi_gap + inp.height_gap_upper + inp.height_gap_lower;
  // |n1^2 - n2^2| is an integer, so the real bound may be rounded down; the
  // slack absorbs floating error in the heights.
  return static_cast<long>(std::floor(numerator / inp.hhat_G + 1e-9));
}

long n_window(long B) {
  if (B < 0) throw std::invalid_argument("n_window: B must be non-negative");
  return (B + 1) / 2;
}

namespace {

void add_with_swap(std::set<RationalPoint>& out, const std::set<RationalPoint>& pts) {
  for (const auto& p : pts) {
    out.insert(p);
    out.insert(p.swapped());
  }
}

// Points with u = x^2, v = y^2 satisfying x(-4u) = x(-4v + T) for the
// 2-torsion point T = (e, 0): (4u + e)(4v + e) = f'(e).
void two_torsion_case(const SymQuartic& F, const EllipticCurve& E, const Rational& e, std::set<RationalPoint>& out) {
  const Rational a = F.twisted_a(), b = F.twisted_b();
  const Rational fp = (3 * e + 2 * E.a2()) * e + E.a4();
  RatPoly D{e, Rational(4)};
  RatPoly Nv{Rational(fp - e * e) / 4, Rational(-e)};  // (f'(e) - e D) / 4
  RatPoly eq = RatPoly{-b, a, Rational(1)} * D * D + Rational(a) * Nv * D + Nv * Nv;
  if (eq.is_zero()) throw std::logic_error("equal_index_points: degenerate torsion condition");
  for (const auto& u : rational_roots(eq)) {
    Rational d = D.eval(u);
    if (d == 0) continue;
    auto x = rational_sqrt(u);
    auto y = rational_sqrt(Rational(Nv.eval(u) / d));
    if (!x || !y) continue;
    for (const Rational& sx : {*x, Rational(-*x)})
      for (const Rational& sy : {*y, Rational(-*y)})
        if (F.contains({sx, sy})) out.insert({sx, sy});
  }
}

}  // namespace

std::set<RationalPoint> equal_index_points(const SymQuartic& F, const std::vector<ECPoint>& torsion) {
  std::set<RationalPoint> out;
  const Rational a = F.twisted_a(), b = F.twisted_b();
  const EllipticCurve E = companion_curve(F);
  for (const auto& t : torsion) {
    if (t.is_infinity()) {
      // x(phi1) = x(phi2) means x^2 = y^2; then 2x^4 + 2a x^2 = b.
      for (const auto& u : rational_roots(RatPoly{Rational(-b / 2), a, Rational(1)})) {
        auto x = rational_sqrt(u);
        if (!x) continue;
        for (const Rational& sx : {*x, Rational(-*x)})
          for (const Rational& sy : {sx, Rational(-sx)})
            if (F.contains({sx, sy})) out.insert({sx, sy});
      }
    } else if (t.y() == 0) {
      two_torsion_case(F, E, t.x(), out);
    } else {
      throw std::domain_error("equal_index_points: torsion of order " + std::to_string(torsion_order(E, t)) +
                              " is not supported");
    }
  }
  return out;
}

std::set<RationalPoint> equal_index_points(const SymQuartic& F) {
  return equal_index_points(F, torsion_subgroup(companion_curve(F)));
}

std::set<RationalPoint> enumerate_and_pull_back(const DemjanenkoInput& inp, long N) {
  if (N < 0) throw std::invalid_argument("enumerate_and_pull_back: N must be non-negative");
  if (inp.rank_claim == 0 && N > 0) N = 0;
  std::set<RationalPoint> out;
  auto pull = [&](const ECPoint& q) {
    if (!q.is_infinity()) add_with_swap(out, phi_preimages(1, q, inp.F));
  };
  ECPoint nG;  // n G, built incrementally
  for (long n = 0; n <= N; ++n) {
    if (n > 0) nG = add(inp.E, nG, *inp.G);
    for (const auto& t : inp.torsion) {
      pull(add(inp.E, nG, t));
      if (n > 0) pull(add(inp.E, negate(inp.E, nG), t));
    }
  }
  add_with_swap(out, equal_index_points(inp.F, inp.torsion));
  return out;
}

PointCertificate certify_points(const SymQuartic& F, const std::optional<ECPoint>& G, int rank_claim,
                                const CertifyOptions& opts) {
  DemjanenkoInput inp = prepare_input(F, G, rank_claim, opts.tol);
  PointCertificate cert;
  cert.index_bound = index_bound(inp);
  cert.n_window = n_window(cert.index_bound);
  cert.enumerated_window = rank_claim == 0 ? 0 : std::max(cert.n_window, opts.min_window);
  cert.points = enumerate_and_pull_back(inp, cert.enumerated_window);
  for (const auto& p : cert.points)
    if (!F.contains(p)) throw std::logic_error("certificate point " + to_string(p) + " is not on the curve");
  cert.conditional_on.push_back(rank_claim == 0 ? "rank 0 certified externally" : "rank <= 1 certified externally");
  if (G) cert.conditional_on.push_back("generator " + to_string(*G) + " spans the free part");
  cert.method = "height window enumeration with phi1 pull-back";
  return cert;
}

}  // namespace demj
