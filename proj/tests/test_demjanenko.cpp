#include "oracles.hpp"

#include "demj/demjanenko.hpp"

#include <doctest.h>

#include <algorithm>

using namespace demj;

namespace {

const SymQuartic X4(-4, -3);
const ECPoint G(4, -16);

const std::set<RationalPoint> kX4{{0, 1}, {0, -1}, {2, 1},  {2, -1}, {-2, 1}, {-2, -1},
                                  {1, 0}, {-1, 0}, {1, 2},  {1, -2}, {-1, 2}, {-1, -2}};

std::set<RationalPoint> brute_points(const SymQuartic& F, long num_cap, long den_cap) {
  const Rational a = F.twisted_a(), b = F.twisted_b();
  std::set<RationalPoint> out;
  for (auto& [x, y] : oracle::even_quartic_points(
           a, [&](const Rational& x) -> Rational { return x * x * x * x + a * x * x - b; }, num_cap, den_cap))
    out.insert({x, y});
  return out;
}

}  // namespace

TEST_CASE("prepared input for X4") {
  DemjanenkoInput inp = prepare_input(X4, G, 1);
  CHECK(inp.E == EllipticCurve(16, -16, 0));
  CHECK(inp.torsion.size() == 2);
  CHECK(inp.hhat_G > 0.35);
  CHECK(inp.phi_gap == doctest::Approx(std::log(24.0) + std::log(192.0)));
  CHECK_THROWS_AS(prepare_input(X4, ECPoint(0, 0), 1), std::invalid_argument);
  CHECK_THROWS_AS(prepare_input(X4, ECPoint(1, 2), 1), std::invalid_argument);
  CHECK_THROWS_AS(prepare_input(X4, std::nullopt, 1), std::invalid_argument);
  CHECK_THROWS_AS(prepare_input(X4, G, 2), std::invalid_argument);
}

TEST_CASE("index bound and window") {
  DemjanenkoInput inp = prepare_input(X4, G, 1);
  long B = index_bound(inp);
  CHECK(B > 0);
  CHECK(B <= 78);
  CHECK(n_window(B) <= 40);
  CHECK(n_window(0) == 0);
  CHECK(n_window(1) == 1);
  CHECK(n_window(78) == 39);
  CHECK_THROWS_AS(n_window(-1), std::invalid_argument);
  // |n1^2 - n2^2| >= 2 max(|n1|, |n2|) - 1 whenever |n1| != |n2|
  for (long B2 = 0; B2 <= 100; ++B2)
    for (long n1 = 0; n1 <= 60; ++n1)
      for (long n2 = 0; n2 < n1; ++n2)
        if (n1 * n1 - n2 * n2 <= B2) CHECK(n1 <= n_window(B2));
  DemjanenkoInput zero = prepare_input(SymQuartic(-4, -6, 5), std::nullopt, 0);
  CHECK(index_bound(zero) == 0);
  DemjanenkoInput bad = inp;
  bad.hhat_G = 0;
  CHECK_THROWS_AS(index_bound(bad), std::invalid_argument);
}

TEST_CASE("a large generator height forces equal indices") {
  DemjanenkoInput inp = prepare_input(X4, G, 1);
  inp.phi_gap = 20.0;
  inp.height_gap_upper = inp.height_gap_lower = 0.3;
  inp.hhat_G = 20.715 + 1;
  CHECK(index_bound(inp) == 0);
  CHECK(n_window(index_bound(inp)) == 0);
}

TEST_CASE("X4 certificate") {
  PointCertificate c = certify_points(X4, G, 1, {40, 1e-10});
  CHECK(c.points == kX4);
  CHECK(c.enumerated_window >= 40);
  CHECK(c.index_bound <= 120);
  CHECK(std::find(c.conditional_on.begin(), c.conditional_on.end(), "rank <= 1 certified externally") !=
        c.conditional_on.end());
  for (const auto& p : c.points) {
    CHECK(X4.contains(p));
    CHECK(c.points.count(p.swapped()) == 1);
    CHECK(c.points.count({-p.x, p.y}) == 1);
    CHECK(c.points.count({p.x, -p.y}) == 1);
  }
}

TEST_CASE("G + T and 2G + T account for x = +-1 and x = +-2") {
  DemjanenkoInput inp = prepare_input(X4, G, 1);
  std::set<RationalPoint> one, two;
  for (const auto& t : inp.torsion) {
    for (int s : {1, -1}) {
      ECPoint q1 = add(inp.E, scalar_mul(inp.E, s, G), t), q2 = add(inp.E, scalar_mul(inp.E, 2 * s, G), t);
      if (!q1.is_infinity())
        for (auto& p : phi_preimages(1, q1, X4)) one.insert(p);
      if (!q2.is_infinity())
        for (auto& p : phi_preimages(1, q2, X4)) two.insert(p);
    }
  }
  CHECK(one == std::set<RationalPoint>{{1, 0}, {1, 2}, {1, -2}, {-1, 0}, {-1, 2}, {-1, -2}});
  CHECK(two == std::set<RationalPoint>{{2, 1}, {2, -1}, {-2, 1}, {-2, -1}});
}

TEST_CASE("enlarging the window changes nothing") {
  DemjanenkoInput inp = prepare_input(X4, G, 1);
  auto base = enumerate_and_pull_back(inp, 28);
  CHECK(enumerate_and_pull_back(inp, 38) == base);
  CHECK(enumerate_and_pull_back(inp, 40) == base);
  auto small = enumerate_and_pull_back(inp, 2);
  CHECK(std::includes(base.begin(), base.end(), small.begin(), small.end()));
}

TEST_CASE("X4 completeness against a rational search") {
  auto brute = brute_points(X4, 300, 40);
  CHECK(brute == kX4);
}

TEST_CASE("equal-index points match a direct check on small points") {
  const EllipticCurve E = companion_curve(X4);
  auto tors = torsion_subgroup(E);
  std::set<RationalPoint> want;
  for (const auto& P : brute_points(X4, 60, 10)) {
    ECPoint p1 = phi(1, P, X4), p2 = phi(2, P, X4);
    for (const auto& t : tors)
      for (const ECPoint& d : {add(E, p1, negate(E, p2)), add(E, p1, p2)})
        if (d == t) want.insert(P);
  }
  auto got = equal_index_points(X4);
  CHECK(std::includes(kX4.begin(), kX4.end(), got.begin(), got.end()));
  CHECK(got == want);
  CHECK_THROWS_AS(equal_index_points(X4, {G}), std::domain_error);
}

TEST_CASE("twists of F_(-4,-6)") {
  for (long alpha = 5; alpha <= 50; ++alpha) {
    if (!is_squarefree(alpha) || alpha <= 3) continue;
    SymQuartic F(-4, -6, alpha);
    CHECK(equal_index_points(F).empty());
    PointCertificate c = certify_points(F, std::nullopt, 0);
    CHECK(c.points.empty());
    CHECK(c.enumerated_window == 0);
    // a point of small height would contradict the rank-0 certificate
    CHECK(brute_points(F, 200, 12).empty());
  }
  // alpha = 3 is where the diagonal case has solutions
  auto three = equal_index_points(SymQuartic(-4, -6, 3));
  CHECK(three == std::set<RationalPoint>{{3, 3}, {3, -3}, {-3, 3}, {-3, -3}});
}
