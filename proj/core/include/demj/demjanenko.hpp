#pragma once

// Effective Dem'janenko enumeration for the symmetric quartics. Given a
// companion curve of rank <= 1 (the rank and generator are external
// certificates), every rational point P of F has phi1(P) = n1 G + T1 and
// phi2(P) = n2 G + T2. Heights bound |n1^2 - n2^2| whenever |n1| != |n2|, so
// the indices live in a finite window; the equal-index case is solved exactly.

#include "demj/elliptic.hpp"
#include "demj/quartic.hpp"

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace demj {

struct DemjanenkoInput {
  SymQuartic F;
  EllipticCurve E;
  std::optional<ECPoint> G;  // present iff rank_claim == 1
  std::vector<ECPoint> torsion;
  int rank_claim = 0;
  double hhat_G = 0;
  double height_gap_upper = 0;  // sup (hhat - h)
  double height_gap_lower = 0;  // sup (h - hhat)
  double phi_gap = 0;           // sup |h(phi1 P) - h(phi2 P)|
};

/// Builds the input from a quartic and a claimed generator. Verifies G lies on
/// the companion curve and has infinite order (hhat(G) > 10 tol and no torsion
/// order); computes torsion, height gaps and phi_gap. rank_claim must be 0
/// (G absent) or 1 (G present).
DemjanenkoInput prepare_input(const SymQuartic& F, const std::optional<ECPoint>& G, int rank_claim,
                              double tol = 1e-10);

struct PointCertificate {
  std::set<RationalPoint> points;
  long index_bound = 0;        // B: |n1^2 - n2^2| <= B when |n1| != |n2|
  long n_window = 0;           // floor((B + 1) / 2)
  long enumerated_window = 0;  // max |n| actually enumerated, >= n_window
  std::vector<std::string> conditional_on;
  std::string method;
};

/// floor((phi_gap + gap_upper + gap_lower) / hhat_G); 0 when rank_claim == 0.
long index_bound(const DemjanenkoInput& inp);

/// floor((B + 1) / 2). B >= 0.
long n_window(long B);

/// Points of F whose images are n G + T for |n| <= N and T torsion (phi2
/// covered by swapping), together with equal_index_points(F, torsion).
std::set<RationalPoint> enumerate_and_pull_back(const DemjanenkoInput& inp, long N);

/// Points with phi1(P) = +-phi2(P) + T for a torsion point T, found exactly.
/// Supports torsion of order <= 2; larger orders throw std::domain_error.
std::set<RationalPoint> equal_index_points(const SymQuartic& F, const std::vector<ECPoint>& torsion);
std::set<RationalPoint> equal_index_points(const SymQuartic& F);

struct CertifyOptions {
  long min_window = 0;  // enumerate at least this many multiples
  double tol = 1e-10;
};

/// Full pipeline: prepare, bound, enumerate, certify.
PointCertificate certify_points(const SymQuartic& F, const std::optional<ECPoint>& G, int rank_claim,
                                const CertifyOptions& opts = {});

}  // namespace demj
