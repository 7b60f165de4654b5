#pragma once

// 2-isogeny descent on E^(p): Y^2 = X (X^2 + 4p X + 2p^2), the reduced model
// of the companion curve of F_(-4p, -6p^2), and its isogenous partner
// Y^2 = X (X^2 - 8p X + 8p^2). Root numbers, Selmer bounds and the
// conditional Hasse-principle verdict.

#include "demj/exact.hpp"

#include <string>
#include <vector>

namespace demj {

/// d w^2 = d^2 + A d z^2 + B z^4, the homogeneous space of y^2 = x(x^2 + A x + B)
/// attached to the squarefree divisor d of B.
struct HomSpace {
  BigInt d;
  BigInt A;
  BigInt B;
  long p = 0;

  /// Spaces for the reduced model (A, B) = (4p, 2p^2).
  static HomSpace dual(long p, const BigInt& d);
  /// Spaces for the isogenous curve (A, B) = (-8p, 8p^2):
  /// d w^2 = d^2 - 8p d z^2 + 8p^2 z^4.
  static HomSpace primary(long p, const BigInt& d);
};

std::string to_string(const HomSpace& c);

/// d in {+-1, +-2, +-p, +-2p}.
std::vector<BigInt> descent_divisors(long p);

struct RootNumberReport {
  long p = 0;
  int W2 = 0;
  int Wp = 0;
  int W = 0;
  std::string kodaira_at_p;
  std::string kodaira_at_2;
  BigInt c4;
  BigInt c6;
};

/// Wp = (-1/p), W2 = +1 iff 6p + 5 = +-1 mod 8, W = W2 Wp. c4, c6 come from
/// the reduced model and are checked against 2^5 5 p^2 and -2^8 7 p^3.
RootNumberReport root_number(long p);

enum class LocalAnswer { Yes, No, Unknown };

/// place == 0 is the real place; otherwise a prime. Finite places are decided
/// by refining residue classes of z in Z_l (and of 1/z in l Z_l) until the
/// square class of d (d^2 + A d z^2 + B z^4) is fixed, or a root of that
/// quartic is certified by Hensel. Unknown only when the budget runs out.
LocalAnswer homspace_locally_solvable(const HomSpace& c, long place);

struct SelmerReport {
  long p = 0;
  std::vector<BigInt> selmer;       // d with a point at 2, p and infinity, primary spaces
  std::vector<BigInt> dual_selmer;  // same for the dual spaces
  int s = 0;                        // log2 |selmer|
  int s_dual = 0;
  int bound = 0;                    // s + s_dual - 2
  bool undetermined = false;        // some place returned Unknown (counted as solvable)
};

/// Places checked: infinity, 2 and p (the only primes dividing 2 B).
SelmerReport selmer_report(long p);
int selmer_rank_bound(long p);

/// x^4 - 4x^2 + 2 has a root mod p.
bool quartic_residue_criterion(long p);

struct HasseVerdict {
  long p = 0;
  bool congruence_ok = false;  // p = 25 mod 48
  bool locally_solvable = false;
  bool local_undetermined = false;
  int root_number = 0;
  int selmer_bound = -1;
  bool conditional_rank_one = false;
  bool above_threshold = false;
  std::string verdict;
  std::vector<std::string> assumptions;
};

/// Default threshold 7e74.
BigInt hasse_threshold();

HasseVerdict hasse_candidate_verdict(long p, bool assume_parity, const BigInt& threshold = hasse_threshold());

}  // namespace demj
