#pragma once

// Local solvability of the twisted quartics F^(p) = F_(-4p, -6p^2) at every
// place: finite-field scans for small good primes, the Weil bound for large
// ones, and explicit p-adic witnesses at 2, 3 and p.

#include "demj/quartic.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace demj {

enum class Solvability { Solvable, NotSolvable, Undetermined };
enum class LocalMethod { Real, HenselFromFq, WeilBound, ConstructiveSquare, ConstructiveRootOfUnity, HenselSearch };

std::string to_string(Solvability s);
std::string to_string(LocalMethod m);

struct LocalReport {
  long place = 0;  // 0 is the real place
  Solvability status = Solvability::Undetermined;
  LocalMethod method = LocalMethod::Real;
  std::string witness;         // human-readable point or congruence
  std::optional<long> count;   // projective F_q point count, when scanned
};

struct FqCount {
  long count = 0;
  std::optional<std::array<long, 3>> smooth_witness;  // [x : y : z] with a nonzero partial
};

/// True when q is an odd prime coprime to 6, alpha, the coefficient
/// denominators and the twisted discriminant.
bool is_good_place(const SymQuartic& f, long q);

/// Projective F_q points on x^4 + a'x^2 z^2 + a'y^2 z^2 + y^4 = b' z^4.
/// Throws std::invalid_argument at a bad place.
FqCount count_smooth_points_quartic_Fq(const SymQuartic& f, long q);

/// (count - q - 1)^2 <= 36 q.
bool within_weil_bound(long count, long q);

/// Exact: the minimum of x^4 + a x^2 + a y^2 + y^4 is 2 min_t (t^2 + a t) over t >= 0.
bool real_solvable(const SymQuartic& f);

/// Witnesses at 2, 3 and p for F^(p), p prime with p = 1 mod 24: a square
/// root of p mod 2^8 and 3^5 gives (theta, theta), a root of zeta^4 = -1 mod
/// p^2 gives [zeta : 1 : 0].
std::vector<LocalReport> special_place_checks(long p);

/// Searches for a point of F over Z_l liftable by strong Hensel
/// (v(F) > 2 v(grad F)) among residues mod l^k, k <= max_k, within budget.
LocalReport hensel_search(const SymQuartic& f, long ell, int max_k = 4, long budget = 2'000'000);

struct LocalSolvability {
  bool solvable = false;      // true only when every place is Solvable
  bool undetermined = false;  // some place could not be decided
  std::vector<LocalReport> reports;  // real place first, then by prime
};

/// All places of F^(p) for an odd prime p.
LocalSolvability everywhere_locally_solvable(long p);

}  // namespace demj
