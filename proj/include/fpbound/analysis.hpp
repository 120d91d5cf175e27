#pragma once
// Structural classification of the constraint, support bands for witnesses,
// case-by-case floor counts, conjecture thresholds, and the dimension-8
// characteristic number.
//
// The constraint coefficients change sign once along j = 1..m, and the
// shape of the sign pattern splits the half-dimensions into families:
//
//   identity_constraint   n = 3 only.  m = 1 and a_1 = 0, so the constraint
//                         says nothing and the minimum is just min c_j = 2.
//   even_degenerate(k)    n = 2m with m = 6k^2, k >= 1.  Exactly one
//                         coefficient vanishes (at j = m - k), the unit
//                         vector there is feasible, and the minimum drops
//                         to 2 on the nose.
//   odd_degenerate(k)     n = 2m + 1 with m = 6k(k+1) + 1.  Same story at
//                         j = m - k, minimum 2.
//   generic               everything else.  No coefficient vanishes and the
//                         band parameter ell counts the classes with
//                         strictly negative coefficient besides the middle:
//                           even: largest ell with 6*ell^2 <= m
//                           odd:  largest ell with 6*ell*(ell+1) <= m - 1
//
// ell is computed by exact integer square roots plus a two-sided integer
// verification; no floating-point comparison decides a family.

#include <cstdint>
#include <optional>

#include "fpbound/int128.hpp"
#include "fpbound/model.hpp"

namespace fpbound {

enum class Family { Generic, EvenDegenerate, OddDegenerate, IdentityConstraint };

struct ClassificationReport {
  std::int64_t n = 0;
  Family family = Family::Generic;
  std::int64_t k = 0;                // degenerate families only
  std::optional<std::int64_t> ell;   // generic only
};

ClassificationReport classify(std::int64_t n);

// Inclusive 1-based index bands for generic n.  The near band [m-ell, m]
// holds exactly the strictly negative coefficients; the far band holds the
// positive ones, except that for odd n it deliberately stretches to m - ell
// and the two bands share that first negative class.
struct SupportBands {
  std::int64_t near_lo = 0, near_hi = 0;
  std::int64_t far_lo = 0, far_hi = 0;
};

// Throws std::invalid_argument unless classify(n) is generic.
SupportBands support_bands(std::int64_t n);

struct SupportPartition {
  bool near_band_positive = false;
  bool far_band_positive = false;
};

// Whether the profile puts weight in each band.  Feasible nonzero profiles
// for generic n must touch both: the constraint cannot balance otherwise.
SupportPartition check_support_partition(const ProblemInstance& inst, const ReducedProfile& profile);

// Where the support of a feasible profile is known to sit, the count floor
// sharpens past the trivial "some class is occupied".
enum class SupportCase {
  EvenMiddleOrFar,  // even n: N_m > 0, or some class below the near band occupied
  EvenNearBand,     // even n: some near-band class other than N_m occupied
  OddAny,           // odd n: any nonzero feasible profile
};

// Minimum total fixed-point count under the stated support hypothesis.
// Note for even n with m < 6: the near band is just {N_m}, so the first
// case is the only one that can arise.
Int min_count_given_support(std::int64_t n, SupportCase c);

struct ConjectureReport {
  std::int64_t n = 0;
  Int bound = 0;
  std::int64_t kosniowski_threshold = 0;  // floor(n/2) + 1
  std::int64_t frankel_threshold = 0;     // n + 1
  bool kosniowski_ok = false;             // bound >= kosniowski_threshold
  bool frankel_ok = false;                // bound >= frankel_threshold
};

// Runs the exact solver for n and compares against both thresholds.
ConjectureReport conjecture_report(std::int64_t n);

struct Chern8Result {
  Int numerator = 0;
  Int denominator = 1;  // 1 or 3, fully reduced
  bool integral = false;
};

// On an 8-manifold the square of the second Chern class integrates to one
// third of the fixed-point count.  Non-integral values are flagged, not
// rejected: they mean no manifold realizes that count.
Chern8Result chern8_invariant(Int fixed_point_count);

}  // namespace fpbound
