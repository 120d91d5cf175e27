#pragma once

// Exact solver for:   minimize F(N)  over  N >= 0, N != 0, G(N) = 0.
//
// G is a single homogeneous equation a.N = 0, which makes the search space
// very structured.  Three mechanisms cover all of it:
//
//   * unit vectors e_j at indices with a_j = 0;
//   * balanced pairs  N_i = |a_j|/g, N_j = a_i/g  for a_i > 0 > a_j and
//     g = gcd(a_i, |a_j|), the extreme rays of the solution cone;
//   * genuinely mixed solutions.  Any solution splits by coefficient sign
//     into two halves whose weighted sums agree,
//         sum_{a_j > 0} a_j N_j  =  S  =  sum_{a_j < 0} |a_j| N_j,
//     and for fixed S the halves are independent min-cost coin problems.
//     Hence  min F = min( cheapest unit,  min_{S >= 1} dpP[S] + dpQ[S] )
//     with dpP/dpQ unbounded coin DPs over the coefficient magnitudes.
//
// Units and pairs alone are NOT sufficient: they realize exactly the sums
// reachable with one coin per side, and from n = 14 on there are instances
// whose optimum is a mixed profile cheaper than every pair.  The DP scan
// terminates because a solution cheaper than the incumbent U needs
// ceil(S*c/a) < U on each side for the best value-per-cost coin a/c, which
// caps S; the cap shrinks as the incumbent improves.
//
// oracle_minimize is the deliberately independent cross-check: iterative
// deepening over objective levels t = 1, 2, 3, ... with full lexicographic
// enumeration of each level and an explicit enumeration budget.  It shares
// only the model arithmetic with minimize(); the first hit is optimal by
// construction.  A balanced pair built on the spot bounds the deepening.

#include <cstdint>
#include <optional>
#include <vector>

#include "fpbound/model.hpp"

namespace fpbound {

enum class GeneratorKind { UnitVector, OppositeSignPair };

// One minimal-support solution of a.N = 0.  Indices are 1-based (N_1..N_m).
// For a unit vector i == j is the supporting index; for a pair, i carries
// the positive coefficient and j the negative one.
struct Generator {
  GeneratorKind kind = GeneratorKind::UnitVector;
  std::int64_t i = 0;
  std::int64_t j = 0;
  ReducedProfile profile;
  Int objective = 0;
};

// All unit generators in index order, then all pair generators in
// lexicographic (i, j) order.  The list is empty only when every a_j is
// nonzero and of one strict sign, which no valid instance produces.
// Note the output holds |positives| * |negatives| profiles of length m.
std::vector<Generator> enumerate_generators(const ProblemInstance& inst);

struct BoundCertificate {
  std::int64_t n = 0;
  Int bound = 0;
  ReducedProfile witness;
  // For minimize(): engaged iff the bound is attained by a single generator
  // (ties prefer units, then lexicographic pairs); disengaged for mixed
  // optima.  Oracle certificates never engage it.
  std::optional<Generator> generator;
  bool verified = false;
};

// Exact minimum with a self-verified certificate.  Deterministic: repeated
// calls return identical certificates.
BoundCertificate minimize(const ProblemInstance& inst);

// Checks a certificate against the instance from scratch: witness shape,
// nonnegative, nonzero, objective == bound > 0, constraint == 0, and the
// expanded profile's localization sum == 0.  Never throws; returns false.
bool verify_certificate(const ProblemInstance& inst, const BoundCertificate& cert);

inline constexpr std::int64_t kDefaultOracleBudget = 1'000'000;

enum class OracleStatus { Found, BudgetExceeded };

struct OracleResult {
  OracleStatus status = OracleStatus::Found;
  std::optional<BoundCertificate> certificate;  // engaged iff Found
  std::int64_t profiles_enumerated = 0;
  Int ceiling = 0;  // deepening bound from a constructively built generator
};

// Budget accounting is predictive: the exact number of profiles at each
// level is known in closed form, and the search refuses (BudgetExceeded)
// before starting a level that would push the running total past the
// budget.  Within a level profiles are enumerated in ascending
// lexicographic order, so the returned witness is the lex-least one at the
// optimal level.
OracleResult oracle_minimize(const ProblemInstance& inst, std::int64_t budget = kDefaultOracleBudget);

}  // namespace fpbound
