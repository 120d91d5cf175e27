#pragma once

// The counting model.
//
// A symplectic circle action on a closed 2n-manifold with isolated fixed
// points assigns each fixed point the number p of negative weights there.
// Write N_p for the number of fixed points with exactly p negative weights.
// Poincare duality pairs the classes, N_p = N_{n-p}, and for the
// non-Hamiltonian actions studied here the extremes vanish, N_0 = N_n = 0,
// so the free data is the reduced vector (N_1, ..., N_m) with m = floor(n/2).
//
// Two linear forms on that vector drive everything downstream:
//
//   objective   F(N) = total number of fixed points,
//   constraint  G(N) = a localization identity that must vanish,
//
// both folded through the symmetry.  With j = 1..m and k = m - j:
//
//   n = 2m:     F:  c_m = 1,  c_j = 2 for j < m
//               G:  a_m = -m, a_j = 2*(6k^2 - m)
//   n = 2m+1:   F:  c_j = 2 for all j
//               G:  a_j = 6k(k+1) - m + 1
//
// The unfolded route evaluates the per-class weight
//
//   g(p) = 6p(p-1) + (5n - 3n^2)/2        (the numerator is always even)
//
// against a full profile (N_0..N_n); expand_profile/localization_sum
// implement it, and the identities tying the folded and unfolded routes
// (localization_sum o expand = constraint for even n, twice it for odd n;
// total of the expansion = objective) are pinned by the test suite.
//
// Everything is exact 128-bit integer arithmetic; see int128.hpp.

#include <cstdint>
#include <vector>

#include "fpbound/int128.hpp"

namespace fpbound {

enum class Parity { Even, Odd };

// N_1..N_m, the independent half of a symmetric fixed-point profile.
struct ReducedProfile {
  std::vector<Int> values;
  bool operator==(const ReducedProfile&) const = default;
};

// N_0..N_n, a full profile; symmetric ones satisfy N_p = N_{n-p}.
struct FullProfile {
  std::vector<Int> values;
  bool operator==(const FullProfile&) const = default;
};

struct ProblemInstance {
  std::int64_t n = 0;
  std::int64_t m = 0;
  Parity parity = Parity::Even;
  std::vector<Int> objective;   // c_1..c_m, all positive
  std::vector<Int> constraint;  // a_1..a_m
};

// Half-dimensions below 3 are rejected: the model assumes dim M = 2n >= 6.
// An upper guard keeps every coefficient and accumulator well inside the
// 128-bit range.
ProblemInstance build_instance(std::int64_t n);

// m = floor(n/2), with the same validation as build_instance.
std::int64_t reduced_size(std::int64_t n);

Int objective_value(const ProblemInstance& inst, const ReducedProfile& p);
Int constraint_value(const ProblemInstance& inst, const ReducedProfile& p);

// Per-class localization weight g(p); requires 0 <= p <= n.
Int g_integrand(std::int64_t p, std::int64_t n);

// Reflects a reduced profile to the full symmetric profile with
// N_0 = N_n = 0.  For even n the middle class N_m appears once.
FullProfile expand_profile(std::int64_t n, const ReducedProfile& p);

// sum_p N_p * g(p) over a full profile.
Int localization_sum(std::int64_t n, const FullProfile& f);

}  // namespace fpbound
