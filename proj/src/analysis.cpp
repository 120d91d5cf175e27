#include "fpbound/analysis.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fpbound/solver.hpp"

namespace fpbound {

namespace {

// Floor of sqrt(v), seeded with the double sqrt and fixed up exactly.
// v stays below ~5e8 here, so r*r never strains 64 bits.
std::int64_t isqrt_floor(std::int64_t v) {
  if (v < 0) throw std::invalid_argument("isqrt of a negative number");
  if (v == 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

}  // namespace

ClassificationReport classify(std::int64_t n) {
  const std::int64_t m = reduced_size(n);  // validates the range of n
  ClassificationReport rep;
  rep.n = n;
  if (n == 3) {
    rep.family = Family::IdentityConstraint;
    return rep;
  }
  if (n % 2 == 0) {
    if (m % 6 == 0) {
      const std::int64_t q = m / 6;
      const std::int64_t k = isqrt_floor(q);
      if (k >= 1 && k * k == q) {
        rep.family = Family::EvenDegenerate;
        rep.k = k;
        return rep;
      }
    }
    const std::int64_t ell = isqrt_floor(m / 6);
    if (!(6 * ell * ell <= m && m < 6 * (ell + 1) * (ell + 1)))
      throw std::logic_error("band parameter failed its two-sided check");
    rep.family = Family::Generic;
    rep.ell = ell;
    return rep;
  }
  const std::int64_t r = (m - 1) / 6;
  if ((m - 1) % 6 == 0) {
    const std::int64_t k = isqrt_floor(r);
    if (k >= 1 && k * (k + 1) == r) {
      rep.family = Family::OddDegenerate;
      rep.k = k;
      return rep;
    }
  }
  // Largest ell with 6*ell*(ell+1) <= m - 1; the isqrt seed lands within
  // one step, the loops absorb the rounding either way.
  std::int64_t ell = isqrt_floor(r);
  while (ell > 0 && 6 * ell * (ell + 1) > m - 1) --ell;
  while (6 * (ell + 1) * (ell + 2) <= m - 1) ++ell;
  if (!(6 * ell * (ell + 1) <= m - 1 && m - 1 < 6 * (ell + 1) * (ell + 2)))
    throw std::logic_error("band parameter failed its two-sided check");
  rep.family = Family::Generic;
  rep.ell = ell;
  return rep;
}

SupportBands support_bands(std::int64_t n) {
  const ClassificationReport rep = classify(n);
  if (rep.family != Family::Generic)
    throw std::invalid_argument("support bands are defined for generic n only; n = " +
                                std::to_string(n) + " is not generic");
  const std::int64_t m = reduced_size(n);
  const std::int64_t ell = *rep.ell;
  SupportBands b;
  b.near_lo = m - ell;
  b.near_hi = m;
  b.far_lo = 1;
  b.far_hi = (n % 2 == 0) ? m - ell - 1 : m - ell;
  return b;
}

SupportPartition check_support_partition(const ProblemInstance& inst, const ReducedProfile& profile) {
  const SupportBands b = support_bands(inst.n);
  if (static_cast<std::int64_t>(profile.values.size()) != inst.m)
    throw std::invalid_argument("profile length does not match the instance");
  auto band_sum = [&](std::int64_t lo, std::int64_t hi) {
    Int s = 0;
    for (std::int64_t j = lo; j <= hi; ++j)
      s = checked_add(s, profile.values[static_cast<std::size_t>(j - 1)]);
    return s;
  };
  SupportPartition part;
  part.near_band_positive = band_sum(b.near_lo, b.near_hi) > 0;
  part.far_band_positive = band_sum(b.far_lo, b.far_hi) > 0;
  return part;
}

Int min_count_given_support(std::int64_t n, SupportCase c) {
  reduced_size(n);  // validates the range of n
  const bool even = (n % 2 == 0);
  switch (c) {
    case SupportCase::EvenMiddleOrFar:
      if (!even) throw std::invalid_argument("support case applies to even n only");
      return 3;
    case SupportCase::EvenNearBand:
      if (!even) throw std::invalid_argument("support case applies to even n only");
      return 4;
    case SupportCase::OddAny:
      if (even) throw std::invalid_argument("support case applies to odd n only");
      return 4;
  }
  throw std::logic_error("unhandled support case");
}

ConjectureReport conjecture_report(std::int64_t n) {
  const ProblemInstance inst = build_instance(n);
  const BoundCertificate cert = minimize(inst);
  ConjectureReport rep;
  rep.n = n;
  rep.bound = cert.bound;
  rep.kosniowski_threshold = n / 2 + 1;
  rep.frankel_threshold = n + 1;
  rep.kosniowski_ok = cert.bound >= Int{rep.kosniowski_threshold};
  rep.frankel_ok = cert.bound >= Int{rep.frankel_threshold};
  return rep;
}

Chern8Result chern8_invariant(Int fixed_point_count) {
  if (fixed_point_count < 0)
    throw std::invalid_argument("fixed-point count cannot be negative");
  Chern8Result r;
  const Int g = gcd_int(fixed_point_count, 3);
  r.numerator = fixed_point_count / g;
  r.denominator = Int{3} / g;
  r.integral = (r.denominator == 1);
  return r;
}

}  // namespace fpbound
