#include "fpbound/model.hpp"

#include <stdexcept>
#include <string>

namespace fpbound {

namespace {

// Above this the coefficient formulas would still fit in 128 bits with room
// to spare, but profile entries and dot products no longer have a safety
// margin; nothing meaningful lives up there anyway.
constexpr std::int64_t kMaxN = 999'999'999;

void validate_n(std::int64_t n) {
  if (n < 3)
    throw std::invalid_argument("n = " + std::to_string(n) +
                                " is out of range: the model assumes dim M = 2n >= 6");
  if (n > kMaxN)
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the supported range (n <= " +
                                std::to_string(kMaxN) + ")");
}

void validate_reduced(const ProblemInstance& inst, const ReducedProfile& p) {
  if (static_cast<std::int64_t>(p.values.size()) != inst.m)
    throw std::invalid_argument("reduced profile has " + std::to_string(p.values.size()) +
                                " entries, expected m = " + std::to_string(inst.m));
}

}  // namespace

std::int64_t reduced_size(std::int64_t n) {
  validate_n(n);
  return n / 2;
}

ProblemInstance build_instance(std::int64_t n) {
  validate_n(n);
  ProblemInstance inst;
  inst.n = n;
  inst.parity = (n % 2 == 0) ? Parity::Even : Parity::Odd;
  inst.m = n / 2;
  const Int m = inst.m;
  inst.objective.assign(static_cast<std::size_t>(inst.m), Int{2});
  inst.constraint.resize(static_cast<std::size_t>(inst.m));
  if (inst.parity == Parity::Even) {
    inst.objective.back() = 1;
    for (std::int64_t j = 1; j < inst.m; ++j) {
      const Int k = m - j;
      inst.constraint[static_cast<std::size_t>(j - 1)] = 2 * (6 * k * k - m);
    }
    inst.constraint.back() = -m;
  } else {
    for (std::int64_t j = 1; j <= inst.m; ++j) {
      const Int k = m - j;
      inst.constraint[static_cast<std::size_t>(j - 1)] = 6 * k * (k + 1) - m + 1;
    }
  }
  return inst;
}

Int objective_value(const ProblemInstance& inst, const ReducedProfile& p) {
  validate_reduced(inst, p);
  Int acc = 0;
  for (std::size_t j = 0; j < p.values.size(); ++j)
    acc = checked_add(acc, checked_mul(inst.objective[j], p.values[j]));
  return acc;
}

Int constraint_value(const ProblemInstance& inst, const ReducedProfile& p) {
  validate_reduced(inst, p);
  Int acc = 0;
  for (std::size_t j = 0; j < p.values.size(); ++j)
    acc = checked_add(acc, checked_mul(inst.constraint[j], p.values[j]));
  return acc;
}

Int g_integrand(std::int64_t p, std::int64_t n) {
  validate_n(n);
  if (p < 0 || p > n)
    throw std::invalid_argument("g is defined for 0 <= p <= n; got p = " + std::to_string(p));
  const Int N = n;
  const Int P = p;
  const Int numerator = checked_sub(checked_mul(5, N), checked_mul(3, checked_mul(N, N)));
  // n(5 - 3n) is even for every integer n; a remainder here would mean the
  // model itself is broken, not the input.
  if (numerator % 2 != 0) throw std::logic_error("odd localization numerator for n = " + std::to_string(n));
  return checked_add(checked_mul(6, checked_mul(P, P - 1)), numerator / 2);
}

FullProfile expand_profile(std::int64_t n, const ReducedProfile& p) {
  const std::int64_t m = reduced_size(n);
  if (static_cast<std::int64_t>(p.values.size()) != m)
    throw std::invalid_argument("reduced profile has " + std::to_string(p.values.size()) +
                                " entries, expected m = " + std::to_string(m));
  FullProfile f;
  f.values.assign(static_cast<std::size_t>(n + 1), Int{0});
  for (std::int64_t j = 1; j <= m; ++j) {
    f.values[static_cast<std::size_t>(j)] = p.values[static_cast<std::size_t>(j - 1)];
    f.values[static_cast<std::size_t>(n - j)] = p.values[static_cast<std::size_t>(j - 1)];
  }
  return f;
}

Int localization_sum(std::int64_t n, const FullProfile& f) {
  validate_n(n);
  if (static_cast<std::int64_t>(f.values.size()) != n + 1)
    throw std::invalid_argument("full profile has " + std::to_string(f.values.size()) +
                                " entries, expected n + 1 = " + std::to_string(n + 1));
  Int acc = 0;
  for (std::int64_t p = 0; p <= n; ++p)
    acc = checked_add(acc, checked_mul(f.values[static_cast<std::size_t>(p)], g_integrand(p, n)));
  return acc;
}

}  // namespace fpbound
