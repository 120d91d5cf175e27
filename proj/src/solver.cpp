#include "fpbound/solver.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace fpbound {

namespace {

ReducedProfile zero_profile(std::int64_t m) {
  ReducedProfile p;
  p.values.assign(static_cast<std::size_t>(m), Int{0});
  return p;
}

Generator make_unit(const ProblemInstance& inst, std::int64_t j) {
  Generator g;
  g.kind = GeneratorKind::UnitVector;
  g.i = g.j = j;
  g.profile = zero_profile(inst.m);
  g.profile.values[static_cast<std::size_t>(j - 1)] = 1;
  g.objective = inst.objective[static_cast<std::size_t>(j - 1)];
  return g;
}

// Requires a_i > 0 > a_j.
Generator make_pair(const ProblemInstance& inst, std::int64_t i, std::int64_t j) {
  const Int ai = inst.constraint[static_cast<std::size_t>(i - 1)];
  const Int aj = -inst.constraint[static_cast<std::size_t>(j - 1)];
  const Int g = gcd_int(ai, aj);
  Generator gen;
  gen.kind = GeneratorKind::OppositeSignPair;
  gen.i = i;
  gen.j = j;
  gen.profile = zero_profile(inst.m);
  gen.profile.values[static_cast<std::size_t>(i - 1)] = aj / g;
  gen.profile.values[static_cast<std::size_t>(j - 1)] = ai / g;
  gen.objective = objective_value(inst, gen.profile);
  return gen;
}

}  // namespace

std::vector<Generator> enumerate_generators(const ProblemInstance& inst) {
  std::vector<Generator> out;
  for (std::int64_t j = 1; j <= inst.m; ++j)
    if (inst.constraint[static_cast<std::size_t>(j - 1)] == 0) out.push_back(make_unit(inst, j));
  for (std::int64_t i = 1; i <= inst.m; ++i) {
    if (inst.constraint[static_cast<std::size_t>(i - 1)] <= 0) continue;
    for (std::int64_t j = 1; j <= inst.m; ++j) {
      if (inst.constraint[static_cast<std::size_t>(j - 1)] >= 0) continue;
      out.push_back(make_pair(inst, i, j));
    }
  }
  return out;
}

namespace {

// A coefficient magnitude with its objective cost, used by the split-sum DP.
struct Coin {
  std::int64_t value = 0;
  std::int32_t cost = 0;
  std::int64_t index = 0;  // 1-based variable index
};

constexpr std::int32_t kInfCost = std::numeric_limits<std::int32_t>::max() / 2;

// Hard valve on the scanned sum range.  Reaching it would mean the incumbent
// upper bound is absurdly weak; every supported instance stays thousands of
// times below it.
constexpr std::int64_t kMaxScanRange = std::int64_t{1} << 25;

void extend_dp(std::vector<std::int32_t>& dp, const std::vector<Coin>& coins, std::int64_t hi) {
  const auto lo = static_cast<std::int64_t>(dp.size());
  dp.resize(static_cast<std::size_t>(hi + 1), kInfCost);
  for (std::int64_t s = lo; s <= hi; ++s) {
    std::int32_t best = kInfCost;
    for (const Coin& c : coins) {
      if (c.value > s) continue;
      const std::int32_t prev = dp[static_cast<std::size_t>(s - c.value)];
      if (prev != kInfCost && prev + c.cost < best) best = prev + c.cost;
    }
    dp[static_cast<std::size_t>(s)] = best;
  }
}

// Walks back through an optimal representation of s, always preferring the
// lowest variable index, so reconstructed witnesses are deterministic.
void collect_coins(const std::vector<std::int32_t>& dp, const std::vector<Coin>& coins,
                   std::int64_t s, ReducedProfile& witness) {
  while (s > 0) {
    bool stepped = false;
    for (const Coin& c : coins) {
      if (c.value > s) continue;
      const std::int32_t prev = dp[static_cast<std::size_t>(s - c.value)];
      if (prev != kInfCost && prev + c.cost == dp[static_cast<std::size_t>(s)]) {
        witness.values[static_cast<std::size_t>(c.index - 1)] += 1;
        s -= c.value;
        stepped = true;
        break;
      }
    }
    if (!stepped) throw std::logic_error("split-sum reconstruction lost its own trail");
  }
}

}  // namespace

BoundCertificate minimize(const ProblemInstance& inst) {
  const std::int64_t m = inst.m;

  // Cheapest unit generator, first index on ties.
  std::int64_t unit_idx = 0;
  Int unit_obj = 0;
  for (std::int64_t j = 1; j <= m; ++j) {
    if (inst.constraint[static_cast<std::size_t>(j - 1)] != 0) continue;
    const Int obj = inst.objective[static_cast<std::size_t>(j - 1)];
    if (unit_idx == 0 || obj < unit_obj) {
      unit_idx = j;
      unit_obj = obj;
    }
  }

  // Cheapest balanced pair, lexicographically first on ties.  Only the
  // winning indices are kept; profiles are built on demand so large
  // instances do not materialize the whole quadratic generator list.
  std::int64_t pair_i = 0, pair_j = 0;
  Int pair_obj = 0;
  for (std::int64_t i = 1; i <= m; ++i) {
    const Int ai = inst.constraint[static_cast<std::size_t>(i - 1)];
    if (ai <= 0) continue;
    for (std::int64_t j = 1; j <= m; ++j) {
      const Int aj = inst.constraint[static_cast<std::size_t>(j - 1)];
      if (aj >= 0) continue;
      const Int g = gcd_int(ai, -aj);
      const Int obj = checked_add(checked_mul(inst.objective[static_cast<std::size_t>(i - 1)], (-aj) / g),
                                  checked_mul(inst.objective[static_cast<std::size_t>(j - 1)], ai / g));
      if (pair_i == 0 || obj < pair_obj) {
        pair_i = i;
        pair_j = j;
        pair_obj = obj;
      }
    }
  }

  if (unit_idx == 0 && pair_i == 0)
    throw std::logic_error("instance admits no nonzero solutions; valid instances always do");

  // Incumbent from the generator list; units win ties.
  const Int best_gen_obj = (unit_idx != 0 && (pair_i == 0 || unit_obj <= pair_obj)) ? unit_obj : pair_obj;
  Int best = best_gen_obj;

  // Split-sum refinement over mixed solutions.
  std::vector<Coin> pos, neg;
  for (std::int64_t j = 1; j <= m; ++j) {
    const Int a = inst.constraint[static_cast<std::size_t>(j - 1)];
    if (a == 0) continue;
    Coin c;
    c.value = to_i64(a < 0 ? -a : a);
    c.cost = static_cast<std::int32_t>(to_i64(inst.objective[static_cast<std::size_t>(j - 1)]));
    c.index = j;
    (a > 0 ? pos : neg).push_back(c);
  }

  std::int64_t best_s = -1;
  std::vector<std::int32_t> dp_pos, dp_neg;
  if (!pos.empty() && !neg.empty()) {
    // Best value-per-cost coin on each side gives the admissible bound
    // lb(s) = ceil(s*c/a) + ceil(s*c'/a') on any solution with split sum s.
    auto best_rate = [](const std::vector<Coin>& coins) {
      const Coin* r = &coins.front();
      for (const Coin& c : coins)
        if (static_cast<Int>(c.value) * r->cost > static_cast<Int>(r->value) * c.cost) r = &c;
      return r;
    };
    const Coin* rp = best_rate(pos);
    const Coin* rq = best_rate(neg);
    auto lower_bound_at = [&](std::int64_t s) -> Int {
      const Int lp = (static_cast<Int>(s) * rp->cost + rp->value - 1) / rp->value;
      const Int lq = (static_cast<Int>(s) * rq->cost + rq->value - 1) / rq->value;
      return lp + lq;
    };
    // Largest s that could still beat the incumbent; monotone, so bisect.
    auto cap_for = [&](Int incumbent) -> std::int64_t {
      if (lower_bound_at(1) >= incumbent) return 0;
      std::int64_t lo = 1, hi = kMaxScanRange;
      if (lower_bound_at(hi) < incumbent) return hi;
      while (lo + 1 < hi) {
        const std::int64_t mid = lo + (hi - lo) / 2;
        (lower_bound_at(mid) < incumbent ? lo : hi) = mid;
      }
      return lo;
    };

    std::int64_t cap = cap_for(best);
    if (cap >= kMaxScanRange)
      throw std::domain_error("exact search range for n = " + std::to_string(inst.n) +
                              " exceeds the built-in valve");
    dp_pos.push_back(0);
    dp_neg.push_back(0);
    const std::int64_t block = std::max<std::int64_t>(1024, 4 * m);
    std::int64_t filled = 0;
    while (filled < cap) {
      const std::int64_t hi = std::min(cap, filled + block);
      extend_dp(dp_pos, pos, hi);
      extend_dp(dp_neg, neg, hi);
      for (std::int64_t s = filled + 1; s <= hi; ++s) {
        const std::int32_t cp = dp_pos[static_cast<std::size_t>(s)];
        const std::int32_t cq = dp_neg[static_cast<std::size_t>(s)];
        if (cp == kInfCost || cq == kInfCost) continue;
        const Int total = Int{cp} + Int{cq};
        if (total < best) {
          best = total;
          best_s = s;
          cap = std::min(cap, cap_for(best));
        }
      }
      filled = hi;
    }
  }

  BoundCertificate cert;
  cert.n = inst.n;
  cert.bound = best;
  if (best_s >= 0) {
    // A mixed optimum, strictly cheaper than every single generator.
    cert.witness = zero_profile(m);
    collect_coins(dp_pos, pos, best_s, cert.witness);
    collect_coins(dp_neg, neg, best_s, cert.witness);
    cert.generator.reset();
  } else if (unit_idx != 0 && best == unit_obj) {
    cert.generator = make_unit(inst, unit_idx);
    cert.witness = cert.generator->profile;
  } else {
    cert.generator = make_pair(inst, pair_i, pair_j);
    cert.witness = cert.generator->profile;
  }
  if (!verify_certificate(inst, cert))
    throw std::logic_error("minimize produced a certificate that fails self-verification");
  cert.verified = true;
  return cert;
}

bool verify_certificate(const ProblemInstance& inst, const BoundCertificate& cert) {
  try {
    if (cert.n != inst.n) return false;
    if (static_cast<std::int64_t>(cert.witness.values.size()) != inst.m) return false;
    bool nonzero = false;
    for (const Int v : cert.witness.values) {
      if (v < 0) return false;
      if (v > 0) nonzero = true;
    }
    if (!nonzero) return false;
    if (cert.bound <= 0) return false;
    if (objective_value(inst, cert.witness) != cert.bound) return false;
    if (constraint_value(inst, cert.witness) != 0) return false;
    // The expanded profile must sit in the kernel of the unfolded form too.
    if (localization_sum(inst.n, expand_profile(inst.n, cert.witness)) != 0) return false;
    return true;
  } catch (...) {
    return false;
  }
}

namespace {

// Exact binomial coefficient, clamped: returns cap + 1 as soon as the value
// exceeds cap.  The running product stays exact (each step holds a smaller
// binomial), so the clamp decision is never off by one.
Int binom_capped(std::int64_t a, std::int64_t b, Int cap) {
  if (b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  Int r = 1;
  for (std::int64_t i = 1; i <= b; ++i) {
    r = r * (a - b + i) / i;
    if (r > cap) return cap + 1;
  }
  return r;
}

// Number of reduced profiles with objective exactly t, clamped at cap.
Int count_at_level(const ProblemInstance& inst, std::int64_t t, Int cap) {
  const std::int64_t m = inst.m;
  if (inst.parity == Parity::Odd) {
    // All m classes cost 2: levels are even, counts are compositions.
    if (t % 2 != 0) return 0;
    return binom_capped(t / 2 + m - 1, m - 1, cap);
  }
  // The middle class costs 1, the other m - 1 cost 2; summing over the
  // doubled part s leaves the middle determined.
  Int total = 0;
  for (std::int64_t s = 0; 2 * s <= t; ++s) {
    total += binom_capped(s + m - 2, std::min(s, m - 2), cap);
    if (total > cap) return cap + 1;
  }
  return total;
}

}  // namespace

OracleResult oracle_minimize(const ProblemInstance& inst, std::int64_t budget) {
  if (budget <= 0) throw std::invalid_argument("oracle budget must be positive");
  const std::int64_t m = inst.m;

  // Deepening ceiling, built here on purpose rather than taken from
  // enumerate_generators: the two routes must stay independent.
  bool have_ceiling = false;
  Int ceiling = 0;
  for (std::int64_t j = 1; j <= m; ++j) {
    if (inst.constraint[static_cast<std::size_t>(j - 1)] != 0) continue;
    const Int obj = inst.objective[static_cast<std::size_t>(j - 1)];
    if (!have_ceiling || obj < ceiling) {
      ceiling = obj;
      have_ceiling = true;
    }
  }
  {
    std::int64_t ip = 0, jn = 0;
    for (std::int64_t j = 1; j <= m && (ip == 0 || jn == 0); ++j) {
      if (ip == 0 && inst.constraint[static_cast<std::size_t>(j - 1)] > 0) ip = j;
      if (jn == 0 && inst.constraint[static_cast<std::size_t>(j - 1)] < 0) jn = j;
    }
    if (ip != 0 && jn != 0) {
      const Int ai = inst.constraint[static_cast<std::size_t>(ip - 1)];
      const Int aj = -inst.constraint[static_cast<std::size_t>(jn - 1)];
      const Int g = gcd_int(ai, aj);
      const Int obj = checked_add(checked_mul(inst.objective[static_cast<std::size_t>(ip - 1)], aj / g),
                                  checked_mul(inst.objective[static_cast<std::size_t>(jn - 1)], ai / g));
      if (!have_ceiling || obj < ceiling) {
        ceiling = obj;
        have_ceiling = true;
      }
    }
  }
  if (!have_ceiling) throw std::logic_error("instance admits no nonzero solutions; cannot set a ceiling");

  OracleResult res;
  res.ceiling = ceiling;
  const Int budget_cap = budget;
  std::int64_t enumerated = 0;
  const std::int64_t tmax = to_i64(ceiling);
  const std::int64_t cm = to_i64(inst.objective[static_cast<std::size_t>(m - 1)]);

  std::vector<std::int64_t> x(static_cast<std::size_t>(m), 0);
  for (std::int64_t t = 1; t <= tmax; ++t) {
    const Int predicted = count_at_level(inst, t, budget_cap);
    if (predicted == 0) continue;
    if (Int{enumerated} + predicted > budget_cap) {
      res.status = OracleStatus::BudgetExceeded;
      res.profiles_enumerated = enumerated;
      return res;
    }
    // Ascending lexicographic odometer over x_1..x_{m-1}; the last class
    // absorbs whatever cost remains, when it divides evenly.
    std::fill(x.begin(), x.end(), 0);
    std::int64_t used = 0;
    while (true) {
      const std::int64_t rem = t - used;
      if (rem >= 0 && rem % cm == 0) {
        x[static_cast<std::size_t>(m - 1)] = rem / cm;
        ++enumerated;
        Int acc = 0;
        for (std::int64_t j = 0; j < m; ++j)
          if (x[static_cast<std::size_t>(j)] != 0)
            acc = checked_add(acc, checked_mul(inst.constraint[static_cast<std::size_t>(j)],
                                               Int{x[static_cast<std::size_t>(j)]}));
        if (acc == 0) {
          BoundCertificate cert;
          cert.n = inst.n;
          cert.bound = t;
          cert.witness.values.assign(x.begin(), x.end());
          cert.verified = verify_certificate(inst, cert);
          if (!cert.verified) throw std::logic_error("oracle hit failed verification");
          res.status = OracleStatus::Found;
          res.certificate = std::move(cert);
          res.profiles_enumerated = enumerated;
          return res;
        }
      }
      std::int64_t j = m - 2;
      while (j >= 0) {
        const std::int64_t cj = to_i64(inst.objective[static_cast<std::size_t>(j)]);
        if (used + cj <= t) {
          x[static_cast<std::size_t>(j)] += 1;
          used += cj;
          break;
        }
        used -= cj * x[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(j)] = 0;
        --j;
      }
      if (j < 0) break;
    }
  }
  throw std::logic_error("deepening ceiling exhausted without a hit; the ceiling profile itself should have matched");
}

}  // namespace fpbound
