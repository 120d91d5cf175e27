#include <stdexcept>

#include "doctest.h"
#include "fpbound/analysis.hpp"
#include "fpbound/solver.hpp"

using namespace fpbound;

TEST_CASE("family classification") {
  SUBCASE("pinned examples") {
    CHECK(classify(3).family == Family::IdentityConstraint);

    const ClassificationReport even12 = classify(12);
    CHECK(even12.family == Family::EvenDegenerate);
    CHECK(even12.k == 1);

    const ClassificationReport even48 = classify(48);
    CHECK(even48.family == Family::EvenDegenerate);
    CHECK(even48.k == 2);

    const ClassificationReport odd27 = classify(27);
    CHECK(odd27.family == Family::OddDegenerate);
    CHECK(odd27.k == 1);

    const ClassificationReport gen8 = classify(8);
    CHECK(gen8.family == Family::Generic);
    CHECK(*gen8.ell == 0);

    const ClassificationReport gen9 = classify(9);
    CHECK(gen9.family == Family::Generic);
    CHECK(*gen9.ell == 0);

    const ClassificationReport gen26 = classify(26);
    CHECK(gen26.family == Family::Generic);
    CHECK(*gen26.ell == 1);

    const ClassificationReport gen2000 = classify(2000);
    CHECK(gen2000.family == Family::Generic);
    CHECK(*gen2000.ell == 12);
  }

  SUBCASE("band parameter satisfies its defining inequalities") {
    for (std::int64_t n = 4; n <= 1200; ++n) {
      CAPTURE(n);
      const ClassificationReport rep = classify(n);
      const std::int64_t m = reduced_size(n);
      if (rep.family == Family::EvenDegenerate) {
        CHECK(m == 6 * rep.k * rep.k);
      } else if (rep.family == Family::OddDegenerate) {
        CHECK(m - 1 == 6 * rep.k * (rep.k + 1));
      } else {
        REQUIRE(rep.family == Family::Generic);
        const std::int64_t ell = *rep.ell;
        if (n % 2 == 0) {
          CHECK(6 * ell * ell <= m);
          CHECK(m < 6 * (ell + 1) * (ell + 1));
        } else {
          CHECK(6 * ell * (ell + 1) <= m - 1);
          CHECK(m - 1 < 6 * (ell + 1) * (ell + 2));
        }
      }
    }
  }

  SUBCASE("degenerate families are exactly the vanishing coefficients") {
    for (std::int64_t n = 4; n <= 400; ++n) {
      CAPTURE(n);
      const ProblemInstance inst = build_instance(n);
      bool has_zero = false;
      for (const Int a : inst.constraint) has_zero = has_zero || (a == 0);
      const Family fam = classify(n).family;
      CHECK(has_zero == (fam != Family::Generic));
    }
  }
}

TEST_CASE("support bands") {
  const SupportBands b4 = support_bands(4);
  CHECK(b4.near_lo == 2);
  CHECK(b4.near_hi == 2);
  CHECK(b4.far_lo == 1);
  CHECK(b4.far_hi == 1);

  // Odd n: the far band reaches the first negative class on purpose.
  const SupportBands b9 = support_bands(9);
  CHECK(b9.near_lo == 4);
  CHECK(b9.near_hi == 4);
  CHECK(b9.far_lo == 1);
  CHECK(b9.far_hi == 4);

  const SupportBands b26 = support_bands(26);
  CHECK(b26.near_lo == 12);
  CHECK(b26.near_hi == 13);
  CHECK(b26.far_lo == 1);
  CHECK(b26.far_hi == 11);

  CHECK_THROWS_AS(support_bands(3), std::invalid_argument);
  CHECK_THROWS_AS(support_bands(12), std::invalid_argument);
  CHECK_THROWS_AS(support_bands(27), std::invalid_argument);
}

TEST_CASE("support partition of profiles") {
  const ProblemInstance inst = build_instance(4);
  ReducedProfile p;
  p.values = {1, 4};
  SupportPartition part = check_support_partition(inst, p);
  CHECK(part.near_band_positive);
  CHECK(part.far_band_positive);

  p.values = {1, 0};
  part = check_support_partition(inst, p);
  CHECK(!part.near_band_positive);
  CHECK(part.far_band_positive);

  p.values = {1, 2, 3};
  CHECK_THROWS_AS(check_support_partition(inst, p), std::invalid_argument);

  const ProblemInstance deg = build_instance(12);
  ReducedProfile q;
  q.values = {0, 0, 0, 0, 1, 0};
  CHECK_THROWS_AS(check_support_partition(deg, q), std::invalid_argument);
}

TEST_CASE("count floors per support case") {
  CHECK(min_count_given_support(4, SupportCase::EvenMiddleOrFar) == 3);
  CHECK(min_count_given_support(4, SupportCase::EvenNearBand) == 4);
  CHECK(min_count_given_support(5, SupportCase::OddAny) == 4);
  CHECK_THROWS_AS(min_count_given_support(5, SupportCase::EvenMiddleOrFar), std::invalid_argument);
  CHECK_THROWS_AS(min_count_given_support(5, SupportCase::EvenNearBand), std::invalid_argument);
  CHECK_THROWS_AS(min_count_given_support(4, SupportCase::OddAny), std::invalid_argument);
}

TEST_CASE("conjecture thresholds") {
  const ConjectureReport r8 = conjecture_report(8);
  CHECK(r8.bound == 3);
  CHECK(r8.kosniowski_threshold == 5);
  CHECK(r8.frankel_threshold == 9);
  CHECK(!r8.kosniowski_ok);
  CHECK(!r8.frankel_ok);

  const ConjectureReport r4 = conjecture_report(4);
  CHECK(r4.bound == 6);
  CHECK(r4.kosniowski_ok);
  CHECK(r4.frankel_ok);

  const ConjectureReport r6 = conjecture_report(6);
  CHECK(r6.bound == 4);
  CHECK(r6.kosniowski_threshold == 4);
  CHECK(r6.kosniowski_ok);
  CHECK(!r6.frankel_ok);

  const ConjectureReport r12 = conjecture_report(12);
  CHECK(r12.bound == 2);
  CHECK(!r12.kosniowski_ok);
  CHECK(!r12.frankel_ok);
}

TEST_CASE("dimension-8 characteristic number") {
  const Chern8Result six = chern8_invariant(6);
  CHECK(six.numerator == 2);
  CHECK(six.denominator == 1);
  CHECK(six.integral);

  const Chern8Result nine = chern8_invariant(9);
  CHECK(nine.numerator == 3);
  CHECK(nine.integral);

  const Chern8Result seven = chern8_invariant(7);
  CHECK(seven.numerator == 7);
  CHECK(seven.denominator == 3);
  CHECK(!seven.integral);

  const Chern8Result zero = chern8_invariant(0);
  CHECK(zero.numerator == 0);
  CHECK(zero.integral);

  CHECK_THROWS_AS(chern8_invariant(-1), std::invalid_argument);
}
