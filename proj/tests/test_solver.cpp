#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "fpbound/solver.hpp"
#include "pinned_values.h"

using namespace fpbound;

namespace {

std::vector<Int> vals(const std::vector<Int>& v) { return v; }

}  // namespace

TEST_CASE("generator enumeration") {
  SUBCASE("n = 4: a single balanced pair") {
    const auto gens = enumerate_generators(build_instance(4));
    REQUIRE(gens.size() == 1);
    CHECK(gens[0].kind == GeneratorKind::OppositeSignPair);
    CHECK(gens[0].i == 1);
    CHECK(gens[0].j == 2);
    CHECK(gens[0].profile.values == vals({1, 4}));
    CHECK(gens[0].objective == 6);
  }
  SUBCASE("n = 3: a single unit vector") {
    const auto gens = enumerate_generators(build_instance(3));
    REQUIRE(gens.size() == 1);
    CHECK(gens[0].kind == GeneratorKind::UnitVector);
    CHECK(gens[0].i == 1);
    CHECK(gens[0].profile.values == vals({1}));
    CHECK(gens[0].objective == 2);
  }
  SUBCASE("n = 12: units first, then pairs in lexicographic order") {
    const auto gens = enumerate_generators(build_instance(12));
    REQUIRE(gens.size() == 5);
    CHECK(gens[0].kind == GeneratorKind::UnitVector);
    CHECK(gens[0].i == 5);
    CHECK(gens[0].objective == 2);
    for (std::size_t t = 1; t < 5; ++t) {
      CHECK(gens[t].kind == GeneratorKind::OppositeSignPair);
      CHECK(gens[t].i == static_cast<std::int64_t>(t));
      CHECK(gens[t].j == 6);
    }
    // Pair (4, 6) reduces by gcd(36, 6) = 6.
    CHECK(gens[4].profile.values == vals({0, 0, 0, 1, 0, 6}));
    CHECK(gens[4].objective == 8);
  }
}

TEST_CASE("exact minima match the pinned table") {
  for (std::int64_t n = 3; n <= 26; ++n) {
    CAPTURE(n);
    const BoundCertificate cert = minimize(build_instance(n));
    CHECK(cert.bound == Int{kPinnedBounds[n - kPinnedFirstN]});
    CHECK(cert.verified);
  }
  CHECK(minimize(build_instance(50)).bound == 12);
  CHECK(minimize(build_instance(100)).bound == 6);
  CHECK(minimize(build_instance(200)).bound == 3);
  CHECK(minimize(build_instance(500)).bound == 6);
}

TEST_CASE("witnesses are the pinned deterministic ones") {
  SUBCASE("n = 4") {
    const BoundCertificate cert = minimize(build_instance(4));
    CHECK(cert.witness.values == vals({1, 4}));
    REQUIRE(cert.generator.has_value());
    CHECK(cert.generator->kind == GeneratorKind::OppositeSignPair);
  }
  SUBCASE("n = 5") {
    const BoundCertificate cert = minimize(build_instance(5));
    CHECK(cert.witness.values == vals({1, 11}));
    REQUIRE(cert.generator.has_value());
  }
  SUBCASE("n = 12 keeps the cheap unit vector") {
    const BoundCertificate cert = minimize(build_instance(12));
    CHECK(cert.witness.values == vals({0, 0, 0, 0, 1, 0}));
    REQUIRE(cert.generator.has_value());
    CHECK(cert.generator->kind == GeneratorKind::UnitVector);
    CHECK(cert.generator->i == 5);
  }
  SUBCASE("n = 14: mixed optimum beats every generator") {
    const BoundCertificate cert = minimize(build_instance(14));
    CHECK(cert.bound == 12);
    CHECK(cert.witness.values == vals({0, 0, 0, 0, 1, 3, 4}));
    CHECK(!cert.generator.has_value());
  }
  SUBCASE("n = 20") {
    const BoundCertificate cert = minimize(build_instance(20));
    CHECK(cert.bound == 6);
    CHECK(cert.witness.values == vals({0, 0, 0, 0, 0, 0, 0, 1, 1, 2}));
    CHECK(!cert.generator.has_value());
  }
  SUBCASE("n = 26") {
    const BoundCertificate cert = minimize(build_instance(26));
    CHECK(cert.bound == 12);
    CHECK(cert.witness.values == vals({0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 1, 4}));
    CHECK(!cert.generator.has_value());
  }
}

TEST_CASE("generator attribution across the pinned range") {
  for (std::int64_t n = 3; n <= 26; ++n) {
    CAPTURE(n);
    bool mixed = false;
    for (const std::int64_t v : kPinnedMixedOptima) mixed = mixed || (v == n);
    const BoundCertificate cert = minimize(build_instance(n));
    CHECK(cert.generator.has_value() == !mixed);
  }
}

TEST_CASE("minimize is deterministic") {
  for (const std::int64_t n : {4, 12, 14, 20, 26, 137}) {
    const BoundCertificate a = minimize(build_instance(n));
    const BoundCertificate b = minimize(build_instance(n));
    CHECK(a.bound == b.bound);
    CHECK(a.witness == b.witness);
    CHECK(a.generator.has_value() == b.generator.has_value());
  }
}

TEST_CASE("certificate verification rejects tampering") {
  const ProblemInstance inst = build_instance(10);
  const BoundCertificate good = minimize(inst);
  REQUIRE(verify_certificate(inst, good));

  BoundCertificate bad = good;
  bad.bound += 1;
  CHECK(!verify_certificate(inst, bad));

  bad = good;
  bad.witness.values[0] += 1;
  CHECK(!verify_certificate(inst, bad));

  bad = good;
  bad.n = 11;
  CHECK(!verify_certificate(inst, bad));

  bad = good;
  bad.witness.values.assign(bad.witness.values.size(), 0);
  bad.bound = 0;
  CHECK(!verify_certificate(inst, bad));

  bad = good;
  bad.witness.values[0] = -1;
  CHECK(!verify_certificate(inst, bad));

  bad = good;
  bad.witness.values.pop_back();
  CHECK(!verify_certificate(inst, bad));
}

TEST_CASE("oracle finds the same minima by pure enumeration") {
  SUBCASE("n = 4") {
    const OracleResult res = oracle_minimize(build_instance(4));
    REQUIRE(res.status == OracleStatus::Found);
    CHECK(res.certificate->bound == 6);
    CHECK(res.certificate->witness.values == vals({1, 4}));
    CHECK(res.certificate->verified);
    CHECK(!res.certificate->generator.has_value());
    CHECK(res.profiles_enumerated == 13);
    CHECK(res.ceiling == 6);
  }
  SUBCASE("n = 6") {
    const OracleResult res = oracle_minimize(build_instance(6));
    REQUIRE(res.status == OracleStatus::Found);
    CHECK(res.certificate->bound == 4);
    CHECK(res.certificate->witness.values == vals({0, 1, 2}));
    CHECK(res.profiles_enumerated == 9);
    CHECK(res.ceiling == 16);
  }
  SUBCASE("n = 7") {
    const OracleResult res = oracle_minimize(build_instance(7));
    REQUIRE(res.status == OracleStatus::Found);
    CHECK(res.certificate->bound == 12);
    CHECK(res.certificate->witness.values == vals({0, 1, 5}));
    CHECK(res.profiles_enumerated == 57);
  }
  SUBCASE("n = 3") {
    const OracleResult res = oracle_minimize(build_instance(3));
    REQUIRE(res.status == OracleStatus::Found);
    CHECK(res.certificate->bound == 2);
    CHECK(res.certificate->witness.values == vals({1}));
    CHECK(res.profiles_enumerated == 1);
    CHECK(res.ceiling == 2);
  }
  SUBCASE("agreement with the solver on a quick range") {
    for (std::int64_t n = 3; n <= 16; ++n) {
      CAPTURE(n);
      const OracleResult res = oracle_minimize(build_instance(n));
      REQUIRE(res.status == OracleStatus::Found);
      CHECK(res.certificate->bound == minimize(build_instance(n)).bound);
    }
  }
}

TEST_CASE("oracle budget accounting is predictive") {
  const ProblemInstance inst = build_instance(6);
  // Levels cost 1, 3, 3, 6, ... profiles.  A budget of 5 admits levels 1
  // and 2 (4 profiles) but refuses level 3 outright.
  const OracleResult tiny = oracle_minimize(inst, 5);
  CHECK(tiny.status == OracleStatus::BudgetExceeded);
  CHECK(tiny.profiles_enumerated == 4);
  CHECK(!tiny.certificate.has_value());

  // Budget 12 still refuses level 4 even though the hit would have been
  // the 9th profile; the whole level must fit in advance.
  const OracleResult close = oracle_minimize(inst, 12);
  CHECK(close.status == OracleStatus::BudgetExceeded);
  CHECK(close.profiles_enumerated == 7);

  const OracleResult enough = oracle_minimize(inst, 13);
  REQUIRE(enough.status == OracleStatus::Found);
  CHECK(enough.profiles_enumerated == 9);

  CHECK_THROWS_AS(oracle_minimize(inst, 0), std::invalid_argument);
  CHECK_THROWS_AS(oracle_minimize(inst, -3), std::invalid_argument);
}

TEST_CASE("oracle refusal point at the default budget for n = 25") {
  const OracleResult res = oracle_minimize(build_instance(25));
  CHECK(res.status == OracleStatus::BudgetExceeded);
  CHECK(res.profiles_enumerated == 646645);
  CHECK(res.ceiling == 144);
}
