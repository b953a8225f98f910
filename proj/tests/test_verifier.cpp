#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "codegree/criterion.hpp"
#include "codegree/verifier.hpp"

using namespace codegree;

namespace {

const Catalog& cat() { return Catalog::bundled(); }

GridConfig small_grid() {
  GridConfig cfg;
  cfg.q_max = 32;
  cfg.n_max = 6;
  cfg.alt_max = 12;
  cfg.m_max = 3;
  cfg.f_max = 10;
  cfg.p_max = 50;
  cfg.t_max = 10;
  return cfg;
}

bool names(const std::vector<CaseRecord>& cases, const std::string& needle) {
  return std::any_of(cases.begin(), cases.end(), [&](const CaseRecord& c) { return c.params.find(needle) != std::string::npos; });
}

std::vector<VerifyReport> all_reports(const GridConfig& cfg, Execution exec) {
  return {verify_lemma_p1(cfg, cat(), exec),       verify_an_algebra(cfg, cat(), exec),
          verify_lemma_arith(cfg, exec),           verify_lemma_simple(cfg),
          verify_theorem_cases(cfg, cat(), exec),  verify_simple_g_cases(cfg, cat(), exec)};
}

}  // namespace

TEST_CASE("grid helpers") {
  std::vector<BigInt> expect{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19};
  CHECK(prime_powers_up_to(20) == expect);
  CHECK(primes_up_to(30) == std::vector<unsigned long>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  GridConfig bad;
  bad.q_max = 3;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  bad = GridConfig();
  bad.k = Rational(0);
  CHECK_THROWS_AS(bad.validate(), DomainError);
  CHECK(GridConfig().k == constant_a());
}

TEST_CASE("lemma p1 on the default grid") {
  const auto r = verify_lemma_p1(GridConfig(), cat());
  CHECK(r.consistent());
  CHECK(r.failures.empty());
  // The ON row meets the bound with equality exactly at k = a.
  REQUIRE(r.equalities.size() == 1);
  CHECK(r.equalities[0].params == "ON");
  CHECK_FALSE(r.equalities[0].strict_claimed);
  CHECK(r.clean());
  CHECK_FALSE(names(r.equalities, "A_"));
  CHECK(r.cases_checked > 4000);
}

TEST_CASE("lemma p1 strictly above a") {
  GridConfig cfg = small_grid();
  cfg.k = constant_a() + Rational(1, 1000000);
  const auto r = verify_lemma_p1(cfg, cat());
  CHECK(r.equalities.empty());
  CHECK(r.failures.empty());
  CHECK(r.strict_passes == r.cases_checked);
}

TEST_CASE("lemma p1 examples") {
  // A_2(2): 168 > 27 with the special degree 3 character
  CHECK(cat().order(GroupDescriptor::lie(Family::A, 2, 2)).value() > 27);
  // Tits: a * |Tits| > 27^3
  CHECK(constant_a() * Rational(cat().order(GroupDescriptor::tits()).value()) > Rational(27 * 27 * 27));
  GridConfig cfg = small_grid();
  cfg.q_max = 100;
  cfg.n_max = 12;
  const auto r = verify_lemma_p1(cfg, cat());
  CHECK_FALSE(names(r.failures, "A_"));
  CHECK_FALSE(names(r.equalities, "A_"));
  CHECK_FALSE(names(r.failures, "Tits"));
}

TEST_CASE("lemma p1 is not vacuous") {
  GridConfig cfg = small_grid();
  cfg.k = Rational(1);
  const auto r = verify_lemma_p1(cfg, cat());
  CHECK(names(r.failures, "ON"));
  CHECK(r.consistent());
}

TEST_CASE("A_n algebra") {
  const auto r = verify_an_algebra(GridConfig(), cat());
  CHECK(r.consistent());
  CHECK(r.failures.empty());
  REQUIRE(r.equalities.size() == 1);
  CHECK(r.equalities[0].params.find("A_3(2)") != std::string::npos);
  CHECK_FALSE(r.equalities[0].strict_claimed);
  CHECK(r.clean());
  // n = 2 branch examples
  CHECK(BigInt(3 * 3 * 3 - 1) > BigInt(16));
  CHECK(BigInt(4 * 4 * 4 - 1) > BigInt(25));
}

TEST_CASE("lemma arith") {
  for (auto [p_max, f_max] : {std::pair{3ul, 3ul}, {50ul, 10ul}, {1000ul, 64ul}}) {
    GridConfig cfg;
    cfg.p_max = p_max;
    cfg.f_max = f_max;
    const auto r = verify_lemma_arith(cfg);
    CAPTURE(p_max);
    CHECK(r.consistent());
    CHECK(r.failures.empty());
    REQUIRE(r.equalities.size() == 1);
    CHECK(r.equalities[0].params == "q=3^3");
    CHECK(r.equalities[0].strict_claimed);
    CHECK_FALSE(r.clean());
    CHECK(r.clean(true));
    // independent count: 3^f is 3 mod 6 for every f, and no other prime qualifies
    CHECK(r.cases_checked == f_max);
    REQUIRE(r.facts.size() == 1);
    CHECK(r.facts[0].holds);
  }
}

TEST_CASE("lemma simple") {
  const auto r = verify_lemma_simple(GridConfig());
  CHECK(r.consistent());
  CHECK(r.clean());
  CHECK(r.cases_checked == 50);
  CHECK(BigInt(16) < 60);
  CHECK(BigInt(81) < BigInt(60 * 60 * 60));
}

TEST_CASE("theorem cases at a") {
  const auto r = verify_theorem_cases(GridConfig(), cat());
  CHECK(r.consistent());
  CHECK(r.clean());
  CHECK(r.equalities.empty());
  // q = 3 value check: 2a * 3^5 (3^6 - 1) / (13^3 7^3)
  const Rational lhs = Rational(2) * constant_a() * Rational(243 * 728) / Rational(2197 * 343);
  CHECK(lhs > Rational(1));
  CHECK(lhs.decimal(4) == "1.3355");
  CHECK(lhs == Rational(BigInt(2) * 1663488 * 243 * 728, BigInt(584815) * 753571));
  // case (4)
  CHECK(constant_a() * Rational(FactoredInteger::parse("2^18*3^9*5^2*7*11*13").value()) > Rational(156 * 156 * 156));
}

TEST_CASE("theorem cases are not vacuous") {
  GridConfig cfg = small_grid();
  cfg.k = Rational(1);
  const auto r = verify_theorem_cases(cfg, cat());
  CHECK(r.consistent());
  CHECK(names(r.failures, "(2b) G_2 q=3"));
  CHECK(names(r.failures, "q=3 value"));
  cfg.k = Rational(5, 2);
  CHECK(verify_theorem_cases(cfg, cat()).consistent());
}

TEST_CASE("case (3) at k = 3") {
  GridConfig cfg = small_grid();
  cfg.k = Rational(3);
  cfg.m_max = 1;
  const auto r = verify_theorem_cases(cfg, cat());
  CHECK_FALSE(names(r.failures, "(3)"));
  // direct: 3 * Q^3 (Q^3 + 1)(Q - 1) > 3^3 (Q^2 - Q + 1)^3 at Q = 27
  const BigInt Q = 27;
  CHECK(3 * Q * Q * Q * (Q * Q * Q + 1) * (Q - 1) > 27 * pow(BigInt(Q * Q - Q + 1), 3));
}

TEST_CASE("simple G cases") {
  const auto r = verify_simple_g_cases(GridConfig(), cat());
  CHECK(r.consistent());
  CHECK(r.clean());
  CHECK(r.equalities.empty());
  CHECK(constant_a() * Rational(60) > Rational(27));
  const BigInt q = 5;
  CHECK(3 * pow(q * q - 1, 4) > pow(q, 6) - 1);
  CHECK(BigInt(26) * 21952 > 19682);
}

TEST_CASE("serial and parallel paths agree") {
  GridConfig cfg = small_grid();
  CHECK(all_reports(cfg, Execution::serial) == all_reports(cfg, Execution::parallel));
  cfg.k = Rational(1);
  CHECK(all_reports(cfg, Execution::serial) == all_reports(cfg, Execution::parallel));
}

TEST_CASE("every report is consistent") {
  for (const Rational& k : {Rational(1), Rational(5, 2), constant_a(), Rational(3), Rational(100)}) {
    GridConfig cfg = small_grid();
    cfg.k = k;
    for (const auto& r : all_reports(cfg, Execution::parallel)) {
      CAPTURE(r.check_name);
      CHECK(r.consistent());
      CHECK(r.cases_checked > 0);
    }
  }
}
