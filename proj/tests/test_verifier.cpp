#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "paraklein/verifier.hpp"

using namespace paraklein;

namespace {

SuiteConfig suite_of(int m, int n, int p, int cutoff) {
  SuiteConfig cfg;
  cfg.spec.m = m;
  cfg.spec.n = n;
  cfg.spec.p = p;
  cfg.spec.bosonCutoff = cutoff;
  cfg.families = all_families();
  cfg.familiesExplicit = false;
  return cfg;
}

int count_prefixed(const Report& r, const std::string& prefix) {
  int count = 0;
  for (const auto& e : r.instances)
    if (e.id.rfind(prefix, 0) == 0) ++count;
  return count;
}

}  // namespace

TEST_CASE("symbolic identities") {
  Report full = symbolic_tilde_identities(2, 2);
  CHECK(full.allPassed());
  CHECK(full.checked() == 420);
  CHECK(full.config.mode == "symbolic");

  Report fermions = symbolic_tilde_identities(1, 0);
  CHECK(fermions.allPassed());
  CHECK(fermions.checked() == 16);

  Report bosons = symbolic_tilde_identities(0, 1);
  CHECK(bosons.allPassed());
  CHECK(bosons.checked() == 8);

  CHECK_THROWS_AS(symbolic_tilde_identities(0, 0), ConfigError);
}

TEST_CASE("matrix suite covers every family plus the fixed sections") {
  SuiteConfig cfg = suite_of(1, 1, 1, 4);
  Report report = run_matrix_suite(cfg);
  CHECK(report.allPassed());
  CHECK(report.config.mode == "matrix-suite");
  CHECK(report.config.mutations == "none");
  CHECK(report.config.families.size() == 9);

  int familySum = 0;
  for (RelationFamily family : all_families())
    familySum += static_cast<int>(enumerate_family(family, 1, 1).size());
  CHECK(count_prefixed(report, "VACUUM[") == 7);
  CHECK(count_prefixed(report, "STRUCT[") == 1);
  CHECK(count_prefixed(report, "LADDER:") == 8);
  CHECK(count_prefixed(report, "ADJOINT:") == 4);
  CHECK(count_prefixed(report, "XLAYER:") == 100);
  CHECK(report.checked() == familySum + 120);

  CHECK(report.find("VACUUM[K]") != nullptr);
  CHECK(report.find("STRUCT[N-diagonal]") != nullptr);
  CHECK(report.find("ADJOINT:tf:1") != nullptr);
  CHECK(report.find("LADDER:tb-1") != nullptr);
  CHECK(report.find("PF:1,1,1:---") != nullptr);

  bool cyclicAgree = false;
  for (const auto& notice : report.notices)
    cyclicAgree = cyclicAgree ||
                  notice == "cyclic level dimensions agree between original and tilde";
  CHECK(cyclicAgree);

  // sorted by id, no duplicates
  for (int i = 1; i < report.checked(); ++i)
    CHECK(report.instances[i - 1].id < report.instances[i].id);
}

TEST_CASE("reports are deterministic") {
  SuiteConfig cfg = suite_of(1, 1, 2, 4);
  cfg.randomSeed = 7;
  Report a = run_matrix_suite(cfg);
  Report b = run_matrix_suite(cfg);
  CHECK(a.to_text() == b.to_text());
  CHECK(a.to_json() == b.to_json());
  CHECK(a.allPassed());
}

TEST_CASE("json report shape") {
  SuiteConfig cfg = suite_of(1, 1, 1, 4);
  Report report = run_matrix_suite(cfg);
  nlohmann::json j = nlohmann::json::parse(report.to_json());
  CHECK(j["schema"] == "paraklein-report/1");
  CHECK(j["kind"] == "matrix-suite");
  CHECK(j["config"]["m"] == 1);
  CHECK(j["config"]["bosonCutoff"] == 4);
  CHECK(j["config"]["mutations"] == "none");
  CHECK(j["config"]["families"].size() == 9);
  CHECK(j["instances"].is_array());
  CHECK(j["instances"].size() == static_cast<std::size_t>(report.checked()));
  CHECK(j["instances"][0].contains("id"));
  CHECK(j["instances"][0]["status"] == "pass");
  CHECK(j["summary"]["pass"] == true);
  CHECK(j["summary"]["failed"] == 0);
}

TEST_CASE("configuration errors") {
  SuiteConfig explicitInapplicable = suite_of(1, 0, 1, 0);
  explicitInapplicable.families = {RelationFamily::REL_PF};
  explicitInapplicable.familiesExplicit = true;
  CHECK_THROWS_AS(run_matrix_suite(explicitInapplicable), ConfigError);

  SuiteConfig allFiltered = suite_of(1, 0, 1, 0);
  allFiltered.families = {RelationFamily::PB, RelationFamily::REL_PF};
  CHECK_THROWS_AS(run_matrix_suite(allFiltered), ConfigError);

  SuiteConfig empty = suite_of(1, 1, 1, 4);
  empty.families.clear();
  CHECK_THROWS_AS(empty.validate(), ConfigError);

  SuiteConfig symbolic = suite_of(1, 1, 1, 4);
  symbolic.symbolicOnly = true;
  CHECK_THROWS_AS(run_matrix_suite(symbolic), ConfigError);

  SuiteConfig tight = suite_of(1, 1, 1, 2);
  tight.families = {RelationFamily::PB};  // degree 3, cutoff 2: no headroom
  CHECK_THROWS_AS(run_matrix_suite(tight), ConfigError);
}

TEST_CASE("inapplicable families are skipped with a notice when not explicit") {
  SuiteConfig cfg = suite_of(1, 0, 1, 0);
  Report report = run_matrix_suite(cfg);
  CHECK(report.allPassed());
  bool noticed = false;
  for (const auto& notice : report.notices)
    noticed = noticed || notice.find("REL_PF not applicable") != std::string::npos;
  CHECK(noticed);
  CHECK(count_prefixed(report, "PB:") == 0);
  CHECK(count_prefixed(report, "PF:") == 8);
  CHECK(count_prefixed(report, "LADDER:") == 4);
  CHECK(count_prefixed(report, "ADJOINT:") == 2);
}

TEST_CASE("a mutated build fails the suite with a witness") {
  SuiteConfig cfg = suite_of(1, 1, 1, 4);
  cfg.families = {RelationFamily::REL_PF};
  cfg.familiesExplicit = true;
  cfg.mutations.dropDressing = true;
  Report report = run_matrix_suite(cfg);
  CHECK(report.config.mutations == "drop-dressing");
  CHECK(!report.allPassed());
  bool sawWitness = false;
  for (const auto& e : report.instances) {
    if (e.passed || e.id.rfind("REL_PF", 0) != 0) continue;
    REQUIRE(e.failure.has_value());
    CHECK(e.failure->row >= 0);
    CHECK(e.failure->col >= 0);
    CHECK(!e.failure->value.empty());
    CHECK(e.failure->route == "direct");
    CHECK(e.failure->rowState.find("f=") != std::string::npos);
    sawWitness = true;
    break;
  }
  CHECK(sawWitness);
}

TEST_CASE("mutation selfcheck") {
  SuiteConfig cfg = suite_of(1, 1, 2, 4);
  Report report = mutation_selfcheck(cfg);
  CHECK(report.config.mode == "selfcheck");
  CHECK(report.checked() == 3);
  CHECK(report.allPassed());
  CHECK(report.find("SELFCHECK:drop-dressing") != nullptr);
  CHECK(report.find("SELFCHECK:tilde-unsigned") != nullptr);
  CHECK(report.find("SELFCHECK:klein-identity") != nullptr);
  CHECK(report.notices.size() == 3);
  for (const auto& notice : report.notices) {
    CHECK(notice.find("checks failed") != std::string::npos);
    CHECK(notice.find("first:") != std::string::npos);
  }

  SuiteConfig noBosons = suite_of(1, 0, 1, 0);
  CHECK_THROWS_AS(mutation_selfcheck(noBosons), ConfigError);

  SuiteConfig preMutated = suite_of(1, 1, 2, 4);
  preMutated.mutations.kleinIdentity = true;
  CHECK_THROWS_AS(mutation_selfcheck(preMutated), ConfigError);
}

TEST_CASE("random expressions are reproducible") {
  std::mt19937_64 a(42), b(42), c(43);
  bool allEqual = true;
  bool anyDiffer = false;
  for (int i = 0; i < 20; ++i) {
    Expression ea = random_expression(a, 2, 2, 3);
    Expression eb = random_expression(b, 2, 2, 3);
    Expression ec = random_expression(c, 2, 2, 3);
    allEqual = allEqual && ea == eb;
    anyDiffer = anyDiffer || !(ea == ec);
  }
  CHECK(allEqual);
  CHECK(anyDiffer);
}
