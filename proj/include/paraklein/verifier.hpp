#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "paraklein/fock.hpp"
#include "paraklein/relations.hpp"

namespace paraklein {

struct SuiteConfig {
  ModeSpec spec;
  std::vector<RelationFamily> families;  // in enumeration order, deduplicated
  bool symbolicOnly = false;
  std::uint64_t randomSeed = 0;
  Mutations mutations;
  // An explicitly requested inapplicable family is a configuration error;
  // an "all families" request silently narrows to the applicable ones,
  // with a notice in the report.
  bool familiesExplicit = true;

  void validate() const;  // throws ConfigError
};

struct ReportEntry {
  std::string id;
  bool passed = true;
  int safeColumns = 0;
  std::optional<Failure> failure;
};

struct ReportConfig {
  std::string mode;  // "matrix-suite", "symbolic", "selfcheck"
  int m = 0;
  int n = 0;
  int p = 1;
  int bosonCutoff = 0;
  long dimensionCap = 200000;
  std::uint64_t seed = 0;
  std::string mutations = "none";
  std::vector<std::string> families;
};

struct Report {
  std::string schema = "paraklein-report/1";
  ReportConfig config;
  std::vector<ReportEntry> instances;  // sorted by id
  std::vector<std::string> notices;

  int checked() const { return static_cast<int>(instances.size()); }
  int failed() const;
  bool allPassed() const { return failed() == 0; }
  const ReportEntry* find(const std::string& id) const;

  std::string to_text() const;
  std::string to_json() const;  // stable field order
};

// The derivation chain of the Klein transformation, replayed in the free
// K-extended algebra (no triple relations assumed): pairwise tilde brackets,
// the tf-rels and mixed replays with their sign bookkeeping, the verbatim
// tb-rels, and the sign lemma. Index ranges are capped at 2 per species.
Report symbolic_tilde_identities(int m, int n);

// Builds the representation once and checks every instance of the requested
// families, plus the always-on sections: vacuum conditions, structural
// N-diagonality, ladder/grading for all operators and their tildes, the
// W-twisted adjoint, and the symbolic/matrix cross-layer oracle on seeded
// random expressions. Deterministic for a fixed config.
Report run_matrix_suite(const SuiteConfig& cfg);

// Test of the test: three deliberate construction defects, each of which
// must make at least one suite check fail.
Report mutation_selfcheck(const SuiteConfig& cfg);

// Small random expression over the (m, n) letters: up to `maxLen` letters
// per word, optional K factor, small rational coefficients. Uses only raw
// engine draws, so the stream is identical across platforms.
Expression random_expression(std::mt19937_64& rng, int m, int n, int maxLen);

}  // namespace paraklein
