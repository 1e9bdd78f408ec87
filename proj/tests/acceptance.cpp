// Acceptance gate: one line per criterion, exit 0 only if every line passes.
// All checks are exact rational arithmetic; the only thresholds are the two
// wall-clock budgets (60 s per configuration for the relation suites, 1 s for
// the symbolic replay).

#include <chrono>
#include <iomanip>
#include <iostream>
#include <memory>
#include <random>
#include <sstream>
#include <vector>

#include "paraklein/verifier.hpp"

using namespace paraklein;
using Clock = std::chrono::steady_clock;

namespace {

struct Config {
  int m, n, p, cutoff;
};

const std::vector<Config> kConfigs = {
    {1, 1, 1, 5}, {2, 1, 1, 4}, {1, 1, 2, 4}, {1, 2, 2, 4}, {2, 2, 2, 4},
};

ModeSpec spec_of(const Config& c) {
  ModeSpec s;
  s.m = c.m;
  s.n = c.n;
  s.p = c.p;
  s.bosonCutoff = c.cutoff;
  return s;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// every instance of the given families, against a prebuilt representation
bool families_pass(const Representation& rep, const std::vector<RelationFamily>& families,
                   int& checked) {
  for (RelationFamily family : families) {
    for (const auto& inst : enumerate_family(family, rep.spec().m, rep.spec().n)) {
      ++checked;
      if (!check_relation(inst, rep).passed) return false;
    }
  }
  return true;
}

bool integer_nonnegative(const Rational& v) {
  return v.get_den() == 1 && v.get_num() >= 0;
}

int failures = 0;

void report(int criterion, bool ok, const std::string& text) {
  if (!ok) ++failures;
  std::cout << "criterion " << criterion << " " << (ok ? "PASS" : "FAIL") << ": " << text
            << std::endl;
}

}  // namespace

int main() {
  std::vector<std::unique_ptr<Representation>> reps;
  std::vector<double> buildAndCheckSeconds;

  // 1: the defining triple relations, exactly zero on all safe columns
  {
    bool ok = true;
    int checked = 0;
    double worst = 0.0;
    for (const Config& c : kConfigs) {
      const auto t0 = Clock::now();
      reps.push_back(std::make_unique<Representation>(spec_of(c)));
      ok = ok && families_pass(*reps.back(),
                               {RelationFamily::PF, RelationFamily::PB, RelationFamily::REL_PF},
                               checked);
      const double dt = seconds_since(t0);
      buildAndCheckSeconds.push_back(dt);
      worst = std::max(worst, dt);
      ok = ok && dt < 60.0;
    }
    std::ostringstream os;
    os << "defining triple relations on five configurations (" << checked
       << " instances, worst config " << std::fixed << std::setprecision(2) << worst << "s)";
    report(1, ok, os.str());
  }

  // 2: Klein operator involution, anticommutation, vacuum, and diagonals
  {
    bool ok = true;
    int checked = 0;
    for (const auto& rep : reps) {
      ok = ok && families_pass(*rep, {RelationFamily::KLEIN}, checked);
      const int v = rep->vacuumIndex();
      ok = ok && rep->klein().at(v, v) == 1 && rep->klein().column(v).size() == 1;
      const ModeSpec& s = rep->spec();
      ok = ok && rep->hamiltonian().at(v, v) == rat(-s.p * (s.m - s.n), 2);
      ok = ok && rep->hamiltonian().column(v).size() <= 1;  // empty when m == n
      for (int i = 0; i < rep->dimension(); ++i) {
        ok = ok && integer_nonnegative(rep->numberOperator().at(i, i));
      }
      ok = ok && rep->numberOperator().nonZeroCount() <=
                     static_cast<std::size_t>(rep->dimension());
    }
    std::ostringstream os;
    os << "Klein operator properties and vacuum eigenvalues (" << checked
       << " relation instances plus diagonals)";
    report(2, ok, os.str());
  }

  // 3: the tilde operators satisfy the relative-paraboson-type relations
  {
    bool ok = true;
    int checked = 0;
    for (const auto& rep : reps) {
      ok = ok && families_pass(*rep,
                               {RelationFamily::REL_PB_TB, RelationFamily::REL_PB_TF,
                                RelationFamily::REL_PB_MIXED},
                               checked);
    }
    std::ostringstream os;
    os << "tilde relations on both routes for five configurations (" << checked << " instances)";
    report(3, ok, os.str());
  }

  // 4: the symbolic replay in the free algebra, under a second
  {
    const auto t0 = Clock::now();
    Report symbolic = symbolic_tilde_identities(2, 2);
    const double dt = seconds_since(t0);
    std::ostringstream os;
    os << "symbolic tilde identities (" << symbolic.checked() << " identities, " << std::fixed
       << std::setprecision(3) << dt << "s)";
    report(4, symbolic.allPassed() && dt < 1.0, os.str());
  }

  // 5: vacuum bracket scaling with the order, and the weighted adjoint
  {
    bool ok = true;
    for (int p = 1; p <= 3; ++p) {
      ModeSpec s;
      s.m = 1;
      s.n = 1;
      s.p = p;
      s.bosonCutoff = 3;
      Representation rep(s);
      const int v = rep.vacuumIndex();
      const std::map<int, Rational> expected{{v, rat(p)}};
      ok = ok && rep.applyToColumn(commutator(Expression::fermion(1, -1),
                                              Expression::fermion(1, +1)),
                                   v, false) == expected;
      ok = ok && rep.applyToColumn(anticommutator(Expression::boson(1, -1),
                                                  Expression::boson(1, +1)),
                                   v, false) == expected;
    }
    for (const auto& rep : reps) ok = ok && adjoint_check(*rep);
    report(5, ok, "vacuum bracket order-scaling (p = 1, 2, 3) and weighted adjoints");
  }

  // 6: ladder grading against the number operator, full matrices
  {
    bool ok = true;
    int checked = 0;
    for (const auto& rep : reps) {
      const SparseMatrix& N = rep->numberOperator();
      for (bool tilde : {false, true})
        for (int s : {-1, +1}) {
          for (int j = 1; j <= rep->spec().m; ++j) {
            const SparseMatrix& X =
                tilde ? rep->tilde(Kind::ParaFermion, j, s) : rep->para(Kind::ParaFermion, j, s);
            ok = ok && (N * X - X * N - rat(s) * X).isZero();
            ++checked;
          }
          for (int k = 1; k <= rep->spec().n; ++k) {
            const SparseMatrix& X =
                tilde ? rep->tilde(Kind::ParaBoson, k, s) : rep->para(Kind::ParaBoson, k, s);
            ok = ok && (N * X - X * N - rat(s) * X).isZero();
            ++checked;
          }
        }
    }
    std::ostringstream os;
    os << "number-operator ladder grading for all operators and tildes (" << checked
       << " operators)";
    report(6, ok, os.str());
  }

  // 7: the symbolic Klein transform agrees with the tilde matrices
  {
    bool ok = true;
    int checked = 0;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const Representation& rep = *reps[i];
      std::mt19937_64 rng(9000 + static_cast<std::uint64_t>(i));
      for (int t = 0; t < 100; ++t) {
        Expression e = random_expression(rng, rep.spec().m, rep.spec().n, 3);
        ok = ok && rep.evaluate(klein_transform(e)) == rep.evaluateTilde(e);
        ++checked;
      }
    }
    std::ostringstream os;
    os << "cross-layer agreement on seeded random expressions (" << checked << " expressions)";
    report(7, ok, os.str());
  }

  // 8: the test of the test — every deliberate defect is caught
  {
    SuiteConfig cfg;
    cfg.spec.m = 1;
    cfg.spec.n = 1;
    cfg.spec.p = 2;
    cfg.spec.bosonCutoff = 4;
    cfg.families = all_families();
    cfg.familiesExplicit = false;
    Report selfcheck = mutation_selfcheck(cfg);
    report(8, selfcheck.allPassed() && selfcheck.checked() == 3,
           "mutation self-check: all three deliberate defects produce failures");
  }

  // 9: algebra-core properties on seeded random expressions
  {
    bool ok = true;
    std::mt19937_64 rng(777);
    for (int t = 0; t < 1000; ++t) {
      Expression a = random_expression(rng, 2, 2, 3);
      Expression b = random_expression(rng, 2, 2, 3);
      Expression c = random_expression(rng, 2, 2, 3);
      ok = ok && mul(mul(a, b), c) == mul(a, mul(b, c));
      ok = ok && dagger(mul(a, b)) == mul(dagger(b), dagger(a));
      ok = ok && dagger(dagger(a)) == a;
      ok = ok && klein_transform(mul(a, b)) == mul(klein_transform(a), klein_transform(b));
      ok = ok && klein_transform(klein_transform(a)) == a;
      Expression na = normalize(a);
      ok = ok && normalize(na) == na;
      if (!ok) break;
    }
    report(9, ok, "algebra property tests (1000 seeded rounds, six properties each)");
  }

  if (failures == 0) {
    std::cout << "acceptance: all 9 criteria PASS" << std::endl;
    return 0;
  }
  std::cout << "acceptance: " << failures << " criteria FAILED" << std::endl;
  return 1;
}
