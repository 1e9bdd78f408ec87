#include "paraklein/verifier.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace paraklein {

namespace {

std::string mutations_label(const Mutations& mut) {
  std::vector<std::string> parts;
  if (mut.dropDressing) parts.push_back("drop-dressing");
  if (mut.tildeUnsigned) parts.push_back("tilde-unsigned");
  if (mut.kleinIdentity) parts.push_back("klein-identity");
  if (parts.empty()) return "none";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += "," + parts[i];
  return out;
}

std::string operator_token(Kind kind, int index, int sign, bool tilde) {
  std::string out = tilde ? "t" : "";
  out += kind == Kind::ParaFermion ? 'f' : 'b';
  out += sign > 0 ? '+' : '-';
  out += std::to_string(index);
  return out;
}

ReportEntry entry_from(const std::string& id, const CheckResult& res) {
  ReportEntry e;
  e.id = id;
  e.passed = res.passed;
  e.safeColumns = res.safeColumns;
  e.failure = res.failure;
  return e;
}

ReportEntry column_entry(const Representation& rep, const std::string& id, const Expression& e,
                         int col, const std::map<int, Rational>& expected) {
  ReportEntry out;
  out.id = id;
  out.safeColumns = 1;
  std::map<int, Rational> got = rep.applyToColumn(e, col, false);
  for (const auto& [r, v] : expected) {
    auto it = got.find(r);
    if (it == got.end()) {
      got.emplace(r, -v);
    } else {
      it->second -= v;
      if (it->second == 0) got.erase(it);
    }
  }
  if (!got.empty()) {
    out.passed = false;
    Failure f;
    f.row = got.begin()->first;
    f.col = col;
    f.value = to_string(got.begin()->second);
    f.rowState = rep.basis().describe(f.row);
    f.colState = rep.basis().describe(col);
    f.route = "matrix";
    out.failure = f;
  }
  return out;
}

ReportEntry matrix_zero_entry(const Representation& rep, const std::string& id,
                              const SparseMatrix& d) {
  ReportEntry out;
  out.id = id;
  out.safeColumns = d.cols();
  for (int c = 0; c < d.cols(); ++c) {
    if (!d.columnIsZero(c)) {
      out.passed = false;
      Failure f;
      f.row = d.column(c).begin()->first;
      f.col = c;
      f.value = to_string(d.column(c).begin()->second);
      f.rowState = rep.basis().describe(f.row);
      f.colState = rep.basis().describe(c);
      f.route = "matrix";
      out.failure = f;
      return out;
    }
  }
  return out;
}

std::string levels_label(const std::map<int, int>& dims) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [level, dim] : dims) {
    if (!first) os << ',';
    os << "N=" << level << ':' << dim;
    first = false;
  }
  return os.str();
}

void append_vacuum_section(const Representation& rep, std::vector<ReportEntry>& entries) {
  const ModeSpec& spec = rep.spec();
  const std::map<int, Rational> zero;
  for (int j = 1; j <= spec.m; ++j) {
    entries.push_back(column_entry(rep, "VACUUM[f-]:" + std::to_string(j),
                                   Expression::fermion(j, -1), 0, zero));
  }
  for (int k = 1; k <= spec.n; ++k) {
    entries.push_back(column_entry(rep, "VACUUM[b-]:" + std::to_string(k),
                                   Expression::boson(k, -1), 0, zero));
  }
  for (int j = 1; j <= spec.m; ++j)
    for (int k = 1; k <= spec.m; ++k) {
      Expression e = commutator(Expression::fermion(j, -1), Expression::fermion(k, +1));
      std::map<int, Rational> expected;
      if (j == k) expected[0] = rat(spec.p);
      entries.push_back(column_entry(
          rep, "VACUUM[ff]:" + std::to_string(j) + "," + std::to_string(k), e, 0, expected));
    }
  for (int j = 1; j <= spec.n; ++j)
    for (int k = 1; k <= spec.n; ++k) {
      Expression e = anticommutator(Expression::boson(j, -1), Expression::boson(k, +1));
      std::map<int, Rational> expected;
      if (j == k) expected[0] = rat(spec.p);
      entries.push_back(column_entry(
          rep, "VACUUM[bb]:" + std::to_string(j) + "," + std::to_string(k), e, 0, expected));
    }
  {
    ReportEntry e;
    e.id = "VACUUM[K]";
    e.safeColumns = 1;
    std::map<int, Rational> expected{{0, rat(1)}};
    if (rep.klein().column(0) != expected) {
      e.passed = false;
      Failure f;
      f.col = 0;
      f.colState = rep.basis().describe(0);
      f.route = "matrix";
      f.value = "K|vac> != |vac>";
      e.failure = f;
    }
    entries.push_back(std::move(e));
  }
  {
    ReportEntry e;
    e.id = "VACUUM[H]";
    e.safeColumns = 1;
    const Rational expected = rat(-static_cast<long>(spec.p) * (spec.m - spec.n), 2);
    std::map<int, Rational> want;
    if (expected != 0) want[0] = expected;
    if (rep.hamiltonian().column(0) != want) {
      e.passed = false;
      Failure f;
      f.col = 0;
      f.colState = rep.basis().describe(0);
      f.route = "matrix";
      f.value = "H|vac> != " + to_string(expected) + "|vac>";
      e.failure = f;
    }
    entries.push_back(std::move(e));
  }
  {
    ReportEntry e;
    e.id = "VACUUM[N]";
    e.safeColumns = 1;
    if (!rep.numberOperator().columnIsZero(0)) {
      e.passed = false;
      Failure f;
      f.col = 0;
      f.colState = rep.basis().describe(0);
      f.route = "matrix";
      f.value = "N|vac> != 0";
      e.failure = f;
    }
    entries.push_back(std::move(e));
  }
}

ReportEntry struct_entry(const Representation& rep) {
  ReportEntry e;
  e.id = "STRUCT[N-diagonal]";
  e.safeColumns = rep.dimension();
  const SparseMatrix& number = rep.numberOperator();
  for (int c = 0; c < number.cols(); ++c) {
    for (const auto& [r, v] : number.column(c)) {
      const bool ok = r == c && v.get_den() == 1 && v >= 0;
      if (!ok) {
        e.passed = false;
        Failure f;
        f.row = r;
        f.col = c;
        f.value = to_string(v);
        f.rowState = rep.basis().describe(r);
        f.colState = rep.basis().describe(c);
        f.route = "matrix";
        e.failure = f;
        return e;
      }
    }
  }
  return e;
}

void append_ladder_section(const Representation& rep, std::vector<ReportEntry>& entries) {
  const SparseMatrix& number = rep.numberOperator();
  auto ladder = [&](Kind kind, int index, int sign, bool tilde) {
    const SparseMatrix& x = tilde ? rep.tilde(kind, index, sign) : rep.para(kind, index, sign);
    SparseMatrix d = number * x - x * number - rat(sign) * x;
    entries.push_back(
        matrix_zero_entry(rep, "LADDER:" + operator_token(kind, index, sign, tilde), d));
  };
  for (bool tilde : {false, true}) {
    for (int j = 1; j <= rep.spec().m; ++j)
      for (int s : {-1, +1}) ladder(Kind::ParaFermion, j, s, tilde);
    for (int k = 1; k <= rep.spec().n; ++k)
      for (int s : {-1, +1}) ladder(Kind::ParaBoson, k, s, tilde);
  }
}

void append_adjoint_section(const Representation& rep, std::vector<ReportEntry>& entries) {
  for (bool tilde : {false, true}) {
    for (int j = 1; j <= rep.spec().m; ++j) {
      entries.push_back(entry_from("ADJOINT:" + std::string(tilde ? "tf:" : "f:") + std::to_string(j),
                                   adjoint_check_op(rep, Kind::ParaFermion, j, tilde)));
    }
    for (int k = 1; k <= rep.spec().n; ++k) {
      entries.push_back(entry_from("ADJOINT:" + std::string(tilde ? "tb:" : "b:") + std::to_string(k),
                                   adjoint_check_op(rep, Kind::ParaBoson, k, tilde)));
    }
  }
}

void append_xlayer_section(const Representation& rep, std::uint64_t seed,
                           std::vector<ReportEntry>& entries) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < 100; ++i) {
    Expression e = random_expression(rng, rep.spec().m, rep.spec().n, 3);
    SparseMatrix d = rep.evaluate(klein_transform(e)) - rep.evaluateTilde(e);
    std::ostringstream id;
    id << "XLAYER:" << std::setw(3) << std::setfill('0') << i;
    entries.push_back(matrix_zero_entry(rep, id.str(), d));
  }
}

}  // namespace

// ------------------------------------------------------------------ report

void SuiteConfig::validate() const {
  if (!symbolicOnly) spec.validate();
  if (families.empty()) throw ConfigError("at least one relation family is required");
}

int Report::failed() const {
  int count = 0;
  for (const auto& e : instances)
    if (!e.passed) ++count;
  return count;
}

const ReportEntry* Report::find(const std::string& id) const {
  for (const auto& e : instances)
    if (e.id == id) return &e;
  return nullptr;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << "schema " << schema << '\n';
  os << "kind " << config.mode << '\n';
  os << "config m=" << config.m << " n=" << config.n;
  if (config.mode != "symbolic") {
    os << " p=" << config.p << " bosonCutoff=" << config.bosonCutoff
       << " dimensionCap=" << config.dimensionCap << " seed=" << config.seed
       << " mutations=" << config.mutations;
  }
  os << '\n';
  if (!config.families.empty()) {
    os << "families ";
    for (std::size_t i = 0; i < config.families.size(); ++i) {
      if (i > 0) os << ',';
      os << config.families[i];
    }
    os << '\n';
  }
  for (const auto& notice : notices) os << "notice " << notice << '\n';
  for (const auto& e : instances) {
    os << (e.passed ? "ok " : "FAIL ") << e.id << " safe=" << e.safeColumns;
    if (e.failure) {
      const Failure& f = *e.failure;
      os << " row=" << f.row << " col=" << f.col << " value=[" << f.value << "] route=" << f.route;
      if (!f.rowState.empty()) os << " row_state=[" << f.rowState << "]";
      if (!f.colState.empty()) os << " col_state=[" << f.colState << "]";
    }
    os << '\n';
  }
  os << "summary checked=" << checked() << " failed=" << failed()
     << " result=" << (allPassed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["schema"] = schema;
  j["kind"] = config.mode;
  nlohmann::json cfg;
  cfg["m"] = config.m;
  cfg["n"] = config.n;
  if (config.mode != "symbolic") {
    cfg["p"] = config.p;
    cfg["bosonCutoff"] = config.bosonCutoff;
    cfg["dimensionCap"] = config.dimensionCap;
    cfg["seed"] = config.seed;
    cfg["mutations"] = config.mutations;
  }
  cfg["families"] = config.families;
  j["config"] = cfg;
  j["notices"] = notices;
  nlohmann::json items = nlohmann::json::array();
  for (const auto& e : instances) {
    nlohmann::json item;
    item["id"] = e.id;
    item["status"] = e.passed ? "pass" : "fail";
    item["safeColumns"] = e.safeColumns;
    if (e.failure) {
      nlohmann::json f;
      f["row"] = e.failure->row;
      f["col"] = e.failure->col;
      f["value"] = e.failure->value;
      f["rowState"] = e.failure->rowState;
      f["colState"] = e.failure->colState;
      f["route"] = e.failure->route;
      item["failure"] = f;
    }
    items.push_back(item);
  }
  j["instances"] = items;
  j["summary"] = {{"checked", checked()}, {"failed", failed()}, {"pass", allPassed()}};
  return j.dump(2) + "\n";
}

// ------------------------------------------------------------------ suites

Expression random_expression(std::mt19937_64& rng, int m, int n, int maxLen) {
  // raw engine draws only: distribution classes are not pinned down by the
  // standard, and the report must be byte-stable across platforms
  Expression e;
  const int terms = 1 + static_cast<int>(rng() % 2);
  for (int t = 0; t < terms; ++t) {
    long num = static_cast<long>(rng() % 5) - 2;
    if (num == 0) num = 3;
    const long den = 1 + static_cast<long>(rng() % 2);
    Word w;
    const int len = static_cast<int>(rng() % (static_cast<unsigned>(maxLen) + 1));
    for (int i = 0; i < len; ++i) {
      Kind kind;
      if (m == 0) kind = Kind::ParaBoson;
      else if (n == 0) kind = Kind::ParaFermion;
      else kind = rng() % 2 == 0 ? Kind::ParaFermion : Kind::ParaBoson;
      const int span = kind == Kind::ParaFermion ? m : n;
      const int index = 1 + static_cast<int>(rng() % static_cast<unsigned>(span));
      const int sign = rng() % 2 == 0 ? -1 : +1;
      w.letters.push_back({kind, index, sign});
    }
    w.kleinPower = static_cast<int>(rng() % 2);
    e.add(w, rat(num, den));
  }
  return e;
}

Report symbolic_tilde_identities(int m, int n) {
  if (m < 0 || n < 0 || m + n < 1) {
    throw ConfigError("symbolic identities need m, n >= 0 with m + n >= 1");
  }
  Report report;
  report.config.mode = "symbolic";
  report.config.m = m;
  report.config.n = n;
  report.config.families = {family_name(RelationFamily::TILDE_IDENTITY)};
  for (const RelationInstance& inst : enumerate_family(RelationFamily::TILDE_IDENTITY, m, n)) {
    ReportEntry e;
    e.id = inst.id;
    if (!inst.expr.isZero()) {
      e.passed = false;
      Failure f;
      f.route = "symbolic";
      f.value = to_string(inst.expr);
      e.failure = f;
    }
    report.instances.push_back(std::move(e));
  }
  std::sort(report.instances.begin(), report.instances.end(),
            [](const ReportEntry& a, const ReportEntry& b) { return a.id < b.id; });
  return report;
}

Report run_matrix_suite(const SuiteConfig& cfg) {
  if (cfg.symbolicOnly) throw ConfigError("matrix suite invoked with symbolicOnly");
  cfg.validate();
  const int m = cfg.spec.m;
  const int n = cfg.spec.n;

  Report report;
  report.config.mode = "matrix-suite";
  report.config.m = m;
  report.config.n = n;
  report.config.p = cfg.spec.p;
  report.config.bosonCutoff = cfg.spec.bosonCutoff;
  report.config.dimensionCap = cfg.spec.dimensionCap;
  report.config.seed = cfg.randomSeed;
  report.config.mutations = mutations_label(cfg.mutations);

  std::vector<RelationFamily> families;
  for (RelationFamily family : cfg.families) {
    if (std::find(families.begin(), families.end(), family) != families.end()) continue;
    if (!family_applicable(family, m, n)) {
      if (cfg.familiesExplicit) {
        throw ConfigError("family " + family_name(family) + " is not applicable to m=" +
                          std::to_string(m) + " n=" + std::to_string(n));
      }
      report.notices.push_back("family " + family_name(family) +
                               " not applicable to this (m,n); skipped");
      continue;
    }
    families.push_back(family);
  }
  if (families.empty()) throw ConfigError("no applicable relation family requested");
  for (RelationFamily family : families) report.config.families.push_back(family_name(family));

  Representation rep(cfg.spec, cfg.mutations);

  std::vector<RelationInstance> instances;
  int maxDegree = 0;
  for (RelationFamily family : families) {
    for (RelationInstance& inst : enumerate_family(family, m, n)) {
      maxDegree = std::max(maxDegree, inst.bosonDegree);
      instances.push_back(std::move(inst));
    }
  }
  if (rep.safeColumns(maxDegree).empty()) {
    throw ConfigError("boson cutoff " + std::to_string(cfg.spec.bosonCutoff) +
                      " leaves no safe columns for degree-" + std::to_string(maxDegree) +
                      " instances; raise the cutoff");
  }

  for (const RelationInstance& inst : instances) {
    report.instances.push_back(entry_from(inst.id, check_relation(inst, rep)));
  }

  append_vacuum_section(rep, report.instances);
  report.instances.push_back(struct_entry(rep));
  append_ladder_section(rep, report.instances);
  append_adjoint_section(rep, report.instances);
  append_xlayer_section(rep, cfg.randomSeed, report.instances);

  const int maxLevel = std::min(cfg.spec.bosonCutoff, 3);
  const std::map<int, int> original = cyclic_subspace(rep, maxLevel, false);
  const std::map<int, int> tilde = cyclic_subspace(rep, maxLevel, true);
  report.notices.push_back("cyclic levels (maxLevel=" + std::to_string(maxLevel) +
                           ", original): " + levels_label(original));
  report.notices.push_back("cyclic levels (maxLevel=" + std::to_string(maxLevel) +
                           ", tilde): " + levels_label(tilde));
  report.notices.push_back(original == tilde
                               ? "cyclic level dimensions agree between original and tilde"
                               : "cyclic level dimensions DIFFER between original and tilde");

  std::sort(report.instances.begin(), report.instances.end(),
            [](const ReportEntry& a, const ReportEntry& b) { return a.id < b.id; });
  return report;
}

Report mutation_selfcheck(const SuiteConfig& cfg) {
  cfg.validate();
  if (cfg.spec.m < 1 || cfg.spec.n < 1) {
    throw ConfigError("the self-check needs both species present (m >= 1, n >= 1)");
  }
  if (cfg.mutations.any()) throw ConfigError("the self-check picks its own mutations");

  Report report;
  report.config.mode = "selfcheck";
  report.config.m = cfg.spec.m;
  report.config.n = cfg.spec.n;
  report.config.p = cfg.spec.p;
  report.config.bosonCutoff = cfg.spec.bosonCutoff;
  report.config.dimensionCap = cfg.spec.dimensionCap;
  report.config.seed = cfg.randomSeed;
  for (RelationFamily family : cfg.families) report.config.families.push_back(family_name(family));

  struct Mutant {
    const char* name;
    Mutations mutations;
  };
  const Mutant mutants[] = {
      {"drop-dressing", {.dropDressing = true}},
      {"tilde-unsigned", {.tildeUnsigned = true}},
      {"klein-identity", {.kleinIdentity = true}},
  };
  for (const Mutant& mutant : mutants) {
    SuiteConfig inner = cfg;
    inner.mutations = mutant.mutations;
    Report suite = run_matrix_suite(inner);
    std::string first;
    for (const auto& e : suite.instances) {
      if (!e.passed) {
        first = e.id;
        break;
      }
    }
    ReportEntry e;
    e.id = std::string("SELFCHECK:") + mutant.name;
    e.passed = suite.failed() > 0;
    if (!e.passed) {
      Failure f;
      f.route = "selfcheck";
      f.value = "mutant passed every check";
      e.failure = f;
    }
    report.instances.push_back(std::move(e));
    std::ostringstream note;
    note << "mutant " << mutant.name << ": " << suite.failed() << "/" << suite.checked()
         << " checks failed";
    if (!first.empty()) note << " (first: " << first << ")";
    report.notices.push_back(note.str());
  }
  std::sort(report.instances.begin(), report.instances.end(),
            [](const ReportEntry& a, const ReportEntry& b) { return a.id < b.id; });
  return report;
}

}  // namespace paraklein
