#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "paraklein/fock.hpp"
#include "paraklein/verifier.hpp"

namespace {

using namespace paraklein;

struct CommonOpts {
  int m = 0;
  int n = 0;
  int p = 1;
  int bosonCutoff = 0;
  long dimensionCap = 200000;
  std::uint64_t seed = 0;
  std::string families = "all";
  std::string format = "text";
  std::string output;
  std::string mutate = "none";
};

ModeSpec make_spec(const CommonOpts& o) {
  ModeSpec spec;
  spec.m = o.m;
  spec.n = o.n;
  spec.p = o.p;
  spec.bosonCutoff = o.bosonCutoff;
  spec.dimensionCap = o.dimensionCap;
  return spec;
}

void add_mode_options(CLI::App* cmd, CommonOpts& o, bool bosonic) {
  cmd->add_option("--m", o.m, "number of parafermion species");
  cmd->add_option("--n", o.n, "number of paraboson species");
  if (bosonic) {
    cmd->add_option("--p", o.p, "order of the representation");
    cmd->add_option("--boson-cutoff", o.bosonCutoff, "max total boson occupation");
    cmd->add_option("--dimension-cap", o.dimensionCap, "refuse bases larger than this");
  }
  cmd->add_option("--output", o.output, "write the result to a file instead of stdout");
}

void add_report_options(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--format", o.format, "report format")
      ->check(CLI::IsMember({"text", "json"}));
}

// families: "all" expands to the applicable ones (with a notice); an
// explicit comma list must be applicable or the run is a config error
void resolve_families(const std::string& arg, SuiteConfig& cfg) {
  if (arg == "all") {
    cfg.familiesExplicit = false;
    cfg.families = all_families();
    return;
  }
  cfg.familiesExplicit = true;
  std::string rest = arg;
  while (!rest.empty()) {
    const std::size_t comma = rest.find(',');
    const std::string name = rest.substr(0, comma);
    rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
    if (name.empty()) continue;
    auto family = family_from_name(name);
    if (!family) throw ConfigError("unknown relation family: " + name);
    cfg.families.push_back(*family);
  }
  if (cfg.families.empty()) throw ConfigError("empty family list");
}

Mutations resolve_mutation(const std::string& name) {
  Mutations mut;
  if (name == "none") return mut;
  if (name == "drop-dressing") mut.dropDressing = true;
  else if (name == "tilde-unsigned") mut.tildeUnsigned = true;
  else if (name == "klein-identity") mut.kleinIdentity = true;
  else throw ConfigError("unknown mutation: " + name);
  return mut;
}

struct OpToken {
  enum class What { Para, Tilde, Klein, Number, Hamiltonian } what = What::Klein;
  Kind kind = Kind::ParaFermion;
  int index = 1;
  int sign = +1;
};

OpToken parse_op_token(const std::string& s) {
  OpToken tok;
  if (s == "K") {
    tok.what = OpToken::What::Klein;
    return tok;
  }
  if (s == "N") {
    tok.what = OpToken::What::Number;
    return tok;
  }
  if (s == "H") {
    tok.what = OpToken::What::Hamiltonian;
    return tok;
  }
  std::size_t i = 0;
  tok.what = OpToken::What::Para;
  if (i < s.size() && s[i] == 't') {
    tok.what = OpToken::What::Tilde;
    ++i;
  }
  if (i >= s.size() || (s[i] != 'f' && s[i] != 'b')) {
    throw ConfigError("unknown operator token: " + s);
  }
  tok.kind = s[i] == 'f' ? Kind::ParaFermion : Kind::ParaBoson;
  ++i;
  if (i >= s.size() || (s[i] != '+' && s[i] != '-')) {
    throw ConfigError("operator token needs a sign: " + s);
  }
  tok.sign = s[i] == '+' ? +1 : -1;
  ++i;
  if (i >= s.size()) throw ConfigError("operator token needs an index: " + s);
  int index = 0;
  for (; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw ConfigError("bad operator index in: " + s);
    index = index * 10 + (s[i] - '0');
  }
  tok.index = index;
  return tok;
}

void emit(const CommonOpts& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file: " + o.output);
  out << text;
}

int emit_report(const CommonOpts& o, const Report& report) {
  emit(o, o.format == "json" ? report.to_json() : report.to_text());
  return report.allPassed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact checks for mixed parafermion/paraboson algebras and their Klein transform"};
  app.require_subcommand(1);

  CommonOpts vo, so, do_, bo, po, co;

  CLI::App* verify = app.add_subcommand("verify", "run the matrix relation suites");
  add_mode_options(verify, vo, true);
  add_report_options(verify, vo);
  verify->add_option("--families", vo.families, "comma list of relation families, or 'all'");
  verify->add_option("--seed", vo.seed, "seed for the random cross-layer expressions");
  verify->add_option("--mutate", vo.mutate, "deliberately broken construction (for testing)")
      ->check(CLI::IsMember({"none", "drop-dressing", "tilde-unsigned", "klein-identity"}));

  CLI::App* symbolic = app.add_subcommand("symbolic", "replay the tilde identities symbolically");
  add_mode_options(symbolic, so, false);
  add_report_options(symbolic, so);

  CLI::App* dumpop = app.add_subcommand("dump-op", "print one operator matrix");
  add_mode_options(dumpop, do_, true);
  std::string dumpToken;
  dumpop->add_option("token", dumpToken, "operator name: f+1, b-2, tf+1, tb-1, K, H, N")
      ->required();

  CLI::App* basis = app.add_subcommand("basis", "print the occupation basis");
  add_mode_options(basis, bo, true);

  CLI::App* spectrum = app.add_subcommand("spectrum", "print eigenvalue multiplicities");
  add_mode_options(spectrum, po, true);
  std::string spectrumToken = "N";
  spectrum->add_option("token", spectrumToken, "diagonal operator: N, H, or K");

  CLI::App* selfcheck = app.add_subcommand("selfcheck", "check that broken constructions fail");
  add_mode_options(selfcheck, co, true);
  add_report_options(selfcheck, co);
  selfcheck->add_option("--families", co.families, "comma list of relation families, or 'all'");
  selfcheck->add_option("--seed", co.seed, "seed for the random cross-layer expressions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(verify)) {
      SuiteConfig cfg;
      cfg.spec = make_spec(vo);
      cfg.randomSeed = vo.seed;
      cfg.mutations = resolve_mutation(vo.mutate);
      resolve_families(vo.families, cfg);
      return emit_report(vo, run_matrix_suite(cfg));
    }
    if (app.got_subcommand(symbolic)) {
      return emit_report(so, symbolic_tilde_identities(so.m, so.n));
    }
    if (app.got_subcommand(dumpop)) {
      const OpToken tok = parse_op_token(dumpToken);
      Representation rep(make_spec(do_));
      const SparseMatrix* mat = nullptr;
      switch (tok.what) {
        case OpToken::What::Klein: mat = &rep.klein(); break;
        case OpToken::What::Number: mat = &rep.numberOperator(); break;
        case OpToken::What::Hamiltonian: mat = &rep.hamiltonian(); break;
        case OpToken::What::Para: mat = &rep.para(tok.kind, tok.index, tok.sign); break;
        case OpToken::What::Tilde: mat = &rep.tilde(tok.kind, tok.index, tok.sign); break;
      }
      emit(do_, dump_matrix(*mat));
      return 0;
    }
    if (app.got_subcommand(basis)) {
      Basis b(make_spec(bo));
      emit(bo, dump_basis(b));
      return 0;
    }
    if (app.got_subcommand(spectrum)) {
      if (spectrumToken != "N" && spectrumToken != "H" && spectrumToken != "K") {
        throw ConfigError("spectrum needs a diagonal operator: N, H, or K");
      }
      Representation rep(make_spec(po));
      const SparseMatrix& mat = spectrumToken == "N"   ? rep.numberOperator()
                                : spectrumToken == "H" ? rep.hamiltonian()
                                                       : rep.klein();
      std::map<Rational, long> multiplicity;
      for (int i = 0; i < rep.dimension(); ++i) ++multiplicity[mat.at(i, i)];
      std::string text;
      for (const auto& [value, count] : multiplicity) {
        text += to_string(value) + " " + std::to_string(count) + "\n";
      }
      emit(po, text);
      return 0;
    }
    if (app.got_subcommand(selfcheck)) {
      SuiteConfig cfg;
      cfg.spec = make_spec(co);
      cfg.randomSeed = co.seed;
      resolve_families(co.families, cfg);
      return emit_report(co, mutation_selfcheck(cfg));
    }
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const EvalError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
