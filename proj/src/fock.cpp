#include "paraklein/fock.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace paraklein {

namespace {

Integer dimension_of(int m, int n, int p, int cutoff) {
  Integer dim;
  mpz_ui_pow_ui(dim.get_mpz_t(), 2, static_cast<unsigned long>(m) * p);
  if (n * p > 0) dim *= binomial(static_cast<unsigned long>(cutoff) + n * p,
                                 static_cast<unsigned long>(n) * p);
  return dim;
}

void accumulate(std::map<int, Rational>& vec, int row, const Rational& value) {
  auto [it, inserted] = vec.emplace(row, value);
  if (!inserted) {
    it->second += value;
    if (it->second == 0) vec.erase(it);
  } else if (it->second == 0) {
    vec.erase(it);
  }
}

}  // namespace

// ---------------------------------------------------------------- ModeSpec

void ModeSpec::validate() const {
  if (m < 0 || n < 0) throw ConfigError("mode counts must be nonnegative");
  if (m + n < 1) throw ConfigError("at least one species is required (m + n >= 1)");
  if (p < 1) throw ConfigError("order p must be >= 1");
  if (bosonCutoff < 0) throw ConfigError("boson cutoff must be >= 0");
  if (dimensionCap < 1) throw ConfigError("dimension cap must be >= 1");
  Integer dim = dimension_of(m, n, p, bosonCutoff);
  if (cmp(dim, dimensionCap) > 0 || cmp(dim, INT_MAX) > 0) {
    throw ConfigError("representation dimension " + dim.get_str() + " exceeds the cap " +
                      std::to_string(dimensionCap));
  }
}

long ModeSpec::dimension() const {
  validate();
  return dimension_of(m, n, p, bosonCutoff).get_si();
}

// ------------------------------------------------------------------- Basis

Basis::Basis(const ModeSpec& spec) : spec_(spec) {
  spec_.validate();
  fermionModes_ = spec_.m * spec_.p;
  bosonModes_ = spec_.n * spec_.p;

  if (bosonModes_ == 0) {
    bosonOccs_.push_back({});
  } else {
    // graded lexicographic: total ascending, then entrywise ascending
    std::vector<int> occ(bosonModes_, 0);
    std::function<void(int, int)> fill = [&](int pos, int remaining) {
      if (pos == bosonModes_ - 1) {
        occ[pos] = remaining;
        bosonOccs_.push_back(occ);
        return;
      }
      for (int v = 0; v <= remaining; ++v) {
        occ[pos] = v;
        fill(pos + 1, remaining - v);
      }
    };
    for (int total = 0; total <= spec_.bosonCutoff; ++total) fill(0, total);
  }
  for (std::size_t i = 0; i < bosonOccs_.size(); ++i) bosonIndex_[bosonOccs_[i]] = static_cast<int>(i);

  const long long fermionStates = 1LL << fermionModes_;
  states_.reserve(static_cast<std::size_t>(fermionStates) * bosonOccs_.size());
  for (long long fIdx = 0; fIdx < fermionStates; ++fIdx) {
    std::vector<std::uint8_t> bits(fermionModes_, 0);
    for (int i = 0; i < fermionModes_; ++i) bits[i] = (fIdx >> (fermionModes_ - 1 - i)) & 1;
    for (const auto& bocc : bosonOccs_) states_.push_back({bits, bocc});
  }
  dimension_ = static_cast<int>(states_.size());
}

int Basis::indexOf(const BasisState& s) const {
  long long fIdx = 0;
  for (int i = 0; i < fermionModes_; ++i) fIdx = (fIdx << 1) | (s.fermionOcc[i] ? 1 : 0);
  auto it = bosonIndex_.find(s.bosonOcc);
  if (it == bosonIndex_.end()) return -1;
  return static_cast<int>(fIdx * static_cast<long long>(bosonOccs_.size()) + it->second);
}

int Basis::fermionTotal(int index) const {
  int t = 0;
  for (std::uint8_t bit : states_[index].fermionOcc) t += bit;
  return t;
}

int Basis::bosonTotal(int index) const {
  int t = 0;
  for (int r : states_[index].bosonOcc) t += r;
  return t;
}

int Basis::occupationNumber(int index) const { return fermionTotal(index) + bosonTotal(index); }

Integer Basis::gramWeight(int index) const {
  Integer w = 1;
  for (int r : states_[index].bosonOcc) w *= factorial(static_cast<unsigned long>(r));
  return w;
}

std::string Basis::describe(int index) const {
  const BasisState& st = states_[index];
  std::ostringstream os;
  os << "f=";
  if (st.fermionOcc.empty()) {
    os << '-';
  } else {
    for (std::uint8_t bit : st.fermionOcc) os << (bit ? '1' : '0');
  }
  os << " b=";
  if (st.bosonOcc.empty()) {
    os << '-';
  } else {
    for (std::size_t i = 0; i < st.bosonOcc.size(); ++i) {
      if (i > 0) os << ',';
      os << st.bosonOcc[i];
    }
  }
  os << " N=" << occupationNumber(index);
  return os.str();
}

// ------------------------------------------------------------ SparseMatrix

SparseMatrix SparseMatrix::identity(int dim) {
  SparseMatrix a(dim, dim);
  for (int i = 0; i < dim; ++i) a.columns_[i][i] = 1;
  return a;
}

void SparseMatrix::add(int row, int col, const Rational& value) {
  if (value == 0) return;
  accumulate(columns_[col], row, value);
}

Rational SparseMatrix::at(int row, int col) const {
  auto it = columns_[col].find(row);
  return it == columns_[col].end() ? Rational(0) : it->second;
}

bool SparseMatrix::isZero() const {
  for (const auto& col : columns_)
    if (!col.empty()) return false;
  return true;
}

std::size_t SparseMatrix::nonZeroCount() const {
  std::size_t count = 0;
  for (const auto& col : columns_) count += col.size();
  return count;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows_);
  for (int c = 0; c < cols_; ++c)
    for (const auto& [r, v] : columns_[c]) t.columns_[r][c] = v;
  return t;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::logic_error("matrix shape mismatch");
  SparseMatrix out = a;
  for (int c = 0; c < b.cols_; ++c)
    for (const auto& [r, v] : b.columns_[c]) accumulate(out.columns_[c], r, v);
  return out;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::logic_error("matrix shape mismatch");
  SparseMatrix out = a;
  for (int c = 0; c < b.cols_; ++c)
    for (const auto& [r, v] : b.columns_[c]) accumulate(out.columns_[c], r, -v);
  return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) throw std::logic_error("matrix shape mismatch");
  SparseMatrix out(a.rows_, b.cols_);
  for (int c = 0; c < b.cols_; ++c)
    for (const auto& [k, v] : b.columns_[c])
      for (const auto& [r, w] : a.columns_[k]) accumulate(out.columns_[c], r, w * v);
  return out;
}

SparseMatrix operator*(const Rational& c, const SparseMatrix& a) {
  SparseMatrix out(a.rows_, a.cols_);
  if (c == 0) return out;
  for (int col = 0; col < a.cols_; ++col)
    for (const auto& [r, v] : a.columns_[col]) out.columns_[col][r] = c * v;
  return out;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.columns_ == b.columns_;
}

// ---------------------------------------------------------- Representation

Representation::Representation(const ModeSpec& spec, const Mutations& mutations)
    : spec_(spec), mutations_(mutations), basis_(spec) {
  build();
  constructionGuard();
}

SparseMatrix Representation::bareMode(Kind kind, int species, int component, int sign) const {
  const int dim = basis_.dimension();
  const int max = kind == Kind::ParaFermion ? spec_.m : spec_.n;
  if (species < 1 || species > max || component < 1 || component > spec_.p) {
    throw EvalError("bare mode out of range");
  }
  SparseMatrix out(dim, dim);
  if (kind == Kind::ParaFermion) {
    const int mode = (component - 1) * spec_.m + (species - 1);
    for (int col = 0; col < dim; ++col) {
      BasisState st = basis_.state(col);
      const bool occupied = st.fermionOcc[mode] != 0;
      if ((sign > 0 && occupied) || (sign < 0 && !occupied)) continue;
      int string = 0;  // Jordan-Wigner: occupied modes strictly before this one
      for (int i = 0; i < mode; ++i) string += st.fermionOcc[i];
      st.fermionOcc[mode] = sign > 0 ? 1 : 0;
      out.add(basis_.indexOf(st), col, rat(string % 2 == 0 ? 1 : -1));
    }
  } else {
    const int mode = (component - 1) * spec_.n + (species - 1);
    for (int col = 0; col < dim; ++col) {
      BasisState st = basis_.state(col);
      const int r = st.bosonOcc[mode];
      if (sign > 0) {
        // divided powers: creation entry 1; images beyond the cutoff drop out
        st.bosonOcc[mode] = r + 1;
        int target = basis_.indexOf(st);
        if (target >= 0) out.add(target, col, rat(1));
      } else if (r > 0) {
        st.bosonOcc[mode] = r - 1;  // annihilation entry r
        out.add(basis_.indexOf(st), col, rat(r));
      }
    }
  }
  return out;
}

SparseMatrix Representation::kleinFactor(Kind kind, int component) const {
  if (component < 1 || component > spec_.p) throw EvalError("component out of range");
  const int dim = basis_.dimension();
  SparseMatrix out(dim, dim);
  for (int i = 0; i < dim; ++i) {
    const BasisState& st = basis_.state(i);
    int exponent = 0;
    if (kind == Kind::ParaFermion) {
      // fermion occupation in components before this one, plus boson
      // occupation in this one (the intra-component twist)
      for (int q = 0; q < (component - 1) * spec_.m; ++q) exponent += st.fermionOcc[q];
      if (!mutations_.dropDressing) {
        for (int q = (component - 1) * spec_.n; q < component * spec_.n; ++q)
          exponent += st.bosonOcc[q];
      }
    } else {
      for (int q = 0; q < (component - 1) * spec_.n; ++q) exponent += st.bosonOcc[q];
    }
    out.add(i, i, rat(exponent % 2 == 0 ? 1 : -1));
  }
  return out;
}

void Representation::build() {
  const int dim = basis_.dimension();

  klein_ = SparseMatrix(dim, dim);
  number_ = SparseMatrix(dim, dim);
  hamiltonian_ = SparseMatrix(dim, dim);
  const Rational shift = rat(static_cast<long>(spec_.p) * (spec_.m - spec_.n), 2);
  for (int i = 0; i < dim; ++i) {
    const int occupation = basis_.occupationNumber(i);
    klein_.add(i, i, rat(mutations_.kleinIdentity || occupation % 2 == 0 ? 1 : -1));
    number_.add(i, i, rat(occupation));
    hamiltonian_.add(i, i, rat(occupation) - shift);
  }

  for (int kindIdx = 0; kindIdx < 2; ++kindIdx) {
    const Kind kind = kindIdx == 0 ? Kind::ParaFermion : Kind::ParaBoson;
    const int max = kind == Kind::ParaFermion ? spec_.m : spec_.n;
    for (int index = 1; index <= max; ++index) {
      for (int sign : {-1, +1}) {
        SparseMatrix op(dim, dim);
        for (int a = 1; a <= spec_.p; ++a) op = op + bareMode(kind, index, a, sign) * kleinFactor(kind, a);
        SparseMatrix tw;
        if (kind == Kind::ParaBoson) {
          tw = op;  // the tilde bosons are unchanged
        } else {
          tw = op * klein_;
          if (!mutations_.tildeUnsigned) tw = rat(sign) * tw;
        }
        para_.emplace(std::make_tuple(kindIdx, index, sign), std::move(op));
        tilde_.emplace(std::make_tuple(kindIdx, index, sign), std::move(tw));
      }
    }
  }
}

void Representation::constructionGuard() const {
  // The graded diagonal must agree with the operator-built h-sum wherever
  // the h words act untruncated; a mismatch means the mode plumbing or the
  // dressing is wrong, not that a relation fails.
  const int dim = basis_.dimension();
  SparseMatrix hsum(dim, dim);
  const Rational half = rat(1, 2);
  for (int i = 1; i <= spec_.m; ++i) {
    const SparseMatrix& minus = para(Kind::ParaFermion, i, -1);
    const SparseMatrix& plus = para(Kind::ParaFermion, i, +1);
    hsum = hsum + (-half) * (minus * plus - plus * minus);
  }
  for (int k = 1; k <= spec_.n; ++k) {
    const SparseMatrix& minus = para(Kind::ParaBoson, k, -1);
    const SparseMatrix& plus = para(Kind::ParaBoson, k, +1);
    hsum = hsum + half * (minus * plus + plus * minus);
  }
  for (int col : safeColumns(spec_.n > 0 ? 1 : 0)) {
    if (hsum.column(col) != hamiltonian_.column(col)) {
      throw std::logic_error("operator-built H disagrees with the occupation grading on column " +
                             std::to_string(col) + " (" + basis_.describe(col) + ")");
    }
  }
}

const SparseMatrix& Representation::lookup(Kind kind, int index, int sign, bool tilde) const {
  const int max = kind == Kind::ParaFermion ? spec_.m : spec_.n;
  if (index < 1 || index > max) {
    throw EvalError("generator index " + std::to_string(index) + " out of range for " +
                    (kind == Kind::ParaFermion ? "f" : "b") + " with (m,n)=(" +
                    std::to_string(spec_.m) + "," + std::to_string(spec_.n) + ")");
  }
  const auto& table = tilde ? tilde_ : para_;
  return table.at(std::make_tuple(kind == Kind::ParaFermion ? 0 : 1, index, sign));
}

const SparseMatrix& Representation::para(Kind kind, int index, int sign) const {
  return lookup(kind, index, sign, false);
}

const SparseMatrix& Representation::tilde(Kind kind, int index, int sign) const {
  return lookup(kind, index, sign, true);
}

std::map<int, Rational> Representation::applyToColumn(const Expression& e, int col,
                                                      bool tilde) const {
  std::map<int, Rational> out;
  for (const auto& [word, coeff] : e.terms()) {
    std::map<int, Rational> vec{{col, rat(1)}};
    auto apply = [&vec](const SparseMatrix& mat) {
      std::map<int, Rational> next;
      for (const auto& [c, v] : vec)
        for (const auto& [r, w] : mat.column(c)) accumulate(next, r, w * v);
      vec = std::move(next);
    };
    if (word.kleinPower % 2 == 1) apply(klein_);
    for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it)
      apply(lookup(it->kind, it->index, it->sign, tilde));
    for (const auto& [r, v] : vec) accumulate(out, r, coeff * v);
  }
  return out;
}

SparseMatrix Representation::evaluate(const Expression& e) const {
  const int dim = basis_.dimension();
  SparseMatrix out(dim, dim);
  for (int col = 0; col < dim; ++col)
    for (const auto& [r, v] : applyToColumn(e, col, false)) out.add(r, col, v);
  return out;
}

SparseMatrix Representation::evaluateTilde(const Expression& e) const {
  const int dim = basis_.dimension();
  SparseMatrix out(dim, dim);
  for (int col = 0; col < dim; ++col)
    for (const auto& [r, v] : applyToColumn(e, col, true)) out.add(r, col, v);
  return out;
}

std::vector<int> Representation::safeColumns(int bosonDegree) const {
  std::vector<int> cols;
  for (int i = 0; i < basis_.dimension(); ++i) {
    if (basis_.bosonTotal(i) + bosonDegree <= spec_.bosonCutoff) cols.push_back(i);
  }
  return cols;
}

// ---------------------------------------------------------------- checking

namespace {

Failure make_failure(const Basis& basis, int row, int col, const Rational& value,
                     const std::string& route) {
  Failure f;
  f.row = row;
  f.col = col;
  f.value = to_string(value);
  if (row >= 0) f.rowState = basis.describe(row);
  if (col >= 0) f.colState = basis.describe(col);
  f.route = route;
  return f;
}

bool first_nonzero_column(const SparseMatrix& a, const std::vector<int>& cols, int& row, int& col,
                          Rational& value) {
  for (int c : cols) {
    if (!a.columnIsZero(c)) {
      row = a.column(c).begin()->first;
      col = c;
      value = a.column(c).begin()->second;
      return true;
    }
  }
  return false;
}

}  // namespace

CheckResult check_relation(const RelationInstance& inst, const Representation& rep) {
  CheckResult res;
  const Basis& basis = rep.basis();

  if (inst.family == RelationFamily::TILDE_IDENTITY) {
    // free-algebra fact: already normalized, must be the zero expression
    if (!inst.expr.isZero()) {
      res.passed = false;
      Failure f;
      f.route = "symbolic";
      f.value = to_string(inst.expr);
      res.failure = f;
    }
    return res;
  }

  if (inst.family == RelationFamily::KLEIN) {
    // recomputed against the constructed K directly; no truncation guard is
    // needed (a truncated creation image vanishes on both sides)
    res.safeColumns = rep.dimension();
    SparseMatrix d;
    if (inst.sub == "kk") {
      d = rep.klein() * rep.klein() - SparseMatrix::identity(rep.dimension());
    } else {
      const Kind kind = inst.sub == "kf" ? Kind::ParaFermion : Kind::ParaBoson;
      const SparseMatrix& g = rep.para(kind, inst.indices[0], inst.signs[0]);
      d = rep.klein() * g + g * rep.klein();
    }
    std::vector<int> all(rep.dimension());
    for (int i = 0; i < rep.dimension(); ++i) all[i] = i;
    int row, col;
    Rational value;
    if (first_nonzero_column(d, all, row, col, value)) {
      res.passed = false;
      res.failure = make_failure(basis, row, col, value, "matrix");
    }
    return res;
  }

  const std::vector<int> cols = rep.safeColumns(inst.bosonDegree);
  if (cols.empty()) {
    throw ConfigError("no safe columns for " + inst.id + ": boson cutoff " +
                      std::to_string(rep.spec().bosonCutoff) + " leaves no headroom for degree " +
                      std::to_string(inst.bosonDegree));
  }
  res.safeColumns = static_cast<int>(cols.size());

  const bool relPb = inst.family == RelationFamily::REL_PB_TB ||
                     inst.family == RelationFamily::REL_PB_TF ||
                     inst.family == RelationFamily::REL_PB_MIXED;
  if (relPb) {
    // the relation as stated, letters bound to the tilde matrices
    for (int c : cols) {
      auto vec = rep.applyToColumn(inst.shape, c, true);
      if (!vec.empty()) {
        res.passed = false;
        res.failure = make_failure(basis, vec.begin()->first, c, vec.begin()->second, "tilde");
        return res;
      }
    }
  }
  // the Klein-expanded combination in the original operators
  for (int c : cols) {
    auto vec = rep.applyToColumn(inst.expr, c, false);
    if (!vec.empty()) {
      res.passed = false;
      res.failure = make_failure(basis, vec.begin()->first, c, vec.begin()->second, "direct");
      return res;
    }
  }
  return res;
}

CheckResult adjoint_check_op(const Representation& rep, Kind kind, int index, bool tilde) {
  const Basis& basis = rep.basis();
  const SparseMatrix& up = tilde ? rep.tilde(kind, index, +1) : rep.para(kind, index, +1);
  const SparseMatrix& down = tilde ? rep.tilde(kind, index, -1) : rep.para(kind, index, -1);
  const SparseMatrix downT = down.transpose();

  CheckResult res;
  const int headroom = kind == Kind::ParaBoson ? 1 : 0;
  const std::vector<int> cols = rep.safeColumns(headroom);
  res.safeColumns = static_cast<int>(cols.size());
  for (int c : cols) {
    const Integer wc = basis.gramWeight(c);
    std::map<int, Rational> lhs;  // W_r * up(r,c) - W_c * down(c,r)
    for (const auto& [r, v] : up.column(c)) accumulate(lhs, r, Rational(basis.gramWeight(r)) * v);
    for (const auto& [r, v] : downT.column(c)) accumulate(lhs, r, Rational(-wc) * v);
    if (!lhs.empty()) {
      res.passed = false;
      res.failure = make_failure(basis, lhs.begin()->first, c, lhs.begin()->second, "matrix");
      return res;
    }
  }
  return res;
}

bool adjoint_check(const Representation& rep) {
  for (bool tilde : {false, true}) {
    for (int j = 1; j <= rep.spec().m; ++j)
      if (!adjoint_check_op(rep, Kind::ParaFermion, j, tilde).passed) return false;
    for (int k = 1; k <= rep.spec().n; ++k)
      if (!adjoint_check_op(rep, Kind::ParaBoson, k, tilde).passed) return false;
  }
  return true;
}

// ---------------------------------------------------------- cyclic subspace

namespace {

// integer row-echelon accumulator; reduction by cross-multiplication only
class IntegerSpan {
 public:
  // true if the vector enlarged the span
  bool insert(std::map<int, Integer> vec) {
    while (!vec.empty()) {
      const int pivot = vec.begin()->first;
      auto it = rows_.find(pivot);
      if (it == rows_.end()) {
        normalize(vec);
        rows_.emplace(pivot, std::move(vec));
        return true;
      }
      const Integer a = it->second.begin()->second;  // pivot entry of the stored row
      const Integer b = vec.begin()->second;
      std::map<int, Integer> next;
      for (const auto& [r, v] : vec) {
        Integer nv = a * v;
        auto other = it->second.find(r);
        if (other != it->second.end()) nv -= b * other->second;
        if (nv != 0) next.emplace(r, std::move(nv));
      }
      vec = std::move(next);
    }
    return false;
  }

  const std::map<int, std::map<int, Integer>>& rows() const { return rows_; }

 private:
  static void normalize(std::map<int, Integer>& vec) {
    Integer g = 0;
    for (const auto& [r, v] : vec) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    if (sgn(vec.begin()->second) < 0) g = -g;
    if (g != 0 && g != 1)
      for (auto& [r, v] : vec) v /= g;
  }

  std::map<int, std::map<int, Integer>> rows_;
};

std::map<int, Integer> apply_integer(const SparseMatrix& mat, const std::map<int, Integer>& vec) {
  std::map<int, Integer> out;
  for (const auto& [c, v] : vec) {
    for (const auto& [r, w] : mat.column(c)) {
      // all operator entries are integers by construction
      Integer step = w.get_num() * v;
      auto [it, inserted] = out.emplace(r, step);
      if (!inserted) {
        it->second += step;
        if (it->second == 0) out.erase(it);
      }
    }
  }
  return out;
}

}  // namespace

std::map<int, int> cyclic_subspace(const Representation& rep, int maxLevel, bool tilde) {
  if (maxLevel < 0) throw ConfigError("maxLevel must be >= 0");
  std::vector<const SparseMatrix*> ops;
  for (int j = 1; j <= rep.spec().m; ++j)
    for (int s : {-1, +1})
      ops.push_back(tilde ? &rep.tilde(Kind::ParaFermion, j, s) : &rep.para(Kind::ParaFermion, j, s));
  for (int k = 1; k <= rep.spec().n; ++k)
    for (int s : {-1, +1})
      ops.push_back(tilde ? &rep.tilde(Kind::ParaBoson, k, s) : &rep.para(Kind::ParaBoson, k, s));

  IntegerSpan span;
  std::vector<std::map<int, Integer>> frontier;
  std::map<int, Integer> vacuum{{0, Integer(1)}};
  span.insert(vacuum);
  frontier.push_back(std::move(vacuum));

  for (int level = 1; level <= maxLevel && !frontier.empty(); ++level) {
    std::vector<std::map<int, Integer>> next;
    for (const auto& vec : frontier) {
      for (const SparseMatrix* op : ops) {
        std::map<int, Integer> image = apply_integer(*op, vec);
        if (image.empty()) continue;
        std::map<int, Integer> copy = image;
        if (span.insert(std::move(copy))) next.push_back(std::move(image));
      }
    }
    frontier = std::move(next);
  }

  // every span vector lives in a single N eigenspace; bucket by the pivot
  std::map<int, int> dims;
  for (const auto& [pivot, row] : span.rows()) ++dims[rep.basis().occupationNumber(pivot)];
  return dims;
}

// ------------------------------------------------------------------- dumps

std::string dump_matrix(const SparseMatrix& a) {
  std::ostringstream os;
  os << a.rows() << ' ' << a.rows() << ' ' << a.cols() << ' ' << a.nonZeroCount() << '\n';
  for (int c = 0; c < a.cols(); ++c)
    for (const auto& [r, v] : a.column(c)) os << r << ' ' << c << ' ' << to_string(v) << '\n';
  return os.str();
}

std::string dump_basis(const Basis& basis) {
  std::ostringstream os;
  for (int i = 0; i < basis.dimension(); ++i) os << i << " : " << basis.describe(i) << '\n';
  return os.str();
}

}  // namespace paraklein
