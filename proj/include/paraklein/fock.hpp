#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "paraklein/algebra.hpp"
#include "paraklein/errors.hpp"
#include "paraklein/rational.hpp"
#include "paraklein/relations.hpp"

namespace paraklein {

// Deliberate construction defects for the self-check ("test of the test").
// All off in normal use.
struct Mutations {
  bool dropDressing = false;   // omit the boson term from the fermion dressing
  bool tildeUnsigned = false;  // tilde fermions built as f*K without the sign
  bool kleinIdentity = false;  // K replaced by the identity

  bool any() const { return dropDressing || tildeUnsigned || kleinIdentity; }
};

struct ModeSpec {
  int m = 0;            // parafermion species
  int n = 0;            // paraboson species
  int p = 1;            // order (number of Green components)
  int bosonCutoff = 0;  // max total boson occupation kept in the basis
  long dimensionCap = 200000;

  void validate() const;  // throws ConfigError
  long dimension() const; // validates first
};

struct BasisState {
  std::vector<std::uint8_t> fermionOcc;  // m*p bits, component-major
  std::vector<int> bosonOcc;             // n*p occupations, component-major
};

// Integer/rational sparse matrix stored by columns.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), columns_(cols) {}
  static SparseMatrix identity(int dim);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  void add(int row, int col, const Rational& value);  // accumulates, drops zeros
  Rational at(int row, int col) const;
  const std::map<int, Rational>& column(int col) const { return columns_[col]; }

  bool isZero() const;
  bool columnIsZero(int col) const { return columns_[col].empty(); }
  std::size_t nonZeroCount() const;
  SparseMatrix transpose() const;

  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator*(const Rational& c, const SparseMatrix& a);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::map<int, Rational>> columns_;  // col -> (row -> value)
};

// Occupation basis: fermion bit patterns (lexicographic, mode 0 most
// significant) crossed with boson occupation vectors of total <= cutoff
// (graded lexicographic). Index = fermionIndex * bosonCount + bosonIndex.
class Basis {
 public:
  explicit Basis(const ModeSpec& spec);

  const ModeSpec& spec() const { return spec_; }
  int dimension() const { return dimension_; }
  int fermionModes() const { return fermionModes_; }
  int bosonModes() const { return bosonModes_; }
  int bosonStates() const { return static_cast<int>(bosonOccs_.size()); }

  const BasisState& state(int index) const { return states_[index]; }
  int indexOf(const BasisState& s) const;  // -1 when outside the cutoff

  int fermionTotal(int index) const;
  int bosonTotal(int index) const;
  int occupationNumber(int index) const;  // N = fermion + boson total
  Integer gramWeight(int index) const;    // product of bosonOcc factorials

  std::string describe(int index) const;  // "f=<bits> b=<ints> N=<int>"

 private:
  ModeSpec spec_;
  int fermionModes_ = 0;
  int bosonModes_ = 0;
  int dimension_ = 0;
  std::vector<BasisState> states_;
  std::vector<std::vector<int>> bosonOccs_;
  std::map<std::vector<int>, int> bosonIndex_;
};

struct Failure {
  int row = -1;
  int col = -1;
  std::string value;
  std::string rowState;
  std::string colState;
  std::string route;  // "direct", "tilde", "matrix", "symbolic"
};

struct CheckResult {
  bool passed = true;
  int safeColumns = 0;
  std::optional<Failure> failure;
};

// The order-p Fock representation: p Green components of ordinary modes,
// dressed with diagonal sign factors so that the component cross terms in
// every triple relation cancel. Immutable once built.
class Representation {
 public:
  explicit Representation(const ModeSpec& spec, const Mutations& mutations = {});

  const ModeSpec& spec() const { return spec_; }
  const Basis& basis() const { return basis_; }
  const Mutations& mutations() const { return mutations_; }
  int dimension() const { return basis_.dimension(); }
  int vacuumIndex() const { return 0; }  // all occupations zero sorts first

  // Plumbing under the para operators: one ordinary mode of one Green
  // component (Jordan-Wigner fermions, divided-power bosons), and the
  // diagonal dressing attached to a component.
  SparseMatrix bareMode(Kind kind, int species, int component, int sign) const;
  SparseMatrix kleinFactor(Kind kind, int component) const;

  const SparseMatrix& para(Kind kind, int index, int sign) const;
  const SparseMatrix& tilde(Kind kind, int index, int sign) const;
  const SparseMatrix& klein() const { return klein_; }
  const SparseMatrix& numberOperator() const { return number_; }
  const SparseMatrix& hamiltonian() const { return hamiltonian_; }

  // Interprets an expression; out-of-range generator index -> EvalError.
  // The tilde variants substitute the tilde matrices for the letters.
  SparseMatrix evaluate(const Expression& e) const;
  SparseMatrix evaluateTilde(const Expression& e) const;
  std::map<int, Rational> applyToColumn(const Expression& e, int col, bool tilde) const;

  // Columns whose total boson occupation leaves enough headroom below the
  // cutoff that a word with `bosonDegree` boson letters acts untruncated.
  std::vector<int> safeColumns(int bosonDegree) const;

 private:
  const SparseMatrix& lookup(Kind kind, int index, int sign, bool tilde) const;
  void build();
  void constructionGuard() const;

  ModeSpec spec_;
  Mutations mutations_;
  Basis basis_;
  std::map<std::tuple<int, int, int>, SparseMatrix> para_;   // (kind, index, sign)
  std::map<std::tuple<int, int, int>, SparseMatrix> tilde_;
  SparseMatrix klein_;
  SparseMatrix number_;
  SparseMatrix hamiltonian_;
};

// Evaluates one relation instance on the representation. Triple-relation
// families run on the safe columns (exact there); the REL_PB families run
// twice, once expanded in the original operators and once as the plain
// shape against the tilde matrices; KLEIN instances are recomputed directly
// from the constructed K (exact on every column); TILDE_IDENTITY instances
// are free-algebra facts and must already be the zero expression.
// Zero safe columns -> ConfigError (inconclusive, not a pass).
CheckResult check_relation(const RelationInstance& inst, const Representation& rep);

// W-twisted adjointness, W = diag(product of boson occupation factorials):
// W^{-1} (X^+)^T W = X^- for X among f_j, b_k and their tildes, restricted
// to columns with boson headroom 1. K is W-self-adjoint.
CheckResult adjoint_check_op(const Representation& rep, Kind kind, int index, bool tilde);
bool adjoint_check(const Representation& rep);

// Dimensions, per N eigenvalue, of span{words of length <= maxLevel in the
// para operators applied to the vacuum}; exact integer (fraction-free)
// elimination. Levels beyond the boson cutoff are distorted by truncation.
std::map<int, int> cyclic_subspace(const Representation& rep, int maxLevel, bool tilde = false);

// External text formats: matrix dump `dim rows cols nnz` then `row col value`
// triplets ordered by (col, row); basis dump `index : f=<bits> b=<ints> N=<int>`
// with `-` for an empty occupation list.
std::string dump_matrix(const SparseMatrix& a);
std::string dump_basis(const Basis& basis);

}  // namespace paraklein
