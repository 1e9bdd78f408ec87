#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "paraklein/rational.hpp"

namespace paraklein {

// Free associative algebra over parafermion/paraboson creation and
// annihilation generators, extended by a Klein generator K subject to
//   K^2 = 1,   {K, g} = 0   for every paraoperator generator g.
// No triple relation is imposed here; this is the ambient object in which
// relation instances are stated and symbolic identities are replayed.

enum class Kind : std::uint8_t { ParaFermion = 0, ParaBoson = 1 };

struct Generator {
  Kind kind = Kind::ParaFermion;
  int index = 1;  // species, 1-based
  int sign = +1;  // +1 creation, -1 annihilation

  friend bool operator==(const Generator&, const Generator&) = default;
};

// Canonical order: parafermions before parabosons, index ascending,
// annihilation before creation.
int compare(const Generator& a, const Generator& b);

struct Word {
  std::vector<Generator> letters;
  int kleinPower = 0;  // 0 or 1; K sits canonically to the right of all letters

  int length() const { return static_cast<int>(letters.size()); }
  bool isEmpty() const { return letters.empty() && kleinPower == 0; }
  friend bool operator==(const Word&, const Word&) = default;
};

// Graded-lexicographic: word length first, then letterwise generator order,
// then kleinPower.
int compare(const Word& a, const Word& b);

struct WordLess {
  bool operator()(const Word& a, const Word& b) const { return compare(a, b) < 0; }
};

class Expression {
 public:
  using TermMap = std::map<Word, Rational, WordLess>;

  Expression() = default;

  static Expression zero() { return Expression(); }
  static Expression one() { return constant(rat(1)); }
  static Expression constant(const Rational& c);
  static Expression term(const Rational& c, Word w);
  static Expression generator(Kind kind, int index, int sign);
  static Expression fermion(int index, int sign) { return generator(Kind::ParaFermion, index, sign); }
  static Expression boson(int index, int sign) { return generator(Kind::ParaBoson, index, sign); }
  static Expression klein();

  bool isZero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Accumulates c * w, combining coefficients and dropping zeros.
  void add(const Word& w, const Rational& c);

  Expression operator-() const;
  Expression& operator+=(const Expression& rhs);
  Expression& operator-=(const Expression& rhs);
  Expression& operator*=(const Rational& c);

  friend Expression operator+(Expression a, const Expression& b) { return a += b; }
  friend Expression operator-(Expression a, const Expression& b) { return a -= b; }
  friend Expression operator*(Expression a, const Rational& c) { return a *= c; }
  friend Expression operator*(const Rational& c, Expression a) { return a *= c; }
  friend bool operator==(const Expression&, const Expression&) = default;

 private:
  TermMap terms_;
};

enum class BracketType { Commutator, Anticommutator };

// Bilinear product. Concatenates words; a Klein flag on the left factor is
// pushed right past the right factor's letters, flipping the sign once per
// letter passed, and K^2 folds to 1.
Expression mul(const Expression& a, const Expression& b);
Expression operator*(const Expression& a, const Expression& b);

// ab - ba or ab + ba.
Expression bracket(const Expression& a, const Expression& b, BracketType type);
Expression commutator(const Expression& a, const Expression& b);
Expression anticommutator(const Expression& a, const Expression& b);

// Anti-homomorphism: reverses words, swaps creation and annihilation,
// fixes K, is the identity on rational coefficients.
Expression dagger(const Expression& a);

// Multiplicative substitution f_j^± -> ±(f_j^± K), b_k^± -> b_k^±, K -> K.
// An involutive algebra homomorphism of the K-extended algebra.
Expression klein_transform(const Expression& a);

// Canonical form (idempotent). Expressions are kept normalized by
// construction; this re-derives the canonical map defensively.
Expression normalize(const Expression& a);

// Token rendering: "f+1", "b-2", trailing "K"; empty word renders as "1".
std::string to_string(const Word& w);
// Terms in canonical order joined by " + ", each "coeff * tokens".
std::string to_string(const Expression& e);

}  // namespace paraklein
