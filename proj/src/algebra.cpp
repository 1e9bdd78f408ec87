#include "paraklein/algebra.hpp"

#include <sstream>
#include <utility>

namespace paraklein {

int compare(const Generator& a, const Generator& b) {
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  if (a.index != b.index) return a.index < b.index ? -1 : 1;
  if (a.sign != b.sign) return a.sign < b.sign ? -1 : 1;  // -1 orders before +1
  return 0;
}

int compare(const Word& a, const Word& b) {
  if (a.length() != b.length()) return a.length() < b.length() ? -1 : 1;
  for (int i = 0; i < a.length(); ++i) {
    if (int c = compare(a.letters[i], b.letters[i]); c != 0) return c;
  }
  if (a.kleinPower != b.kleinPower) return a.kleinPower < b.kleinPower ? -1 : 1;
  return 0;
}

Expression Expression::constant(const Rational& c) {
  Expression e;
  e.add(Word{}, c);
  return e;
}

Expression Expression::term(const Rational& c, Word w) {
  Expression e;
  e.add(w, c);
  return e;
}

Expression Expression::generator(Kind kind, int index, int sign) {
  Word w;
  w.letters.push_back(Generator{kind, index, sign});
  return term(rat(1), std::move(w));
}

Expression Expression::klein() {
  Word w;
  w.kleinPower = 1;
  return term(rat(1), std::move(w));
}

void Expression::add(const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Expression Expression::operator-() const {
  Expression r;
  for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
  return r;
}

Expression& Expression::operator+=(const Expression& rhs) {
  for (const auto& [w, c] : rhs.terms_) add(w, c);
  return *this;
}

Expression& Expression::operator-=(const Expression& rhs) {
  for (const auto& [w, c] : rhs.terms_) add(w, -c);
  return *this;
}

Expression& Expression::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

namespace {

// Word product: concatenate letters; the left Klein flag crosses every
// letter of the right word, picking up one sign flip per letter.
std::pair<int, Word> word_product(const Word& a, const Word& b) {
  int sign = (a.kleinPower == 1 && b.length() % 2 == 1) ? -1 : +1;
  Word w;
  w.letters.reserve(a.letters.size() + b.letters.size());
  w.letters = a.letters;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  w.kleinPower = (a.kleinPower + b.kleinPower) % 2;
  return {sign, std::move(w)};
}

}  // namespace

Expression mul(const Expression& a, const Expression& b) {
  Expression r;
  for (const auto& [wa, ca] : a.terms()) {
    for (const auto& [wb, cb] : b.terms()) {
      auto [sign, w] = word_product(wa, wb);
      r.add(w, sign < 0 ? Rational(-ca * cb) : Rational(ca * cb));
    }
  }
  return r;
}

Expression operator*(const Expression& a, const Expression& b) { return mul(a, b); }

Expression bracket(const Expression& a, const Expression& b, BracketType type) {
  Expression r = mul(a, b);
  if (type == BracketType::Commutator) {
    r -= mul(b, a);
  } else {
    r += mul(b, a);
  }
  return r;
}

Expression commutator(const Expression& a, const Expression& b) {
  return bracket(a, b, BracketType::Commutator);
}

Expression anticommutator(const Expression& a, const Expression& b) {
  return bracket(a, b, BracketType::Anticommutator);
}

Expression dagger(const Expression& a) {
  // dagger(g1..gr K^e) = K^e gr'..g1' with letterwise sign flip; moving K^e
  // right past the r reversed letters contributes (-1)^(e*r).
  Expression r;
  for (const auto& [w, c] : a.terms()) {
    Word d;
    d.kleinPower = w.kleinPower;
    d.letters.reserve(w.letters.size());
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it) {
      d.letters.push_back(Generator{it->kind, it->index, -it->sign});
    }
    int sign = (w.kleinPower == 1 && w.length() % 2 == 1) ? -1 : +1;
    r.add(d, sign < 0 ? Rational(-c) : c);
  }
  return r;
}

Expression klein_transform(const Expression& a) {
  Expression r;
  for (const auto& [w, c] : a.terms()) {
    Expression prod = Expression::constant(c);
    for (const Generator& g : w.letters) {
      if (g.kind == Kind::ParaFermion) {
        Word fw;
        fw.letters.push_back(g);
        fw.kleinPower = 1;
        prod = mul(prod, Expression::term(rat(g.sign), std::move(fw)));
      } else {
        prod = mul(prod, Expression::generator(g.kind, g.index, g.sign));
      }
    }
    if (w.kleinPower == 1) prod = mul(prod, Expression::klein());
    r += prod;
  }
  return r;
}

Expression normalize(const Expression& a) {
  Expression r;
  for (const auto& [w, c] : a.terms()) r.add(w, c);
  return r;
}

std::string to_string(const Word& w) {
  if (w.isEmpty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Generator& g : w.letters) {
    if (!first) os << ' ';
    os << (g.kind == Kind::ParaFermion ? 'f' : 'b') << (g.sign > 0 ? '+' : '-') << g.index;
    first = false;
  }
  if (w.kleinPower == 1) {
    if (!first) os << ' ';
    os << 'K';
  }
  return os.str();
}

std::string to_string(const Expression& e) {
  if (e.isZero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : e.terms()) {
    if (!first) os << " + ";
    os << to_string(c);
    if (!w.isEmpty()) os << " * " << to_string(w);
    first = false;
  }
  return os.str();
}

}  // namespace paraklein
