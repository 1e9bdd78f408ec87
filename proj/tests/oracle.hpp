#pragma once

// Independent reference for the symbolic layer, used to freeze expected
// values: words are kept as raw letter lists with explicit K letters, and
// the canonical form is reached by literal adjacent swaps (K g -> -g K,
// K K -> 1), one step at a time. No closed-form sign shortcuts.

#include <utility>
#include <vector>

#include "paraklein/algebra.hpp"

namespace oracle {

struct Letter {
  bool isK = false;
  paraklein::Generator g;
};

using RawWord = std::vector<Letter>;
using RawTerm = std::pair<paraklein::Rational, RawWord>;
using RawExpr = std::vector<RawTerm>;

inline RawExpr from(const paraklein::Expression& e) {
  RawExpr out;
  for (const auto& [w, c] : e.terms()) {
    RawWord letters;
    for (const auto& g : w.letters) letters.push_back({false, g});
    if (w.kleinPower == 1) letters.push_back({true, {}});
    out.emplace_back(c, letters);
  }
  return out;
}

inline paraklein::Expression reduce(const RawExpr& raw) {
  paraklein::Expression out;
  for (const auto& [coeff, lettersIn] : raw) {
    RawWord letters = lettersIn;
    paraklein::Rational c = coeff;
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
        if (!letters[i].isK) continue;
        if (letters[i + 1].isK) {
          letters.erase(letters.begin() + i, letters.begin() + i + 2);
        } else {
          std::swap(letters[i], letters[i + 1]);
          c = -c;
        }
        changed = true;
        break;
      }
    }
    paraklein::Word w;
    for (const Letter& l : letters) {
      if (l.isK) w.kleinPower = 1;
      else w.letters.push_back(l.g);
    }
    out.add(w, c);
  }
  return out;
}

inline RawExpr concat(const RawExpr& a, const RawExpr& b) {
  RawExpr out;
  for (const auto& [ca, wa] : a)
    for (const auto& [cb, wb] : b) {
      RawWord w = wa;
      w.insert(w.end(), wb.begin(), wb.end());
      out.emplace_back(ca * cb, w);
    }
  return out;
}

inline RawExpr dagger_raw(const RawExpr& a) {
  RawExpr out;
  for (const auto& [c, w] : a) {
    RawWord rev;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      Letter l = *it;
      if (!l.isK) l.g.sign = -l.g.sign;
      rev.push_back(l);
    }
    out.emplace_back(c, rev);
  }
  return out;
}

inline RawExpr klein_raw(const RawExpr& a) {
  RawExpr out;
  for (const auto& [c, w] : a) {
    RawWord img;
    paraklein::Rational factor = c;
    for (const Letter& l : w) {
      img.push_back(l);
      if (!l.isK && l.g.kind == paraklein::Kind::ParaFermion) {
        if (l.g.sign < 0) factor = -factor;
        img.push_back({true, {}});
      }
    }
    out.emplace_back(factor, img);
  }
  return out;
}

}  // namespace oracle
