#include "paraklein/relations.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace paraklein {

namespace {

constexpr std::array<int, 2> kSigns = {-1, +1};

Expression f(int j, int s) { return Expression::fermion(j, s); }
Expression b(int k, int s) { return Expression::boson(k, s); }

int delta(int a, int c) { return a == c ? 1 : 0; }

std::string make_id(RelationFamily family, const std::string& sub,
                    const std::vector<int>& indices, const std::vector<int>& signs) {
  std::ostringstream os;
  os << family_name(family);
  if (!sub.empty()) os << '[' << sub << ']';
  if (!indices.empty()) {
    os << ':';
    for (std::size_t i = 0; i < indices.size(); ++i) {
      if (i > 0) os << ',';
      os << indices[i];
    }
  }
  if (!signs.empty()) {
    os << ':';
    for (int s : signs) os << (s > 0 ? '+' : '-');
  }
  return os.str();
}

RelationInstance finish(RelationFamily family, std::string sub, std::vector<int> indices,
                        std::vector<int> signs, Expression expr, Expression shape = {}) {
  RelationInstance inst;
  inst.family = family;
  inst.sub = std::move(sub);
  inst.indices = std::move(indices);
  inst.signs = std::move(signs);
  inst.expr = std::move(expr);
  inst.shape = std::move(shape);
  inst.bosonDegree = std::max(boson_degree(inst.expr), boson_degree(inst.shape));
  inst.id = make_id(inst.family, inst.sub, inst.indices, inst.signs);
  return inst;
}

// Plain-letter shapes of the triple relation families. For the REL_PB
// families the letters stand for the tilde operators; the expanded
// expression in the original generators is klein_transform(shape).

Expression pf_shape(int j, int k, int l, int xi, int eta, int eps) {
  Expression lhs = commutator(commutator(f(j, xi), f(k, eta)), f(l, eps));
  Expression rhs = rat(coeff_abs(eps, eta) * delta(k, l)) * f(j, xi) -
                   rat(coeff_abs(eps, xi) * delta(j, l)) * f(k, eta);
  return lhs - rhs;
}

Expression pb_shape(int j, int k, int l, int xi, int eta, int eps) {
  Expression lhs = commutator(anticommutator(b(j, xi), b(k, eta)), b(l, eps));
  Expression rhs = rat(coeff_diff(eps, xi) * delta(j, l)) * b(k, eta) +
                   rat(coeff_diff(eps, eta) * delta(k, l)) * b(j, xi);
  return lhs - rhs;
}

Expression rel_pf_shape(const std::string& sub, int j, int k, int l, int xi, int eta, int eps) {
  if (sub == "ff_b") return commutator(commutator(f(j, xi), f(k, eta)), b(l, eps));
  if (sub == "bb_f") return commutator(anticommutator(b(j, xi), b(k, eta)), f(l, eps));
  if (sub == "fb_f") {
    return commutator(commutator(f(j, xi), b(k, eta)), f(l, eps)) +
           rat(coeff_abs(eps, xi) * delta(j, l)) * b(k, eta);
  }
  // fb_b
  return anticommutator(commutator(f(j, xi), b(k, eta)), b(l, eps)) -
         rat(coeff_diff(eps, eta) * delta(k, l)) * f(j, xi);
}

Expression rel_pb_mixed_shape(const std::string& sub, int j, int k, int l, int xi, int eta,
                              int eps) {
  if (sub == "ff_b") return commutator(commutator(f(j, xi), f(k, eta)), b(l, eps));
  if (sub == "bb_f") return commutator(anticommutator(b(j, xi), b(k, eta)), f(l, eps));
  if (sub == "fb_f") {
    return anticommutator(anticommutator(f(j, xi), b(k, eta)), f(l, eps)) -
           rat(coeff_abs(eps, xi) * delta(j, l)) * b(k, eta);
  }
  // fb_b
  return commutator(anticommutator(f(j, xi), b(k, eta)), b(l, eps)) -
         rat(coeff_diff(eps, eta) * delta(k, l)) * f(j, xi);
}

Expression h_element(int i, int m) {
  if (i <= m) return rat(-1, 2) * commutator(f(i, -1), f(i, +1));
  return rat(1, 2) * anticommutator(b(i - m, -1), b(i - m, +1));
}

Expression h_total(int m, int n) {
  Expression h;
  for (int i = 1; i <= m + n; ++i) h += h_element(i, m);
  return h;
}

void require_applicable(RelationFamily family, int m, int n) {
  if (m < 0 || n < 0 || m + n < 1) {
    throw ConfigError("invalid mode counts m=" + std::to_string(m) + " n=" + std::to_string(n));
  }
  if (!family_applicable(family, m, n)) {
    throw ConfigError("family " + family_name(family) + " is not applicable to m=" +
                      std::to_string(m) + " n=" + std::to_string(n));
  }
}

}  // namespace

std::string family_name(RelationFamily family) {
  switch (family) {
    case RelationFamily::PF: return "PF";
    case RelationFamily::PB: return "PB";
    case RelationFamily::REL_PF: return "REL_PF";
    case RelationFamily::REL_PB_TB: return "REL_PB_TB";
    case RelationFamily::REL_PB_TF: return "REL_PB_TF";
    case RelationFamily::REL_PB_MIXED: return "REL_PB_MIXED";
    case RelationFamily::H_RELS: return "H_RELS";
    case RelationFamily::KLEIN: return "KLEIN";
    case RelationFamily::TILDE_IDENTITY: return "TILDE_IDENTITY";
  }
  return "?";
}

std::optional<RelationFamily> family_from_name(const std::string& name) {
  for (RelationFamily family : all_families()) {
    if (family_name(family) == name) return family;
  }
  return std::nullopt;
}

std::vector<RelationFamily> all_families() {
  return {RelationFamily::PF,        RelationFamily::PB,
          RelationFamily::REL_PF,    RelationFamily::REL_PB_TB,
          RelationFamily::REL_PB_TF, RelationFamily::REL_PB_MIXED,
          RelationFamily::H_RELS,    RelationFamily::KLEIN,
          RelationFamily::TILDE_IDENTITY};
}

bool family_applicable(RelationFamily family, int m, int n) {
  switch (family) {
    case RelationFamily::PF: return m >= 1;
    case RelationFamily::PB: return n >= 1;
    case RelationFamily::REL_PF: return m >= 1 && n >= 1;
    case RelationFamily::REL_PB_TB: return n >= 1;
    case RelationFamily::REL_PB_TF: return m >= 1;
    case RelationFamily::REL_PB_MIXED: return m >= 1 && n >= 1;
    case RelationFamily::H_RELS: return m + n >= 1;
    case RelationFamily::KLEIN: return m + n >= 1;
    case RelationFamily::TILDE_IDENTITY: return m + n >= 1;
  }
  return false;
}

int coeff_abs(int e, int x) { return e == x ? 0 : 2; }

int coeff_diff(int e, int x) { return e - x; }

int boson_degree(const Expression& e) {
  int deg = 0;
  for (const auto& [w, c] : e.terms()) {
    int d = 0;
    for (const Generator& g : w.letters) {
      if (g.kind == Kind::ParaBoson) ++d;
    }
    deg = std::max(deg, d);
  }
  return deg;
}

ReplayFactor tilde_replay_factor(RelationFamily family, const std::string& sub,
                                 const std::vector<int>& signs) {
  int xi = signs.size() > 0 ? signs[0] : +1;
  int eta = signs.size() > 1 ? signs[1] : +1;
  int eps = signs.size() > 2 ? signs[2] : +1;
  switch (family) {
    case RelationFamily::REL_PB_TB:
      return {+1, 0, RelationFamily::PB, ""};
    case RelationFamily::REL_PB_TF:
      return {-xi * eta * eps, 1, RelationFamily::PF, ""};
    case RelationFamily::REL_PB_MIXED:
      if (sub == "ff_b") return {-xi * eta, 0, RelationFamily::REL_PF, "ff_b"};
      if (sub == "bb_f") return {eps, 1, RelationFamily::REL_PF, "bb_f"};
      if (sub == "fb_f") return {eps * xi, 0, RelationFamily::REL_PF, "fb_f"};
      if (sub == "fb_b") return {xi, 1, RelationFamily::REL_PF, "fb_b"};
      break;
    default:
      break;
  }
  throw ConfigError("no replay factor for family " + family_name(family) + " sub " + sub);
}

std::vector<RelationInstance> enumerate_family(RelationFamily family, int m, int n) {
  require_applicable(family, m, n);
  std::vector<RelationInstance> out;

  auto for_signs3 = [](auto&& fn) {
    for (int xi : kSigns)
      for (int eta : kSigns)
        for (int eps : kSigns) fn(xi, eta, eps);
  };

  switch (family) {
    case RelationFamily::PF: {
      for (int j = 1; j <= m; ++j)
        for (int k = 1; k <= m; ++k)
          for (int l = 1; l <= m; ++l)
            for_signs3([&](int xi, int eta, int eps) {
              out.push_back(finish(family, "", {j, k, l}, {xi, eta, eps},
                                   pf_shape(j, k, l, xi, eta, eps)));
            });
      break;
    }
    case RelationFamily::PB: {
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l)
            for_signs3([&](int xi, int eta, int eps) {
              out.push_back(finish(family, "", {j, k, l}, {xi, eta, eps},
                                   pb_shape(j, k, l, xi, eta, eps)));
            });
      break;
    }
    case RelationFamily::REL_PF: {
      auto emit = [&](const std::string& sub, int jmax, int kmax, int lmax) {
        for (int j = 1; j <= jmax; ++j)
          for (int k = 1; k <= kmax; ++k)
            for (int l = 1; l <= lmax; ++l)
              for_signs3([&](int xi, int eta, int eps) {
                out.push_back(finish(family, sub, {j, k, l}, {xi, eta, eps},
                                     rel_pf_shape(sub, j, k, l, xi, eta, eps)));
              });
      };
      emit("ff_b", m, m, n);
      emit("bb_f", n, n, m);
      emit("fb_f", m, n, m);
      emit("fb_b", m, n, n);
      break;
    }
    case RelationFamily::REL_PB_TB: {
      for (int j = 1; j <= n; ++j)
        for (int k = 1; k <= n; ++k)
          for (int l = 1; l <= n; ++l)
            for_signs3([&](int xi, int eta, int eps) {
              Expression shape = pb_shape(j, k, l, xi, eta, eps);
              out.push_back(finish(family, "", {j, k, l}, {xi, eta, eps},
                                   klein_transform(shape), shape));
            });
      break;
    }
    case RelationFamily::REL_PB_TF: {
      for (int j = 1; j <= m; ++j)
        for (int k = 1; k <= m; ++k)
          for (int l = 1; l <= m; ++l)
            for_signs3([&](int xi, int eta, int eps) {
              Expression shape = pf_shape(j, k, l, xi, eta, eps);
              out.push_back(finish(family, "", {j, k, l}, {xi, eta, eps},
                                   klein_transform(shape), shape));
            });
      break;
    }
    case RelationFamily::REL_PB_MIXED: {
      auto emit = [&](const std::string& sub, int jmax, int kmax, int lmax) {
        for (int j = 1; j <= jmax; ++j)
          for (int k = 1; k <= kmax; ++k)
            for (int l = 1; l <= lmax; ++l)
              for_signs3([&](int xi, int eta, int eps) {
                Expression shape = rel_pb_mixed_shape(sub, j, k, l, xi, eta, eps);
                out.push_back(finish(family, sub, {j, k, l}, {xi, eta, eps},
                                     klein_transform(shape), shape));
              });
      };
      emit("ff_b", m, m, n);
      emit("bb_f", n, n, m);
      emit("fb_f", m, n, m);
      emit("fb_b", m, n, n);
      break;
    }
    case RelationFamily::H_RELS: {
      Expression H = h_total(m, n);
      for (int i = 1; i <= m; ++i) {
        Expression h = h_element(i, m);
        for (int j = 1; j <= m; ++j)
          for (int s : kSigns) {
            Expression e = h * f(j, s) - f(j, s) * (h + Expression::constant(rat(s * delta(i, j))));
            out.push_back(finish(family, "ff", {i, j}, {s}, std::move(e)));
          }
        for (int k = 1; k <= n; ++k)
          for (int s : kSigns) {
            Expression e = h * b(k, s) - b(k, s) * h;
            out.push_back(finish(family, "fb", {i, k}, {s}, std::move(e)));
          }
      }
      for (int i = 1; i <= n; ++i) {
        Expression h = h_element(m + i, m);
        for (int j = 1; j <= m; ++j)
          for (int s : kSigns) {
            Expression e = h * f(j, s) - f(j, s) * h;
            out.push_back(finish(family, "bf", {i, j}, {s}, std::move(e)));
          }
        for (int k = 1; k <= n; ++k)
          for (int s : kSigns) {
            Expression e = h * b(k, s) - b(k, s) * (h + Expression::constant(rat(s * delta(i, k))));
            out.push_back(finish(family, "bb", {i, k}, {s}, std::move(e)));
          }
      }
      for (int j = 1; j <= m; ++j)
        for (int s : kSigns) {
          Expression e = H * f(j, s) - f(j, s) * (H + Expression::constant(rat(s)));
          out.push_back(finish(family, "Hf", {j}, {s}, std::move(e)));
        }
      for (int k = 1; k <= n; ++k)
        for (int s : kSigns) {
          Expression e = H * b(k, s) - b(k, s) * (H + Expression::constant(rat(s)));
          out.push_back(finish(family, "Hb", {k}, {s}, std::move(e)));
        }
      break;
    }
    case RelationFamily::KLEIN: {
      // These normalize to zero in the symbolic layer, where the K-relations
      // are built in; the matrix checker recomputes them from the instance
      // tags against the constructed K operator.
      Expression K = Expression::klein();
      out.push_back(finish(family, "kk", {}, {}, mul(K, K) - Expression::one()));
      for (int j = 1; j <= m; ++j)
        for (int s : kSigns) {
          RelationInstance inst =
              finish(family, "kf", {j}, {s}, anticommutator(K, f(j, s)));
          out.push_back(std::move(inst));
        }
      for (int k = 1; k <= n; ++k)
        for (int s : kSigns) {
          RelationInstance inst =
              finish(family, "kb", {k}, {s}, anticommutator(K, b(k, s)));
          inst.bosonDegree = 1;
          out.push_back(std::move(inst));
        }
      break;
    }
    case RelationFamily::TILDE_IDENTITY: {
      const int jm = std::min(m, 2);
      const int km = std::min(n, 2);
      Expression K = Expression::klein();
      auto t = [](const Expression& e) { return klein_transform(e); };
      // (a)  [tf_j^xi, tf_k^eta] + xi*eta*[f_j^xi, f_k^eta] = 0
      for (int j = 1; j <= jm; ++j)
        for (int k = 1; k <= jm; ++k)
          for (int xi : kSigns)
            for (int eta : kSigns) {
              Expression e = commutator(t(f(j, xi)), t(f(k, eta))) +
                             rat(xi * eta) * commutator(f(j, xi), f(k, eta));
              out.push_back(finish(family, "a", {j, k}, {xi, eta}, std::move(e)));
            }
      // (b)  {tf_j^xi, tb_k^eta} + xi*[f_j^xi, b_k^eta]*K = 0
      for (int j = 1; j <= jm; ++j)
        for (int k = 1; k <= km; ++k)
          for (int xi : kSigns)
            for (int eta : kSigns) {
              Expression e = anticommutator(t(f(j, xi)), b(k, eta)) +
                             rat(xi) * mul(commutator(f(j, xi), b(k, eta)), K);
              out.push_back(finish(family, "b", {j, k}, {xi, eta}, std::move(e)));
            }
      // (c)  expanded tf triple relation minus (-xi*eta*eps) * PF * K
      for (int j = 1; j <= jm; ++j)
        for (int k = 1; k <= jm; ++k)
          for (int l = 1; l <= jm; ++l)
            for (int xi : kSigns)
              for (int eta : kSigns)
                for (int eps : kSigns) {
                  Expression e = t(pf_shape(j, k, l, xi, eta, eps)) -
                                 rat(-xi * eta * eps) * mul(pf_shape(j, k, l, xi, eta, eps), K);
                  out.push_back(finish(family, "c", {j, k, l}, {xi, eta, eps}, std::move(e)));
                }
      // (d) and the zero mixed shapes: expanded REL_PB shape minus the
      // signed K-dressed REL_PF source
      auto replay = [&](const std::string& mixedSub, const std::string& tag, int jmax, int kmax,
                        int lmax) {
        for (int j = 1; j <= jmax; ++j)
          for (int k = 1; k <= kmax; ++k)
            for (int l = 1; l <= lmax; ++l)
              for (int xi : kSigns)
                for (int eta : kSigns)
                  for (int eps : kSigns) {
                    ReplayFactor rf = tilde_replay_factor(RelationFamily::REL_PB_MIXED, mixedSub,
                                                          {xi, eta, eps});
                    Expression src = rel_pf_shape(mixedSub, j, k, l, xi, eta, eps);
                    if (rf.kleinPower == 1) src = mul(src, K);
                    Expression e = t(rel_pb_mixed_shape(mixedSub, j, k, l, xi, eta, eps)) -
                                   rat(rf.signFactor) * src;
                    out.push_back(finish(family, tag, {j, k, l}, {xi, eta, eps}, std::move(e)));
                  }
      };
      if (m >= 1 && n >= 1) {
        replay("fb_f", "d_fbf", jm, km, jm);
        replay("fb_b", "d_fbb", jm, km, km);
        replay("ff_b", "z_ffb", jm, jm, km);
        replay("bb_f", "z_bbf", km, km, jm);
      }
      // (e)  the tb relations are verbatim PB instances
      for (int j = 1; j <= km; ++j)
        for (int k = 1; k <= km; ++k)
          for (int l = 1; l <= km; ++l)
            for_signs3([&](int xi, int eta, int eps) {
              Expression e =
                  t(pb_shape(j, k, l, xi, eta, eps)) - pb_shape(j, k, l, xi, eta, eps);
              out.push_back(finish(family, "e", {j, k, l}, {xi, eta, eps}, std::move(e)));
            });
      // sign lemma: -eta*eps*|eps - eta| = |eps - eta| on {+1, -1}
      if (m >= 1) {
        for (int eta : kSigns)
          for (int eps : kSigns) {
            Expression e = Expression::constant(
                rat(-eta * eps * coeff_abs(eps, eta) - coeff_abs(eps, eta)));
            out.push_back(finish(family, "lemma", {}, {eta, eps}, std::move(e)));
          }
      }
      break;
    }
  }
  return out;
}

}  // namespace paraklein
