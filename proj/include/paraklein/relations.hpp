#pragma once

#include <optional>
#include <string>
#include <vector>

#include "paraklein/algebra.hpp"
#include "paraklein/errors.hpp"

namespace paraklein {

// Defining relation families of a mixed system of m parafermions and n
// parabosons with relative parafermion relations, the Klein-operator
// relations, the Cartan-type commutation relations of the h_i, and the
// relative paraboson relations satisfied by the transformed operators
// tf_j^± = ±f_j^± K, tb_k^± = b_k^±.
enum class RelationFamily {
  PF,            // parafermion triple relations
  PB,            // paraboson triple relations
  REL_PF,        // mixed triple relations, relative parafermion type
  REL_PB_TB,     // paraboson triple relations for the tb operators
  REL_PB_TF,     // parafermion triple relations for the tf operators
  REL_PB_MIXED,  // mixed triple relations, relative paraboson type
  H_RELS,        // h_i and H ladder relations, h_i fully expanded
  KLEIN,         // K^2 = 1 and {K, g} = 0
  TILDE_IDENTITY // free-algebra replays of the Klein-transform derivation
};

std::string family_name(RelationFamily family);
std::optional<RelationFamily> family_from_name(const std::string& name);
std::vector<RelationFamily> all_families();

// True when the family references only generators present in an (m, n)
// system. Enumerating an inapplicable family is a configuration error;
// "all families" callers filter with this predicate first.
bool family_applicable(RelationFamily family, int m, int n);

// One concrete relation instance, stored as LHS - RHS.
struct RelationInstance {
  RelationFamily family = RelationFamily::PF;
  std::string sub;           // sub-relation tag, empty when the family has one shape
  std::vector<int> indices;  // (j, k, l) as applicable
  std::vector<int> signs;    // (xi, eta, epsilon) as applicable
  // Expression in the original generators; for REL_PB_* families the tilde
  // operators are expanded via klein_transform.
  Expression expr;
  // For REL_PB_* families only: the same combination written in plain
  // letters that stand for the tilde operators (evaluated against tilde
  // matrices by the checker). Empty otherwise.
  Expression shape;
  int bosonDegree = 0;  // max paraboson letters over the words of expr
  std::string id;       // stable identifier, e.g. "REL_PF[fb_f]:1,1,1:-++"
};

// |e - x| with signs in {+1, -1}: 0 or 2.
int coeff_abs(int e, int x);
// e - x: -2, 0 or 2.
int coeff_diff(int e, int x);

// Complete enumeration over all index tuples and sign tuples, including
// instances where both sides vanish trivially. Throws ConfigError when the
// family is not applicable to (m, n).
std::vector<RelationInstance> enumerate_family(RelationFamily family, int m, int n);

/// Replay pattern of the Klein-transform derivation: for a REL_PB instance
// with signs (xi, eta, epsilon), the expanded expression equals
// signFactor * (source expression) * K^kleinPower, where the source is the
// matching PF / PB / REL_PF instance.
struct ReplayFactor {
  int signFactor = +1;
  int kleinPower = 0;
  RelationFamily sourceFamily = RelationFamily::PF;
  std::string sourceSub;
};
ReplayFactor tilde_replay_factor(RelationFamily family, const std::string& sub,
                                 const std::vector<int>& signs);

int boson_degree(const Expression& e);

}  // namespace paraklein
