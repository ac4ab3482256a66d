#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "tvec/groupword.hpp"
#include "tvec/treepair.hpp"

namespace tvec {

/// True iff both words name the same group element (checked by reducing
/// the tree pairs).
bool verify_relation(const GroupWord& lhs, const GroupWord& rhs);

struct RelationInstance {
  std::string name;
  GroupWord lhs;
  GroupWord rhs;
};

/// Known suites: "classical" (the mixed x/c relations of the ambient
/// group), "infinite-presentation" (the subgroup's defining relations on
/// g and c letters), "power-raise", "commutation", and
/// "finite-presentation" (twelve fixed relations; range ignored).
/// Instantiates every relation for admissible indices up to `range`.
std::vector<RelationInstance> suite_instances(const std::string& suite,
                                              int range);

struct SuiteReport {
  std::string suite;
  int total = 0;
  std::vector<RelationInstance> failures;
  bool ok() const { return failures.empty(); }
  std::string str() const;
  nlohmann::json to_json() const;
};

SuiteReport relation_suite(const std::string& suite, int range);

/// p * c_{2n}^m * q^{-1} with p, q positive words in the g letters and
/// 0 <= m < 2n+2 (n = m = 0 when the c part is trivial).
struct StandardForm {
  GroupWord p;
  int n = 0;
  int m = 0;
  GroupWord q;
  GroupWord to_word() const;
};

/// Rewrites a word over {g_k, c_{2n}} into standard form; the result names
/// the same group element.  Throws std::invalid_argument on x letters or
/// odd c indices.
StandardForm symbolic_standard_form(const GroupWord& w);

/// t -> (-1)^flip * t + translation on the integers.
struct DihedralElement {
  long long translation = 0;
  int flip = 0;

  static DihedralElement identity() { return {}; }
  bool is_identity() const { return translation == 0 && flip == 0; }
  /// Left-to-right composition: (a * b) applies a first.
  DihedralElement operator*(const DihedralElement& o) const;
  DihedralElement inverse() const;
  bool operator==(const DihedralElement&) const = default;
  std::string str() const;
};

/// The quotient onto the infinite dihedral group: c_{2n} maps to the
/// reflection t -> -t + n, g_{2n+1} to the unit translation, g_{2n+2} to
/// the identity.  Throws std::invalid_argument on x letters or odd c
/// indices.
DihedralElement dihedral_alpha(const GroupWord& w);

}  // namespace tvec
