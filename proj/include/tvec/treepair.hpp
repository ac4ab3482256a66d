#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "tvec/dyadic.hpp"
#include "tvec/groupword.hpp"
#include "tvec/tree.hpp"

namespace tvec {

/// An element of T_a as a pair of full a-ary trees plus a rotation.
///
/// Conventions used throughout:
///   - domain() partitions the source circle, range() the image circle;
///   - rotation n in 1..L identifies domain leaf i (0-based) with range
///     leaf (i + n - 1) mod L, so shift() = n - 1 is the 0-based offset;
///   - multiplication is left to right: evaluate(a*b, t) applies a first.
class TreePair {
public:
  TreePair(Tree domain, Tree range, int rotation);
  static TreePair identity(int arity = 2);

  const Tree& domain() const { return domain_; }
  const Tree& range() const { return range_; }
  int rotation() const { return rotation_; }
  int shift() const { return rotation_ - 1; }
  int arity() const { return domain_.arity(); }
  int leaf_count() const { return domain_.leaf_count(); }
  bool is_identity() const { return leaf_count() == 1; }

  int range_leaf(int domain_leaf) const;
  int domain_leaf(int range_leaf) const;

  /// Structural comparison of the diagrams (not group equality).
  bool same_diagram(const TreePair& o) const;

  /// "R ; S ; n" with trees in balanced-parentheses form.
  std::string str() const;
  static std::optional<TreePair> parse(std::string_view text, int arity = 2);

  nlohmann::json to_json() const;
  static std::optional<TreePair> from_json(const nlohmann::json& j);

private:
  Tree domain_;
  Tree range_;
  int rotation_;
};

/// A matching pair of carets: the domain caret's leaves are identified, in
/// order, with the range caret's leaves.
struct Dipole {
  int domain_first_leaf;
  int range_first_leaf;
  bool operator==(const Dipole&) const = default;
};

std::vector<Dipole> find_dipoles(const TreePair& tp);
bool is_reduced(const TreePair& tp);
TreePair remove_dipole(const TreePair& tp, const Dipole& d);
/// Split domain leaf i and its identified range leaf; same group element.
TreePair insert_dipole(const TreePair& tp, int domain_leaf);
/// The unique dipole-free representative.  Idempotent.
TreePair reduce(const TreePair& tp);

/// Reduced product, composing left to right.  Throws on arity mismatch.
TreePair multiply(const TreePair& a, const TreePair& b);
TreePair invert(const TreePair& tp);
/// f^k for any integer k (k <= 0 allowed).
TreePair power(const TreePair& tp, int k);
/// True iff both reduce to the same diagram.  Throws on arity mismatch.
bool equal(const TreePair& a, const TreePair& b);

/// Prefix substitution on base-a digit words: finds the domain leaf whose
/// address is a prefix of w (extending w with zeros as needed) and replaces
/// it by the identified range leaf's address.
Word apply_word(const TreePair& tp, const Word& w);
/// Exact evaluation at a dyadic circle point (arity 2 only).
Dyadic evaluate(const TreePair& tp, const Dyadic& t);

/// One affine piece of a circle map: t in [lo, hi) goes to
/// 2^slope_exp * t + offset.
struct PLPiece {
  DyadicFraction lo;
  DyadicFraction hi;  // may be exactly 1 for the last piece
  int slope_exp;
  DyadicFraction offset;
};

class PLMap {
public:
  explicit PLMap(std::vector<PLPiece> pieces);

  const std::vector<PLPiece>& pieces() const { return pieces_; }
  Dyadic apply(const Dyadic& t) const;
  /// Pieces tile [0,1), image arcs chain cyclically, total image length 1.
  bool is_circle_bijection() const;
  std::string str() const;

private:
  std::vector<PLPiece> pieces_;
};

/// One piece per domain leaf; agrees with evaluate everywhere.
PLMap to_plmap(const TreePair& tp);

/// (f+g)(t) = f(2t)/2 on the left half, (g(2t-1)+1)/2 on the right.
/// Both arguments must have rotation 1.
TreePair oplus(const TreePair& f, const TreePair& g);

/// Named generators: x_i (i >= 0), c_n (n >= 0), g_n (n >= 1).
TreePair generator(GenFamily family, int index);
/// Accepts "x0", "c2", "g1" and the aliases "c", "f12".
TreePair generator(std::string_view name);

/// Left-to-right product of generator powers, reduced.
TreePair from_word(const GroupWord& w);
/// x0^{a0}..xn^{an} xn^{-bn}..x0^{-b0} with a_i/b_i the leaf exponents of
/// the reduced domain/range trees.  Requires rotation 1 and arity 2.
GroupWord normal_form(const TreePair& f);

/// All distinct reduced elements representable with at most max_leaves
/// leaves, deduplicated, sorted by (leaf count, serialization).
std::vector<TreePair> enumerate_elements(int arity, int max_leaves);

/// Least k <= cap with f^k = identity, or nullopt.
std::optional<int> order(const TreePair& f, int cap);

}  // namespace tvec
