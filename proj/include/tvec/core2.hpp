#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "tvec/treepair.hpp"

namespace tvec {

/// Folded labeled directed graph built from generator diagrams with all
/// roots identified.  Saturated under:
///   (1) identified vertices share their left children and their right
///       children, and
///   (2) vertices with identified left children and identified right
///       children are themselves identified.
/// Vertices are canonically renumbered in breadth-first order from the
/// root (left edge first), so equal cores compare equal structurally.
class CoreGraph {
public:
  int vertex_count() const { return static_cast<int>(children_.size()); }
  int root() const { return 0; }
  std::optional<std::pair<int, int>> children(int v) const {
    return children_[static_cast<size_t>(v)];
  }
  /// Breadth-first names: root = "e", then "f", "g", ...
  std::string vertex_name(int v) const;

  bool operator==(const CoreGraph& o) const = default;

  /// Folded, co-folded, and fully reachable from the root.
  bool invariants_hold() const;

  std::string to_dot() const;

private:
  friend CoreGraph build_core(const std::vector<TreePair>&,
                              std::optional<unsigned long long>);
  std::vector<std::optional<std::pair<int, int>>> children_;
};

/// Builds the core of the subgroup generated by the given reduced arity-2
/// diagrams.  The optional seed shuffles the internal processing order
/// (the result must not depend on it).  Throws on an empty list.
CoreGraph build_core(const std::vector<TreePair>& generators,
                     std::optional<unsigned long long> shuffle_seed =
                         std::nullopt);

/// True iff the reduced diagram of tp maps into the core by a labeled
/// directed graph homomorphism sending both diagram roots to the core root.
bool accepts(const CoreGraph& core, const TreePair& tp);

/// For f fixing an interior dyadic alpha with rotation 1: the pair
/// (f on [0,alpha] glued with identity, identity glued with f after alpha);
/// their product is f.  Throws if alpha is not interior or not fixed.
std::pair<TreePair, TreePair> components(const TreePair& f,
                                         const Dyadic& alpha);

/// One rewriting x = yz per core vertex with children.
struct SemigroupPresentation {
  std::vector<std::string> letters;
  struct Rule {
    std::string lhs;
    std::string rhs_left;
    std::string rhs_right;
    bool operator==(const Rule&) const = default;
  };
  std::vector<Rule> rules;
  std::string base;

  /// "e = ff, f = fe ; base e"
  std::string str() const;
};

SemigroupPresentation core_presentation(const CoreGraph& core);

/// Compares core acceptance against an external membership predicate.
struct ClosureReport {
  struct Disagreement {
    TreePair element;
    bool accepted;
    bool member;
  };
  int checked = 0;
  std::vector<Disagreement> disagreements;
  bool agreed() const { return disagreements.empty(); }
};

ClosureReport core_closed_on(const CoreGraph& core,
                             const std::vector<TreePair>& sample,
                             const std::function<bool(const TreePair&)>&
                                 membership);

}  // namespace tvec
