#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace tvec {

/// Digit word over {0, ..., arity-1}; the address of a node is the path of
/// child indices from the root.
using Word = std::vector<int>;

/// Full a-ary tree: every node has either 0 or exactly `arity` children.
/// Values are immutable; copies share structure.
class Tree {
public:
  /// A single leaf.
  explicit Tree(int arity = 2);
  static Tree leaf(int arity = 2) { return Tree(arity); }
  static Tree branch(std::vector<Tree> children);
  /// Comb tree whose spine is the rightmost path, with `leaves` leaves.
  static Tree right_comb(int arity, int leaves);
  /// Rebuild a binary tree from its left-to-right leaf depth profile.
  /// Throws std::invalid_argument if the profile does not tile [0,1].
  static Tree from_leaf_depths(const std::vector<int>& depths);

  int arity() const { return arity_; }
  bool is_leaf() const;
  int leaf_count() const;
  Tree child(int i) const;

  std::vector<int> leaf_depths() const;
  std::vector<Word> leaf_addresses() const;
  Word leaf_address(int leaf_index) const;
  /// Subtree at the given address; nullopt if the address walks past a leaf.
  std::optional<Tree> node_at(const Word& address) const;

  /// Replace leaf `leaf_index` (0-based, left to right) by a caret.
  Tree grow_at(int leaf_index) const;
  /// Collapse the caret whose children are the leaves starting at
  /// `leaf_index`.  Throws if there is no such caret.
  Tree prune_at(int leaf_index) const;
  /// First-leaf indices of the internal nodes whose children are all leaves.
  std::vector<int> caret_first_leaves() const;

  /// Smallest common refinement of two trees of the same arity.
  static Tree join(const Tree& a, const Tree& b);
  /// True if every leaf of `coarse` is a node of `fine`.
  static bool refines(const Tree& fine, const Tree& coarse);

  bool operator==(const Tree& o) const;

  /// Balanced parentheses; a leaf is "()", an internal node wraps its
  /// children: x0's domain tree prints as "((()())())".
  std::string parens() const;
  static std::optional<Tree> parse_parens(std::string_view text,
                                          int arity = 2);

  struct Node;  // implementation node, defined in tree.cpp

private:
  using NodePtr = std::shared_ptr<const Node>;
  Tree(NodePtr node, int arity) : node_(std::move(node)), arity_(arity) {}

  NodePtr node_;
  int arity_ = 2;
};

}  // namespace tvec
