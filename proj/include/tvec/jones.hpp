#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "tvec/treepair.hpp"

namespace tvec {

/// Undirected graph on the gap vertices of a tree (or pair): vertices
/// 1..L with vertex i sitting immediately left of leaf i, one edge per
/// left edge of each contributing tree.
struct ThompsonGraph {
  int vertex_count = 0;
  std::set<std::pair<int, int>> edges;  // normalized (min, max), 1-based
  std::optional<std::vector<int>> coloring;  // coloring[v-1] in {0,1}

  void add_edge(int u, int v);
  bool has_edge(int u, int v) const;
  std::string to_dot() const;
};

struct BipartiteResult {
  bool bipartite = false;
  std::vector<int> coloring;   // valid 2-coloring when bipartite
  std::vector<int> odd_cycle;  // witness cycle (odd length) when not
};

ThompsonGraph thompson_graph_of_tree(const Tree& t);
/// Graph of the diagram as given: the range tree's edges are transported
/// through the leaf identification onto the domain tree's vertices.
/// Membership questions want the reduced diagram's graph.
ThompsonGraph thompson_graph_of_pair(const TreePair& tp);

/// Deterministic 2-coloring check: the smallest unvisited vertex anchors
/// each component with color 0.
BipartiteResult is_bipartite(const ThompsonGraph& g);

/// Membership in the subgroup of elements with bipartite graphs.
bool member_vect_bipartite(const TreePair& tp);

enum class ParityClass { preserves, switches, neither };
std::string to_string(ParityClass c);

/// Digit-sum parity comparison across every identified leaf pair of the
/// reduced diagram: all equal parities = preserves, all opposite =
/// switches, mixed = neither.  Membership holds iff not `neither`.
ParityClass member_vect_parity(const TreePair& tp);

/// An equivalent (possibly unreduced) pair with an even number of leaves
/// whose graph 2-coloring alternates along the vertex line, produced by
/// dipole insertion.  Throws std::invalid_argument on non-members.
TreePair alternating_form(const TreePair& tp);

/// tp = p * c_{2n}^m * q with p, q rotation-1 members and 0 <= m < 2n+2.
struct Factorization {
  TreePair p;
  int n;
  int m;
  TreePair q;
};
Factorization factorize(const TreePair& tp);

struct CapExhausted : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Smallest n <= cap with f^-1 (x0 x1)^-n f outside the subgroup.
/// Throws std::invalid_argument if f is a member, CapExhausted if the
/// search bound is reached (which proves nothing).
int commensurator_witness(const TreePair& f, int cap);

}  // namespace tvec
