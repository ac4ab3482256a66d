#include "tvec/jones.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace tvec {

void ThompsonGraph::add_edge(int u, int v) {
  if (u == v) throw std::logic_error("self loop in Thompson graph");
  edges.insert({std::min(u, v), std::max(u, v)});
}

bool ThompsonGraph::has_edge(int u, int v) const {
  return edges.count({std::min(u, v), std::max(u, v)}) != 0;
}

std::string ThompsonGraph::to_dot() const {
  std::string out = "graph thompson {\n  node [shape=circle];\n";
  for (int v = 1; v <= vertex_count; ++v) {
    out += "  " + std::to_string(v);
    if (coloring && (*coloring)[static_cast<size_t>(v - 1)] == 1)
      out += " [style=filled, fillcolor=gray]";
    out += ";\n";
  }
  for (const auto& [u, v] : edges)
    out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

namespace {

// Appends one edge {first leaf of node, first leaf of right child} per
// internal node; `first` is the 1-based index of the node's first leaf.
int collect_edges(const Tree& t, int first, ThompsonGraph& g) {
  if (t.is_leaf()) return 1;
  int left = collect_edges(t.child(0), first, g);
  int right = collect_edges(t.child(1), first + left, g);
  g.add_edge(first, first + left);
  return left + right;
}

}  // namespace

ThompsonGraph thompson_graph_of_tree(const Tree& t) {
  if (t.arity() != 2)
    throw std::invalid_argument("Thompson graph needs an arity-2 tree");
  ThompsonGraph g;
  g.vertex_count = t.leaf_count();
  collect_edges(t, 1, g);
  return g;
}

ThompsonGraph thompson_graph_of_pair(const TreePair& tp) {
  if (tp.arity() != 2)
    throw std::invalid_argument("Thompson graph needs an arity-2 pair");
  ThompsonGraph g = thompson_graph_of_tree(tp.domain());
  ThompsonGraph sg = thompson_graph_of_tree(tp.range());
  for (const auto& [u, v] : sg.edges)
    g.add_edge(tp.domain_leaf(u - 1) + 1, tp.domain_leaf(v - 1) + 1);
  return g;
}

BipartiteResult is_bipartite(const ThompsonGraph& g) {
  int n = g.vertex_count;
  std::vector<std::vector<int>> adj(static_cast<size_t>(n) + 1);
  for (const auto& [u, v] : g.edges) {
    adj[static_cast<size_t>(u)].push_back(v);
    adj[static_cast<size_t>(v)].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());

  BipartiteResult res;
  std::vector<int> color(static_cast<size_t>(n) + 1, -1);
  std::vector<int> parent(static_cast<size_t>(n) + 1, 0);
  for (int start = 1; start <= n; ++start) {
    if (color[static_cast<size_t>(start)] != -1) continue;
    color[static_cast<size_t>(start)] = 0;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      for (int v : adj[static_cast<size_t>(u)]) {
        if (color[static_cast<size_t>(v)] == -1) {
          color[static_cast<size_t>(v)] = 1 - color[static_cast<size_t>(u)];
          parent[static_cast<size_t>(v)] = u;
          queue.push_back(v);
        } else if (color[static_cast<size_t>(v)] ==
                   color[static_cast<size_t>(u)]) {
          // Walk both BFS paths up to their meeting point; together with
          // the edge (u, v) they close an odd cycle.
          std::vector<int> pu{u}, pv{v};
          auto on_path = [](const std::vector<int>& path, int x) {
            return std::find(path.begin(), path.end(), x) != path.end();
          };
          while (pu.back() != start) pu.push_back(parent[static_cast<size_t>(pu.back())]);
          while (pv.back() != start && !on_path(pu, pv.back()))
            pv.push_back(parent[static_cast<size_t>(pv.back())]);
          int meet = pv.back();
          std::vector<int> cycle;
          for (int x : pu) {
            cycle.push_back(x);
            if (x == meet) break;
          }
          for (auto it = pv.rbegin(); it != pv.rend(); ++it)
            if (*it != meet) cycle.push_back(*it);
          res.bipartite = false;
          res.odd_cycle = cycle;
          return res;
        }
      }
    }
  }
  res.bipartite = true;
  res.coloring.resize(static_cast<size_t>(n));
  for (int v = 1; v <= n; ++v)
    res.coloring[static_cast<size_t>(v - 1)] = color[static_cast<size_t>(v)];
  return res;
}

bool member_vect_bipartite(const TreePair& tp) {
  return is_bipartite(thompson_graph_of_pair(reduce(tp))).bipartite;
}

std::string to_string(ParityClass c) {
  switch (c) {
    case ParityClass::preserves: return "preserves";
    case ParityClass::switches: return "switches";
    case ParityClass::neither: return "neither";
  }
  return "?";
}

ParityClass member_vect_parity(const TreePair& tp) {
  if (tp.arity() != 2)
    throw std::invalid_argument("parity test needs an arity-2 pair");
  TreePair r = reduce(tp);
  auto dom_addr = r.domain().leaf_addresses();
  auto ran_addr = r.range().leaf_addresses();
  auto word_parity = [](const Word& w) {
    int p = 0;
    for (int b : w) p ^= b;
    return p;
  };
  int L = r.leaf_count();
  bool all_same = true, all_diff = true;
  for (int i = 0; i < L; ++i) {
    int p1 = word_parity(dom_addr[static_cast<size_t>(i)]);
    int p2 = word_parity(ran_addr[static_cast<size_t>(r.range_leaf(i))]);
    if (p1 == p2)
      all_diff = false;
    else
      all_same = false;
  }
  if (all_same) return ParityClass::preserves;
  if (all_diff) return ParityClass::switches;
  return ParityClass::neither;
}

TreePair alternating_form(const TreePair& tp) {
  if (!member_vect_bipartite(tp))
    throw std::invalid_argument("alternating form needs a member element");
  TreePair cur = reduce(tp);
  while (true) {
    auto bip = is_bipartite(thompson_graph_of_pair(cur));
    int L = cur.leaf_count();
    int bad = -1;
    for (int v = 0; v + 1 < L; ++v) {
      if (bip.coloring[static_cast<size_t>(v)] ==
          bip.coloring[static_cast<size_t>(v + 1)]) {
        bad = v;
        break;
      }
    }
    if (bad >= 0) {
      // Splitting the leaf between two same-colored vertices inserts a
      // fresh vertex that can take the opposite color.
      cur = insert_dipole(cur, bad);
      continue;
    }
    if (L % 2 != 0) {
      cur = insert_dipole(cur, L - 1);
      continue;
    }
    return cur;
  }
}

Factorization factorize(const TreePair& tp) {
  TreePair af = alternating_form(tp);  // throws on non-members
  int L = af.leaf_count();
  int n = (L - 2) / 2;
  int m = af.rotation() - 1;
  Tree comb = Tree::right_comb(2, L);
  TreePair p = reduce(TreePair(af.domain(), comb, 1));
  TreePair q = reduce(TreePair(comb, af.range(), 1));
  return {p, n, m, q};
}

int commensurator_witness(const TreePair& f, int cap) {
  if (cap < 1) throw std::invalid_argument("cap must be >= 1");
  if (member_vect_bipartite(f))
    throw std::invalid_argument("witness needs a non-member element");
  TreePair g = invert(multiply(generator(GenFamily::x, 0),
                               generator(GenFamily::x, 1)));
  TreePair f_inv = invert(f);
  TreePair gn = TreePair::identity();
  for (int n = 1; n <= cap; ++n) {
    gn = multiply(gn, g);
    TreePair conj = multiply(multiply(f_inv, gn), f);
    if (!member_vect_bipartite(conj)) return n;
  }
  throw CapExhausted("no witness exponent up to " + std::to_string(cap));
}

}  // namespace tvec
