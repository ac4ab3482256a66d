#include "tvec/core2.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <stdexcept>

namespace tvec {

namespace {

// A generator's diagram: both trees' nodes, with each domain leaf unified
// with its identified range leaf.  Vertex ids index into `child` (pair of
// ids, or nullopt for leaves).  Every vertex is reachable from one of the
// two roots.
struct Diagram {
  std::vector<std::optional<std::pair<int, int>>> child;
  int domain_root = -1;
  int range_root = -1;
};

// Allocates ids for one tree; leaves get the precomputed shared ids.
int build_tree_nodes(const Tree& t, const std::vector<int>& leaf_ids,
                     int& next_leaf, Diagram& d) {
  if (t.is_leaf()) return leaf_ids[static_cast<size_t>(next_leaf++)];
  int left = build_tree_nodes(t.child(0), leaf_ids, next_leaf, d);
  int right = build_tree_nodes(t.child(1), leaf_ids, next_leaf, d);
  d.child.push_back(std::make_pair(left, right));
  return static_cast<int>(d.child.size()) - 1;
}

Diagram diagram_of(const TreePair& tp) {
  if (tp.arity() != 2)
    throw std::invalid_argument("core construction needs arity-2 pairs");
  Diagram d;
  int L = tp.leaf_count();
  std::vector<int> dom_leaf_ids(static_cast<size_t>(L));
  for (int i = 0; i < L; ++i) {
    d.child.push_back(std::nullopt);
    dom_leaf_ids[static_cast<size_t>(i)] = static_cast<int>(d.child.size()) - 1;
  }
  std::vector<int> ran_leaf_ids(static_cast<size_t>(L));
  for (int j = 0; j < L; ++j)
    ran_leaf_ids[static_cast<size_t>(j)] =
        dom_leaf_ids[static_cast<size_t>(tp.domain_leaf(j))];
  int next = 0;
  d.domain_root = build_tree_nodes(tp.domain(), dom_leaf_ids, next, d);
  next = 0;
  d.range_root = build_tree_nodes(tp.range(), ran_leaf_ids, next, d);
  return d;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] =
          parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<size_t>(b)] = a;
    return true;
  }
};

}  // namespace

CoreGraph build_core(const std::vector<TreePair>& generators,
                     std::optional<unsigned long long> shuffle_seed) {
  if (generators.empty())
    throw std::invalid_argument("core of an empty generator list");

  // Pool all diagram vertices into one id space.
  std::vector<std::optional<std::pair<int, int>>> child;
  std::vector<int> roots;
  for (const TreePair& g : generators) {
    Diagram d = diagram_of(reduce(g));
    int base = static_cast<int>(child.size());
    for (const auto& c : d.child)
      child.push_back(c ? std::make_optional(std::make_pair(
                              c->first + base, c->second + base))
                        : std::nullopt);
    roots.push_back(d.domain_root + base);
    roots.push_back(d.range_root + base);
  }
  int n = static_cast<int>(child.size());

  std::vector<int> record_order;
  for (int i = 0; i < n; ++i)
    if (child[static_cast<size_t>(i)]) record_order.push_back(i);
  if (shuffle_seed) {
    std::mt19937_64 rng(*shuffle_seed);
    std::shuffle(record_order.begin(), record_order.end(), rng);
  }

  UnionFind uf(n);
  for (size_t i = 1; i < roots.size(); ++i) uf.unite(roots[0], roots[i]);

  // Quadratic fixpoint: cheap at diagram scale and insensitive to order.
  bool changed = true;
  while (changed) {
    changed = false;
    // Rule 1: identified vertices share left and right children.
    for (size_t a = 0; a < record_order.size(); ++a) {
      for (size_t b = a + 1; b < record_order.size(); ++b) {
        int u = record_order[a], v = record_order[b];
        if (uf.find(u) != uf.find(v)) continue;
        const auto& cu = *child[static_cast<size_t>(u)];
        const auto& cv = *child[static_cast<size_t>(v)];
        changed |= uf.unite(cu.first, cv.first);
        changed |= uf.unite(cu.second, cv.second);
      }
    }
    // Rule 2: a (left, right) pair of classes determines the parent class.
    std::map<std::pair<int, int>, int> seen;
    for (int u : record_order) {
      const auto& cu = *child[static_cast<size_t>(u)];
      auto key = std::make_pair(uf.find(cu.first), uf.find(cu.second));
      auto [it, fresh] = seen.emplace(key, uf.find(u));
      if (!fresh) changed |= uf.unite(it->second, uf.find(u));
    }
  }

  // Canonical renumbering: breadth-first from the root, left edge first.
  std::map<int, std::optional<std::pair<int, int>>> class_child;
  for (int u = 0; u < n; ++u) {
    if (!child[static_cast<size_t>(u)]) continue;
    const auto& cu = *child[static_cast<size_t>(u)];
    auto resolved = std::make_pair(uf.find(cu.first), uf.find(cu.second));
    auto [it, fresh] = class_child.emplace(uf.find(u), resolved);
    if (!fresh && *it->second != resolved)
      throw std::logic_error("folding fixpoint left divergent records");
  }
  std::map<int, int> index;
  std::deque<int> queue{uf.find(roots[0])};
  index[uf.find(roots[0])] = 0;
  std::vector<int> bfs_order{uf.find(roots[0])};
  while (!queue.empty()) {
    int c = queue.front();
    queue.pop_front();
    auto it = class_child.find(c);
    if (it == class_child.end()) continue;
    for (int nxt : {it->second->first, it->second->second}) {
      if (!index.count(nxt)) {
        index[nxt] = static_cast<int>(bfs_order.size());
        bfs_order.push_back(nxt);
        queue.push_back(nxt);
      }
    }
  }

  CoreGraph core;
  core.children_.resize(bfs_order.size());
  for (size_t i = 0; i < bfs_order.size(); ++i) {
    auto it = class_child.find(bfs_order[i]);
    if (it != class_child.end())
      core.children_[i] = std::make_pair(index.at(it->second->first),
                                         index.at(it->second->second));
  }
  return core;
}

std::string CoreGraph::vertex_name(int v) const {
  if (v < 22) return std::string(1, static_cast<char>('e' + v));
  return "v" + std::to_string(v);
}

bool CoreGraph::invariants_hold() const {
  // The construction stores one child record per class (folded) and the
  // BFS renumbering visits every class (reachable); co-folding is the one
  // property that needs re-checking.
  std::map<std::pair<int, int>, int> seen;
  for (int v = 0; v < vertex_count(); ++v) {
    auto c = children(v);
    if (!c) continue;
    if (c->first < 0 || c->first >= vertex_count() || c->second < 0 ||
        c->second >= vertex_count())
      return false;
    auto [it, fresh] = seen.emplace(*c, v);
    if (!fresh) return false;
  }
  return true;
}

std::string CoreGraph::to_dot() const {
  std::string out = "digraph core {\n";
  for (int v = 0; v < vertex_count(); ++v) {
    out += "  " + std::to_string(v) + " [label=\"" + vertex_name(v) + "\"";
    if (v == root()) out += ", shape=doublecircle";
    out += "];\n";
  }
  for (int v = 0; v < vertex_count(); ++v) {
    auto c = children(v);
    if (!c) continue;
    out += "  " + std::to_string(v) + " -> " + std::to_string(c->first) +
           " [label=\"0\"];\n";
    out += "  " + std::to_string(v) + " -> " + std::to_string(c->second) +
           " [label=\"1\"];\n";
  }
  out += "}\n";
  return out;
}

bool accepts(const CoreGraph& core, const TreePair& tp) {
  Diagram d = diagram_of(reduce(tp));
  // The image of each diagram vertex is forced by any root-to-vertex path,
  // so a homomorphism exists iff the forced assignment is consistent.
  std::vector<int> image(d.child.size(), -1);
  std::deque<std::pair<int, int>> queue;
  queue.emplace_back(d.domain_root, core.root());
  queue.emplace_back(d.range_root, core.root());
  while (!queue.empty()) {
    auto [v, c] = queue.front();
    queue.pop_front();
    if (image[static_cast<size_t>(v)] == c) continue;
    if (image[static_cast<size_t>(v)] != -1) return false;
    image[static_cast<size_t>(v)] = c;
    const auto& ch = d.child[static_cast<size_t>(v)];
    if (!ch) continue;
    auto cc = core.children(c);
    if (!cc) return false;  // an interior vertex mapped to a childless one
    queue.emplace_back(ch->first, cc->first);
    queue.emplace_back(ch->second, cc->second);
  }
  return true;
}

std::pair<TreePair, TreePair> components(const TreePair& f,
                                         const Dyadic& alpha) {
  TreePair r = reduce(f);
  if (r.arity() != 2)
    throw std::invalid_argument("components need an arity-2 pair");
  if (r.rotation() != 1)
    throw std::invalid_argument("components need a rotation-1 element");
  if (alpha.is_zero())
    throw std::invalid_argument("split point must be interior");
  if (!(evaluate(r, alpha) == alpha))
    throw std::invalid_argument("element does not fix the split point");

  // Minimal tree with the split point on its leaf boundary.
  BinaryWord w = dyadic_to_word(alpha);
  Tree marker = Tree::leaf(2);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    marker = *it == 0 ? Tree::branch({marker, Tree::leaf(2)})
                      : Tree::branch({Tree::leaf(2), marker});
  }
  Tree target = Tree::join(r.domain(), marker);
  // Grow the pair until the domain contains the split point.
  while (!(r.domain() == target)) {
    auto addrs = r.domain().leaf_addresses();
    bool grew = false;
    for (int i = 0; i < static_cast<int>(addrs.size()); ++i) {
      auto node = target.node_at(addrs[static_cast<size_t>(i)]);
      if (node && !node->is_leaf()) {
        r = insert_dipole(r, i);
        target = Tree::join(r.domain(), marker);
        grew = true;
        break;
      }
    }
    if (!grew) throw std::logic_error("domain growth stalled");
  }

  // Count the domain leaves left of the split point.
  auto dom_depths = r.domain().leaf_depths();
  auto ran_depths = r.range().leaf_depths();
  DyadicFraction pos;
  const DyadicFraction split = alpha.fraction();
  int cut = 0;
  while (pos < split) {
    pos = pos + DyadicFraction(1, dom_depths[static_cast<size_t>(cut)]);
    ++cut;
  }
  if (pos != split) throw std::logic_error("split point not on a boundary");

  auto splice = [&](bool lower_from_range) {
    std::vector<int> depths;
    for (int i = 0; i < static_cast<int>(dom_depths.size()); ++i) {
      bool from_range = lower_from_range ? i < cut : i >= cut;
      depths.push_back(from_range ? ran_depths[static_cast<size_t>(i)]
                                  : dom_depths[static_cast<size_t>(i)]);
    }
    return Tree::from_leaf_depths(depths);
  };
  TreePair f1 = reduce(TreePair(r.domain(), splice(true), 1));
  TreePair f2 = reduce(TreePair(r.domain(), splice(false), 1));
  return {f1, f2};
}

SemigroupPresentation core_presentation(const CoreGraph& core) {
  SemigroupPresentation p;
  for (int v = 0; v < core.vertex_count(); ++v)
    p.letters.push_back(core.vertex_name(v));
  for (int v = 0; v < core.vertex_count(); ++v) {
    auto c = core.children(v);
    if (!c) continue;
    p.rules.push_back({core.vertex_name(v), core.vertex_name(c->first),
                       core.vertex_name(c->second)});
  }
  p.base = core.vertex_name(core.root());
  return p;
}

std::string SemigroupPresentation::str() const {
  std::string out;
  for (const auto& r : rules) {
    if (!out.empty()) out += ", ";
    out += r.lhs + " = " + r.rhs_left + r.rhs_right;
  }
  if (out.empty()) out = "(no rules)";
  return out + " ; base " + base;
}

ClosureReport core_closed_on(const CoreGraph& core,
                             const std::vector<TreePair>& sample,
                             const std::function<bool(const TreePair&)>&
                                 membership) {
  ClosureReport report;
  for (const TreePair& tp : sample) {
    ++report.checked;
    bool acc = accepts(core, tp);
    bool mem = membership(tp);
    if (acc != mem) report.disagreements.push_back({tp, acc, mem});
  }
  return report;
}

}  // namespace tvec
