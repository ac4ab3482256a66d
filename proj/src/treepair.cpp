#include "tvec/treepair.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <stdexcept>

namespace tvec {

TreePair::TreePair(Tree domain, Tree range, int rotation)
    : domain_(std::move(domain)), range_(std::move(range)),
      rotation_(rotation) {
  if (domain_.arity() != range_.arity())
    throw std::invalid_argument("tree pair arity mismatch");
  if (domain_.leaf_count() != range_.leaf_count())
    throw std::invalid_argument("tree pair leaf count mismatch");
  if (rotation_ < 1 || rotation_ > leaf_count())
    throw std::invalid_argument("rotation out of range 1..L");
}

TreePair TreePair::identity(int arity) {
  return TreePair(Tree::leaf(arity), Tree::leaf(arity), 1);
}

int TreePair::range_leaf(int domain_leaf) const {
  return (domain_leaf + shift()) % leaf_count();
}

int TreePair::domain_leaf(int range_leaf) const {
  int L = leaf_count();
  return (range_leaf - shift() + L) % L;
}

bool TreePair::same_diagram(const TreePair& o) const {
  return rotation_ == o.rotation_ && domain_ == o.domain_ &&
         range_ == o.range_;
}

std::string TreePair::str() const {
  return domain_.parens() + " ; " + range_.parens() + " ; " +
         std::to_string(rotation_);
}

std::optional<TreePair> TreePair::parse(std::string_view text, int arity) {
  std::vector<std::string_view> parts;
  size_t start = 0;
  while (true) {
    auto sep = text.find(';', start);
    parts.push_back(text.substr(start, sep == std::string_view::npos
                                           ? std::string_view::npos
                                           : sep - start));
    if (sep == std::string_view::npos) break;
    start = sep + 1;
  }
  if (parts.size() != 3) return std::nullopt;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
      s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
      s.remove_suffix(1);
    return s;
  };
  auto dom = Tree::parse_parens(trim(parts[0]), arity);
  auto ran = Tree::parse_parens(trim(parts[1]), arity);
  if (!dom || !ran) return std::nullopt;
  auto rot_text = trim(parts[2]);
  int rot = 0;
  for (char c : rot_text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    rot = rot * 10 + (c - '0');
    if (rot > 1'000'000) return std::nullopt;
  }
  if (rot < 1 || rot > dom->leaf_count() ||
      dom->leaf_count() != ran->leaf_count())
    return std::nullopt;
  return TreePair(*dom, *ran, rot);
}

namespace {

nlohmann::json tree_to_json(const Tree& t) {
  nlohmann::json j = nlohmann::json::array();
  if (!t.is_leaf())
    for (int i = 0; i < t.arity(); ++i) j.push_back(tree_to_json(t.child(i)));
  return j;
}

std::optional<Tree> tree_from_json(const nlohmann::json& j, int arity) {
  if (!j.is_array()) return std::nullopt;
  if (j.empty()) return Tree::leaf(arity);
  if (static_cast<int>(j.size()) != arity) return std::nullopt;
  std::vector<Tree> kids;
  for (const auto& c : j) {
    auto k = tree_from_json(c, arity);
    if (!k) return std::nullopt;
    kids.push_back(*k);
  }
  return Tree::branch(std::move(kids));
}

}  // namespace

nlohmann::json TreePair::to_json() const {
  return {{"arity", arity()},
          {"domain", tree_to_json(domain_)},
          {"range", tree_to_json(range_)},
          {"rotation", rotation_}};
}

std::optional<TreePair> TreePair::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("arity") || !j.contains("domain") ||
      !j.contains("range") || !j.contains("rotation"))
    return std::nullopt;
  if (!j["arity"].is_number_integer() || !j["rotation"].is_number_integer())
    return std::nullopt;
  int arity = j["arity"].get<int>();
  if (arity < 2) return std::nullopt;
  auto dom = tree_from_json(j["domain"], arity);
  auto ran = tree_from_json(j["range"], arity);
  if (!dom || !ran) return std::nullopt;
  int rot = j["rotation"].get<int>();
  if (dom->leaf_count() != ran->leaf_count() || rot < 1 ||
      rot > dom->leaf_count())
    return std::nullopt;
  return TreePair(*dom, *ran, rot);
}

std::vector<Dipole> find_dipoles(const TreePair& tp) {
  std::vector<Dipole> out;
  if (tp.leaf_count() == 1) return out;
  auto range_carets = tp.range().caret_first_leaves();
  std::set<int> range_set(range_carets.begin(), range_carets.end());
  for (int i : tp.domain().caret_first_leaves()) {
    int j = tp.range_leaf(i);
    if (range_set.count(j)) out.push_back({i, j});
  }
  return out;
}

bool is_reduced(const TreePair& tp) { return find_dipoles(tp).empty(); }

TreePair remove_dipole(const TreePair& tp, const Dipole& d) {
  int a = tp.arity();
  int s = tp.shift();
  if (tp.range_leaf(d.domain_first_leaf) != d.range_first_leaf)
    throw std::invalid_argument("not a dipole of this pair");
  Tree dom = tp.domain().prune_at(d.domain_first_leaf);
  Tree ran = tp.range().prune_at(d.range_first_leaf);
  // The identification anchor (image of domain leaf 0) keeps its position
  // unless the removed range leaves precede it.
  int s2 = s > d.range_first_leaf ? s - (a - 1) : s;
  return TreePair(std::move(dom), std::move(ran), s2 + 1);
}

TreePair insert_dipole(const TreePair& tp, int domain_leaf) {
  int a = tp.arity();
  int s = tp.shift();
  int j = tp.range_leaf(domain_leaf);
  Tree dom = tp.domain().grow_at(domain_leaf);
  Tree ran = tp.range().grow_at(j);
  int s2 = s > j ? s + (a - 1) : s;
  return TreePair(std::move(dom), std::move(ran), s2 + 1);
}

TreePair reduce(const TreePair& tp) {
  TreePair cur = tp;
  while (true) {
    auto dipoles = find_dipoles(cur);
    if (dipoles.empty()) return cur;
    cur = remove_dipole(cur, dipoles.front());
  }
}

namespace {

// Insert dipoles until the range tree equals `target` (which must refine it).
TreePair grow_range_to(TreePair tp, const Tree& target) {
  while (!(tp.range() == target)) {
    auto addrs = tp.range().leaf_addresses();
    bool grew = false;
    for (int j = 0; j < static_cast<int>(addrs.size()); ++j) {
      auto node = target.node_at(addrs[static_cast<size_t>(j)]);
      if (node && !node->is_leaf()) {
        tp = insert_dipole(tp, tp.domain_leaf(j));
        grew = true;
        break;
      }
    }
    if (!grew) throw std::logic_error("range does not coarsen target");
  }
  return tp;
}

TreePair grow_domain_to(TreePair tp, const Tree& target) {
  while (!(tp.domain() == target)) {
    auto addrs = tp.domain().leaf_addresses();
    bool grew = false;
    for (int i = 0; i < static_cast<int>(addrs.size()); ++i) {
      auto node = target.node_at(addrs[static_cast<size_t>(i)]);
      if (node && !node->is_leaf()) {
        tp = insert_dipole(tp, i);
        grew = true;
        break;
      }
    }
    if (!grew) throw std::logic_error("domain does not coarsen target");
  }
  return tp;
}

}  // namespace

TreePair multiply(const TreePair& a, const TreePair& b) {
  if (a.arity() != b.arity())
    throw std::invalid_argument("arity mismatch in multiply");
  Tree common = Tree::join(a.range(), b.domain());
  TreePair ga = grow_range_to(a, common);
  TreePair gb = grow_domain_to(b, common);
  int L = ga.leaf_count();
  int s = (ga.shift() + gb.shift()) % L;
  return reduce(TreePair(ga.domain(), gb.range(), s + 1));
}

TreePair invert(const TreePair& tp) {
  int L = tp.leaf_count();
  int s = (L - tp.shift()) % L;
  return TreePair(tp.range(), tp.domain(), s + 1);
}

TreePair power(const TreePair& tp, int k) {
  TreePair base = k < 0 ? invert(tp) : tp;
  int n = k < 0 ? -k : k;
  TreePair acc = TreePair::identity(tp.arity());
  for (int i = 0; i < n; ++i) acc = multiply(acc, base);
  return acc;
}

bool equal(const TreePair& a, const TreePair& b) {
  if (a.arity() != b.arity())
    throw std::invalid_argument("arity mismatch in equal");
  return reduce(a).same_diagram(reduce(b));
}

Word apply_word(const TreePair& tp, const Word& w) {
  // Walk the domain tree along w, extending with zeros past its end.
  Tree node = tp.domain();
  size_t used = 0;
  int leaf_index = 0;
  while (!node.is_leaf()) {
    int d = used < w.size() ? w[used] : 0;
    if (d < 0 || d >= tp.arity())
      throw std::invalid_argument("digit out of range for arity");
    for (int i = 0; i < d; ++i) leaf_index += node.child(i).leaf_count();
    node = node.child(d);
    ++used;
  }
  Word out = tp.range().leaf_address(tp.range_leaf(leaf_index));
  for (size_t i = used; i < w.size(); ++i) out.push_back(w[i]);
  return out;
}

Dyadic evaluate(const TreePair& tp, const Dyadic& t) {
  if (tp.arity() != 2)
    throw std::invalid_argument("evaluate needs an arity-2 pair");
  return word_to_dyadic(apply_word(tp, dyadic_to_word(t)));
}

PLMap::PLMap(std::vector<PLPiece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw std::invalid_argument("empty piecewise map");
}

Dyadic PLMap::apply(const Dyadic& t) const {
  const DyadicFraction& v = t.fraction();
  for (const auto& p : pieces_) {
    if (p.lo <= v && v < p.hi)
      return Dyadic(v.shifted(p.slope_exp) + p.offset);
  }
  throw std::logic_error("point not covered by any piece");
}

bool PLMap::is_circle_bijection() const {
  const DyadicFraction zero;
  const DyadicFraction one(1, 0);
  if (pieces_.front().lo != zero) return false;
  if (pieces_.back().hi != one) return false;
  DyadicFraction total;
  size_t n = pieces_.size();
  for (size_t i = 0; i < n; ++i) {
    const auto& p = pieces_[i];
    if (!(p.lo < p.hi)) return false;
    if (i + 1 < n && pieces_[i + 1].lo != p.hi) return false;
    DyadicFraction img_lo = p.lo.shifted(p.slope_exp) + p.offset;
    DyadicFraction img_hi = p.hi.shifted(p.slope_exp) + p.offset;
    total = total + (img_hi - img_lo);
    // The image arcs must chain around the circle.
    const auto& q = pieces_[(i + 1) % n];
    DyadicFraction next_lo = q.lo.shifted(q.slope_exp) + q.offset;
    if (img_hi.mod1() != next_lo.mod1()) return false;
  }
  return total == one;
}

std::string PLMap::str() const {
  std::string out;
  for (const auto& p : pieces_) {
    if (!out.empty()) out += "\n";
    std::string slope = p.slope_exp >= 0
                            ? DyadicFraction(Int(1) << p.slope_exp, 0).str()
                            : DyadicFraction(1, -p.slope_exp).str();
    out += "[" + p.lo.str() + ", " + p.hi.str() + ") -> " + slope + "*t";
    if (!p.offset.is_zero())
      out += (p.offset.is_negative() ? " - " + (-p.offset).str()
                                     : " + " + p.offset.str());
  }
  return out;
}

PLMap to_plmap(const TreePair& tp) {
  if (tp.arity() != 2)
    throw std::invalid_argument("piecewise form needs an arity-2 pair");
  auto dom_depths = tp.domain().leaf_depths();
  auto ran_depths = tp.range().leaf_depths();
  auto dom_addr = tp.domain().leaf_addresses();
  auto ran_addr = tp.range().leaf_addresses();
  auto left_endpoint = [](const Word& addr) {
    Int num = 0;
    for (int d : addr) num = num * 2 + d;
    return DyadicFraction(num, static_cast<int>(addr.size()));
  };
  std::vector<PLPiece> pieces;
  int L = tp.leaf_count();
  for (int i = 0; i < L; ++i) {
    int j = tp.range_leaf(i);
    DyadicFraction a = left_endpoint(dom_addr[static_cast<size_t>(i)]);
    DyadicFraction b =
        a + DyadicFraction(1, dom_depths[static_cast<size_t>(i)]);
    DyadicFraction c = left_endpoint(ran_addr[static_cast<size_t>(j)]);
    int e = dom_depths[static_cast<size_t>(i)] -
            ran_depths[static_cast<size_t>(j)];
    pieces.push_back({a, b, e, c - a.shifted(e)});
  }
  return PLMap(std::move(pieces));
}

TreePair oplus(const TreePair& f, const TreePair& g) {
  if (f.arity() != 2 || g.arity() != 2)
    throw std::invalid_argument("oplus needs arity-2 pairs");
  if (f.rotation() != 1 || g.rotation() != 1)
    throw std::invalid_argument("oplus arguments must fix 0 (rotation 1)");
  return TreePair(Tree::branch({f.domain(), g.domain()}),
                  Tree::branch({f.range(), g.range()}), 1);
}

TreePair generator(GenFamily family, int index) {
  switch (family) {
    case GenFamily::x: {
      if (index < 0) throw std::invalid_argument("negative generator index");
      if (index == 0) {
        Tree dom = Tree::branch({Tree::branch({Tree::leaf(), Tree::leaf()}),
                                 Tree::leaf()});
        Tree ran = Tree::branch({Tree::leaf(),
                                 Tree::branch({Tree::leaf(), Tree::leaf()})});
        return TreePair(std::move(dom), std::move(ran), 1);
      }
      return oplus(TreePair::identity(), generator(GenFamily::x, index - 1));
    }
    case GenFamily::c: {
      if (index < 0) throw std::invalid_argument("negative generator index");
      Tree comb = Tree::right_comb(2, index + 2);
      return TreePair(comb, comb, 2);
    }
    case GenFamily::g: {
      if (index < 1) throw std::invalid_argument("g index must be >= 1");
      return multiply(generator(GenFamily::x, index - 1),
                      generator(GenFamily::x, index));
    }
  }
  throw std::invalid_argument("unknown generator family");
}

TreePair generator(std::string_view name) {
  GroupWord w = GroupWord::parse(name);
  if (w.letters().size() != 1 || w.letters()[0].exponent != 1)
    throw std::invalid_argument("not a single generator: " +
                                std::string(name));
  return generator(w.letters()[0].family, w.letters()[0].index);
}

TreePair from_word(const GroupWord& w) {
  TreePair acc = TreePair::identity();
  for (const auto& l : w.letters())
    acc = multiply(acc, power(generator(l.family, l.index), l.exponent));
  return acc;
}

namespace {

// Exponent of a leaf: the longest run of left edges ending at the leaf whose
// top vertex is off the rightmost path.
int leaf_exponent(const Word& addr) {
  int trailing = 0;
  for (auto it = addr.rbegin(); it != addr.rend() && *it == 0; ++it)
    ++trailing;
  int first_zero = -1;
  for (size_t i = 0; i < addr.size(); ++i) {
    if (addr[i] == 0) {
      first_zero = static_cast<int>(i);
      break;
    }
  }
  if (first_zero < 0) return 0;
  return std::min(trailing, static_cast<int>(addr.size()) - first_zero - 1);
}

}  // namespace

GroupWord normal_form(const TreePair& f) {
  if (f.arity() != 2)
    throw std::invalid_argument("normal form needs an arity-2 pair");
  TreePair r = reduce(f);
  if (r.rotation() != 1)
    throw std::invalid_argument("normal form needs rotation 1");
  auto dom_addr = r.domain().leaf_addresses();
  auto ran_addr = r.range().leaf_addresses();
  std::vector<GroupLetter> letters;
  int L = r.leaf_count();
  for (int i = 0; i < L; ++i) {
    int e = leaf_exponent(dom_addr[static_cast<size_t>(i)]);
    if (e > 0) letters.push_back({GenFamily::x, i, e});
  }
  for (int i = L - 1; i >= 0; --i) {
    int e = leaf_exponent(ran_addr[static_cast<size_t>(i)]);
    if (e > 0) letters.push_back({GenFamily::x, i, -e});
  }
  return GroupWord(std::move(letters));
}

namespace {

// Tree shapes grouped by leaf count; local to one enumeration so the
// operation stays pure.
struct ShapeTable {
  int arity;
  std::map<int, std::vector<Tree>> memo;

  const std::vector<Tree>& with_leaves(int leaves) {
    if (auto it = memo.find(leaves); it != memo.end()) return it->second;
    std::vector<Tree> out;
    if (leaves == 1) {
      out.push_back(Tree::leaf(arity));
    } else if ((leaves - 1) % (arity - 1) == 0) {
      // Split leaves among `arity` children, each a valid full-tree count.
      std::vector<Tree> kids;
      split(0, leaves, kids, out);
    }
    return memo[leaves] = std::move(out);
  }

  void split(int slot, int remaining, std::vector<Tree>& kids,
             std::vector<Tree>& out) {
    if (slot == arity - 1) {
      if (remaining < 1 || (remaining - 1) % (arity - 1) != 0) return;
      for (const Tree& t : with_leaves(remaining)) {
        kids.push_back(t);
        out.push_back(Tree::branch(kids));
        kids.pop_back();
      }
      return;
    }
    for (int take = 1; take <= remaining - (arity - 1 - slot); ++take) {
      if ((take - 1) % (arity - 1) != 0) continue;
      for (const Tree& t : with_leaves(take)) {
        kids.push_back(t);
        split(slot + 1, remaining - take, kids, out);
        kids.pop_back();
      }
    }
  }
};

}  // namespace

std::vector<TreePair> enumerate_elements(int arity, int max_leaves) {
  if (arity < 2 || max_leaves < 1)
    throw std::invalid_argument("bad enumeration bounds");
  ShapeTable shapes{arity, {}};
  std::map<std::string, TreePair> seen;
  for (int L = 1; L <= max_leaves; ++L) {
    if ((L - 1) % (arity - 1) != 0) continue;
    for (const Tree& dom : shapes.with_leaves(L))
      for (const Tree& ran : shapes.with_leaves(L))
        for (int rot = 1; rot <= L; ++rot) {
          TreePair r = reduce(TreePair(dom, ran, rot));
          seen.emplace(r.str(), r);
        }
  }
  std::vector<TreePair> out;
  for (auto& [k, v] : seen) out.push_back(v);
  std::sort(out.begin(), out.end(), [](const TreePair& a, const TreePair& b) {
    if (a.leaf_count() != b.leaf_count())
      return a.leaf_count() < b.leaf_count();
    return a.str() < b.str();
  });
  return out;
}

std::optional<int> order(const TreePair& f, int cap) {
  if (cap < 1) throw std::invalid_argument("cap must be >= 1");
  TreePair acc = reduce(f);
  TreePair base = acc;
  for (int k = 1; k <= cap; ++k) {
    if (acc.is_identity()) return k;
    acc = multiply(acc, base);
  }
  return std::nullopt;
}

}  // namespace tvec
