#include "tvec/tree.hpp"

#include <cctype>
#include <stdexcept>

namespace tvec {

struct Tree::Node {
  std::vector<NodePtr> kids;  // empty = leaf
  int leaves = 1;
};

namespace {

using NodePtr = std::shared_ptr<const Tree::Node>;

}  // namespace

Tree::Tree(int arity) : arity_(arity) {
  if (arity < 2) throw std::invalid_argument("arity must be >= 2");
  node_ = std::make_shared<Node>();
}

Tree Tree::branch(std::vector<Tree> children) {
  if (children.size() < 2) throw std::invalid_argument("branch needs arity children");
  int arity = static_cast<int>(children.size());
  auto n = std::make_shared<Node>();
  n->leaves = 0;
  for (const Tree& c : children) {
    if (c.arity_ != arity)
      throw std::invalid_argument("child arity does not match branch width");
    n->leaves += c.leaf_count();
    n->kids.push_back(c.node_);
  }
  return Tree(std::move(n), arity);
}

Tree Tree::right_comb(int arity, int leaves) {
  if (leaves < 1 || (leaves - 1) % (arity - 1) != 0)
    throw std::invalid_argument("no full tree with that leaf count");
  Tree t = leaf(arity);
  while (t.leaf_count() < leaves) {
    std::vector<Tree> kids(static_cast<size_t>(arity) - 1, leaf(arity));
    kids.push_back(t);
    t = branch(std::move(kids));
  }
  return t;
}

Tree Tree::from_leaf_depths(const std::vector<int>& depths) {
  // Recursive split: depth-0 profile is a leaf, otherwise the two halves
  // each carry total measure 1/2 at depth-1.
  struct Builder {
    const std::vector<int>& d;
    size_t pos = 0;
    Tree build(int depth) {
      if (pos >= d.size()) throw std::invalid_argument("leaf depth profile too short");
      if (d[pos] == depth) {
        ++pos;
        return Tree::leaf(2);
      }
      if (d[pos] < depth) throw std::invalid_argument("leaf depth profile invalid");
      Tree l = build(depth + 1);
      Tree r = build(depth + 1);
      return Tree::branch({l, r});
    }
  };
  Builder b{depths};
  Tree t = b.build(0);
  if (b.pos != depths.size())
    throw std::invalid_argument("leaf depth profile too long");
  return t;
}

bool Tree::is_leaf() const { return node_->kids.empty(); }

int Tree::leaf_count() const { return node_->leaves; }

Tree Tree::child(int i) const {
  if (is_leaf() || i < 0 || i >= arity_)
    throw std::out_of_range("no such child");
  return Tree(node_->kids[static_cast<size_t>(i)], arity_);
}

std::vector<int> Tree::leaf_depths() const {
  std::vector<int> out;
  struct Walk {
    std::vector<int>& out;
    void run(const NodePtr& n, int depth) {
      if (n->kids.empty()) {
        out.push_back(depth);
        return;
      }
      for (const auto& k : n->kids) run(k, depth + 1);
    }
  };
  Walk{out}.run(node_, 0);
  return out;
}

std::vector<Word> Tree::leaf_addresses() const {
  std::vector<Word> out;
  Word cur;
  struct Walk {
    std::vector<Word>& out;
    Word& cur;
    void run(const NodePtr& n) {
      if (n->kids.empty()) {
        out.push_back(cur);
        return;
      }
      for (size_t i = 0; i < n->kids.size(); ++i) {
        cur.push_back(static_cast<int>(i));
        run(n->kids[i]);
        cur.pop_back();
      }
    }
  };
  Walk{out, cur}.run(node_);
  return out;
}

Word Tree::leaf_address(int leaf_index) const {
  if (leaf_index < 0 || leaf_index >= leaf_count())
    throw std::out_of_range("leaf index out of range");
  Word out;
  NodePtr n = node_;
  while (!n->kids.empty()) {
    int digit = 0;
    for (const auto& k : n->kids) {
      if (leaf_index < k->leaves) break;
      leaf_index -= k->leaves;
      ++digit;
    }
    out.push_back(digit);
    n = n->kids[static_cast<size_t>(digit)];
  }
  return out;
}

std::optional<Tree> Tree::node_at(const Word& address) const {
  NodePtr n = node_;
  for (int d : address) {
    if (n->kids.empty()) return std::nullopt;
    if (d < 0 || d >= arity_) return std::nullopt;
    n = n->kids[static_cast<size_t>(d)];
  }
  return Tree(n, arity_);
}

namespace {

NodePtr grow_rec(const NodePtr& n, int target, int arity) {
  if (n->kids.empty()) {
    auto caret = std::make_shared<Tree::Node>();
    caret->leaves = arity;
    for (int i = 0; i < arity; ++i)
      caret->kids.push_back(std::make_shared<Tree::Node>());
    return caret;
  }
  auto copy = std::make_shared<Tree::Node>(*n);
  int offset = 0;
  for (size_t i = 0; i < copy->kids.size(); ++i) {
    int w = copy->kids[i]->leaves;
    if (target < offset + w) {
      copy->kids[i] = grow_rec(copy->kids[i], target - offset, arity);
      copy->leaves += arity - 1;
      return copy;
    }
    offset += w;
  }
  throw std::out_of_range("leaf index out of range");
}

NodePtr prune_rec(const NodePtr& n, int target, int arity) {
  if (n->kids.empty()) throw std::invalid_argument("no caret at that leaf");
  if (target == 0) {
    bool all_leaves = true;
    for (const auto& k : n->kids)
      if (!k->kids.empty()) all_leaves = false;
    if (all_leaves && n->leaves == arity) return std::make_shared<Tree::Node>();
  }
  auto copy = std::make_shared<Tree::Node>(*n);
  int offset = 0;
  for (size_t i = 0; i < copy->kids.size(); ++i) {
    int w = copy->kids[i]->leaves;
    if (target < offset + w) {
      copy->kids[i] = prune_rec(copy->kids[i], target - offset, arity);
      copy->leaves -= arity - 1;
      return copy;
    }
    offset += w;
  }
  throw std::out_of_range("leaf index out of range");
}

}  // namespace

Tree Tree::grow_at(int leaf_index) const {
  if (leaf_index < 0 || leaf_index >= leaf_count())
    throw std::out_of_range("leaf index out of range");
  return Tree(grow_rec(node_, leaf_index, arity_), arity_);
}

Tree Tree::prune_at(int leaf_index) const {
  if (leaf_index < 0 || leaf_index >= leaf_count())
    throw std::out_of_range("leaf index out of range");
  return Tree(prune_rec(node_, leaf_index, arity_), arity_);
}

std::vector<int> Tree::caret_first_leaves() const {
  std::vector<int> out;
  struct Walk {
    std::vector<int>& out;
    void run(const NodePtr& n, int first) {
      if (n->kids.empty()) return;
      bool all_leaves = true;
      for (const auto& k : n->kids)
        if (!k->kids.empty()) all_leaves = false;
      if (all_leaves) {
        out.push_back(first);
        return;
      }
      int offset = first;
      for (const auto& k : n->kids) {
        run(k, offset);
        offset += k->leaves;
      }
    }
  };
  Walk{out}.run(node_, 0);
  return out;
}

namespace {

NodePtr join_rec(const NodePtr& a, const NodePtr& b) {
  if (a->kids.empty()) return b;
  if (b->kids.empty()) return a;
  auto n = std::make_shared<Tree::Node>();
  n->leaves = 0;
  for (size_t i = 0; i < a->kids.size(); ++i) {
    n->kids.push_back(join_rec(a->kids[i], b->kids[i]));
    n->leaves += n->kids.back()->leaves;
  }
  return n;
}

bool refines_rec(const NodePtr& fine, const NodePtr& coarse) {
  if (coarse->kids.empty()) return true;
  if (fine->kids.empty()) return false;
  for (size_t i = 0; i < coarse->kids.size(); ++i)
    if (!refines_rec(fine->kids[i], coarse->kids[i])) return false;
  return true;
}

bool equal_rec(const NodePtr& a, const NodePtr& b) {
  if (a == b) return true;
  if (a->kids.size() != b->kids.size() || a->leaves != b->leaves) return false;
  for (size_t i = 0; i < a->kids.size(); ++i)
    if (!equal_rec(a->kids[i], b->kids[i])) return false;
  return true;
}

void parens_rec(const NodePtr& n, std::string& out) {
  out += '(';
  for (const auto& k : n->kids) parens_rec(k, out);
  out += ')';
}

}  // namespace

Tree Tree::join(const Tree& a, const Tree& b) {
  if (a.arity_ != b.arity_) throw std::invalid_argument("arity mismatch");
  return Tree(join_rec(a.node_, b.node_), a.arity_);
}

bool Tree::refines(const Tree& fine, const Tree& coarse) {
  if (fine.arity_ != coarse.arity_) return false;
  return refines_rec(fine.node_, coarse.node_);
}

bool Tree::operator==(const Tree& o) const {
  return arity_ == o.arity_ && equal_rec(node_, o.node_);
}

std::string Tree::parens() const {
  std::string out;
  parens_rec(node_, out);
  return out;
}

std::optional<Tree> Tree::parse_parens(std::string_view text, int arity) {
  size_t pos = 0;
  struct Parser {
    std::string_view s;
    size_t& pos;
    int arity;
    bool fail = false;
    Tree run() {
      if (pos >= s.size() || s[pos] != '(') {
        fail = true;
        return Tree::leaf(arity);
      }
      ++pos;
      if (pos < s.size() && s[pos] == ')') {
        ++pos;
        return Tree::leaf(arity);
      }
      std::vector<Tree> kids;
      for (int i = 0; i < arity && !fail; ++i) kids.push_back(run());
      if (fail || pos >= s.size() || s[pos] != ')') {
        fail = true;
        return Tree::leaf(arity);
      }
      ++pos;
      return Tree::branch(std::move(kids));
    }
  };
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  std::string_view sv = compact;
  Parser p{sv, pos, arity};
  Tree t = p.run();
  if (p.fail || pos != sv.size()) return std::nullopt;
  return t;
}

}  // namespace tvec
