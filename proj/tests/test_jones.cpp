#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tvec/jones.hpp"

using namespace tvec;

namespace {

TreePair gw(const char* s) { return from_word(GroupWord::parse(s)); }

using EdgeSet = std::set<std::pair<int, int>>;

// Random member of the bipartite subgroup: a word in its four generators.
TreePair random_member(std::mt19937& rng, int max_len) {
  static const std::vector<TreePair> gens = {
      gw("x0 x1"), gw("x1 x2"), gw("x2 x3"), gw("f12"),
      invert(gw("x0 x1")), invert(gw("x1 x2")), invert(gw("x2 x3"))};
  std::uniform_int_distribution<size_t> pick(0, gens.size() - 1);
  std::uniform_int_distribution<int> len(1, max_len);
  TreePair acc = TreePair::identity();
  int n = len(rng);
  for (int i = 0; i < n; ++i) acc = multiply(acc, gens[pick(rng)]);
  return acc;
}

}  // namespace

TEST_CASE("graph of a single tree") {
  CHECK(thompson_graph_of_tree(Tree::branch({Tree::leaf(), Tree::leaf()}))
            .edges == EdgeSet{{1, 2}});
  // Five-leaf example: carets on leaves 1-2 and 3-4 hanging off the spine.
  Tree five = *Tree::parse_parens("((()())((()())()))");
  REQUIRE(five.leaf_count() == 5);
  CHECK(thompson_graph_of_tree(five).edges ==
        EdgeSet{{1, 2}, {1, 3}, {3, 4}, {3, 5}});
  // Right combs give paths.
  for (int L : {4, 6, 8}) {
    EdgeSet path;
    for (int i = 1; i < L; ++i) path.insert({i, i + 1});
    CHECK(thompson_graph_of_tree(Tree::right_comb(2, L)).edges == path);
  }
  CHECK_THROWS_AS(thompson_graph_of_tree(Tree::leaf(3)),
                  std::invalid_argument);
}

TEST_CASE("graph of a pair") {
  ThompsonGraph id_graph = thompson_graph_of_pair(TreePair::identity());
  CHECK(id_graph.vertex_count == 1);
  CHECK(id_graph.edges.empty());

  // The 4-leaf element whose graph is complete (both trees balanced,
  // rotation 2): contains the triangle 1-2-3.
  TreePair k4 = *TreePair::parse("((()())(()())) ; ((()())(()())) ; 2");
  REQUIRE(is_reduced(k4));
  ThompsonGraph g = thompson_graph_of_pair(k4);
  CHECK(g.edges ==
        EdgeSet{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  CHECK(g.has_edge(1, 2));
  CHECK(g.has_edge(2, 3));
  CHECK(g.has_edge(1, 3));
  CHECK_FALSE(is_bipartite(g).bipartite);

  // Each caret of f12 contributes the same single edge.
  ThompsonGraph gf = thompson_graph_of_pair(generator("f12"));
  CHECK(gf.vertex_count == 2);
  CHECK(gf.edges == EdgeSet{{1, 2}});
}

TEST_CASE("bipartiteness with witnesses") {
  ThompsonGraph path;
  path.vertex_count = 4;
  path.add_edge(1, 2);
  path.add_edge(2, 3);
  path.add_edge(3, 4);
  auto r = is_bipartite(path);
  CHECK(r.bipartite);
  CHECK(r.coloring == std::vector<int>{0, 1, 0, 1});

  ThompsonGraph tri;
  tri.vertex_count = 3;
  tri.add_edge(1, 2);
  tri.add_edge(2, 3);
  tri.add_edge(1, 3);
  auto t = is_bipartite(tri);
  CHECK_FALSE(t.bipartite);
  // The witness is a genuine odd cycle.
  REQUIRE(t.odd_cycle.size() >= 3);
  CHECK(t.odd_cycle.size() % 2 == 1);
  for (size_t i = 0; i < t.odd_cycle.size(); ++i)
    CHECK(tri.has_edge(t.odd_cycle[i],
                       t.odd_cycle[(i + 1) % t.odd_cycle.size()]));
}

TEST_CASE("membership of the named generators") {
  for (const char* w : {"x0 x1", "x1 x2", "x2 x3", "f12"}) {
    CHECK(member_vect_bipartite(gw(w)));
    CHECK(member_vect_parity(gw(w)) != ParityClass::neither);
  }
  for (const char* w : {"x0", "x1", "c", "c1", "c3"}) {
    CHECK_FALSE(member_vect_bipartite(gw(w)));
    CHECK(member_vect_parity(gw(w)) == ParityClass::neither);
  }
  CHECK(member_vect_parity(gw("x0 x1")) == ParityClass::preserves);
  CHECK(member_vect_parity(gw("f12")) == ParityClass::switches);
  CHECK(member_vect_parity(TreePair::identity()) == ParityClass::preserves);
}

TEST_CASE("the two membership tests agree on the full small ball") {
  for (const TreePair& f : enumerate_elements(2, 6)) {
    bool bip = member_vect_bipartite(f);
    bool par = member_vect_parity(f) != ParityClass::neither;
    CHECK(bip == par);
  }
}

TEST_CASE("leaf-parity colors properly 2-color each tree graph") {
  auto word_parity = [](const Word& w) {
    int p = 0;
    for (int b : w) p ^= b;
    return p;
  };
  for (const TreePair& f : enumerate_elements(2, 5)) {
    for (const Tree* t : {&f.domain(), &f.range()}) {
      auto addr = t->leaf_addresses();
      ThompsonGraph g = thompson_graph_of_tree(*t);
      for (const auto& [u, v] : g.edges)
        CHECK(word_parity(addr[static_cast<size_t>(u - 1)]) !=
              word_parity(addr[static_cast<size_t>(v - 1)]));
    }
  }
}

TEST_CASE("members form a subgroup with a parity sign character") {
  std::mt19937 rng(11);
  for (int i = 0; i < 1000; ++i) {
    TreePair u = random_member(rng, 6);
    TreePair v = random_member(rng, 6);
    ParityClass cu = member_vect_parity(u);
    ParityClass cv = member_vect_parity(v);
    REQUIRE(cu != ParityClass::neither);
    REQUIRE(cv != ParityClass::neither);
    CHECK(member_vect_bipartite(multiply(u, v)));
    CHECK(member_vect_bipartite(invert(u)));
    int su = cu == ParityClass::switches ? 1 : 0;
    int sv = cv == ParityClass::switches ? 1 : 0;
    ParityClass cuv = member_vect_parity(multiply(u, v));
    int suv = cuv == ParityClass::switches ? 1 : 0;
    REQUIRE(cuv != ParityClass::neither);
    CHECK(suv == (su ^ sv));
  }
}

TEST_CASE("alternating form") {
  // Already alternating with an even leaf count: unchanged.
  TreePair f12 = generator("f12");
  CHECK(alternating_form(f12).same_diagram(f12));
  // The identity needs one dipole to reach two leaves.
  TreePair ai = alternating_form(TreePair::identity());
  CHECK(ai.leaf_count() == 2);
  CHECK(equal(ai, TreePair::identity()));

  TreePair x0x1 = gw("x0 x1");
  TreePair af = alternating_form(x0x1);
  CHECK(af.leaf_count() % 2 == 0);
  CHECK(equal(af, x0x1));
  auto bip = is_bipartite(thompson_graph_of_pair(af));
  REQUIRE(bip.bipartite);
  for (size_t v = 0; v + 1 < bip.coloring.size(); ++v)
    CHECK(bip.coloring[v] != bip.coloring[v + 1]);

  CHECK_THROWS_AS(alternating_form(generator("c")), std::invalid_argument);
}

TEST_CASE("factorization of the easy members") {
  auto f = factorize(generator("f12"));
  CHECK(f.p.is_identity());
  CHECK(f.q.is_identity());
  CHECK(f.n == 0);
  CHECK(f.m == 1);

  auto fc = factorize(generator("c2"));
  CHECK(fc.p.is_identity());
  CHECK(fc.q.is_identity());
  CHECK(fc.n == 1);
  CHECK(fc.m == 1);

  auto fx = factorize(gw("x0 x1"));
  CHECK(fx.m == 0);
  CHECK(equal(multiply(fx.p, fx.q), gw("x0 x1")));

  CHECK_THROWS_AS(factorize(generator("x0")), std::invalid_argument);
}

TEST_CASE("factorization round trips over the enumerated members") {
  for (const TreePair& f : enumerate_elements(2, 5)) {
    if (!member_vect_bipartite(f)) continue;
    auto fac = factorize(f);
    CHECK(fac.p.rotation() == 1);
    CHECK(fac.q.rotation() == 1);
    CHECK(member_vect_bipartite(fac.p));
    CHECK(member_vect_bipartite(fac.q));
    CHECK(0 <= fac.m);
    CHECK(fac.m < 2 * fac.n + 2);
    TreePair back = multiply(
        multiply(fac.p, power(generator(GenFamily::c, 2 * fac.n), fac.m)),
        fac.q);
    CHECK(equal(back, f));
  }
}

TEST_CASE("commensurator witness") {
  int wx0 = commensurator_witness(generator("x0"), 30);
  CHECK(wx0 >= 1);
  CHECK(wx0 <= 30);
  int wc = commensurator_witness(generator("c"), 30);
  CHECK(wc <= 30);
  // The returned exponent really works, and is the least one.
  TreePair g = invert(gw("x0 x1"));
  for (const char* name : {"x0", "c"}) {
    TreePair f = gw(name);
    int w = commensurator_witness(f, 30);
    TreePair conj = multiply(multiply(invert(f), power(g, w)), f);
    CHECK_FALSE(member_vect_bipartite(conj));
    for (int k = 1; k < w; ++k)
      CHECK(member_vect_bipartite(
          multiply(multiply(invert(f), power(g, k)), f)));
  }
  CHECK_THROWS_AS(commensurator_witness(generator("f12"), 30),
                  std::invalid_argument);
}

TEST_CASE("graph DOT export") {
  ThompsonGraph g = thompson_graph_of_pair(gw("x0 x1"));
  auto bip = is_bipartite(g);
  g.coloring = bip.coloring;
  std::string dot = g.to_dot();
  CHECK(dot.find("graph thompson {") != std::string::npos);
  CHECK(dot.find("1 -- 2;") != std::string::npos);
  CHECK(dot.find("fillcolor=gray") != std::string::npos);
}
