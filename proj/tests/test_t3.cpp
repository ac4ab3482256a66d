#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "tvec/t3.hpp"

using namespace tvec;

TEST_CASE("no order-two element in the ternary ball") {
  CHECK(search_torsion(3, 2, 7).empty());
}

TEST_CASE("the half rotation is the only small involution") {
  auto hits = search_torsion(2, 2, 2);
  REQUIRE(hits.size() == 1);
  CHECK(equal(hits[0], generator("f12")));
}

TEST_CASE("no involution fixes zero") {
  for (const TreePair& f : search_torsion(2, 2, 4))
    CHECK(f.rotation() != 1);
}

TEST_CASE("torsion search finds the comb rotations") {
  for (int n = 0; n <= 4; ++n) {
    auto hits = search_torsion(2, n + 2, n + 2);
    TreePair cn = generator(GenFamily::c, n);
    bool found = false;
    for (const TreePair& h : hits)
      if (equal(h, cn)) found = true;
    CHECK(found);
  }
}

TEST_CASE("orders are exact, not divisors") {
  for (const TreePair& f : search_torsion(2, 4, 5)) {
    CHECK(order(f, 4) == 4);
    CHECK_FALSE(power(f, 2).is_identity());
  }
}

TEST_CASE("full trees have leaf counts locked mod arity minus one") {
  for (int arity : {2, 3, 4}) {
    int bound = arity == 2 ? 5 : (arity == 3 ? 7 : 5);
    for (const TreePair& f : enumerate_elements(arity, bound)) {
      CHECK((f.leaf_count() - 1) % (arity - 1) == 0);
      CHECK((f.domain().leaf_count() - 1) % (arity - 1) == 0);
    }
  }
}

TEST_CASE("leaf split counts") {
  auto id_report = leaf_parity_report(TreePair::identity(3), 1);
  CHECK(id_report.domain_below == 0);
  CHECK(id_report.domain_above == 1);
  CHECK(id_report.range_below == 0);
  CHECK(id_report.range_above == 1);
  CHECK(id_report.boundary_in_range);

  // Total leaf count of any ternary pair is odd.
  for (const TreePair& f : enumerate_elements(3, 5)) {
    auto r = leaf_parity_report(f, 1);
    CHECK((r.domain_below + r.domain_above) % 2 == 1);
  }

  // One-caret ternary rotation, split after the first leaf.
  TreePair rot = *TreePair::parse("(()()()) ; (()()()) ; 2", 3);
  auto r = leaf_parity_report(rot, 2);
  CHECK(r.domain_below == 1);
  CHECK(r.domain_above == 2);
  CHECK(r.range_below == 1);
  CHECK(r.range_above == 2);
  CHECK(r.boundary_in_range);
  CHECK(r.str().find("domain: 1 below (odd), 2 above (even)") == 0);

  CHECK_THROWS_AS(leaf_parity_report(rot, 0), std::out_of_range);
  CHECK_THROWS_AS(leaf_parity_report(rot, 4), std::out_of_range);
}

TEST_CASE("bad search bounds throw") {
  CHECK_THROWS_AS(search_torsion(1, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(search_torsion(2, 1, 3), std::invalid_argument);
}
