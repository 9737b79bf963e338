#include <doctest.h>

#include <random>

#include "chroma/canonical.hpp"
#include "chroma/counting.hpp"
#include "chroma/enumerate.hpp"
#include "chroma/errors.hpp"
#include "chroma/graph6.hpp"
#include "chroma/kdd.hpp"
#include "chroma/verdicts.hpp"
#include "corpus.hpp"

using namespace chroma;

TEST_CASE("colouring verdict examples") {
  const Verdict k33 = conjecture_verdict(complete_bipartite(3, 3), 3);
  CHECK(k33.holds);
  CHECK(k33.equality);
  CHECK(k33.count == 42);
  CHECK(k33.graph6 == "EFz_");

  const Verdict k4 = conjecture_verdict(complete_graph(4), 3);
  CHECK(k4.holds);
  CHECK_FALSE(k4.equality);
  CHECK(k4.count == 0);
  CHECK_FALSE(k4.slack_log2.has_value());

  const Verdict pet = conjecture_verdict(petersen_graph(), 3);
  CHECK(pet.holds);
  CHECK_FALSE(pet.equality);
  REQUIRE(pet.comparisons.size() == 1);
  CHECK(pet.comparisons[0].lhs.base == 120);
  CHECK(pet.comparisons[0].lhs.exponent == 6);
  CHECK(pet.comparisons[0].rhs.base == 42);
  CHECK(pet.comparisons[0].rhs.exponent == 10);
  CHECK(power(BigInt(120), 6) < power(BigInt(42), 10));
  CHECK(*pet.slack_log2 > 0);

  CHECK_THROWS_AS(conjecture_verdict(path_graph(4), 3), InvalidParameter);
  CHECK_THROWS_AS(conjecture_verdict(Graph::from_edges(4, {{0, 1}, {2, 3}}), 3), InvalidParameter);  // d = 1
}

TEST_CASE("equality at disjoint copies of K_{d,d}") {
  for (int d = 2; d <= 4; ++d)
    for (int copies = 1; copies <= 3; ++copies) {
      const Graph g = disjoint_copies(complete_bipartite(d, d), copies);
      for (int q = 2; q <= 4; ++q) {
        const Verdict v = conjecture_verdict(g, q);
        CHECK(v.holds);
        CHECK(v.equality);
      }
      CHECK(alon_kahn_verdict(g).equality);
    }
}

TEST_CASE("colouring verdicts over cubic and quartic graphs") {
  for (const Graph& g : test::regular_corpus({{4, 3}, {6, 3}, {8, 3}, {10, 3}, {5, 4}, {6, 4}, {7, 4}, {8, 4}, {9, 4}, {10, 4}})) {
    const bool is_kdd = isomorphic(g, complete_bipartite(g.degree(0), g.degree(0)));
    for (int q = 3; q <= 4; ++q) {
      const Verdict v = conjecture_verdict(g, q);
      CHECK(v.holds);
      CHECK(v.equality == is_kdd);
    }
  }
}

TEST_CASE("independent set verdicts") {
  const Verdict k4 = alon_kahn_verdict(complete_graph(4));
  CHECK(k4.count == 5);
  CHECK(k4.holds);
  CHECK_FALSE(k4.equality);
  CHECK(k4.comparisons[0].lhs.value() == 15625);
  CHECK(k4.comparisons[0].rhs.value() == 50625);
  CHECK(alon_kahn_verdict(petersen_graph()).holds);
  for (int d = 2; d <= 6; ++d) CHECK(alon_kahn_verdict(complete_bipartite(d, d)).equality);
  for (const Graph& g : test::regular_corpus({{6, 3}, {8, 3}, {10, 3}, {8, 4}})) {
    const Verdict v = alon_kahn_verdict(g);
    CHECK(v.holds);
    CHECK(v.equality == isomorphic(g, complete_bipartite(g.degree(0), g.degree(0))));
  }
}

TEST_CASE("homomorphism verdicts") {
  // d >= q: hom(K_{d+1}, K_q) = 0 so only the K_{d,d} side can hold.
  for (const Graph& g : test::regular_corpus({{6, 3}, {8, 3}, {10, 3}})) {
    for (int q = 2; q <= 3; ++q) {
      const Verdict h = hom_conjecture_verdict(g, TargetGraph::from_graph(complete_graph(q)), "K" + std::to_string(q));
      const Verdict c = conjecture_verdict(g, q);
      CHECK(h.holds == c.holds);
      CHECK(h.count == c.count);
      REQUIRE(h.comparisons.size() == 2);
      CHECK(h.comparisons[1].rhs.base == 0);
    }
  }
  for (const Graph& g : test::regular_corpus({{6, 3}, {8, 3}, {10, 3}, {8, 4}})) {
    if (!classify(g).bipartite) continue;
    const Verdict v = hom_conjecture_verdict(g, h_ind(), "ind");
    CHECK(v.holds);
    CHECK(v.count == count_independent_sets(g));
  }
  const Verdict loop = hom_conjecture_verdict(petersen_graph(), looped_vertex(), "loop");
  CHECK(loop.holds);
  CHECK(loop.equality);
  CHECK(loop.count == 1);
}

TEST_CASE("constrained scan") {
  const auto cubic6 = enumerate_regular(6, 3);
  const ScanResult s = constrained_scan(cubic6, 3, 0.0);
  CHECK(s.argmax == write_graph6(complete_bipartite(3, 3)));
  CHECK(s.max_count == 42);
  REQUIRE(s.rows.size() == 2);
  CHECK(s.rows[0].graph6 < s.rows[1].graph6);

  const ScanResult none = constrained_scan({}, 3, 0.0);
  CHECK(none.max_count == 0);
  CHECK(none.argmax.empty());

  std::vector<Graph> cubic;
  for (int n : {4, 6, 8, 10})
    for (Graph& g : enumerate_regular(n, 3)) cubic.push_back(g);
  // Mixed orders are rejected.
  CHECK_THROWS_AS(constrained_scan(cubic, 3, 0.0), InvalidParameter);
  CHECK_THROWS_AS(constrained_scan({cycle_graph(6), path_graph(6)}, 3, 0.0), InvalidParameter);

  const auto cubic10 = enumerate_regular(10, 3);
  BigCount prev = -1;
  for (double eps : {0.6, 0.4, 0.3, 0.2, 0.1, 0.0}) {
    const ScanResult r = constrained_scan(cubic10, 3, eps);
    if (eps > 1.0 / 3) CHECK(r.max_count == 0);
    CHECK(r.max_count >= prev);
    prev = r.max_count;
    const ScanResult par = constrained_scan(cubic10, 3, eps, 4);
    CHECK(par.argmax == r.argmax);
    REQUIRE(par.rows.size() == r.rows.size());
    for (std::size_t i = 0; i < r.rows.size(); ++i) {
      CHECK(par.rows[i].graph6 == r.rows[i].graph6);
      CHECK(par.rows[i].count == r.rows[i].count);
      CHECK(r.rows[i].admitted == (2 * r.rows[i].alpha <= 10 * (1 - eps) + 1e-9));
    }
  }
}
