#include <doctest.h>

#include <cmath>
#include <random>

#include "chroma/certificate.hpp"
#include "chroma/counting.hpp"
#include "chroma/errors.hpp"
#include "chroma/graph.hpp"
#include "chroma/phi.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace chroma;

namespace {

// Straight transcription of the growth rule in floating point.
struct PlainCertificate {
  VertexSet T;
  VertexSet D;
};

PlainCertificate plain_certificate(const Graph& g, VertexSet I, double phi) {
  PlainCertificate c;
  c.T.insert(I.first());
  for (bool grew = true; grew;) {
    grew = false;
    const VertexSet nt = g.neighborhood(c.T);
    for (int u : I.to_vector()) {
      if (c.T.contains(u)) continue;
      if ((g.neighbors(u) - nt).size() >= phi - 1e-12) {
        c.T.insert(u);
        grew = true;
        break;
      }
    }
  }
  const VertexSet nt = g.neighborhood(c.T);
  for (int v = 0; v < g.order(); ++v)
    if (!nt.contains(v) && (g.neighbors(v) - nt).size() < phi - 1e-12) c.D.insert(v);
  return c;
}

VertexSet random_independent_set(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> order(g.order());
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_int_distribution<int> keep(1, g.order());
  const int limit = keep(rng);
  VertexSet s;
  for (int v : order) {
    if (s.size() >= limit) break;
    if (!g.neighbors(v).intersects(s)) s.insert(v);
  }
  return s;
}

std::vector<int> random_proper_coloring(const Graph& g, int q, std::mt19937_64& rng) {
  auto all = oracle::proper_colorings(g, q);
  if (all.empty()) return {};
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  return all[pick(rng)];
}

}  // namespace

TEST_CASE("phi values") {
  CHECK(Phi::for_regular(4, 3).to_double() == doctest::Approx(2 * std::sqrt(2.0) / 3).epsilon(1e-12));
  CHECK(Phi::for_regular(2, 3).to_double() == doctest::Approx(std::sqrt(2.0) / 3).epsilon(1e-12));
  CHECK(Phi::for_regular(16, 2).compare(Rational(4)) == 0);
  CHECK(Phi::for_regular(16, 2).reached_by(4));
  CHECK_FALSE(Phi::for_regular(16, 2).reached_by(3));
  CHECK(Phi::for_regular(3, 3).compare(Rational(1)) < 0);
  CHECK_THROWS_AS(Phi::for_regular(1, 3), InvalidParameter);
  CHECK_THROWS_AS(Phi::for_regular(4, 1), InvalidParameter);
  CHECK_THROWS_AS(Phi::from_value(0.0), InvalidParameter);
  for (int d : {2, 3, 10, 1000, 65536, 1000000})
    for (int q = 2; q <= 10; ++q) CHECK(Phi::for_regular(d, q).compare(Rational(d)) < 0);
}

TEST_CASE("certificate on one side of K_{d,d}") {
  for (int d = 2; d <= 4; ++d) {
    const Graph g = complete_bipartite(d, d);
    const VertexSet side = VertexSet::range(d);
    const Certificate c = build_certificate(g, side, Phi::for_regular(d, 3));
    CHECK(c.T == VertexSet{0});
    CHECK(c.D == side);
    REQUIRE(c.trace.size() == 1);
    CHECK(c.trace[0].gain == d);
    CHECK(verify_certificate(g, c).all_passed());
  }
}

TEST_CASE("certificate rejects bad independent sets") {
  const Graph g = cycle_graph(6);
  const Phi phi = Phi::for_regular(2, 3);
  CHECK_THROWS_AS(build_certificate(g, VertexSet{}, phi), InvalidParameter);
  CHECK_THROWS_AS(build_certificate(g, VertexSet{0, 1}, phi), InvalidParameter);
  CHECK_THROWS_AS(build_certificate(g, VertexSet{7}, phi), InvalidParameter);
}

TEST_CASE("certificate invariants on every independent set of C6") {
  const Graph g = cycle_graph(6);
  const Phi phi = Phi::for_regular(2, 3);
  for (VertexSet I : oracle::all_independent_sets(g)) {
    const Certificate c = build_certificate(g, I, phi);
    const CertificateReport r = verify_certificate(g, c);
    CHECK(r.all_passed());
    CHECK(I.subset_of(c.D));
  }
}

TEST_CASE("certificate matches a plain transcription on the corpus") {
  for (const Graph& g : test::small_corpus()) {
    const auto cls = classify(g);
    if (!cls.regular_degree || *cls.regular_degree < 2) continue;
    const int d = *cls.regular_degree;
    for (int q = 2; q <= 4; ++q) {
      const Phi phi = Phi::for_regular(d, q);
      for (VertexSet I : oracle::all_independent_sets(g)) {
        const Certificate c = build_certificate(g, I, phi);
        const PlainCertificate p = plain_certificate(g, I, phi.to_double());
        CHECK(c.T == p.T);
        CHECK(c.D == p.D);
        CHECK(c.D == closure_of(g, c.T, phi));
        CHECK(verify_certificate(g, c).all_passed());
      }
    }
  }
}

TEST_CASE("certificate on random larger regular graphs") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    const int d = 3 + trial % 6;
    std::uniform_int_distribution<int> half(d / 2 + 2, 30);
    const int n = 2 * half(rng);
    const Graph g = random_regular(n, d, rng);
    const Phi phi = Phi::for_regular(d, 3 + trial % 3);
    const VertexSet I = random_independent_set(g, rng);
    const Certificate c = build_certificate(g, I, phi);
    CHECK(verify_certificate(g, c).all_passed());
    CHECK(c.T.size() * phi.to_double() <= n + 1e-9);
    const Certificate again = build_certificate(g, I, phi);
    CHECK(again.T == c.T);
    CHECK(again.D == c.D);
    REQUIRE(again.trace.size() == c.trace.size());
    for (std::size_t i = 0; i < c.trace.size(); ++i) CHECK(again.trace[i].vertex == c.trace[i].vertex);
  }
}

TEST_CASE("tampered certificates are caught") {
  const Graph g = petersen_graph();
  const Phi phi = Phi::for_regular(3, 3);
  const VertexSet I = lexfirst_maximum_independent_set(g);
  Certificate c = build_certificate(g, I, phi);
  REQUIRE(verify_certificate(g, c).all_passed());

  Certificate bad_d = c;
  bad_d.D = c.D | g.neighborhood(c.T);
  const CertificateReport r = verify_certificate(g, bad_d);
  CHECK_FALSE(r.check("D_disjoint_NT").passed);
  CHECK(r.check("D_disjoint_NT").slack < 0);

  Certificate bad_i = c;
  bad_i.D = c.D - VertexSet{I.first()};
  CHECK_FALSE(verify_certificate(g, bad_i).check("I_subset_D").passed);

  // T := I for one side of K_{d,d}: |T| = d against n / phi = 2d / phi.
  for (int d = 2; d <= 12; ++d) {
    const Graph k = complete_bipartite(d, d);
    const VertexSet side = VertexSet::range(d);
    Certificate t = build_certificate(k, side, Phi::for_regular(d, 2));
    t.T = side;
    const auto& check = verify_certificate(k, t).check("T_size");
    const double phi_d = Phi::for_regular(d, 2).to_double();
    CHECK(check.passed == (d * phi_d <= 2 * d));
    CHECK(check.slack == doctest::Approx(2 * d / phi_d - d).epsilon(1e-9));
  }
  // A threshold above 2 makes |T| = d overflow n / phi.
  const Graph k = complete_bipartite(4, 4);
  Certificate t = build_certificate(k, VertexSet::range(4), Phi::from_value(3.0));
  t.T = VertexSet::range(4);
  CHECK_FALSE(verify_certificate(k, t).check("T_size").passed);
}

TEST_CASE("d_size_cap") {
  const Phi phi = Phi::for_regular(3, 3);
  const double bound = 10.0 * 3 / (6 - phi.to_double());
  CHECK(d_size_cap(10, 3, phi) == static_cast<int>(std::floor(bound)));
  // nd / (2d - phi) = 16 * 4 / 4 = 16 exactly when phi = 4.
  CHECK(d_size_cap(16, 4, Phi::from_value(4.0)) == 16);
  CHECK(d_size_cap(15, 16, Phi::for_regular(16, 2)) == 8);  // 240 / 28
  CHECK(d_size_cap(4, 16, Phi::for_regular(16, 2)) == 2);   // 64 / 28
}

TEST_CASE("d_profile on K_{2,2} with an unused colour") {
  const Graph g = complete_bipartite(2, 2);
  const std::vector<int> coloring{0, 0, 1, 1};
  const Phi phi = Phi::for_regular(2, 3);
  const DProfile p = d_profile(g, coloring, 3, phi);
  CHECK(VertexSet{0, 1}.subset_of(p.D[0]));
  CHECK(VertexSet{2, 3}.subset_of(p.D[1]));
  CHECK(p.completed[2]);
  CHECK_FALSE(p.completed[0]);
  CHECK(p.D[2] == VertexSet::range(d_size_cap(4, 2, phi)));
  CHECK(p.product >= 1);

  CHECK_THROWS_AS(d_profile(g, std::vector<int>{0, 1, 0, 1}, 3, phi), InvalidParameter);
  CHECK_THROWS_AS(d_profile(g, std::vector<int>{0, 0, 3, 3}, 3, phi), InvalidParameter);
  CHECK_THROWS_AS(d_profile(g, std::vector<int>{0, 0, 1}, 3, phi), InvalidParameter);
}

TEST_CASE("d_profile soundness on every colouring of the corpus") {
  for (const Graph& g : test::small_corpus(7)) {
    const auto cls = classify(g);
    if (!cls.regular_degree || *cls.regular_degree < 2) continue;
    const int n = g.order();
    const int d = *cls.regular_degree;
    for (int q = 3; q <= 4; ++q) {
      const Phi phi = Phi::for_regular(d, q);
      const double cap = q * n * d / (2 * d - phi.to_double());
      for (const auto& col : oracle::proper_colorings(g, q)) {
        const DProfile p = d_profile(g, col, q, phi);
        for (int v = 0; v < n; ++v) CHECK(p.D[col[v]].contains(v));
        CHECK(p.sum <= cap + 1e-9);
        CHECK(p.product >= 1);
        int sum = 0;
        for (const VertexSet& s : p.D) sum += s.size();
        CHECK(sum == p.sum);
        for (int v = 0; v < n; ++v) {
          int a = 0;
          for (const VertexSet& s : p.D) a += s.contains(v) ? 1 : 0;
          CHECK(p.multiplicity[v] == a);
        }
      }
    }
  }
}

TEST_CASE("compatible_count") {
  const DProfile both = make_profile(5, {VertexSet::range(5), VertexSet::range(5)});
  CHECK(compatible_count(both) == 32);
  const DProfile hole = make_profile(3, {VertexSet{0, 1}, VertexSet{1}});
  CHECK(compatible_count(hole) == 0);
  CHECK(hole.product == 0);

  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::uint64_t> mask(0, 63);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 6;
    const int q = 1 + trial % 3;
    std::vector<VertexSet> sets;
    for (int k = 0; k < q; ++k) sets.push_back(VertexSet(mask(rng)) & VertexSet::range(n));
    const DProfile p = make_profile(n, sets);
    CHECK(compatible_count(p) == oracle::compatible_assignments(Graph(n), sets, false));
  }
}

TEST_CASE("refined bound dominates the compatible proper colourings") {
  std::mt19937_64 rng(37);
  int with_matching = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + trial % 4;
    std::bernoulli_distribution coin(0.5);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) e.emplace_back(u, v);
    const Graph g = Graph::from_edges(n, e);
    const auto col = random_proper_coloring(g, 3, rng);
    if (col.empty()) continue;
    int maxdeg = 0;
    for (int v = 0; v < n; ++v) maxdeg = std::max(maxdeg, g.degree(v));
    const Phi phi = Phi::for_regular(std::max(2, maxdeg), 3);
    const DProfile p = d_profile(g, col, 3, phi);
    const RefinedBound rb = refined_bound(g, p, 3);
    const BigCount exact = oracle::compatible_assignments(g, p.D, true);
    CHECK(Rational(exact) <= rb.value);
    CHECK(rb.value <= Rational(rb.padded_product));
    CHECK(2 * rb.anchor_set.size() >= n);
    for (auto [u, v] : rb.matching) {
      CHECK(rb.anchor_set.contains(u));
      CHECK(rb.anchor_set.contains(v));
      CHECK(g.adjacent(u, v));
    }
    if (rb.matching.empty()) CHECK(rb.value == Rational(compatible_count(p)));
    else ++with_matching;
  }
  CHECK(with_matching > 0);
}

TEST_CASE("refined bound matching size on graphs with small independence number") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 3 + trial % 4;
    const int n = 2 * (6 + trial % 10);
    const Graph g = random_regular(n, d, rng);
    const int alpha = independence_number(g);
    const double eps = 1.0 - 2.0 * alpha / n;
    const DProfile p = make_profile(n, {VertexSet::range((n + 1) / 2 + trial % 3), VertexSet::range(n), VertexSet::range(n)});
    const RefinedBound rb = refined_bound(g, p, 3);
    CHECK(rb.matching.size() >= n * eps / 4 - 1e-9);
  }
}
