#pragma once

// Brute-force reference implementations used only by tests. None of these
// call into the counting code they are compared against.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "chroma/graph.hpp"
#include "chroma/numeric.hpp"

namespace chroma::oracle {

/// Calls fn(assignment) for all k^n maps {0..n-1} -> {0..k-1}.
template <typename Fn>
void for_each_assignment(int n, int k, Fn fn) {
  std::vector<int> a(n, 0);
  if (k == 0) {
    if (n == 0) fn(a);
    return;
  }
  for (;;) {
    fn(a);
    int i = 0;
    while (i < n && ++a[i] == k) a[i++] = 0;
    if (i == n) return;
  }
}

inline BigCount colorings(const Graph& g, int q) {
  std::uint64_t total = 0;
  const auto edges = g.edges();
  for_each_assignment(g.order(), q, [&](const std::vector<int>& c) {
    for (auto [u, v] : edges)
      if (c[u] == c[v]) return;
    ++total;
  });
  return total;
}

inline BigCount homomorphisms(const Graph& g, const TargetGraph& h) {
  std::uint64_t total = 0;
  const auto edges = g.edges();
  for_each_assignment(g.order(), h.order(), [&](const std::vector<int>& f) {
    for (auto [u, v] : edges)
      if (!h.adjacent(f[u], f[v])) return;
    ++total;
  });
  return total;
}

inline BigCount independent_sets(const Graph& g) {
  std::uint64_t total = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask)
    if (g.is_independent(VertexSet(mask))) ++total;
  return total;
}

inline int independence_number(const Graph& g) {
  int best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask)
    if (g.is_independent(VertexSet(mask))) best = std::max(best, VertexSet(mask).size());
  return best;
}

inline std::vector<VertexSet> all_independent_sets(const Graph& g) {
  std::vector<VertexSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.order()); ++mask)
    if (g.is_independent(VertexSet(mask))) out.emplace_back(mask);
  return out;
}

inline std::vector<std::vector<int>> proper_colorings(const Graph& g, int q) {
  std::vector<std::vector<int>> out;
  const auto edges = g.edges();
  for_each_assignment(g.order(), q, [&](const std::vector<int>& c) {
    for (auto [u, v] : edges)
      if (c[u] == c[v]) return;
    out.push_back(c);
  });
  return out;
}

/// Onto maps from an n-set to a k-set, by listing all k^n maps.
inline BigInt surjections(int n, int k) {
  std::uint64_t total = 0;
  for_each_assignment(n, k, [&](const std::vector<int>& f) {
    std::vector<bool> hit(k, false);
    for (int x : f) hit[x] = true;
    if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) ++total;
  });
  return total;
}

/// Assignments v -> k with v in sets[k], optionally also requiring a proper colouring.
inline BigCount compatible_assignments(const Graph& g, const std::vector<VertexSet>& sets, bool proper_only) {
  std::uint64_t total = 0;
  const auto edges = g.edges();
  for_each_assignment(g.order(), static_cast<int>(sets.size()), [&](const std::vector<int>& c) {
    for (int v = 0; v < g.order(); ++v)
      if (!sets[c[v]].contains(v)) return;
    if (proper_only)
      for (auto [u, v] : edges)
        if (c[u] == c[v]) return;
    ++total;
  });
  return total;
}

/// Isomorphism by trying every permutation (n <= 9 or so).
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> p(a.order());
  std::iota(p.begin(), p.end(), 0);
  const auto edges = a.edges();
  do {
    bool ok = true;
    for (auto [u, v] : edges)
      if (!b.adjacent(p[u], p[v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

/// All labelled d-regular graphs on n vertices reduced by brute-force isomorphism (tiny n only).
inline std::vector<Graph> regular_classes(int n, int d, bool connected_only) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const int m = n * d / 2;
  std::vector<Graph> classes;
  if ((n * d) % 2 != 0 || d >= n) return classes;
  std::vector<bool> pick(pairs.size(), false);
  std::fill(pick.begin(), pick.begin() + m, true);
  do {
    std::vector<std::pair<int, int>> e;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (pick[i]) e.push_back(pairs[i]);
    Graph g = Graph::from_edges(n, e);
    bool regular = true;
    for (int v = 0; v < n && regular; ++v) regular = g.degree(v) == d;
    if (!regular) continue;
    if (connected_only && components(g).size() > 1) continue;
    bool seen = false;
    for (const Graph& h : classes)
      if (oracle::isomorphic(g, h)) {
        seen = true;
        break;
      }
    if (!seen) classes.push_back(g);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return classes;
}

}  // namespace chroma::oracle

namespace chroma::oracle {

/// Number of labelled d-regular graphs on n vertices, by plain backtracking over rows.
inline std::uint64_t labelled_regular_count(int n, int d) {
  std::vector<int> deg(n, 0);
  std::uint64_t total = 0;
  // Decide edges (u, v), u < v, in lexicographic order.
  auto rec = [&](auto&& self, int u, int v) -> void {
    if (u == n) {
      ++total;
      return;
    }
    if (v >= n) {
      if (deg[u] == d) self(self, u + 1, u + 2);
      return;
    }
    self(self, u, v + 1);
    if (deg[u] < d && deg[v] < d) {
      ++deg[u];
      ++deg[v];
      self(self, u, v + 1);
      --deg[u];
      --deg[v];
    }
  };
  rec(rec, 0, 1);
  return total;
}

/// |Aut(g)| by trying every permutation.
inline std::uint64_t automorphism_count(const Graph& g) {
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  const auto edges = g.edges();
  std::uint64_t count = 0;
  do {
    bool ok = true;
    for (auto [u, v] : edges)
      if (!g.adjacent(p[u], p[v])) {
        ok = false;
        break;
      }
    if (ok) ++count;
  } while (std::next_permutation(p.begin(), p.end()));
  return count;
}

}  // namespace chroma::oracle
