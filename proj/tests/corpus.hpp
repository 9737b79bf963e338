#pragma once

#include <vector>

#include "chroma/enumerate.hpp"
#include "chroma/graph.hpp"

namespace chroma::test {

/// Every connected regular graph on 1..max_n vertices (all degrees) plus a
/// few irregular and disconnected graphs.
inline std::vector<Graph> small_corpus(int max_n = 8) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n)
    for (int d = 0; d < n; ++d)
      for (Graph& g : enumerate_regular(n, d)) out.push_back(std::move(g));
  out.push_back(path_graph(4));
  out.push_back(path_graph(7));
  out.push_back(Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}));  // K4 minus an edge
  out.push_back(Graph::from_edges(6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 5}}));
  out.push_back(disjoint_copies(complete_bipartite(2, 2), 2));
  out.push_back(disjoint_union(complete_graph(3), cycle_graph(5)));
  out.push_back(Graph(5));
  return out;
}

/// Connected d-regular graphs on n vertices for every listed (n, d).
inline std::vector<Graph> regular_corpus(const std::vector<std::pair<int, int>>& sizes) {
  std::vector<Graph> out;
  for (auto [n, d] : sizes)
    for (Graph& g : enumerate_regular(n, d)) out.push_back(std::move(g));
  return out;
}

/// Cubic graphs on 4, 6, 8, 10 vertices (1 + 2 + 5 + 19).
inline std::vector<Graph> cubic_corpus() { return regular_corpus({{4, 3}, {6, 3}, {8, 3}, {10, 3}}); }

}  // namespace chroma::test
