#pragma once

#include <utility>
#include <vector>

#include "chroma/graph.hpp"
#include "chroma/numeric.hpp"

namespace chroma {

enum class ColoringMethod { backtrack, polynomial };

/// Number of proper q-colourings of g.
///
/// `backtrack` enumerates colourings of each component directly along a BFS
/// elimination order and is the ground-truth counter. `polynomial` evaluates the chromatic
/// polynomial from deletion-contraction (throws CapExceeded above its cap).
BigCount count_colorings(const Graph& g, int q, ColoringMethod method = ColoringMethod::backtrack);

/// BFS from vertex 0, then from the smallest unvisited vertex, and so on.
std::vector<int> bfs_order(const Graph& g);

BigCount count_homomorphisms(const Graph& g, const TargetGraph& h);

/// hom(K_{a,b}, h) by summing over image sets of the first side.
BigCount count_homomorphisms_complete_bipartite(int a, int b, const TargetGraph& h);

/// i(g), including the empty set.
BigCount count_independent_sets(const Graph& g);

/// alpha(g[within]) by branch and bound with a greedy clique-cover bound.
int independence_number(const Graph& g, VertexSet within);
int independence_number(const Graph& g);

/// The maximum independent set whose sorted vertex list is lexicographically least.
VertexSet lexfirst_maximum_independent_set(const Graph& g);

/// Maximal matching built by scanning edges (u < v) in lexicographic order.
std::vector<std::pair<int, int>> greedy_maximal_matching(const Graph& g);

}  // namespace chroma
