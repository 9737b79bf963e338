#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "chroma/vertex_set.hpp"

namespace chroma {

/// Simple undirected loopless graph on vertices 0..n-1.
///
/// Adjacency rows are bit masks; row v is the open neighbourhood N(v).
/// Instances are immutable once built, so they can be shared freely.
class Graph {
 public:
  /// The 0-vertex graph. Only produced internally (e.g. empty induced subgraphs).
  Graph() = default;

  /// Edgeless graph on n vertices. Throws InvalidParameter unless 1 <= n <= 64.
  explicit Graph(int n);

  /// Builds from an edge list; rejects loops, out-of-range endpoints and n outside 1..64.
  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

  /// Builds from rows, checking symmetry and irreflexivity. n = 0 is accepted here.
  static Graph from_rows(std::vector<VertexSet> rows);

  int order() const { return static_cast<int>(rows_.size()); }
  VertexSet vertices() const { return VertexSet::range(order()); }
  VertexSet neighbors(int v) const { return rows_[v]; }
  const std::vector<VertexSet>& rows() const { return rows_; }
  bool adjacent(int u, int v) const { return rows_[u].contains(v); }
  int degree(int v) const { return rows_[v].size(); }
  int edge_count() const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  /// N(S): union of the open neighbourhoods of members of s.
  VertexSet neighborhood(VertexSet s) const;
  bool is_independent(VertexSet s) const;

  bool operator==(const Graph&) const = default;

 private:
  std::vector<VertexSet> rows_;
};

/// Homomorphism target: symmetric adjacency on 0..k-1 with loops allowed.
class TargetGraph {
 public:
  TargetGraph() = default;
  /// Throws InvalidParameter on asymmetric rows or k outside 1..64.
  explicit TargetGraph(std::vector<VertexSet> rows);

  /// K_k viewed as a target (no loops).
  static TargetGraph from_graph(const Graph& g);

  int order() const { return static_cast<int>(rows_.size()); }
  VertexSet neighbors(int v) const { return rows_[v]; }
  bool adjacent(int u, int v) const { return rows_[u].contains(v); }
  bool has_loop(int v) const { return rows_[v].contains(v); }

 private:
  std::vector<VertexSet> rows_;
};

Graph complete_graph(int k);
Graph complete_bipartite(int d1, int d2);
Graph cycle_graph(int n);
Graph path_graph(int n);
/// t vertex-disjoint copies of base; copy i occupies vertices i*n .. i*n+n-1.
Graph disjoint_copies(const Graph& base, int t);
Graph disjoint_union(const Graph& a, const Graph& b);
Graph petersen_graph();
Graph complement(const Graph& g);

/// Subgraph induced by s, relabelled 0..|s|-1 in increasing order of the original labels.
Graph induced_subgraph(const Graph& g, VertexSet s);

/// Two adjacent vertices with a loop on vertex 1 only. Homomorphisms into it
/// correspond to independent sets (the preimage of vertex 0).
TargetGraph h_ind();

/// A single vertex carrying a loop; every graph has exactly one map into it.
TargetGraph looped_vertex();

struct GraphClass {
  int n = 0;
  std::optional<int> regular_degree;
  bool bipartite = false;
  int components = 0;
};

GraphClass classify(const Graph& g);

/// Vertex sets of the connected components, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

}  // namespace chroma
