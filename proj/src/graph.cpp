#include "chroma/graph.hpp"

#include <string>

#include "chroma/errors.hpp"

namespace chroma {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxVertices)
    throw InvalidParameter("vertex count must be in 1.." + std::to_string(kMaxVertices) +
                           ", got " + std::to_string(n));
}

}  // namespace

Graph::Graph(int n) {
  check_order(n);
  rows_.resize(n);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InvalidParameter("edge endpoint out of range");
    if (u == v) throw InvalidParameter("loops are not allowed in a simple graph");
    g.rows_[u].insert(v);
    g.rows_[v].insert(u);
  }
  return g;
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
  const int n = static_cast<int>(rows.size());
  if (n > kMaxVertices) throw InvalidParameter("too many vertices");
  const VertexSet all = VertexSet::range(n);
  for (int v = 0; v < n; ++v) {
    if (!rows[v].subset_of(all)) throw InvalidParameter("adjacency row out of range");
    if (rows[v].contains(v)) throw InvalidParameter("loop at vertex " + std::to_string(v));
    for (int u : rows[v])
      if (!rows[u].contains(v)) throw InvalidParameter("adjacency is not symmetric");
  }
  Graph g;
  g.rows_ = std::move(rows);
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet r : rows_) twice += r.size();
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < order(); ++u)
    for (int v : rows_[u] - VertexSet::range(u + 1)) out.emplace_back(u, v);
  return out;
}

VertexSet Graph::neighborhood(VertexSet s) const {
  VertexSet out;
  for (int v : s) out |= rows_[v];
  return out;
}

bool Graph::is_independent(VertexSet s) const {
  for (int v : s)
    if (rows_[v].intersects(s)) return false;
  return true;
}

TargetGraph::TargetGraph(std::vector<VertexSet> rows) {
  const int k = static_cast<int>(rows.size());
  check_order(k);
  const VertexSet all = VertexSet::range(k);
  for (int v = 0; v < k; ++v) {
    if (!rows[v].subset_of(all)) throw InvalidParameter("target adjacency row out of range");
    for (int u : rows[v])
      if (!rows[u].contains(v)) throw InvalidParameter("target adjacency is not symmetric");
  }
  rows_ = std::move(rows);
}

TargetGraph TargetGraph::from_graph(const Graph& g) { return TargetGraph(g.rows()); }

Graph complete_graph(int k) {
  check_order(k);
  std::vector<VertexSet> rows(k);
  for (int v = 0; v < k; ++v) {
    rows[v] = VertexSet::range(k);
    rows[v].erase(v);
  }
  return Graph::from_rows(std::move(rows));
}

Graph complete_bipartite(int d1, int d2) {
  if (d1 < 1 || d2 < 1) throw InvalidParameter("complete_bipartite sides must be >= 1");
  const int n = d1 + d2;
  check_order(n);
  const VertexSet left = VertexSet::range(d1);
  const VertexSet right = VertexSet::range(n) - left;
  std::vector<VertexSet> rows(n);
  for (int v = 0; v < n; ++v) rows[v] = v < d1 ? right : left;
  return Graph::from_rows(std::move(rows));
}

Graph cycle_graph(int n) {
  if (n < 3) throw InvalidParameter("a simple cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, e);
}

Graph path_graph(int n) {
  check_order(n);
  std::vector<std::pair<int, int>> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::from_edges(n, e);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  const int na = a.order();
  const int n = na + b.order();
  check_order(n);
  std::vector<VertexSet> rows(n);
  for (int v = 0; v < na; ++v) rows[v] = a.neighbors(v);
  for (int v = 0; v < b.order(); ++v) rows[na + v] = VertexSet(b.neighbors(v).bits() << na);
  return Graph::from_rows(std::move(rows));
}

Graph disjoint_copies(const Graph& base, int t) {
  if (t < 1) throw InvalidParameter("disjoint_copies needs t >= 1");
  if (base.order() < 1) throw InvalidParameter("disjoint_copies needs a nonempty base");
  check_order(base.order() * t);
  Graph out = base;
  for (int i = 1; i < t; ++i) out = disjoint_union(out, base);
  return out;
}

Graph petersen_graph() {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, e);
}

Graph complement(const Graph& g) {
  const int n = g.order();
  std::vector<VertexSet> rows(n);
  for (int v = 0; v < n; ++v) {
    rows[v] = VertexSet::range(n) - g.neighbors(v);
    rows[v].erase(v);
  }
  return Graph::from_rows(std::move(rows));
}

Graph induced_subgraph(const Graph& g, VertexSet s) {
  if (!s.subset_of(g.vertices())) throw InvalidParameter("induced_subgraph: vertex out of range");
  const std::vector<int> keep = s.to_vector();
  std::vector<int> index(g.order(), -1);
  for (int i = 0; i < static_cast<int>(keep.size()); ++i) index[keep[i]] = i;
  std::vector<VertexSet> rows(keep.size());
  for (int i = 0; i < static_cast<int>(keep.size()); ++i)
    for (int u : g.neighbors(keep[i]) & s) rows[i].insert(index[u]);
  return Graph::from_rows(std::move(rows));
}

TargetGraph h_ind() { return TargetGraph({VertexSet{1}, VertexSet{0, 1}}); }

TargetGraph looped_vertex() { return TargetGraph({VertexSet{0}}); }

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp{unseen.first()};
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      frontier = g.neighborhood(frontier) - comp;
      comp |= frontier;
    }
    out.push_back(comp);
    unseen -= comp;
  }
  return out;
}

GraphClass classify(const Graph& g) {
  GraphClass c;
  c.n = g.order();
  if (c.n > 0) {
    const int d = g.degree(0);
    bool regular = true;
    for (int v = 1; v < c.n && regular; ++v) regular = g.degree(v) == d;
    if (regular) c.regular_degree = d;
  }
  const auto comps = components(g);
  c.components = static_cast<int>(comps.size());

  // Two-colour each component by BFS layers.
  c.bipartite = true;
  for (VertexSet comp : comps) {
    VertexSet side[2] = {VertexSet{comp.first()}, {}};
    VertexSet frontier = side[0];
    int parity = 0;
    VertexSet seen = frontier;
    while (!frontier.empty()) {
      frontier = g.neighborhood(frontier) - seen;
      parity ^= 1;
      side[parity] |= frontier;
      seen |= frontier;
    }
    if (!g.is_independent(side[0]) || !g.is_independent(side[1])) c.bipartite = false;
  }
  return c;
}

}  // namespace chroma
