#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

/// Isomorphism-invariant encoding of a graph: the relabelled adjacency rows
/// that are lexicographically least among all labellings reachable by
/// individualisation and equitable refinement. Two graphs have equal forms
/// iff they are isomorphic.
struct CanonicalForm {
  int n = 0;
  std::vector<std::uint64_t> rows;

  auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalLabelling {
  CanonicalForm form;
  /// position[v] is the canonical label of vertex v.
  std::vector<int> position;
};

CanonicalLabelling canonical_labelling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);
/// The graph whose rows are `form.rows`.
Graph canonical_graph(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept;
};

}  // namespace chroma
