#pragma once

#include <functional>
#include <random>
#include <vector>

#include "chroma/graph.hpp"

namespace chroma {

/// Default cap on n for exhaustive enumeration; CHROMA_CAP_N overrides it.
inline constexpr int kDefaultEnumerationCap = 12;

/// The cap in effect: CHROMA_CAP_N if set to a positive integer, otherwise the default.
int enumeration_cap();

struct EnumerationOptions {
  /// Skip disconnected graphs (the default family of the conjecture sweeps).
  bool connected_only = true;
  int cap = enumeration_cap();
};

/// One representative of every isomorphism class of d-regular graphs on n
/// vertices, in canonical labelling, sorted by canonical form.
///
/// Returns an empty list when n*d is odd or d >= n (no such graph).
/// Throws CapExceeded when n exceeds the cap and InvalidParameter for n < 1 or d < 0.
std::vector<Graph> enumerate_regular(int n, int d, const EnumerationOptions& options = {});

/// Uniform-ish random d-regular graph by the pairing model with restarts.
Graph random_regular(int n, int d, std::mt19937_64& rng);

}  // namespace chroma
