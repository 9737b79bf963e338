#pragma once

#include <span>
#include <string>
#include <vector>

#include "chroma/graph.hpp"
#include "chroma/numeric.hpp"
#include "chroma/phi.hpp"

namespace chroma {

/// (T, D) grown from an independent set I.
///
/// T starts at the least vertex of I and repeatedly absorbs the least u in I
/// with |N(u) \ N(T)| >= phi. D is every vertex outside N(T) with fewer than
/// phi neighbours outside N(T). Every colour class of a colouring lies in the
/// D built from it, and D is determined by T alone.
struct Certificate {
  struct Step {
    int vertex = 0;
    /// |N(vertex) \ N(T)| at the moment vertex was added.
    int gain = 0;
  };

  VertexSet T;
  VertexSet D;
  VertexSet source;
  Phi phi;
  std::vector<Step> trace;
};

/// Throws InvalidParameter if I is empty, out of range, or not independent in g.
Certificate build_certificate(const Graph& g, VertexSet I, const Phi& phi);

/// D(T) for a given T.
VertexSet closure_of(const Graph& g, VertexSet T, const Phi& phi);

struct CertificateCheck {
  std::string name;
  bool passed = false;
  /// Distance to the boundary, positive when the check passes with room to spare.
  double slack = 0;
};

struct CertificateReport {
  std::vector<CertificateCheck> checks;
  /// e(D, N(T)).
  int cross_edges = 0;

  bool all_passed() const;
  const CertificateCheck& check(const std::string& name) const;
};

/// Re-derives every invariant of c against g:
///   T_size        |T| phi <= n
///   I_subset_D    source is contained in D
///   D_size        |D| (Dmax + Dmin - phi) <= n Dmax   (= nd / (2d - phi) when d-regular)
///   D_size_relaxed |D| <= (n/2)(1 + phi/d), regular graphs only
///   D_disjoint_NT, T_subset_I, D_outdegree (each v in D has < phi neighbours outside N(T))
///   edges_upper   e(D, N(T)) <= Dmax (n - |D|)
///   edges_lower   e(D, N(T)) >= (Dmin - phi) |D|
/// where Dmax/Dmin are the maximum/minimum degree. Failures are report entries.
CertificateReport verify_certificate(const Graph& g, const Certificate& c);

/// Largest |D| allowed for graphs of degree d: floor(n d / (2d - phi)), capped at n.
int d_size_cap(int n, int d, const Phi& phi);

/// The sets D_1..D_q attached to a colouring, with a_v = |{k : v in D_k}|.
struct DProfile {
  int q = 0;
  std::vector<VertexSet> D;
  std::vector<int> multiplicity;
  BigCount product;
  int sum = 0;
  /// completed[k] is set when colour k was unused and D_k was filled in deterministically.
  std::vector<bool> completed;
};

/// Profile of arbitrary sets D_1..D_q over n vertices.
DProfile make_profile(int n, std::vector<VertexSet> sets);

/// D_k = D(T(I_k)) for each colour class I_k of `coloring` (colours 0..q-1).
/// An unused colour gets D_k = the first d_size_cap(n, Dmax, phi) vertices.
/// Throws InvalidParameter for an improper colouring or a colour out of range.
DProfile d_profile(const Graph& g, std::span<const int> coloring, int q, const Phi& phi);

/// Number of assignments v -> k with v in D_k, i.e. prod_v a_v.
BigCount compatible_count(const DProfile& p);

struct RefinedBound {
  Rational value;
  /// Index of the class playing the role of D_1.
  int anchor = 0;
  /// D_anchor after padding up to ceil(n/2) vertices (unchanged if already large enough).
  VertexSet anchor_set;
  std::vector<std::pair<int, int>> matching;
  /// prod_v a_v after padding.
  BigCount padded_product;
};

/// Upper bound on the proper colourings compatible with p:
/// (prod_v a_v) (1 - 1/q^2)^|M| with M the greedy matching of g[D_anchor].
/// D_anchor is the first class with |D_k| >= n/2; if none exists the largest
/// class is padded with its lowest-index missing vertices.
RefinedBound refined_bound(const Graph& g, const DProfile& p, int q);

}  // namespace chroma
