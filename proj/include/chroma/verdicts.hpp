#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chroma/graph.hpp"
#include "chroma/numeric.hpp"

namespace chroma {

/// base^exponent, kept unevaluated for reporting.
struct PowerTerm {
  BigInt base;
  unsigned exponent = 0;

  BigInt value() const { return power(base, exponent); }
};

/// One exact comparison lhs <= rhs after clearing fractional exponents.
struct Comparison {
  PowerTerm lhs;
  PowerTerm rhs;
  bool holds = false;
  bool equality = false;
  /// log2(rhs/lhs) divided by lhs.exponent, i.e. per unit of the counted quantity.
  /// Empty when lhs is zero. Display only.
  std::optional<double> slack_log2;
};

struct Verdict {
  std::string graph6;
  /// "colorings", "indsets" or "hom".
  std::string kind;
  std::string target;
  int n = 0;
  int d = 0;
  std::optional<int> q;
  /// The counted quantity for g (c_q, i or hom).
  BigCount count;
  /// Alternatives; the inequality holds if any of them holds.
  std::vector<Comparison> comparisons;
  bool holds = false;
  /// lhs equals the largest right-hand side.
  bool equality = false;
  std::optional<double> slack_log2;
};

/// c_q(g)^(2d) <= c_q(K_{d,d})^n. Throws InvalidParameter unless g is d-regular with d >= 2.
Verdict conjecture_verdict(const Graph& g, int q);

/// hom(g,h)^(2d) <= hom(K_{d,d},h)^n  or  hom(g,h)^(d+1) <= hom(K_{d+1},h)^n.
/// `target_name` is carried into the verdict for reporting.
Verdict hom_conjecture_verdict(const Graph& g, const TargetGraph& h, const std::string& target_name = "H");

/// i(g)^(2d) <= (2^(d+1) - 1)^n.
Verdict alon_kahn_verdict(const Graph& g);

struct ScanRow {
  std::string graph6;
  int alpha = 0;
  BigCount count;
  bool admitted = false;
};

struct ScanResult {
  int n = 0;
  int d = 0;
  int q = 0;
  double eps = 0;
  BigCount max_count;
  /// Empty when no graph passes the filter.
  std::string argmax;
  /// Sorted by graph6.
  std::vector<ScanRow> rows;
};

/// Largest c_q over the members of `family` with alpha <= (n/2)(1 - eps).
/// All members must be regular with a common (n, d), else InvalidParameter.
/// Rows are computed on up to `jobs` threads and merged in graph6 order.
/// Ties for the maximum go to the smallest graph6 string.
ScanResult constrained_scan(const std::vector<Graph>& family, int q, double eps, int jobs = 1);

}  // namespace chroma
