#include "chroma/report.hpp"

#include <sstream>

#include "chroma/graph6.hpp"

namespace chroma {

using nlohmann::json;

std::string to_decimal(const BigInt& x) { return x.str(); }

std::string to_scientific(const Real& x, int digits) {
  std::ostringstream out;
  out << std::scientific << std::setprecision(digits) << x;
  return out.str();
}

json vertex_set_json(VertexSet s) { return s.to_vector(); }

namespace {

json optional_double(const std::optional<double>& x) { return x ? json(*x) : json(nullptr); }

json base_record(const std::string& type, const Graph& g) {
  json r;
  r["type"] = type;
  r["graph6"] = g.order() <= kGraph6MaxOrder && g.order() > 0 ? write_graph6(g) : "";
  r["n"] = g.order();
  const GraphClass c = classify(g);
  r["d"] = c.regular_degree ? json(*c.regular_degree) : json(nullptr);
  return r;
}

json power_json(const PowerTerm& t) {
  return {{"base", to_decimal(t.base)}, {"exponent", t.exponent}};
}

}  // namespace

json count_record(const Graph& g, int q, const BigCount& value, const std::string& method) {
  json r = base_record("count", g);
  r["q"] = q;
  r["value"] = to_decimal(value);
  r["slack_log2"] = nullptr;
  r["details"] = {{"method", method}};
  return r;
}

json verdict_record(const Verdict& v) {
  json r;
  r["type"] = "verdict";
  r["graph6"] = v.graph6;
  r["n"] = v.n;
  r["d"] = v.d;
  r["q"] = v.q ? json(*v.q) : json(nullptr);
  r["verdict"] = v.holds ? (v.equality ? "equality" : "holds") : "fails";
  r["slack_log2"] = optional_double(v.slack_log2);
  json comparisons = json::array();
  for (const Comparison& c : v.comparisons) {
    comparisons.push_back({{"lhs", power_json(c.lhs)},
                           {"rhs", power_json(c.rhs)},
                           {"holds", c.holds},
                           {"equality", c.equality},
                           {"slack_log2", optional_double(c.slack_log2)}});
  }
  r["details"] = {{"kind", v.kind}, {"target", v.target}, {"count", to_decimal(v.count)},
                  {"comparisons", comparisons}};
  return r;
}

json certificate_record(const Graph& g, int q, const Certificate& c, const CertificateReport& report) {
  json r = base_record("certificate", g);
  r["q"] = q;
  r["verdict"] = report.all_passed() ? "pass" : "fail";
  r["slack_log2"] = nullptr;
  json trace = json::array();
  for (const auto& step : c.trace) trace.push_back({{"vertex", step.vertex}, {"gain", step.gain}});
  json checks = json::array();
  for (const auto& ch : report.checks)
    checks.push_back({{"name", ch.name}, {"passed", ch.passed}, {"slack", ch.slack}});
  r["details"] = {{"phi", c.phi.to_double()},
                  {"I", vertex_set_json(c.source)},
                  {"T", vertex_set_json(c.T)},
                  {"D", vertex_set_json(c.D)},
                  {"N_T", vertex_set_json(g.neighborhood(c.T))},
                  {"trace", trace},
                  {"cross_edges", report.cross_edges},
                  {"checks", checks}};
  return r;
}

json profile_json(const DProfile& p) {
  json sets = json::array();
  for (VertexSet s : p.D) sets.push_back(vertex_set_json(s));
  return {{"q", p.q},
          {"D", sets},
          {"a", p.multiplicity},
          {"product", to_decimal(p.product)},
          {"sum", p.sum},
          {"completed", p.completed}};
}

json scan_record(const ScanResult& s) {
  json rows = json::array();
  for (const ScanRow& row : s.rows)
    rows.push_back({{"graph6", row.graph6},
                    {"alpha", row.alpha},
                    {"count", to_decimal(row.count)},
                    {"admitted", row.admitted}});
  json r;
  r["type"] = "scan";
  r["graph6"] = s.argmax;
  r["n"] = s.n;
  r["d"] = s.d;
  r["q"] = s.q;
  r["value"] = to_decimal(s.max_count);
  r["slack_log2"] = nullptr;
  r["details"] = {{"eps", s.eps}, {"family_size", s.rows.size()}, {"table", rows}};
  return r;
}

json weak_bound_json(const WeakBound& w) {
  return {{"value", to_scientific(w.value)},
          {"log2_value", static_cast<double>(boost::multiprecision::log2(w.value))},
          {"container_choices", to_decimal(w.container_choices)},
          {"t_max", w.t_max},
          {"d_cap", w.d_cap},
          {"mean_cap", w.mean_cap.str()},
          {"delta", w.delta.convert_to<double>()},
          {"product_bound", to_scientific(w.product_bound)},
          {"matching_edges", w.matching_edges}};
}

json reference_bound_json(const ReferenceBound& r) {
  return {{"base", to_decimal(r.base)},
          {"exponent", std::to_string(r.numerator) + "/" + std::to_string(r.denominator)},
          {"display", to_scientific(r.display)},
          {"idealized", to_scientific(r.idealized)}};
}

json counterexample_bundle(const Verdict& v) {
  json b = verdict_record(v);
  b["type"] = "counterexample";
  json sides = json::array();
  for (const Comparison& c : v.comparisons)
    sides.push_back({{"lhs_value", to_decimal(c.lhs.value())}, {"rhs_value", to_decimal(c.rhs.value())}});
  b["details"]["sides_in_full"] = sides;
  return b;
}

}  // namespace chroma
