#pragma once

#include <string>

#include <json.hpp>

#include "chroma/bounds.hpp"
#include "chroma/certificate.hpp"
#include "chroma/graph.hpp"
#include "chroma/verdicts.hpp"

namespace chroma {

// Every record carries the common fields
//   {type, graph6, n, d, q, value | verdict, slack_log2, details}
// with exact integers written as decimal strings.

std::string to_decimal(const BigInt& x);
std::string to_scientific(const Real& x, int digits = 12);

nlohmann::json vertex_set_json(VertexSet s);

nlohmann::json count_record(const Graph& g, int q, const BigCount& value, const std::string& method);
nlohmann::json verdict_record(const Verdict& v);
nlohmann::json certificate_record(const Graph& g, int q, const Certificate& c, const CertificateReport& report);
nlohmann::json profile_json(const DProfile& p);
nlohmann::json scan_record(const ScanResult& r);
nlohmann::json weak_bound_json(const WeakBound& w);
nlohmann::json reference_bound_json(const ReferenceBound& r);

/// Full evidence for a failed verdict: the graph, the target, and both sides written out in full.
nlohmann::json counterexample_bundle(const Verdict& v);

}  // namespace chroma
