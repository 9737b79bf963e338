#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "chroma/bounds.hpp"
#include "chroma/certificate.hpp"
#include "chroma/counting.hpp"
#include "chroma/enumerate.hpp"
#include "chroma/errors.hpp"
#include "chroma/graph6.hpp"
#include "chroma/kdd.hpp"
#include "chroma/records.hpp"
#include "chroma/report.hpp"
#include "chroma/verdicts.hpp"

namespace chroma::cli {

using nlohmann::json;

namespace {

/// Thrown inside a command to leave with a specific exit code.
struct Exit {
  int code;
  std::string message;
};

std::string slurp(const std::string& source, std::istream& in) {
  std::ostringstream buf;
  if (source == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(source, std::ios::binary);
  if (!file) throw Exit{kUsage, "cannot open " + source};
  buf << file.rdbuf();
  return buf.str();
}

std::vector<Graph> read_graphs(const std::string& source, std::istream& in) {
  return parse_graph6_lines(slurp(source, in));
}

/// Target spec: "ind", "loop", "K<k>", or a file holding k followed by k rows of 0/1 (diagonal = loops).
std::pair<TargetGraph, std::string> read_target(const std::string& spec) {
  if (spec == "ind") return {h_ind(), "H_ind"};
  if (spec == "loop") return {looped_vertex(), "loop"};
  if (spec.size() > 1 && spec[0] == 'K' && std::all_of(spec.begin() + 1, spec.end(), ::isdigit))
    return {TargetGraph::from_graph(complete_graph(std::stoi(spec.substr(1)))), spec};
  std::ifstream file(spec);
  if (!file) throw Exit{kUsage, "cannot open target file " + spec};
  int k = 0;
  if (!(file >> k) || k < 1 || k > kMaxVertices) throw Exit{kUsage, "target file: bad vertex count"};
  std::vector<VertexSet> rows(k);
  for (int i = 0; i < k; ++i) {
    std::string row;
    if (!(file >> row) || static_cast<int>(row.size()) != k) throw Exit{kUsage, "target file: bad row " + std::to_string(i)};
    for (int j = 0; j < k; ++j) {
      if (row[j] == '1')
        rows[i].insert(j);
      else if (row[j] != '0')
        throw Exit{kUsage, "target file: rows must contain only 0 and 1"};
    }
  }
  return {TargetGraph(std::move(rows)), spec};
}

std::string now_iso8601() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream out;
  out << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return out.str();
}

/// Applies fn to every index on `jobs` threads; results land at their own index.
template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn fn) {
  const std::size_t workers = static_cast<std::size_t>(std::clamp(jobs, 1, 64));
  if (workers == 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers) fn(i);
    });
}

// ---------------------------------------------------------------- count

struct CountOptions {
  std::string graph = "-";
  int q = 3;
  std::string method = "backtrack";
  std::string format = "json";
  bool inject_mismatch = false;
};

int cmd_count(const CountOptions& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const std::vector<Graph> graphs = read_graphs(o.graph, in);
  if (o.format == "csv") out << "graph6,n,q,value\n";
  int status = kOk;
  for (const Graph& g : graphs) {
    BigCount value;
    if (o.method == "polynomial") {
      value = count_colorings(g, o.q, ColoringMethod::polynomial);
    } else {
      value = count_colorings(g, o.q, ColoringMethod::backtrack);
      if (o.method == "both") {
        BigCount other = count_colorings(g, o.q, ColoringMethod::polynomial);
        if (o.inject_mismatch) other += 1;
        if (other != value) {
          err << "mismatch on " << write_graph6(g) << ": backtrack " << value << " vs polynomial " << other << '\n';
          status = kMismatch;
        }
      }
    }
    if (o.format == "json")
      out << count_record(g, o.q, value, o.method).dump() << '\n';
    else if (o.format == "csv")
      out << write_graph6(g) << ',' << g.order() << ',' << o.q << ',' << value << '\n';
    else
      out << write_graph6(g) << " n=" << g.order() << " q=" << o.q << " count=" << value << '\n';
  }
  return status;
}

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  std::string graphs = "-";
  int q = 3;
  std::string target = "colorings";
  int jobs = 1;
  std::string out;
  std::string bundle = "counterexamples.jsonl";
  std::string format = "json";
};

int cmd_verify(const VerifyOptions& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const std::vector<Graph> graphs = read_graphs(o.graphs, in);

  std::optional<std::pair<TargetGraph, std::string>> target;
  if (o.target.rfind("hom:", 0) == 0)
    target = read_target(o.target.substr(4));
  else if (o.target != "colorings" && o.target != "indsets")
    throw Exit{kUsage, "--target must be colorings, indsets or hom:<H>"};

  struct Row {
    std::string graph6;
    std::optional<Verdict> verdict;
    std::string skipped;
  };
  std::vector<Row> rows(graphs.size());
  std::mutex bundle_mutex;
  bool bundle_error = false;

  parallel_for(graphs.size(), o.jobs, [&](std::size_t i) {
    const Graph& g = graphs[i];
    Row& row = rows[i];
    row.graph6 = write_graph6(g);
    const GraphClass c = classify(g);
    if (!c.regular_degree) {
      row.skipped = "not regular";
      return;
    }
    if (*c.regular_degree < 2) {
      row.skipped = "degree below 2";
      return;
    }
    if (o.target == "colorings")
      row.verdict = conjecture_verdict(g, o.q);
    else if (o.target == "indsets")
      row.verdict = alon_kahn_verdict(g);
    else
      row.verdict = hom_conjecture_verdict(g, target->first, target->second);

    if (!row.verdict->holds) {
      // Persist the evidence before anything is aggregated.
      std::lock_guard lock(bundle_mutex);
      std::ofstream bundle(o.bundle, std::ios::app);
      if (bundle) bundle << counterexample_bundle(*row.verdict).dump() << '\n';
      if (!bundle) bundle_error = true;
    }
  });

  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.graph6 < b.graph6; });

  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out, std::ios::trunc);
    if (!file) throw Exit{kUsage, "cannot write " + o.out};
  }
  std::ostream& sink = o.out.empty() ? out : file;

  int holds = 0, equality = 0, failures = 0, skipped = 0;
  if (o.format == "csv") sink << "graph6,n,d,q,verdict,slack_log2\n";
  for (const Row& row : rows) {
    if (!row.verdict) {
      ++skipped;
      if (o.format == "csv")
        sink << row.graph6 << ",,,,skipped: " << row.skipped << ",\n";
      else
        sink << json{{"type", "skipped"}, {"graph6", row.graph6}, {"details", {{"reason", row.skipped}}}}.dump() << '\n';
      continue;
    }
    const Verdict& v = *row.verdict;
    if (v.holds) ++holds;
    if (v.equality) ++equality;
    if (!v.holds) ++failures;
    if (o.format == "csv") {
      sink << v.graph6 << ',' << v.n << ',' << v.d << ',' << (v.q ? std::to_string(*v.q) : "") << ','
           << (v.holds ? (v.equality ? "equality" : "holds") : "fails") << ','
           << (v.slack_log2 ? std::to_string(*v.slack_log2) : "") << '\n';
    } else {
      sink << verdict_record(v).dump() << '\n';
    }
  }
  const json summary = {{"type", "summary"}, {"graphs", rows.size()}, {"holds", holds},
                        {"equality", equality}, {"failures", failures}, {"skipped", skipped}};
  if (o.format == "csv")
    err << summary.dump() << '\n';
  else
    sink << summary.dump() << '\n';
  if (bundle_error) err << "warning: could not write counterexample bundle to " << o.bundle << '\n';
  return failures > 0 ? kViolation : kOk;
}

// ---------------------------------------------------------------- certificate

struct CertificateOptions {
  std::string graph = "-";
  int q = 3;
  std::string indset = "auto";
};

VertexSet parse_indset(const std::string& text, const Graph& g) {
  VertexSet s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    int v = -1;
    try {
      std::size_t used = 0;
      v = std::stoi(item, &used);
      if (used != item.size()) v = -1;
    } catch (const std::exception&) {
    }
    if (v < 0 || v >= g.order()) throw Exit{kUsage, "--indset: bad vertex '" + item + "'"};
    s.insert(v);
  }
  if (s.empty()) throw Exit{kUsage, "--indset is empty"};
  if (!g.is_independent(s)) throw Exit{kUsage, "--indset is not an independent set"};
  return s;
}

int cmd_certificate(const CertificateOptions& o, std::istream& in, std::ostream& out, std::ostream&) {
  const std::vector<Graph> graphs = read_graphs(o.graph, in);
  int status = kOk;
  for (const Graph& g : graphs) {
    const GraphClass c = classify(g);
    if (!c.regular_degree || *c.regular_degree < 2)
      throw Exit{kUsage, "certificate needs a d-regular graph with d >= 2: " + write_graph6(g)};
    const VertexSet I = o.indset == "auto" ? lexfirst_maximum_independent_set(g) : parse_indset(o.indset, g);
    const Phi phi = Phi::for_regular(*c.regular_degree, o.q);
    const Certificate cert = build_certificate(g, I, phi);
    const CertificateReport report = verify_certificate(g, cert);
    if (!report.all_passed()) status = kViolation;
    out << certificate_record(g, o.q, cert, report).dump() << '\n';
  }
  return status;
}

// ---------------------------------------------------------------- scan

struct ScanOptions {
  int n = 6;
  int d = 3;
  int q = 3;
  double eps = 0;
  std::string source = "gen";
  std::string records;
  int jobs = 1;
  bool include_disconnected = false;
};

int cmd_scan(const ScanOptions& o, std::istream& in, std::ostream& out, std::ostream&) {
  std::vector<Graph> family;
  if (o.source == "gen") {
    EnumerationOptions opts;
    opts.connected_only = !o.include_disconnected;
    family = enumerate_regular(o.n, o.d, opts);
  } else {
    family = read_graphs(o.source, in);
    for (const Graph& g : family) {
      const GraphClass c = classify(g);
      if (g.order() != o.n || c.regular_degree != o.d)
        throw Exit{kUsage, "family member " + write_graph6(g) + " is not a " + std::to_string(o.d) +
                               "-regular graph on " + std::to_string(o.n) + " vertices"};
    }
  }
  ScanResult result = constrained_scan(family, o.q, o.eps, o.jobs);
  result.n = o.n;
  result.d = o.d;
  out << scan_record(result).dump() << '\n';

  if (!o.records.empty() && !result.argmax.empty()) {
    RecordStore store = RecordStore::load(o.records);
    ExtremalRecord rec{o.n, o.d, o.q, eps_bucket(o.eps), to_decimal(result.max_count), result.argmax,
                       now_iso8601(), kVersion};
    const bool improved = store.offer(rec);
    if (improved) store.save(o.records);
    const ExtremalRecord& kept = store.records().at(rec.key());
    out << json{{"type", "record"},
                {"graph6", kept.argmax},
                {"n", o.n},
                {"d", o.d},
                {"q", o.q},
                {"value", kept.best},
                {"slack_log2", nullptr},
                {"details", {{"key", rec.key()}, {"updated", improved}}}}
               .dump()
        << '\n';
  }
  return kOk;
}

// ---------------------------------------------------------------- bounds

struct BoundsOptions {
  int n = 10;
  int d = 3;
  int q = 3;
  std::optional<double> eps;
  std::string graphs;
  std::string format = "json";
};

int cmd_bounds(const BoundsOptions& o, std::istream& in, std::ostream& out, std::ostream& err) {
  if (o.eps && !(*o.eps >= 0 && *o.eps <= 1)) throw Exit{kUsage, "--eps must lie in [0, 1]"};
  const ReferenceBound ref = reference_bound(o.n, o.d, o.q);
  std::optional<WeakBound> weak;
  std::optional<WeakBound> weak_eps;
  if (o.q >= 3) {
    weak = explicit_weak_bound(o.n, o.d, o.q);
    if (o.eps) weak_eps = explicit_weak_bound(o.n, o.d, o.q, o.eps);
  }
  const Real eta_power = boost::multiprecision::pow(Real(eta(o.q)), Real(o.n) / 2);

  json row = {{"type", "bounds"},
              {"graph6", ""},
              {"n", o.n},
              {"d", o.d},
              {"q", o.q},
              {"value", weak ? json(to_scientific(weak->value)) : json(nullptr)},
              {"slack_log2", nullptr}};
  row["details"] = {{"reference", reference_bound_json(ref)},
                    {"eta_power", to_scientific(eta_power)},
                    {"weak_bound", weak ? weak_bound_json(*weak) : json(nullptr)},
                    {"weak_bound_eps", weak_eps ? weak_bound_json(*weak_eps) : json(nullptr)},
                    {"eps", o.eps ? json(*o.eps) : json(nullptr)}};
  if (o.format == "json") {
    out << row.dump() << '\n';
  } else {
    out << "n=" << o.n << " d=" << o.d << " q=" << o.q << '\n'
        << "  reference  c_q(K_dd)^(n/2d) base=" << ref.base << " exponent=" << ref.numerator << '/'
        << ref.denominator << " ~ " << to_scientific(ref.display, 6) << '\n'
        << "  idealized  eta^(n/2) m^(n/2d) ~ " << to_scientific(ref.idealized, 6) << '\n'
        << "  eta^(n/2)  ~ " << to_scientific(eta_power, 6) << '\n';
    if (weak) out << "  weak bound ~ " << to_scientific(weak->value, 6) << '\n';
    if (weak_eps) out << "  weak bound (eps) ~ " << to_scientific(weak_eps->value, 6) << '\n';
  }

  int status = kOk;
  if (!o.graphs.empty()) {
    for (const Graph& g : read_graphs(o.graphs, in)) {
      const GraphClass c = classify(g);
      if (g.order() != o.n || c.regular_degree != o.d) {
        err << "skipping " << write_graph6(g) << ": not a " << o.d << "-regular graph on " << o.n << " vertices\n";
        continue;
      }
      const BigCount exact = count_colorings(g, o.q);
      const int alpha = independence_number(g);
      bool ok = true;
      if (weak && Real(exact) > weak->value) ok = false;
      const bool eps_applies = o.eps && 2.0 * alpha <= o.n * (1 - *o.eps) + 1e-9;
      if (weak_eps && eps_applies && Real(exact) > weak_eps->value) ok = false;
      if (!ok) status = kViolation;
      if (o.format == "json") {
        out << json{{"type", "bounds_graph"},
                    {"graph6", write_graph6(g)},
                    {"n", o.n},
                    {"d", o.d},
                    {"q", o.q},
                    {"value", to_decimal(exact)},
                    {"verdict", ok ? "holds" : "fails"},
                    {"slack_log2", weak ? json(static_cast<double>(boost::multiprecision::log2(weak->value)) -
                                               log2_of(exact))
                                        : json(nullptr)},
                    {"details", {{"alpha", alpha}, {"eps_applies", eps_applies}}}}
                   .dump()
            << '\n';
      } else {
        out << "  " << write_graph6(g) << " c_q=" << exact << " alpha=" << alpha << (ok ? "" : "  VIOLATION") << '\n';
      }
    }
  }
  return status;
}

template <typename Fn>
int guarded(Fn fn, std::ostream& err) {
  try {
    return fn();
  } catch (const Exit& e) {
    if (!e.message.empty()) err << "error: " << e.message << '\n';
    return e.code;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCap;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact colouring, homomorphism and independent-set counts for small regular graphs"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CountOptions count;
  auto* c = app.add_subcommand("count", "Count proper q-colourings of graph6 inputs");
  c->add_option("--graph", count.graph, "graph6 file, or - for stdin");
  c->add_option("--q", count.q, "Number of colours")->required()->check(CLI::NonNegativeNumber);
  c->add_option("--method", count.method)->check(CLI::IsMember({"backtrack", "polynomial", "both"}));
  c->add_option("--format", count.format)->check(CLI::IsMember({"json", "csv", "text"}));
  c->add_flag("--inject-mismatch", count.inject_mismatch)->group("");

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Exact verdicts for the K_{d,d} upper-bound conjectures");
  v->add_option("--graphs", verify.graphs, "graph6 file, or - for stdin");
  v->add_option("--q", verify.q)->check(CLI::NonNegativeNumber);
  v->add_option("--target", verify.target, "colorings | indsets | hom:<ind|loop|K<k>|file>");
  v->add_option("--jobs", verify.jobs)->check(CLI::PositiveNumber);
  v->add_option("--out", verify.out, "Write verdicts here instead of stdout");
  v->add_option("--bundle", verify.bundle, "Counterexample bundle file (appended)");
  v->add_option("--format", verify.format)->check(CLI::IsMember({"json", "csv"}));

  CertificateOptions cert;
  auto* ce = app.add_subcommand("certificate", "Build and check the (T, D) certificate of an independent set");
  ce->add_option("--graph", cert.graph, "graph6 file, or - for stdin");
  ce->add_option("--q", cert.q)->check(CLI::Range(2, 1 << 20));
  ce->add_option("--indset", cert.indset, "Comma-separated vertices, or auto");

  ScanOptions scan;
  auto* s = app.add_subcommand("scan", "Largest c_q among regular graphs with bounded independence number");
  s->add_option("--n", scan.n)->required()->check(CLI::PositiveNumber);
  s->add_option("--d", scan.d)->required()->check(CLI::NonNegativeNumber);
  s->add_option("--q", scan.q)->required()->check(CLI::NonNegativeNumber);
  s->add_option("--eps", scan.eps)->check(CLI::Range(0.0, 1.0));
  s->add_option("--source", scan.source, "gen, or a graph6 file (- for stdin)");
  s->add_option("--records", scan.records, "Extremal records JSON file to update");
  s->add_option("--jobs", scan.jobs)->check(CLI::PositiveNumber);
  s->add_flag("--include-disconnected", scan.include_disconnected);

  BoundsOptions bounds;
  auto* b = app.add_subcommand("bounds", "Tabulate the reference and explicit upper bounds");
  b->add_option("--n", bounds.n)->required()->check(CLI::PositiveNumber);
  b->add_option("--d", bounds.d)->required()->check(CLI::PositiveNumber);
  b->add_option("--q", bounds.q)->required()->check(CLI::NonNegativeNumber);
  b->add_option("--eps", bounds.eps);
  b->add_option("--graphs", bounds.graphs, "graph6 file (- for stdin) of graphs to compare");
  b->add_option("--format", bounds.format)->check(CLI::IsMember({"json", "text"}));

  std::vector<std::string> argv_store{"chroma"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  if (c->parsed()) return guarded([&] { return cmd_count(count, in, out, err); }, err);
  if (v->parsed()) return guarded([&] { return cmd_verify(verify, in, out, err); }, err);
  if (ce->parsed()) return guarded([&] { return cmd_certificate(cert, in, out, err); }, err);
  if (s->parsed()) return guarded([&] { return cmd_scan(scan, in, out, err); }, err);
  if (b->parsed()) return guarded([&] { return cmd_bounds(bounds, in, out, err); }, err);
  return kUsage;
}

}  // namespace chroma::cli
