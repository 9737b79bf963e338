#include "chroma/records.hpp"

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "chroma/errors.hpp"

namespace chroma {

using nlohmann::json;

std::string ExtremalRecord::key() const {
  return "n=" + std::to_string(n) + ",d=" + std::to_string(d) + ",q=" + std::to_string(q) + ",eps=" + eps_bucket;
}

std::string eps_bucket(double eps) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(6) << eps;
  return out.str();
}

RecordStore RecordStore::load(const std::filesystem::path& path) {
  RecordStore store;
  std::ifstream in(path);
  if (!in) return store;
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw Error("records file " + path.string() + " is not valid JSON: " + e.what());
  }
  try {
    for (const json& r : doc.at("records")) {
      ExtremalRecord rec;
      rec.n = r.at("n").get<int>();
      rec.d = r.at("d").get<int>();
      rec.q = r.at("q").get<int>();
      rec.eps_bucket = r.at("eps").get<std::string>();
      rec.best = r.at("best").get<std::string>();
      rec.argmax = r.at("argmax").get<std::string>();
      rec.timestamp = r.value("timestamp", "");
      rec.tool_version = r.value("tool_version", "");
      store.records_[rec.key()] = rec;
    }
  } catch (const json::exception& e) {
    throw Error("records file " + path.string() + " has an unexpected layout: " + e.what());
  }
  return store;
}

bool RecordStore::offer(const ExtremalRecord& candidate) {
  auto it = records_.find(candidate.key());
  if (it != records_.end() && BigInt(candidate.best) <= BigInt(it->second.best)) return false;
  records_[candidate.key()] = candidate;
  return true;
}

void RecordStore::save(const std::filesystem::path& path) const {
  json doc;
  doc["records"] = json::array();
  for (const auto& [key, r] : records_) {
    doc["records"].push_back({{"n", r.n},
                              {"d", r.d},
                              {"q", r.q},
                              {"eps", r.eps_bucket},
                              {"best", r.best},
                              {"argmax", r.argmax},
                              {"timestamp", r.timestamp},
                              {"tool_version", r.tool_version}});
  }
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << doc.dump(2) << '\n';
    out.flush();
    if (!out) throw Error("failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace chroma
