#pragma once

#include <filesystem>
#include <map>
#include <string>

#include "chroma/numeric.hpp"

namespace chroma {

struct ExtremalRecord {
  int n = 0;
  int d = 0;
  int q = 0;
  std::string eps_bucket;
  /// Decimal string of the best c_q seen so far.
  std::string best;
  std::string argmax;
  std::string timestamp;
  std::string tool_version;

  std::string key() const;
};

/// eps rounded to six decimals, e.g. "0.400000".
std::string eps_bucket(double eps);

/// Best-known c_q per (n, d, q, eps) in a single JSON file.
/// Stored values never decrease; saves go through a temporary file and a rename.
class RecordStore {
 public:
  /// Missing file = empty store. Throws Error on unreadable or malformed content.
  static RecordStore load(const std::filesystem::path& path);

  /// Replaces the stored record only when `candidate.best` is strictly larger.
  /// Returns whether the store changed.
  bool offer(const ExtremalRecord& candidate);

  void save(const std::filesystem::path& path) const;

  const std::map<std::string, ExtremalRecord>& records() const { return records_; }

 private:
  std::map<std::string, ExtremalRecord> records_;
};

}  // namespace chroma
