#pragma once

#include <fstream>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "snarklab/analysis.hpp"

namespace snarklab::cli {

/// Append-only file of invariant records keyed by canonical form, one JSON
/// object per line. Lines that fail to parse or whose key does not match
/// their canonical form are dropped and reported by load().
class RecordCache {
 public:
  /// Opens the cache; `reuse` keeps existing entries, otherwise the file is
  /// truncated. Throws std::runtime_error when the file cannot be opened.
  RecordCache(const std::string& path, bool reuse);

  std::optional<InvariantRecord> find(const std::string& form) const;

  /// Thread-safe; each entry is written and flushed as a single line.
  void append(const std::string& form, const InvariantRecord& r);

  const std::vector<std::string>& invalid() const { return invalid_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, InvariantRecord> entries_;
  std::vector<std::string> invalid_;
  std::ofstream out_;
  std::mutex mutex_;
};

}  // namespace snarklab::cli
