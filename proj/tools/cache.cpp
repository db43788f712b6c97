#include "cache.hpp"

#include <map>
#include <stdexcept>

#include "report.hpp"
#include "snarklab/canonical.hpp"

namespace snarklab::cli {

RecordCache::RecordCache(const std::string& path, bool reuse) {
  if (reuse) {
    std::ifstream in(path);
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
      ++number;
      if (line.empty()) continue;
      try {
        Json j = Json::parse(line);
        std::string form = j.at("form").get<std::string>();
        InvariantRecord r = record_from_json(j.at("record"));
        if (r.key != digest_of(form)) throw std::invalid_argument("key does not match canonical form");
        entries_[form] = std::move(r);
      } catch (const std::exception& e) {
        invalid_.push_back(path + ":" + std::to_string(number) + ": " + e.what());
      }
    }
  }
  const bool rewrite = reuse && !invalid_.empty();
  out_.open(path, reuse && !rewrite ? std::ios::app : std::ios::trunc);
  if (!out_) throw std::runtime_error("cannot open cache " + path);
  if (rewrite) {
    std::map<std::string, const InvariantRecord*> sorted;
    for (const auto& [form, r] : entries_) sorted[form] = &r;
    for (const auto& [form, r] : sorted) out_ << Json{{"form", form}, {"record", to_json(*r, false)}}.dump() << '\n';
    out_.flush();
  }
}

std::optional<InvariantRecord> RecordCache::find(const std::string& form) const {
  auto it = entries_.find(form);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void RecordCache::append(const std::string& form, const InvariantRecord& r) {
  std::string line = Json{{"form", form}, {"record", to_json(r, false)}}.dump() + "\n";
  std::lock_guard lock(mutex_);
  out_ << line;
  out_.flush();
}

}  // namespace snarklab::cli
