#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "snarklab/analysis.hpp"
#include "snarklab/verify.hpp"

namespace snarklab::cli {

using Json = nlohmann::ordered_json;

Json to_json(const InvariantRecord& r, bool timings);

/// Inverse of to_json for cached records. Throws std::invalid_argument on
/// malformed input. Cut certificates are not stored, so zeta comes back
/// without one.
InvariantRecord record_from_json(const Json& j);

std::string zeta_text(const std::optional<ZetaResult>& z);
std::string measure_text(const Measure& m);

/// Header and one row per record for the human-readable table mode.
std::string table_header();
std::string table_row(const std::string& input, const InvariantRecord& r);

Json to_json(const ClaimResult& c);

/// Oddness ratio statistics of the snark records, grouped by cyclic
/// connectivity.
struct ZetaClass {
  int count = 0;
  Rational min, max, sum;
};
std::map<std::string, ZetaClass> summarise(const std::vector<InvariantRecord>& records);
Json to_json(const std::map<std::string, ZetaClass>& summary, int records);

/// Fixed-precision decimal, independent of the locale.
std::string decimal(const Rational& q, int digits = 6);

}  // namespace snarklab::cli
