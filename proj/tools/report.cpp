#include "report.hpp"

#include <cstdio>
#include <stdexcept>

namespace snarklab::cli {
namespace {

Rational add(const Rational& a, const Rational& b) { return Rational(a.num * b.den + b.num * a.den, a.den * b.den); }

Json measure_json(const Measure& m) {
  if (m.ok()) return m.value;
  Json j = {{"state", to_string(m.state)}};
  if (!m.note.empty()) j["note"] = m.note;
  return j;
}

Measure measure_from(const Json& j) {
  if (j.is_number_integer()) return Measure::of(j.get<int>());
  Measure m;
  const std::string s = j.at("state").get<std::string>();
  if (s == "skipped")
    m.state = Measure::State::skipped;
  else if (s == "undefined")
    m.state = Measure::State::undefined;
  else if (s == "unavailable")
    m.state = Measure::State::unavailable;
  else
    throw std::invalid_argument("unknown measure state '" + s + "'");
  if (j.contains("note")) m.note = j.at("note").get<std::string>();
  return m;
}

Json zeta_json(const std::optional<ZetaResult>& z) {
  if (!z) return "skipped";
  switch (z->kind) {
    case ZetaResult::Kind::exact:
      return z->value;
    case ZetaResult::Kind::at_least:
      return Json{{"at_least", z->value}};
    case ZetaResult::Kind::no_cut:
      return "none";
  }
  return nullptr;
}

std::optional<ZetaResult> zeta_from(const Json& j) {
  if (j.is_string()) {
    if (j == "skipped") return std::nullopt;
    if (j == "none") return ZetaResult{};
    throw std::invalid_argument("unknown zeta value");
  }
  ZetaResult z;
  if (j.is_number_integer()) {
    z.kind = ZetaResult::Kind::exact;
    z.value = j.get<int>();
  } else {
    z.kind = ZetaResult::Kind::at_least;
    z.value = j.at("at_least").get<int>();
  }
  return z;
}

Rational rational_from(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rational(std::stoll(s));
  return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
}

}  // namespace

std::string decimal(const Rational& q, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, q.value());
  return buf;
}

Json to_json(const InvariantRecord& r, bool timings) {
  Json j;
  j["key"] = r.key;
  j["order"] = r.order;
  j["girth"] = r.girth ? Json(*r.girth) : Json("acyclic");
  j["edge_connectivity"] = r.edge_connectivity;
  j["zeta"] = zeta_json(r.zeta);
  j["colourable"] = r.colourable;
  j["resistance"] = measure_json(r.resistance);
  j["oddness"] = measure_json(r.oddness);
  j["five_profile"] = r.five_profile;
  j["five_circuits"] = r.five_circuits;
  j["ratio"] = r.ratio ? Json(r.ratio->str()) : Json(nullptr);
  Json bounds = Json::array();
  for (const auto& b : r.bounds)
    bounds.push_back({{"name", b.name}, {"applicable", b.applicable}, {"pass", b.pass}, {"detail", b.detail}});
  j["bounds"] = bounds;
  if (timings) {
    Json t = Json::object();
    for (const auto& [k, v] : r.timings) t[k] = v;
    j["timings"] = t;
  }
  return j;
}

InvariantRecord record_from_json(const Json& j) {
  try {
    InvariantRecord r;
    r.key = j.at("key").get<std::string>();
    r.order = j.at("order").get<int>();
    if (j.at("girth").is_number_integer()) r.girth = j.at("girth").get<int>();
    r.edge_connectivity = j.at("edge_connectivity").get<int>();
    r.zeta = zeta_from(j.at("zeta"));
    r.colourable = j.at("colourable").get<bool>();
    r.resistance = measure_from(j.at("resistance"));
    r.oddness = measure_from(j.at("oddness"));
    r.five_profile = j.at("five_profile").get<std::array<int, 7>>();
    r.five_circuits = j.at("five_circuits").get<int>();
    if (!j.at("ratio").is_null()) r.ratio = rational_from(j.at("ratio").get<std::string>());
    for (const auto& b : j.at("bounds"))
      r.bounds.push_back({b.at("name").get<std::string>(), b.at("applicable").get<bool>(), b.at("pass").get<bool>(),
                          b.at("detail").get<std::string>()});
    if (j.contains("timings"))
      for (const auto& [k, v] : j.at("timings").items()) r.timings[k] = v.get<double>();
    return r;
  } catch (const Json::exception& e) {
    throw std::invalid_argument(e.what());
  } catch (const std::logic_error& e) {
    throw std::invalid_argument(e.what());
  }
}

std::string zeta_text(const std::optional<ZetaResult>& z) {
  if (!z) return "-";
  switch (z->kind) {
    case ZetaResult::Kind::exact:
      return std::to_string(z->value);
    case ZetaResult::Kind::at_least:
      return ">=" + std::to_string(z->value);
    case ZetaResult::Kind::no_cut:
      return "none";
  }
  return "?";
}

std::string measure_text(const Measure& m) {
  if (m.ok()) return std::to_string(m.value);
  if (m.state == Measure::State::skipped) return "-";
  return to_string(m.state);
}

std::string table_header() {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-28s %5s %6s %4s %4s %4s %4s %5s %8s  %s", "input", "n", "girth", "ec", "zeta",
                "rho", "odd", "5-cyc", "n/omega", "bounds");
  return buf;
}

std::string table_row(const std::string& input, const InvariantRecord& r) {
  std::string bounds;
  for (const auto& b : r.bounds) {
    if (!b.applicable) continue;
    if (!bounds.empty()) bounds += ",";
    bounds += b.name + (b.pass ? ":ok" : ":FAIL");
  }
  if (bounds.empty()) bounds = "-";
  std::string oddness = r.oddness.ok() ? std::to_string(r.oddness.value)
                        : r.oddness.state == Measure::State::undefined ? "undef"
                                                                        : measure_text(r.oddness);
  char buf[512];
  std::snprintf(buf, sizeof buf, "%-28s %5d %6s %4d %4s %4s %4s %5d %8s  %s", input.c_str(), r.order,
                r.girth ? std::to_string(*r.girth).c_str() : "-", r.edge_connectivity, zeta_text(r.zeta).c_str(),
                measure_text(r.resistance).c_str(), oddness.c_str(), r.five_circuits,
                r.ratio ? r.ratio->str().c_str() : "-", bounds.c_str());
  return buf;
}

Json to_json(const ClaimResult& c) {
  Json j;
  j["criterion"] = c.number;
  j["id"] = c.id;
  j["statement"] = c.statement;
  j["pass"] = c.pass;
  j["measured"] = c.measured;
  j["failures"] = c.failures;
  return j;
}

std::map<std::string, ZetaClass> summarise(const std::vector<InvariantRecord>& records) {
  std::map<std::string, ZetaClass> out;
  for (const auto& r : records) {
    if (!r.ratio) continue;
    ZetaClass& c = out[zeta_text(r.zeta)];
    if (c.count == 0) {
      c.min = c.max = *r.ratio;
    } else {
      c.min = std::min(c.min, *r.ratio);
      c.max = std::max(c.max, *r.ratio);
    }
    c.sum = add(c.sum, *r.ratio);
    ++c.count;
  }
  return out;
}

Json to_json(const std::map<std::string, ZetaClass>& summary, int records) {
  Json classes = Json::object();
  for (const auto& [zeta, c] : summary) {
    Rational mean(c.sum.num, c.sum.den * c.count);
    classes[zeta] = {{"count", c.count},
                     {"min_ratio", c.min.str()},
                     {"max_ratio", c.max.str()},
                     {"mean_ratio", mean.str()},
                     {"mean_ratio_decimal", decimal(mean)}};
  }
  return {{"summary", {{"records", records}, {"zeta_classes", classes}}}};
}

}  // namespace snarklab::cli
