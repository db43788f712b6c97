#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "cache.hpp"
#include "report.hpp"
#include "snarklab/analysis.hpp"
#include "snarklab/canonical.hpp"
#include "snarklab/colouring.hpp"
#include "snarklab/constructions.hpp"
#include "snarklab/io.hpp"
#include "snarklab/networks.hpp"
#include "snarklab/reductions.hpp"
#include "snarklab/superposition.hpp"
#include "snarklab/verify.hpp"

#ifndef SNARKLAB_FIXTURE_DIR
#define SNARKLAB_FIXTURE_DIR "tests/fixtures"
#endif

namespace fs = std::filesystem;
using namespace snarklab;
using cli::Json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2, kIo = 3 };

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text)) throw IoError("cannot write " + path);
}

struct Item {
  std::string input;  // file:line
  std::optional<MultiGraph> graph;
  std::string error;
  std::string form;
};

std::vector<Item> load_items(const std::vector<std::pair<std::string, std::string>>& files) {
  std::vector<Item> items;
  for (const auto& [label, text] : files)
    for (auto& rec : read_catalogue(text)) {
      Item it;
      it.input = label + ":" + std::to_string(rec.line);
      if (auto* err = std::get_if<ParseError>(&rec.value)) {
        it.error = std::string("parse error: ") + err->what();
      } else {
        auto& g = std::get<MultiGraph>(rec.value);
        if (!g.is_cubic()) {
          it.error = "not cubic";
        } else {
          it.form = canonical_form(g);
          it.graph = std::move(g);
        }
      }
      items.push_back(std::move(it));
    }
  return items;
}

struct AnalyzeConfig {
  int max_zeta = 7;
  std::vector<std::string> skip;
  std::string format = "json";
  std::string cache;
  bool resume = false;
  int jobs = 1;
  bool timings = false;
  std::optional<int> expect_oddness;
};

AnalysisOptions analysis_options(const AnalyzeConfig& c) {
  AnalysisOptions o;
  o.max_zeta = c.max_zeta;
  for (const auto& s : c.skip) {
    if (s == "omega") o.oddness = false;
    if (s == "rho") o.resistance = false;
    if (s == "zeta") o.zeta = false;
  }
  return o;
}

// Analyses every distinct graph once, in parallel, reusing cached records.
int run_analysis(std::vector<Item>& items, const AnalyzeConfig& cfg, bool summary) {
  std::unique_ptr<cli::RecordCache> cache;
  if (!cfg.cache.empty()) {
    try {
      cache = std::make_unique<cli::RecordCache>(cfg.cache, cfg.resume);
    } catch (const std::exception& e) {
      throw IoError(e.what());
    }
    for (const auto& bad : cache->invalid()) std::fprintf(stderr, "snarklab: dropped cache entry %s\n", bad.c_str());
  }
  const AnalysisOptions opts = analysis_options(cfg);

  std::map<std::string, std::optional<InvariantRecord>> records;
  std::vector<const MultiGraph*> todo;
  std::vector<std::string> todo_forms;
  int reused = 0;
  for (const auto& it : items) {
    if (!it.graph || records.count(it.form)) continue;
    auto hit = cache ? cache->find(it.form) : std::nullopt;
    const bool usable = hit && !(cfg.timings && hit->timings.empty());
    if (usable) {
      records[it.form] = std::move(hit);
      ++reused;
    } else {
      records[it.form] = std::nullopt;
      todo.push_back(&*it.graph);
      todo_forms.push_back(it.form);
    }
  }

  std::vector<std::optional<InvariantRecord>> fresh(todo.size());
  std::vector<std::string> failures(todo.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < todo.size();) {
      try {
        fresh[i] = analyze(*todo[i], opts);
        if (cache) cache->append(todo_forms[i], *fresh[i]);
      } catch (const std::exception& e) {
        failures[i] = e.what();
      }
    }
  };
  const int jobs = std::max(1, std::min<int>(cfg.jobs, static_cast<int>(todo.size())));
  std::vector<std::thread> pool;
  for (int t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (std::size_t i = 0; i < todo.size(); ++i) records[todo_forms[i]] = fresh[i];
  std::map<std::string, std::string> errors;
  for (std::size_t i = 0; i < todo.size(); ++i)
    if (!fresh[i]) errors[todo_forms[i]] = failures[i];

  int status = kOk;
  std::vector<InvariantRecord> done;
  const bool text = cfg.format == "text";
  if (text) std::cout << cli::table_header() << '\n';
  for (const auto& it : items) {
    std::string error = it.error;
    const InvariantRecord* r = nullptr;
    if (it.graph) {
      if (records[it.form])
        r = &*records[it.form];
      else
        error = errors[it.form];
    }
    if (!r) {
      if (text)
        std::cout << it.input << "  error: " << error << '\n';
      else
        std::cout << Json{{"input", it.input}, {"error", error}}.dump() << '\n';
      continue;
    }
    done.push_back(*r);
    auto bad = record_inconsistencies(*r);
    if (cfg.expect_oddness && !(r->oddness.ok() && r->oddness.value == *cfg.expect_oddness))
      bad.push_back("oddness is not " + std::to_string(*cfg.expect_oddness));
    if (!bad.empty()) status = kFailed;
    if (text) {
      std::cout << cli::table_row(it.input, *r) << '\n';
      for (const auto& b : bad) std::cout << "    inconsistent: " << b << '\n';
    } else {
      Json j = {{"input", it.input}};
      j.update(cli::to_json(*r, cfg.timings));
      if (!bad.empty()) j["inconsistent"] = bad;
      std::cout << j.dump() << '\n';
    }
  }
  if (summary) {
    auto s = cli::summarise(done);
    if (text) {
      std::cout << "\nzeta  snarks  min n/omega  max n/omega  mean n/omega\n";
      for (const auto& [z, c] : s) {
        char buf[160];
        std::snprintf(buf, sizeof buf, "%-5s %7d  %11s  %11s  %12s", z.c_str(), c.count, c.min.str().c_str(),
                      c.max.str().c_str(), Rational(c.sum.num, c.sum.den * c.count).str().c_str());
        std::cout << buf << '\n';
      }
    } else {
      std::cout << cli::to_json(s, static_cast<int>(done.size())).dump() << '\n';
    }
  }
  std::fprintf(stderr, "snarklab: %zu inputs, %zu distinct graphs, %zu computed, %d cached\n", items.size(),
               records.size(), todo.size(), reused);
  return status;
}

// ---------------------------------------------------------------- construct

struct Built {
  MultiGraph graph;
  Json trace = Json::object();
};

int int_param(const std::vector<std::string>& params, std::size_t i, const std::string& schema) {
  if (i >= params.size()) throw UsageError("missing parameter; usage: " + schema);
  try {
    std::size_t used = 0;
    int v = std::stoi(params[i], &used);
    if (used != params[i].size()) throw std::invalid_argument(params[i]);
    return v;
  } catch (const std::logic_error&) {
    throw UsageError("'" + params[i] + "' is not an integer; usage: " + schema);
  }
}

Json network_trace(const Network& n) {
  return {{"terminals", n.terminals}, {"connectors", n.connectors}, {"nonterminals", n.nonterminal_count()}};
}

Built build_family(const std::string& family, const std::vector<std::string>& params) {
  auto arity = [&](std::size_t k, const std::string& schema) {
    if (params.size() != k) throw UsageError(family + " takes " + std::to_string(k) + " parameter(s); usage: " + schema);
  };
  auto checked = [&](auto&& make, const std::string& schema) {
    try {
      return make();
    } catch (const GraphError& e) {
      throw UsageError(std::string(e.what()) + "; usage: " + schema);
    }
  };
  Built b;
  if (family == "petersen") {
    arity(0, "construct petersen");
    b.graph = petersen();
  } else if (family == "flower") {
    const std::string schema = "construct flower K   (K odd, K >= 3)";
    arity(1, schema);
    int k = int_param(params, 0, schema);
    b.graph = checked([&] { return flower_snark(k); }, schema);
    b.trace = {{"k", k}};
  } else if (family == "P2" || family == "P3" || family == "P4v" || family == "P4e" || family == "P5vvv" ||
             family == "P5ev") {
    arity(0, "construct " + family);
    Network n = family == "P2"    ? build_P2()
                : family == "P3"  ? build_P3()
                : family == "P4v" ? build_P4v()
                : family == "P4e" ? build_P4e()
                : family == "P5vvv" ? build_P5vvv()
                                    : build_P5ev();
    b.graph = n.graph;
    b.trace = network_trace(n);
  } else if (family == "R") {
    const std::string schema = "construct R I   (I >= 0)";
    arity(1, schema);
    int i = int_param(params, 0, schema);
    b.graph = checked([&] { return build_R(i); }, schema);
    Json steps = Json::array();
    for (int k = i; k >= 2; k -= 2) steps.push_back("R" + std::to_string(k) + " = extension of R" + std::to_string(k - 2) + " at vertex 0");
    steps.push_back(i % 2 ? "R1 = order-28 snark with cyclic connectivity 2" : "R0 = Petersen graph");
    std::reverse(steps.begin(), steps.end());
    b.trace = {{"i", i}, {"steps", steps}};
  } else if (family == "H") {
    const std::string schema = "construct H {1|2}   (1: cyclic connectivity 2, 2: cyclic connectivity 3)";
    arity(1, schema);
    int i = int_param(params, 0, schema);
    if (i != 1 && i != 2) throw UsageError("usage: " + schema);
    b.graph = i == 1 ? build_H1() : build_H2();
    b.trace = {{"index", i}, {"blocks", {"P3", "P3", "P3"}}, {"candidates", build_H_candidates().size()}};
  } else if (family == "ring" || family == "snark44") {
    std::vector<std::string> names = params;
    if (family == "snark44") {
      arity(0, "construct snark44");
      names = {"N2", "N1"};
    }
    const std::string schema = "construct ring BLOCK...   (BLOCK is N1 or N2)";
    if (names.empty()) throw UsageError("usage: " + schema);
    std::vector<Network> blocks;
    for (const auto& n : names) {
      if (n == "N1")
        blocks.push_back(build_N1());
      else if (n == "N2")
        blocks.push_back(build_N2());
      else
        throw UsageError("unknown block '" + n + "'; usage: " + schema);
    }
    b.graph = checked([&] { return ring_join(blocks); }, schema);
    Json orders = Json::array();
    for (const auto& n : blocks) orders.push_back(n.nonterminal_count());
    b.trace = {{"blocks", names}, {"block_orders", orders}, {"junctions", "consecutive blocks joined pair to pair"}};
  } else if (family == "Z-chain") {
    const std::string schema = "construct Z-chain R   (R >= 2)";
    arity(1, schema);
    int r = int_param(params, 0, schema);
    b.graph = checked([&] { return chain_Z(r); }, schema);
    b.trace = {{"copies", r}, {"extra_vertex", r % 2 == 1}};
  } else if (family == "L" || family == "M") {
    const std::string schema = "construct " + family + " R   (R >= 2)";
    arity(1, schema);
    int r = int_param(params, 0, schema);
    LGraph l = checked([&] { return build_L_detail(r); }, schema);
    b.trace = {{"copies", l.copies}, {"circuit", l.circuit.vertices}};
    if (family == "L") {
      b.graph = l.graph;
    } else {
      auto plan = build_M_plan(l);
      int sv = 0, se = 0;
      for (const auto& n : plan.supervertex) sv += n.nonterminal_count() > 1;
      for (const auto& n : plan.superedge) se += n.nonterminal_count() > 0;
      b.graph = superpose(plan).graph;
      ensure_snark(b.graph, "M");
      b.trace["base_order"] = l.graph.order();
      b.trace["nontrivial_supervertices"] = sv;
      b.trace["nontrivial_superedges"] = se;
    }
  } else {
    throw UsageError("unknown family '" + family +
                     "'; families: petersen flower P2 P3 P4v P4e P5vvv P5ev R H ring Z-chain L M snark44");
  }
  return b;
}

Format graph_format(const std::string& name, const MultiGraph& g) {
  if (name == "graph6") return Format::graph6;
  if (name == "multi_text") return Format::multi_text;
  return g.is_simple() ? Format::graph6 : Format::multi_text;
}

std::string format_name(Format f) { return f == Format::graph6 ? "graph6" : "multi_text"; }

std::string strip_newline(std::string s) {
  while (!s.empty() && s.back() == '\n') s.pop_back();
  return s;
}

std::string with_newline(std::string s) {
  if (s.empty() || s.back() != '\n') s += '\n';
  return s;
}

// ---------------------------------------------------------------- reduce

Json step_json(const ReductionStep& s) {
  return {{"rule", to_string(s.rule)},
          {"vertices", s.vertices},
          {"edges", s.edges},
          {"order_before", s.order_before},
          {"order_after", s.order_after}};
}

ReductionResult apply_rule(const std::string& rule, const MultiGraph& g) {
  if (rule == "girth4") return reduce_to_girth4(g);
  if (rule == "girth5") return reduce_to_girth5(g);
  if (rule == "cut2") return reduce_2cuts(g);
  if (rule == "cut3") return reduce_3cuts(g);
  return reduce_all(g);
}

std::optional<std::string> config_argument(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    std::string a = argv[i];
    if (a == "--config" && i + 1 < argc) return std::string(argv[i + 1]);
    if (a.rfind("--config=", 0) == 0) return a.substr(9);
  }
  if (const char* env = std::getenv("SNARKLAB_CONFIG"); env && *env) return std::string(env);
  return std::nullopt;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

// Installs the file's values as option defaults, so that environment variables
// and flags still override them.
void apply_config(CLI::App& app, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config " + path);
  std::string line, section;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    const std::string where = path + ":" + std::to_string(number);
    if (line.front() == '[' && line.back() == ']') {
      section = trim(line.substr(1, line.size() - 2));
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw UsageError(where + ": expected key=value");
    std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') value = value.substr(1, value.size() - 2);
    std::string sub = section;
    if (auto dot = key.find('.'); dot != std::string::npos) {
      sub = key.substr(0, dot);
      key = key.substr(dot + 1);
    }
    std::replace(key.begin(), key.end(), '_', '-');
    std::vector<CLI::App*> targets;
    if (sub.empty()) {
      targets = app.get_subcommands({});
    } else {
      CLI::App* c = app.get_subcommand_no_throw(sub);
      if (!c) throw UsageError(where + ": unknown section '" + sub + "'");
      targets = {c};
    }
    bool used = false;
    for (CLI::App* c : targets)
      if (CLI::Option* opt = c->get_option_no_throw("--" + key)) {
        try {
          opt->default_val(value);
        } catch (const CLI::Error& e) {
          throw UsageError(where + ": " + e.what());
        }
        used = true;
      }
    if (!used) throw UsageError(where + ": unknown key '" + key + "'");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants, reductions and constructions for cubic graphs and snarks", "snarklab"};
  std::string config_path;
  app.add_option("--config", config_path, "key=value file; keys are 'subcommand.option' or sit under [subcommand]")
      ->envname("SNARKLAB_CONFIG");
  app.require_subcommand(1);
  app.fallthrough();

  AnalyzeConfig acfg;
  std::string analyze_input;
  auto* analyze_cmd = app.add_subcommand("analyze", "Compute invariant records for every graph of a file");
  analyze_cmd->add_option("input", analyze_input, "graph6 or multi_text file, '-' for stdin")->required();
  auto add_analysis_flags = [](CLI::App* c, AnalyzeConfig& cfg) {
    c->add_option("--max-zeta", cfg.max_zeta, "cap on exact cyclic connectivity")
        ->envname("SNARKLAB_MAX_ZETA")
        ->check(CLI::Range(1, 64));
    c->add_option("--skip", cfg.skip, "invariants not to compute")
        ->check(CLI::IsMember({"omega", "rho", "zeta"}))
        ->delimiter(',');
    c->add_option("--format", cfg.format, "json (one record per line) or text")
        ->envname("SNARKLAB_FORMAT")
        ->check(CLI::IsMember({"json", "text"}));
    c->add_option("--cache", cfg.cache, "record cache file")->envname("SNARKLAB_CACHE");
    c->add_flag("--resume", cfg.resume, "reuse the records already in the cache");
    c->add_option("--jobs", cfg.jobs, "worker threads")->envname("SNARKLAB_JOBS")->check(CLI::Range(1, 1024));
    c->add_flag("--timings", cfg.timings, "include per-field timings (reports are then not reproducible)");
  };
  add_analysis_flags(analyze_cmd, acfg);

  AnalyzeConfig bcfg;
  std::string batch_dir;
  int expect_oddness = 0;
  auto* batch_cmd = app.add_subcommand("batch", "Analyse every graph file of a directory and summarise by zeta");
  batch_cmd->add_option("dir", batch_dir, "directory of graph files")->required();
  add_analysis_flags(batch_cmd, bcfg);
  auto* expect_opt =
      batch_cmd->add_option("--expect-oddness", expect_oddness, "fail unless every record has this oddness");

  std::string family, construct_out, construct_format = "auto";
  std::vector<std::string> params;
  auto* construct_cmd = app.add_subcommand("construct", "Build a named graph family with a provenance sidecar");
  construct_cmd->add_option("family", family, "petersen flower P2 P3 P4v P4e P5vvv P5ev R H ring Z-chain L M snark44")
      ->required();
  construct_cmd->add_option("params", params, "family parameters");
  construct_cmd->add_option("--out", construct_out, "graph file; the sidecar is written to OUT.provenance.json");
  construct_cmd->add_option("--format", construct_format, "graph6, multi_text or auto")
      ->check(CLI::IsMember({"graph6", "multi_text", "auto"}));

  std::string reduce_input, rule, reduce_format = "json";
  auto* reduce_cmd = app.add_subcommand("reduce", "Apply oddness-preserving reductions to every graph of a file");
  reduce_cmd->add_option("input", reduce_input, "graph6 or multi_text file, '-' for stdin")->required();
  reduce_cmd->add_option("rule", rule, "girth4, girth5, cut2, cut3 or all")
      ->required()
      ->check(CLI::IsMember({"girth4", "girth5", "cut2", "cut3", "all"}));
  reduce_cmd->add_option("--format", reduce_format, "json (graph and trace), graph6, multi_text or auto")
      ->check(CLI::IsMember({"json", "graph6", "multi_text", "auto"}));

  std::string suite;
  VerifyOptions vopts;
  vopts.fixture_dir = SNARKLAB_FIXTURE_DIR;
  std::string verify_format = "text";
  bool skip_slow = false, verify_timings = false;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
  verify_cmd->add_option("suite", suite, "claims, properties, oracles or all")
      ->required()
      ->check(CLI::IsMember({"claims", "properties", "oracles", "all"}));
  verify_cmd->add_option("--seed", vopts.seed, "seed for sampled checks")->envname("SNARKLAB_SEED");
  verify_cmd->add_option("--size-cap", vopts.size_cap, "largest fixture order used by exhaustive checks")
      ->envname("SNARKLAB_SIZE_CAP")
      ->check(CLI::Range(4, 16));
  verify_cmd->add_option("--fixtures", vopts.fixture_dir, "fixture directory")->envname("SNARKLAB_FIXTURES");
  verify_cmd->add_flag("--skip-slow", skip_slow, "leave out criteria tagged slow");
  verify_cmd->add_option("--format", verify_format, "text or json")
      ->envname("SNARKLAB_FORMAT")
      ->check(CLI::IsMember({"json", "text"}));
  verify_cmd->add_flag("--timings", verify_timings, "report the runtime of each criterion");

  try {
    if (auto path = config_argument(argc, argv)) apply_config(app, *path);
    app.parse(argc, argv);
  } catch (const IoError& e) {
    std::cerr << "snarklab: " << e.what() << '\n';
    return kIo;
  } catch (const UsageError& e) {
    std::cerr << "snarklab: " << e.what() << '\n';
    return kUsage;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*analyze_cmd) {
      auto items = load_items({{analyze_input == "-" ? "stdin" : analyze_input, read_input(analyze_input)}});
      return run_analysis(items, acfg, false);
    }

    if (*batch_cmd) {
      if (!fs::is_directory(batch_dir)) throw IoError(batch_dir + " is not a directory");
      std::vector<fs::path> files;
      for (const auto& entry : fs::directory_iterator(batch_dir))
        if (entry.is_regular_file() && entry.path().filename().string().front() != '.') files.push_back(entry.path());
      std::sort(files.begin(), files.end());
      std::vector<std::pair<std::string, std::string>> texts;
      for (const auto& f : files) texts.push_back({f.filename().string(), read_input(f.string())});
      auto items = load_items(texts);
      if (*expect_opt) bcfg.expect_oddness = expect_oddness;
      return run_analysis(items, bcfg, true);
    }

    if (*construct_cmd) {
      Built b = build_family(family, params);
      Format f = graph_format(construct_format, b.graph);
      std::string text = with_newline(write_graph(b.graph, f));
      if (construct_out.empty()) {
        std::cout << text;
        return kOk;
      }
      write_output(construct_out, text);
      Json side = {{"family", family},
                   {"params", params},
                   {"order", b.graph.order()},
                   {"size", b.graph.size()},
                   {"key", canonical_digest(b.graph)},
                   {"format", format_name(f)},
                   {"trace", b.trace}};
      write_output(construct_out + ".provenance.json", side.dump(2) + "\n");
      return kOk;
    }

    if (*reduce_cmd) {
      auto items = load_items({{reduce_input == "-" ? "stdin" : reduce_input, read_input(reduce_input)}});
      int status = kOk;
      for (const auto& it : items) {
        if (!it.graph) {
          std::cerr << "snarklab: " << it.input << ": " << it.error << '\n';
          status = std::max(status, static_cast<int>(kFailed));
          continue;
        }
        try {
          auto res = apply_rule(rule, *it.graph);
          Format f = graph_format(reduce_format, res.graph);
          if (reduce_format == "json") {
            Json steps = Json::array();
            for (const auto& s : res.trace.steps) steps.push_back(step_json(s));
            Json j = {{"input", it.input},
                      {"rule", rule},
                      {"order_before", it.graph->order()},
                      {"order_after", res.graph.order()},
                      {"oddness_before", res.oddness_before ? Json(*res.oddness_before) : Json(nullptr)},
                      {"oddness_after", res.oddness_after ? Json(*res.oddness_after) : Json(nullptr)},
                      {"format", format_name(f)},
                      {"graph", strip_newline(write_graph(res.graph, f))},
                      {"steps", steps}};
            std::cout << j.dump() << '\n';
          } else {
            std::cout << with_newline(write_graph(res.graph, f));
          }
        } catch (const ReductionError& e) {
          std::cerr << "snarklab: " << it.input << ": " << e.what() << '\n';
          status = kFailed;
        }
      }
      return status;
    }

    if (*verify_cmd) {
      std::vector<int> members;
      if (suite == "all") {
        for (const auto& c : criteria()) members.push_back(c.number);
      } else {
        members = suite_members(suite);
      }
      int failed = 0, ran = 0;
      for (const auto& c : criteria()) {
        if (std::find(members.begin(), members.end(), c.number) == members.end()) continue;
        if (skip_slow && c.slow) continue;
        ClaimResult r = run_criterion(c, vopts);
        ++ran;
        failed += !r.pass;
        if (verify_format == "json") {
          Json j = cli::to_json(r);
          if (verify_timings) j["seconds"] = r.seconds;
          std::cout << j.dump() << '\n';
        } else {
          std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.number << " " << r.id << ": " << r.statement;
          if (verify_timings) std::cout << " (" << cli::decimal(Rational(static_cast<long long>(r.seconds * 1000), 1000), 3) << " s)";
          std::cout << '\n';
          for (const auto& m : r.measured) std::cout << "    " << m << '\n';
          for (const auto& f : r.failures) std::cout << "    failed: " << f << '\n';
        }
        std::cout.flush();
      }
      if (verify_format == "json")
        std::cout << Json{{"suite", suite}, {"passed", ran - failed}, {"failed", failed}}.dump() << '\n';
      else
        std::cout << (ran - failed) << " of " << ran << " passed\n";
      return failed ? kFailed : kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "snarklab: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    std::cerr << "snarklab: " << e.what() << '\n';
    return kIo;
  } catch (const std::exception& e) {
    std::cerr << "snarklab: " << e.what() << '\n';
    return kFailed;
  }
  return kOk;
}
