// Command-line front end: solve, analyze, build gadgets, transform, kernelize, verify.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>

#include "bvc/blocking.hpp"
#include "bvc/elimination.hpp"
#include "bvc/errors.hpp"
#include "bvc/exact_solver.hpp"
#include "bvc/gadgets.hpp"
#include "bvc/generators.hpp"
#include "bvc/io.hpp"
#include "bvc/kernelize.hpp"
#include "bvc/verify.hpp"

using namespace bvc;
using Json = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kFailed = 1, kUsage = 2 };

struct Config {
  std::string input;
  std::string out;
  std::string oracle;
  std::optional<int> depth;
  std::optional<int> k;
  std::optional<int> cap;
  std::string set;
  std::string suite = "all";
  std::uint64_t seed = gen::kDefaultSeed;
  std::string format = "text";
  bool trace = false;
  bool no_verify = false;
};

// Key/value report rendered either as `key value` lines or as one JSON object.
class Report {
 public:
  template <typename T>
  void add(const std::string& key, const T& value) {
    data_[key] = value;
  }
  void add_set(const std::string& key, const VertexSet& s) { data_[key] = format_set(s); }
  void add_block(const std::string& key, const std::string& text) { data_[key] = text; }
  Json& json() { return data_; }

  // Text lines; `prefix` turns them into comments ahead of an instance body.
  std::string text(const std::string& prefix = "") const {
    std::ostringstream out;
    for (const auto& [key, value] : data_.items()) {
      if (value.is_string()) {
        const std::string s = value.get<std::string>();
        if (s.find('\n') != std::string::npos) {
          std::istringstream lines(s);
          for (std::string line; std::getline(lines, line);) out << prefix << key << ' ' << line << '\n';
          continue;
        }
        out << prefix << key << (s.empty() ? "" : " ") << s << '\n';
      } else {
        out << prefix << key << ' ' << value.dump() << '\n';
      }
    }
    return out.str();
  }

 private:
  Json data_ = Json::object();
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Writes the report and, if there is one, the produced instance text.
void publish(const Config& cfg, Report& report, const std::string& body = "") {
  if (!body.empty() && !cfg.out.empty()) write_text_file(cfg.out, body);
  if (cfg.format == "record") {
    if (!body.empty() && cfg.out.empty()) report.add("instance", body);
    std::cout << report.json().dump() << '\n';
    return;
  }
  if (body.empty() || !cfg.out.empty()) {
    std::cout << report.text();
  } else {
    std::cout << report.text("c ") << body;
  }
}

Graph load_graph(const Config& cfg) {
  const ParsedInstance parsed = parse_instance(read_text_file(cfg.input));
  if (const auto* g = std::get_if<Graph>(&parsed)) return *g;
  if (const auto* inst = std::get_if<ModulatorInstance>(&parsed)) return inst->g;
  throw InputError("expected a graph, got a hypergraph");
}

std::optional<ClassOracle> oracle_of(const Config& cfg) {
  if (cfg.oracle.empty()) return std::nullopt;
  return ClassOracle(ClassTag::parse(cfg.oracle));
}

int cmd_solve(const Config& cfg) {
  const ParsedInstance parsed = parse_instance(read_text_file(cfg.input));
  if (std::holds_alternative<Hypergraph>(parsed)) throw InputError("solve expects a graph or an instance");
  const auto* inst = std::get_if<ModulatorInstance>(&parsed);
  const Graph g = inst ? inst->g : std::get<Graph>(parsed);

  std::optional<ClassOracle> oracle = oracle_of(cfg);
  if (!oracle && inst) oracle = ClassOracle(inst->tag);
  const int depth = cfg.depth.value_or(0);

  Report report;
  Cover cover;
  std::string method = "exact";
  if (oracle && depth == 0 && oracle->member(g)) {
    cover = oracle->solve_in_class(g);
    method = "class";
  } else if (oracle && depth > 0 && g.num_vertices() <= 64) {
    if (auto forest = elimination_forest(g, *oracle, depth)) {
      cover = solve_vc_bounded_ed(g, *forest, *oracle);
      method = "bounded-ed";
    }
  }
  if (method == "exact") cover = solve_vc_exact(g);
  report.add("opt", cover.size());
  report.add_set("cover", cover.set);
  report.add("method", method);
  const std::optional<int> budget = cfg.k ? cfg.k : (inst ? std::optional<int>(inst->k) : std::nullopt);
  if (budget) {
    report.add("k", *budget);
    report.add("answer", yes_no(*budget >= 0 && cover.size() <= *budget));
  }
  publish(cfg, report);
  return kOk;
}

int cmd_blocking(const Config& cfg) {
  const Graph g = load_graph(cfg);
  const VertexSet y = parse_set(cfg.set);
  for (Vertex v : y)
    if (v < 0 || v >= g.num_vertices()) throw InputError("vertex " + std::to_string(v) + " is not in the graph");
  const BlockingVerdict v = classify_blocking_set(g, y);
  Report report;
  report.add_set("set", v.y);
  report.add("blocking", yes_no(v.is_blocking));
  report.add("deficit", v.deficit);
  report.add("minimal", v.is_minimal ? yes_no(*v.is_minimal) : std::string("-"));
  publish(cfg, report);
  return kOk;
}

int cmd_beta(const Config& cfg) {
  const Graph g = load_graph(cfg);
  const BetaResult beta = max_minimal_blocking_set_size(g, exact_opt(), cfg.cap);
  Report report;
  report.add("beta", beta.value);
  report.add("truncated", yes_no(beta.truncated));
  report.add("empty_graph", yes_no(beta.empty_graph));
  report.add_set("witness", beta.witness);
  if (auto oracle = oracle_of(cfg); oracle && cfg.depth) {
    const int bound = oracle->beta_upper_bound(*cfg.depth);
    report.add("bound", bound);
    report.add("within_bound", yes_no(!beta.truncated && beta.value <= bound));
  }
  publish(cfg, report);
  return kOk;
}

int cmd_ed(const Config& cfg) {
  const Graph g = load_graph(cfg);
  const auto oracle = oracle_of(cfg);
  if (!oracle) throw InputError("ed needs --oracle");
  const int limit = cfg.depth.value_or(g.num_vertices());
  Report report;
  report.add("class", oracle->tag().name());
  const auto ed = elimination_distance(g, *oracle, limit);
  if (!ed) {
    report.add("ed", "> " + std::to_string(limit));
  } else {
    report.add("ed", *ed);
    report.add_block("forest", elimination_forest(g, *oracle, *ed)->emit());
  }
  publish(cfg, report);
  return kOk;
}

int cmd_gadget(const Config& cfg) {
  const auto oracle = oracle_of(cfg);
  if (!oracle) throw InputError("gadget needs --oracle");
  if (!cfg.depth || *cfg.depth < 1) throw InputError("gadget needs --depth of at least 1");
  GadgetOptions opts;
  opts.verify = !cfg.no_verify;
  const GadgetWitness w = build_lb_tower(*oracle, base_witness(*oracle), *cfg.depth, opts);
  const int bound = oracle->beta_upper_bound(*cfg.depth);

  Report report;
  report.add("class", oracle->tag().name());
  report.add("depth", *cfg.depth);
  report.add("vertices", w.graph.num_vertices());
  report.add("edges", static_cast<long long>(w.graph.num_edges()));
  report.add("blocking_size", static_cast<long long>(w.blocking_set.size()));
  report.add_set("blocking_set", w.blocking_set);
  report.add("claimed_opt", w.claimed_opt);
  report.add("claimed_ed", w.claimed_ed);
  report.add("upper_bound", bound);
  report.add("tight", oracle->hereditary() ? yes_no(static_cast<int>(w.blocking_set.size()) == bound)
                                           : std::string("not claimed (lower bound only)"));
  report.add("verified", yes_no(opts.verify));

  const std::string body = emit_instance(w.graph);
  if (!cfg.out.empty()) {
    write_text_file(cfg.out + ".graph", body);
    write_text_file(cfg.out + ".witness", emit_witness(w));
    Config quiet = cfg;
    quiet.out.clear();
    publish(quiet, report);
    return kOk;
  }
  publish(cfg, report, body);
  return kOk;
}

// A tower level (or base) of the class whose blocking set has `arity` vertices.
std::optional<std::pair<GadgetWitness, int>> gadget_for_arity(const ClassOracle& oracle, int arity) {
  const GadgetWitness base = base_witness(oracle);
  if (static_cast<int>(base.blocking_set.size()) == arity) return std::pair{base, 0};
  for (int d = 1; d <= 4; ++d) {
    if (tower_blocking_size(static_cast<int>(base.blocking_set.size()), d) != arity) continue;
    return std::pair{build_lb_tower(oracle, base, d), d};
  }
  return std::nullopt;
}

int cmd_transform(const Config& cfg) {
  const Hypergraph hyp = parse_hypergraph(read_text_file(cfg.input));
  if (!cfg.k || *cfg.k < 0) throw InputError("transform needs a non-negative --k");
  const ClassOracle oracle(cfg.oracle.empty() ? ClassTag{ClassKind::cluster, hyp.arity} : ClassTag::parse(cfg.oracle));
  const auto gadget = gadget_for_arity(oracle, hyp.arity);
  if (!gadget)
    throw InputError("class " + oracle.tag().name() + " has no tower gadget with a blocking set of size " +
                     std::to_string(hyp.arity));
  const auto& [w, depth] = *gadget;
  const ModulatorInstance inst = transform_hypergraph_vc(hyp, *cfg.k, w.graph, w.blocking_set, oracle.tag(), depth);

  Report report;
  report.add("gadget_vertices", w.graph.num_vertices());
  report.add("gadget_opt", w.claimed_opt);
  report.add("gadget_depth", depth);
  report.add("vertices", inst.g.num_vertices());
  report.add("edges", static_cast<long long>(inst.g.num_edges()));
  report.add("modulator", static_cast<long long>(inst.x.size()));
  report.add("k", inst.k);
  publish(cfg, report, emit_instance(inst));
  return kOk;
}

int cmd_kernelize(const Config& cfg) {
  ModulatorInstance inst = parse_modulator_instance(read_text_file(cfg.input));
  if (!cfg.oracle.empty()) inst.tag = ClassTag::parse(cfg.oracle);
  if (cfg.depth) inst.depth = *cfg.depth;
  if (cfg.k) inst.k = *cfg.k;
  inst.validate();
  const ClassOracle oracle(inst.tag);
  const KernelOutcome out = kernelize_to_base(inst, oracle);

  Report report;
  report.add("levels", static_cast<long long>(out.traces.size()));
  bool bounds_ok = true;
  for (std::size_t i = 0; i < out.traces.size(); ++i) {
    const ReductionTrace& t = out.traces[i];
    bounds_ok = bounds_ok && t.within_bound();
    std::ostringstream line;
    line << "depth " << t.depth << ", components " << t.components_before << " -> " << t.components_after
         << " (bound " << t.component_bound << "), deleted " << t.deleted.size() << ", k -" << t.k_decrement
         << ", roots moved " << t.moved_roots.size() << (t.became_no ? ", NO" : "");
    report.add("level" + std::to_string(i + 1), line.str());
    if (cfg.trace) report.add_block("trace" + std::to_string(i + 1), emit_trace(t));
  }
  report.add("component_bounds", yes_no(bounds_ok));
  report.add("result", out.inst.is_no() ? std::string("NO")
                                        : "n " + std::to_string(out.inst.g.num_vertices()) + ", k " +
                                              std::to_string(out.inst.k) + ", modulator " +
                                              std::to_string(out.inst.x.size()) + ", depth 0");
  bool equivalent = true;
  if (!cfg.no_verify && inst.g.num_vertices() <= 60) {
    const bool before = opt_value(inst.g) <= inst.k;
    const bool after = !out.inst.is_no() && opt_value(out.inst.g) <= out.inst.k;
    equivalent = before == after;
    report.add("equivalent", yes_no(equivalent));
  }
  publish(cfg, report, emit_instance(out.inst));
  return equivalent && bounds_ok ? kOk : kFailed;
}

int cmd_verify(const Config& cfg) {
  if (cfg.suite == "list") {
    for (const SuiteInfo& s : suite_catalog())
      std::cout << s.name << (s.criterion ? " (criterion " + std::to_string(s.criterion) + ")" : "") << ": "
                << s.description << '\n';
    return kOk;
  }
  const auto results = run_suites(cfg.suite, cfg.seed);
  Json records = Json::array();
  int failed = 0;
  for (const SuiteResult& r : results) {
    failed += !r.passed();
    if (cfg.format == "record") {
      records.push_back(Json{{"suite", r.name},
                             {"passed", r.passed()},
                             {"cases", r.cases},
                             {"failures", r.failures},
                             {"summary", r.summary},
                             {"messages", r.messages}});
      continue;
    }
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << ": " << r.summary << " (" << r.cases << " checks, "
              << r.failures << " failures)\n";
    for (const std::string& m : r.messages) std::cout << "  " << m << '\n';
  }
  if (cfg.format == "record")
    std::cout << Json{{"seed", cfg.seed}, {"suites", records}, {"failed", failed}}.dump() << '\n';
  else
    std::cout << results.size() - failed << '/' << results.size() << " suites passed\n";
  return failed == 0 ? kOk : kFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Blocking sets and kernelization for vertex cover"};
  app.require_subcommand(1);
  Config cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "text or record")->check(CLI::IsMember({"text", "record"}));
    sub->add_option("--seed", cfg.seed, "seed for generated instances");
  };
  auto input = [&](CLI::App* sub, const char* what) { sub->add_option("input", cfg.input, what)->required(); };

  auto* solve = app.add_subcommand("solve", "minimum vertex cover of a graph or instance");
  input(solve, "graph or instance file");
  solve->add_option("--oracle", cfg.oracle, "class tag for class or bounded-distance solving");
  solve->add_option("--depth", cfg.depth, "use a forest of at most this height");
  solve->add_option("--k", cfg.k, "budget to answer yes/no for");
  common(solve);

  auto* blocking = app.add_subcommand("blocking", "is a vertex set blocking");
  input(blocking, "graph file");
  blocking->add_option("--set", cfg.set, "vertex ids, comma separated")->required();
  common(blocking);

  auto* beta = app.add_subcommand("beta", "largest minimal blocking set");
  input(beta, "graph file");
  beta->add_option("--cap", cfg.cap, "stop once beta exceeds this");
  beta->add_option("--oracle", cfg.oracle, "class for the comparison bound");
  beta->add_option("--depth", cfg.depth, "distance for the comparison bound");
  common(beta);

  auto* ed = app.add_subcommand("ed", "elimination distance and forest");
  input(ed, "graph file");
  ed->add_option("--oracle", cfg.oracle, "target class")->required();
  ed->add_option("--depth", cfg.depth, "largest distance to search");
  common(ed);

  auto* gadget = app.add_subcommand("gadget", "lower-bound blocking-set tower");
  gadget->add_option("--oracle", cfg.oracle, "class of the base graph")->required();
  gadget->add_option("--depth", cfg.depth, "tower height")->required();
  gadget->add_option("--out", cfg.out, "write <out>.graph and <out>.witness");
  gadget->add_flag("--no-verify", cfg.no_verify, "skip witness verification");
  common(gadget);

  auto* transform = app.add_subcommand("transform", "hypergraph vertex cover to a modulator instance");
  input(transform, "hypergraph file");
  transform->add_option("--k", cfg.k, "hypergraph budget")->required();
  transform->add_option("--oracle", cfg.oracle, "gadget class (default cluster:<arity>)");
  transform->add_option("--out", cfg.out, "instance output file");
  common(transform);

  auto* kernelize = app.add_subcommand("kernelize", "reduce a modulator instance to depth 0");
  input(kernelize, "instance file");
  kernelize->add_option("--oracle", cfg.oracle, "override the instance class");
  kernelize->add_option("--depth", cfg.depth, "override the instance depth");
  kernelize->add_option("--k", cfg.k, "override the instance budget");
  kernelize->add_option("--out", cfg.out, "reduced instance output file");
  kernelize->add_flag("--trace", cfg.trace, "include full reduction traces");
  kernelize->add_flag("--no-verify", cfg.no_verify, "skip the equivalence check");
  common(kernelize);

  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("suite", cfg.suite, "suite name, 'acceptance', 'all' or 'list'");
  common(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*solve) return cmd_solve(cfg);
    if (*blocking) return cmd_blocking(cfg);
    if (*beta) return cmd_beta(cfg);
    if (*ed) return cmd_ed(cfg);
    if (*gadget) return cmd_gadget(cfg);
    if (*transform) return cmd_transform(cfg);
    if (*kernelize) return cmd_kernelize(cfg);
    if (*verify) return cmd_verify(cfg);
  } catch (const InvariantViolation& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return kFailed;
  } catch (const std::invalid_argument& e) {  // input, parse and unsupported-class errors
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ContractError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailed;
  }
  return kUsage;
}
