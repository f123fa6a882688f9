#include "densub/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "densub/bruteforce.hpp"
#include "densub/errors.hpp"
#include "densub/flow.hpp"
#include "densub/graph.hpp"
#include "densub/peeling.hpp"
#include "densub/solvers.hpp"

namespace densub::cli {
namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

struct Options {
  std::string input;
  bool weighted = false;
  bool as_json = false;
  std::uint64_t seed = 1;
  VertexId exact_limit = kDefaultExactLimit;
  bool with_exact = false;
  std::string generate;

  std::size_t k = 0;
  std::string method;
  std::string oracle = "peel";
  std::string threshold;
};

/// Graph plus the external label of every dense id.
struct LoadedGraph {
  WeightedGraph graph;
  std::vector<std::string> labels;
  bool numeric_labels = true;
  std::string source;
};

bool is_id(std::string_view tok) {
  return !tok.empty() && std::all_of(tok.begin(), tok.end(), [](char c) { return c >= '0' && c <= '9'; });
}

// Integer ids pass straight through. Any non-integer id switches the whole
// file to string labels, numbered in order of first appearance.
LoadedGraph load_text(const std::string& text, bool weighted) {
  LoadedGraph out;
  std::vector<std::vector<std::string>> lines;
  bool numeric = true;
  {
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
      std::istringstream fields(line);
      std::vector<std::string> toks;
      for (std::string t; fields >> t;) toks.push_back(t);
      if (!toks.empty() && toks[0][0] != '#') {
        for (std::size_t i = 0; i < std::min<std::size_t>(2, toks.size()); ++i) {
          if (!is_id(toks[i])) numeric = false;
        }
      }
      lines.push_back(std::move(toks));
    }
  }
  if (numeric) {
    out.graph = parse_graph(text, weighted);
    for (VertexId v = 0; v < out.graph.n(); ++v) out.labels.push_back(std::to_string(v));
    return out;
  }
  out.numeric_labels = false;
  std::unordered_map<std::string, VertexId> ids;
  std::string relabeled;
  for (auto& toks : lines) {
    if (!toks.empty() && toks[0][0] != '#') {
      for (std::size_t i = 0; i < std::min<std::size_t>(2, toks.size()); ++i) {
        auto [it, fresh] = ids.try_emplace(toks[i], static_cast<VertexId>(out.labels.size()));
        if (fresh) out.labels.push_back(toks[i]);
        toks[i] = std::to_string(it->second);
      }
      for (const auto& t : toks) relabeled += t + ' ';
    }
    relabeled += '\n';  // keeps line numbers in diagnostics
  }
  out.graph = parse_graph(relabeled, weighted);
  return out;
}

LoadedGraph load(const Options& opt, std::istream& in) {
  if (!opt.generate.empty()) {
    auto colon = opt.generate.find(':');
    if (colon == std::string::npos) throw DomainError("--generate expects N:M");
    auto n = static_cast<VertexId>(std::stoul(opt.generate.substr(0, colon)));
    auto m = static_cast<std::size_t>(std::stoull(opt.generate.substr(colon + 1)));
    LoadedGraph out;
    out.graph = random_graph(n, m, opt.seed);
    for (VertexId v = 0; v < n; ++v) out.labels.push_back(std::to_string(v));
    out.source = "generated:" + opt.generate + ":seed=" + std::to_string(opt.seed);
    return out;
  }
  std::string text;
  if (opt.input.empty() || opt.input == "-") {
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  } else {
    std::ifstream file(opt.input, std::ios::binary);
    if (!file) throw MalformedInput("cannot open input file '" + opt.input + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  LoadedGraph out = load_text(text, opt.weighted);
  out.source = opt.input.empty() ? "-" : opt.input;
  return out;
}

json rational_json(const Rational& r) {
  return {{"num", r.num()}, {"den", r.den()}, {"value", r.to_double()}};
}

struct Report {
  std::string command;
  json params = json::object();
  VertexSet vertices;
  Rational weight;
  std::optional<Rational> density;
  std::string method;
  std::string guarantee;
  json trace;
  json exact;
};

Report from_result(const SubgraphResult& r) {
  Report rep;
  rep.vertices = r.subgraph;
  rep.weight = r.weight;
  rep.density = r.density;
  rep.method = r.method;
  rep.guarantee = guarantee_string(r.guarantee);
  return rep;
}

json labels_json(const LoadedGraph& lg, const VertexSet& s) {
  json arr = json::array();
  for (VertexId v : s) {
    if (lg.numeric_labels) {
      arr.push_back(v);
    } else {
      arr.push_back(lg.labels[v]);
    }
  }
  return arr;
}

void require_k(const Options& opt, const WeightedGraph& g) {
  if (opt.k < 1 || opt.k > g.n()) {
    throw DomainError("--k " + std::to_string(opt.k) + " is infeasible for n = " +
                      std::to_string(g.n()));
  }
}

void attach_exact(Report& rep, const WeightedGraph& g, Problem p, std::size_t k, VertexId limit,
                  const LoadedGraph& lg) {
  ExactAnswer ans = brute_force(g, p, k, limit);
  rep.exact = {{"optimum", rational_json(ans.optimum)}, {"witness", labels_json(lg, ans.witness)}};
  if (rep.density && !rep.density->is_zero()) {
    rep.exact["ratio"] = rational_json(ans.optimum / *rep.density);
  }
}

Report dispatch(const std::string& command, const Options& opt, const LoadedGraph& lg) {
  const WeightedGraph& g = lg.graph;
  Report rep;
  if (command == "densest") {
    const std::string method = opt.method.empty() ? "greedy" : opt.method;
    if (method == "greedy") {
      rep = from_result(charikar_densest(g));
    } else if (method == "flow") {
      rep = from_result(exact_densest(g));
    } else {
      ExactAnswer ans = brute_force(g, Problem::kDensest, 0, opt.exact_limit);
      rep = from_result(make_result(g, ans.witness, "brute-force", ExactGuarantee{}));
    }
    rep.params["method"] = method;
    if (opt.with_exact) attach_exact(rep, g, Problem::kDensest, 0, opt.exact_limit, lg);
  } else if (command == "dalks") {
    require_k(opt, g);
    const std::string method = opt.method.empty() ? "greedy" : opt.method;
    rep = from_result(method == "flow" ? dalks_2approx(g, opt.k) : chalk(g, opt.k));
    rep.params = {{"k", opt.k}, {"method", method}};
    if (opt.with_exact) attach_exact(rep, g, Problem::kDalks, opt.k, opt.exact_limit, lg);
  } else if (command == "damks") {
    require_k(opt, g);
    const std::string method = opt.method.empty() ? "peel" : opt.method;
    if (method == "exact") {
      rep = from_result(make_result(g, damks_bruteforce_oracle(g, opt.k, opt.exact_limit),
                                    "brute-force", ExactGuarantee{}));
    } else {
      rep = from_result(
          make_result(g, damks_peel_heuristic(g, opt.k), "peel-suffix", HeuristicGuarantee{}));
    }
    rep.params = {{"k", opt.k}, {"method", method}};
    if (opt.with_exact) attach_exact(rep, g, Problem::kDamks, opt.k, opt.exact_limit, lg);
  } else if (command == "dks") {
    require_k(opt, g);
    DamksOracleSpec oracle =
        opt.oracle == "exact" ? exact_damks_oracle(opt.exact_limit) : peel_damks_oracle();
    DksOutcome outcome = dks_via_damks(g, opt.k, oracle);
    rep = from_result(outcome.result);
    rep.params = {{"k", opt.k}, {"oracle", opt.oracle}};
    json rounds = json::array();
    for (const auto& r : outcome.trace.rounds) {
      rounds.push_back({{"vertices", labels_json(lg, r.subgraph)},
                        {"weight", rational_json(Rational(r.units, g.weight_scale()))},
                        {"density", rational_json(r.density)}});
    }
    json unions = json::array();
    for (const auto& u : outcome.trace.prefix_unions) unions.push_back(u.size());
    json cands = json::array();
    for (const auto& d : outcome.trace.candidate_densities) cands.push_back(rational_json(d));
    rep.trace = {{"rounds", rounds},
                 {"prefix_union_sizes", unions},
                 {"candidate_densities", cands},
                 {"chosen", outcome.trace.chosen}};
    if (opt.with_exact) attach_exact(rep, g, Problem::kDks, opt.k, opt.exact_limit, lg);
  } else if (command == "cores") {
    Rational w;
    try {
      w = Rational::parse(opt.threshold);
    } catch (const std::invalid_argument& e) {
      throw DomainError(std::string("--w: ") + e.what());
    }
    CoreResult core = w_core(g, w);
    rep.vertices = core.core;
    rep.weight = induced_weight(g, core.core);
    if (!core.core.empty()) rep.density = density(g, core.core).density;
    rep.method = "w-core";
    rep.guarantee = "exact";
    rep.params = {{"w", rational_json(w)}};
    rep.trace = {{"index", core.index}};
  } else if (command == "peel") {
    if (g.n() == 0) throw DomainError("peel needs a nonempty graph");
    PeelingTrace trace = peel(g);
    rep = from_result(chalk(g, trace, 1));
    rep.method = "greedy-peel";
    rep.guarantee = "2";
    json order = json::array();
    json removal = json::array();
    json dens = json::array();
    for (std::size_t j = 0; j < trace.n(); ++j) {
      VertexId v = trace.order()[j];
      if (lg.numeric_labels) {
        order.push_back(v);
      } else {
        order.push_back(lg.labels[v]);
      }
      removal.push_back(rational_json(Rational(trace.removal_units()[j], g.weight_scale())));
      dens.push_back(rational_json(trace.suffix_density(trace.n() - j)));
    }
    rep.trace = {{"order", order}, {"removal_degrees", removal}, {"suffix_densities", dens}};
  } else if (command == "parametric") {
    if (g.n() == 0) throw DomainError("parametric needs a nonempty graph");
    NestedFamily family = parametric_family(g);
    rep = from_result(exact_densest(g));
    json bps = json::array();
    for (const auto& b : family.breakpoints) bps.push_back(rational_json(b));
    json chain = json::array();
    for (const auto& s : family.chain) chain.push_back(labels_json(lg, s));
    rep.trace = {{"breakpoints", bps}, {"chain", chain}};
  }
  rep.command = command;
  return rep;
}

void emit_json(std::ostream& out, const Report& rep, const LoadedGraph& lg, double ms) {
  const WeightedGraph& g = lg.graph;
  json result = {{"vertices", labels_json(lg, rep.vertices)},
                 {"size", rep.vertices.size()},
                 {"weight", rational_json(rep.weight)},
                 {"density", rep.density ? rational_json(*rep.density) : json(nullptr)},
                 {"method", rep.method},
                 {"guarantee", rep.guarantee}};
  json doc = {{"schema_version", kSchemaVersion},
              {"command", rep.command},
              {"input", lg.source},
              {"params", rep.params},
              {"n", g.n()},
              {"m", g.m()},
              {"W", rational_json(g.total_weight())},
              {"result", result},
              {"wall_time_ms", ms}};
  if (!rep.trace.is_null()) doc["trace"] = rep.trace;
  if (!rep.exact.is_null()) doc["exact"] = rep.exact;
  out << doc.dump() << '\n';
}

void emit_text(std::ostream& out, const Report& rep, const LoadedGraph& lg, double ms) {
  const WeightedGraph& g = lg.graph;
  auto row = [&](const std::string& key, const std::string& value) {
    out << std::left << std::setw(12) << key << value << '\n';
  };
  std::string members;
  for (VertexId v : rep.vertices) {
    if (!members.empty()) members += ' ';
    members += lg.labels[v];
  }
  auto show = [](const Rational& r) {
    std::ostringstream s;
    s << r.to_string();
    if (r.den() != 1) s << " (" << std::setprecision(10) << r.to_double() << ")";
    return s.str();
  };
  row("command", rep.command);
  row("input", lg.source);
  row("n", std::to_string(g.n()));
  row("m", std::to_string(g.m()));
  row("W", show(g.total_weight()));
  row("method", rep.method);
  row("guarantee", rep.guarantee);
  row("size", std::to_string(rep.vertices.size()));
  row("weight", show(rep.weight));
  row("density", rep.density ? show(*rep.density) : "-");
  row("vertices", members);
  if (!rep.exact.is_null()) {
    row("optimum", Rational(rep.exact["optimum"]["num"].get<std::int64_t>(),
                            rep.exact["optimum"]["den"].get<std::int64_t>())
                       .to_string());
  }
  std::ostringstream t;
  t << std::fixed << std::setprecision(3) << ms;
  row("time_ms", t.str());
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Dense subgraphs under size constraints", "densub"};
  app.fallthrough();
  app.require_subcommand(1);
  Options opt;
  app.add_option("--input", opt.input, "edge-list file (default: standard input)");
  app.add_flag("--weighted", opt.weighted, "read a third weight column");
  app.add_flag("--json", opt.as_json, "emit a JSON report");
  app.add_option("--seed", opt.seed, "seed for --generate");
  app.add_option("--generate", opt.generate, "use a random unweighted graph N:M instead of input");
  app.add_option("--exact-limit", opt.exact_limit, "vertex limit for brute-force enumeration");
  app.add_flag("--exact", opt.with_exact, "also report the brute-force optimum");

  auto* densest = app.add_subcommand("densest", "densest subgraph");
  densest->add_option("--method", opt.method)->check(CLI::IsMember({"greedy", "flow", "exact"}));
  auto* dalks = app.add_subcommand("dalks", "densest subgraph with at least k vertices");
  dalks->add_option("--k", opt.k)->required();
  dalks->add_option("--method", opt.method)->check(CLI::IsMember({"greedy", "flow"}));
  auto* damks = app.add_subcommand("damks", "densest subgraph with at most k vertices");
  damks->add_option("--k", opt.k)->required();
  damks->add_option("--method", opt.method)->check(CLI::IsMember({"peel", "exact"}));
  auto* dks = app.add_subcommand("dks", "densest subgraph with exactly k vertices");
  dks->add_option("--k", opt.k)->required();
  dks->add_option("--oracle", opt.oracle)->check(CLI::IsMember({"peel", "exact"}));
  auto* cores = app.add_subcommand("cores", "the w-core");
  cores->add_option("--w", opt.threshold)->required();
  app.add_subcommand("peel", "full peeling trace");
  app.add_subcommand("parametric", "breakpoints of the parametric family");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o, x;
    int code = app.exit(e, o, x);
    out << o.str();
    err << x.str();
    return code == 0 ? kOk : kInfeasible;
  }
  const std::string command = app.get_subcommands().front()->get_name();

  try {
    LoadedGraph lg = load(opt, in);
    auto start = std::chrono::steady_clock::now();
    Report rep = dispatch(command, opt, lg);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                    .count();
    if (opt.as_json) {
      emit_json(out, rep, lg, ms);
    } else {
      emit_text(out, rep, lg, ms);
    }
    return kOk;
  } catch (const MalformedInput& e) {
    err << "malformed input: " << e.what() << '\n';
    return kMalformedInput;
  } catch (const DomainError& e) {
    err << "infeasible parameters: " << e.what() << '\n';
    return kInfeasible;
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << '\n';
    return kCapacity;
  } catch (const ContractViolation& e) {
    err << "oracle contract violated: " << e.what() << '\n';
    return kContract;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kMalformedInput;
  }
}

}  // namespace densub::cli
