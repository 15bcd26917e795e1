#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "lfw/avd.hpp"
#include "lfw/degree_spec.hpp"
#include "lfw/error.hpp"
#include "lfw/factor_engine.hpp"
#include "lfw/generators.hpp"
#include "lfw/group_weighting.hpp"
#include "lfw/oracle.hpp"
#include "lfw/weighting.hpp"
#include "witness.hpp"

namespace lfw::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

// ------------------------------------------------------------------ report

/// Key-value report. Field order: header, command, input fingerprint,
/// verdict, other fields in insertion order, witness block, timing.
class Report {
 public:
  explicit Report(std::string command) : command_(std::move(command)) {}

  void input(const Graph& g) {
    std::map<int, int> hist;
    for (Vertex v = 0; v < g.order(); ++v) ++hist[g.degree(v)];
    std::string h;
    for (const auto& [d, c] : hist) h += (h.empty() ? "" : " ") + std::to_string(d) + ":" + std::to_string(c);
    field("input.n", std::to_string(g.order()));
    field("input.edges", std::to_string(g.size()));
    field("input.degree_histogram", h.empty() ? "none" : h);
  }

  void field(const std::string& key, const std::string& value) {
    if (key == "verdict") verdict_ = value;
    else if (key.rfind("input.", 0) == 0) input_.emplace_back(key, value);
    else fields_.emplace_back(key, value);
  }
  void verify(const std::string& name, bool ok) { field("verify." + name, ok ? "pass" : "fail"); }
  void witness(std::string text) { witness_ = std::move(text); }

  std::string str(std::optional<long long> timing_us) const {
    std::ostringstream out;
    out << "lfw-report v1\n";
    out << "command: " << command_ << "\n";
    for (const auto& [k, v] : input_) out << k << ": " << v << "\n";
    out << "verdict: " << verdict_ << "\n";
    for (const auto& [k, v] : fields_) {
      if (witness_ && k.rfind("verify.", 0) == 0 && v != "pass")
        throw std::logic_error("report carries a witness with a failed check " + k);
      out << k << ": " << v << "\n";
    }
    if (witness_) out << "witness.begin\n" << *witness_ << "witness.end\n";
    if (timing_us) out << "timing_us: " << *timing_us << "\n";
    return out.str();
  }

 private:
  std::string command_;
  std::vector<std::pair<std::string, std::string>> input_;
  std::string verdict_ = "none";
  std::vector<std::pair<std::string, std::string>> fields_;
  std::optional<std::string> witness_;
};

// --------------------------------------------------------------- spec flags

struct SpecFlags {
  std::string kind;
  std::string c1 = "1/3", c2 = "1/2", c3 = "2/3", c = "1/2";
  int aminus = 0, aplus = 0, a1 = 0, a2 = 0, a3 = 0;
  std::string lists;
  std::map<std::string, CLI::Option*> opts;

  void add(CLI::App* app, const std::string& kind_flag) {
    opts["kind"] = app->add_option(kind_flag, kind, "degree-list family")
                       ->check(CLI::IsMember({"pair", "triple", "pairc", "bip2", "generic"}));
    app->add_option("--c1", c1, "pair constant c1 (p/q)")->capture_default_str();
    app->add_option("--c2", c2, "pair constant c2")->capture_default_str();
    app->add_option("--c3", c3, "pair constant c3")->capture_default_str();
    app->add_option("--c", c, "single constant for pairc and bip2")->capture_default_str();
    opts["aminus"] = app->add_option("--aminus", aminus, "uniform a- (default: derived from degrees)");
    opts["aplus"] = app->add_option("--aplus", aplus, "uniform a+");
    opts["a1"] = app->add_option("--a1", a1, "uniform a1 for triple");
    opts["a2"] = app->add_option("--a2", a2, "uniform a2 for triple");
    opts["a3"] = app->add_option("--a3", a3, "uniform a3 for triple");
    opts["lists"] = app->add_option("--lists", lists, "file of 'v d1 d2 ...' lines for generic");
  }

  bool given(const std::string& name) const { return opts.at(name)->count() > 0; }

  std::optional<std::array<int, 2>> pair_anchors() const {
    if (given("aminus") != given("aplus")) throw UsageError("--aminus and --aplus must be given together");
    if (!given("aminus")) return std::nullopt;
    return std::array<int, 2>{aminus, aplus};
  }

  DegreeListSpec build(const Graph& g) const {
    const int n = g.order();
    if (kind == "pair") {
      const std::array<Rational, 3> cs{parse_rational(c1), parse_rational(c2), parse_rational(c3)};
      if (auto a = pair_anchors()) return DegreeListSpec::pair(cs, std::vector<std::array<int, 2>>(n, *a));
      return pair_preset(g, cs);
    }
    if (kind == "triple") {
      const int k = given("a1") + given("a2") + given("a3");
      if (k != 0 && k != 3) throw UsageError("--a1, --a2 and --a3 must be given together");
      if (k == 3) return DegreeListSpec::triple(std::vector<std::array<int, 3>>(n, {a1, a2, a3}));
      return triple_preset(g);
    }
    if (kind == "pairc") {
      const Rational cc = parse_rational(c);
      if (auto a = pair_anchors()) return DegreeListSpec::pair_single_c(cc, std::vector<std::array<int, 2>>(n, *a));
      return pair_single_c_preset(g, cc);
    }
    if (kind == "bip2") {
      const auto bp = bipartition(g);
      if (!bp) throw PreconditionViolated("bip2 lists need a bipartite graph");
      const Rational cc = parse_rational(c);
      if (auto a = pair_anchors())
        return DegreeListSpec::bipartite_two_value(cc, bp->side, std::vector<std::array<int, 2>>(n, *a));
      return bipartite_preset(g, *bp, cc);
    }
    if (!given("lists")) throw UsageError("--spec generic needs --lists FILE");
    return parse_lists(read_file(lists), n);
  }

  static DegreeListSpec parse_lists(const std::string& text, int n) {
    std::vector<std::vector<int>> out(n);
    std::vector<char> seen(n, 0);
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      long long v = 0;
      if (!(ls >> v)) {
        std::string probe;
        std::istringstream again(line);
        if (!(again >> probe) || probe[0] == '#') continue;
        throw ParseError("list line '" + line + "' does not start with a vertex");
      }
      if (v < 0 || v >= n) throw ParseError("list vertex " + std::to_string(v) + " out of range");
      if (seen[v]) throw ParseError("vertex " + std::to_string(v) + " listed twice");
      seen[v] = 1;
      int d = 0;
      while (ls >> d) out[v].push_back(d);
      if (!ls.eof()) throw ParseError("malformed degree list for vertex " + std::to_string(v));
    }
    for (Vertex v = 0; v < n; ++v)
      if (!seen[v]) throw SpecInvalid("no degree list for vertex " + std::to_string(v));
    return DegreeListSpec::generic(std::move(out));
  }
};

Witness factor_witness(const Graph& g, const DegreeListSpec& spec, const std::vector<EdgeId>& edges) {
  Witness w;
  w.kind = Witness::Kind::Factor;
  w.graph = g;
  w.values.assign(g.size(), 0);
  for (EdgeId e : edges) w.values[e] = 1;
  for (Vertex v = 0; v < g.order(); ++v) w.lists.push_back(spec.expanded(v, g.degree(v)));
  return w;
}

Witness weighting_witness(const Graph& g, const EdgeWeighting& wt) {
  Witness w;
  w.kind = Witness::Kind::Weighting;
  w.graph = g;
  w.k = wt.modulus;
  w.values = wt.labels;
  return w;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

// ---------------------------------------------------------------- commands

struct Context {
  Report report;
  std::string witness_out;
  int code = kOk;

  void emit_witness(const Witness& w) {
    const std::string text = serialize(w);
    report.witness(text);
    if (!witness_out.empty()) write_file(witness_out, text);
  }
};

void cmd_factor(Context& ctx, const Graph& g, const SpecFlags& flags) {
  const DegreeListSpec spec = flags.build(g);
  const ValidationReport rep = validate_spec(g, spec);
  ctx.report.field("spec.kind", std::string(to_string(spec.kind())));
  ctx.report.field("spec.guaranteed", rep.guaranteed() ? "yes" : "no");
  ctx.report.field("spec.violations", std::to_string(rep.violations.size()));

  const FactorOutcome fo = solve_list_factor(g, spec);
  ctx.report.field("verdict", std::string(to_string(fo.status)));
  ctx.report.field("solver.method", fo.method);
  ctx.report.field("solver.moves", std::to_string(fo.moves));
  if (!fo.reason.empty()) ctx.report.field("solver.reason", fo.reason);
  if (fo.status == FactorStatus::Found) {
    ctx.report.verify("degrees_in_lists", verify_factor(g, spec, fo.solution->edges));
    ctx.emit_witness(factor_witness(g, spec, fo.solution->edges));
  }
  ctx.code = fo.status == FactorStatus::Found ? kOk : fo.status == FactorStatus::Infeasible ? kNegative : kUndetermined;
}

struct WeightFlags {
  int group = 0;
  bool avd2 = false, vc2 = false;
  int vertex = -1;
  std::string method = "auto";
  CLI::Option* group_opt = nullptr;
  CLI::Option* vertex_opt = nullptr;
};

void cmd_weight(Context& ctx, const Graph& g, const WeightFlags& f) {
  const int modes = (f.group_opt->count() > 0) + f.avd2 + f.vc2;
  if (modes != 1) throw UsageError("weight needs exactly one of --group R, --avd2, --vc2");

  if (f.group_opt->count() > 0) {
    ctx.report.field("weight.mode", "group");
    ctx.report.field("weight.r", std::to_string(f.group));
    try {
      const ZrWeighting z = vertex_coloring_weighting_zr(g, f.group);
      ctx.report.field("verdict", "found");
      ctx.report.field("weight.routes", join(z.routes, ","));
      ctx.report.verify("vertex_coloring", is_vertex_coloring(g, z.weighting));
      ctx.emit_witness(weighting_witness(g, z.weighting));
    } catch (const Obstructed& e) {
      ctx.report.field("verdict", "obstructed");
      ctx.report.field("reason", e.what());
      ctx.code = kNegative;
    } catch (const ColoringUnavailable& e) {
      ctx.report.field("verdict", "no-coloring");
      ctx.report.field("reason", e.what());
      ctx.code = kNegative;
    }
    return;
  }

  if (f.avd2) {
    std::string method = f.method;
    if (method == "auto") {
      const bool big = bipartition(g) && g.order() > 0 && g.min_degree() >= 6;
      method = big && f.vertex_opt->count() == 0 ? "delta6" : "gap";
    }
    ctx.report.field("weight.mode", "avd2");
    ctx.report.field("weight.method", method);
    EdgeWeighting w = method == "delta6"
                          ? advd2_bipartite_delta6(g)
                          : advd2_degree_gap(g, f.vertex_opt->count() ? std::optional<Vertex>(f.vertex) : std::nullopt);
    ctx.report.field("verdict", "found");
    ctx.report.verify("adjacent_vd", is_adjacent_vd(g, w));
    ctx.emit_witness(weighting_witness(g, w));
    return;
  }

  ctx.report.field("weight.mode", "vc2");
  const Vc2Result r = vc2_bipartite(g);
  ctx.report.field("weight.condition", r.condition);
  ctx.report.field("weight.route", r.route);
  if (r.weighting) {
    ctx.report.field("verdict", "found");
    ctx.report.verify("vertex_coloring", is_vertex_coloring(g, *r.weighting));
    ctx.emit_witness(weighting_witness(g, *r.weighting));
  } else if (r.certified_none) {
    ctx.report.field("verdict", "none");
    ctx.code = kNegative;
  } else {
    ctx.report.field("verdict", "unknown");
    ctx.code = kUndetermined;
  }
}

void cmd_check(Context& ctx, const std::string& path, const std::string& pred) {
  const std::string text = read_file(path);
  const Witness w = parse_witness(text);
  ctx.report.input(w.graph);
  ctx.report.field("check.pred", pred);

  const bool want_factor = pred == "factor";
  if (want_factor != (w.kind == Witness::Kind::Factor))
    throw UsageError("predicate '" + pred + "' does not apply to a " +
                     (w.kind == Witness::Kind::Factor ? "factor" : "weighting") + " witness");

  bool ok = false;
  std::string why;
  if (want_factor) {
    std::vector<EdgeId> edges;
    for (EdgeId e = 0; e < w.graph.size(); ++e) {
      if (w.values[e] == 1) edges.push_back(e);
      else if (w.values[e] != 0) why = "membership flag must be 0 or 1";
    }
    if (why.empty()) ok = verify_factor(w.graph, DegreeListSpec::generic(w.lists), edges);
  } else {
    const EdgeWeighting wt = EdgeWeighting::integers(w.k, w.values);
    try {
      check_total(w.graph, wt);
      ok = pred == "vc" ? is_vertex_coloring(w.graph, wt) : is_adjacent_vd(w.graph, wt);
    } catch (const PreconditionViolated& e) {
      why = e.what();
    }
  }
  ctx.report.field("verdict", ok ? "verified" : "rejected");
  if (!why.empty()) ctx.report.field("reason", why);
  ctx.report.verify(pred, ok);
  if (ok) {
    const std::string again = serialize(w);
    ctx.report.field("check.byte_identical", again == text ? "yes" : "no");
    ctx.report.witness(again);
  }
  ctx.code = ok ? kOk : kNegative;
}

struct OracleFlags {
  int k = 2;
  std::string pred;
  long long budget = kDefaultOracleBudget;
  SpecFlags spec;
};

void cmd_oracle(Context& ctx, const Graph& g, const OracleFlags& f) {
  const bool lfactor = f.spec.opts.at("kind")->count() > 0;
  if (lfactor == !f.pred.empty()) throw UsageError("oracle needs either --pred (with --k) or --lfactor");
  ctx.report.field("oracle.budget", std::to_string(f.budget));
  try {
    if (lfactor) {
      const DegreeListSpec spec = f.spec.build(g);
      ctx.report.field("oracle.mode", "lfactor");
      ctx.report.field("spec.kind", std::string(to_string(spec.kind())));
      const LFactorCount c = enumerate_l_factors(g, spec, f.budget);
      ctx.report.field("verdict", c.count > 0 ? "exists" : "none");
      ctx.report.field("oracle.count", std::to_string(c.count));
      ctx.report.field("oracle.enumerated", std::to_string(c.enumerated));
      if (c.first_witness) {
        ctx.report.verify("degrees_in_lists", verify_factor(g, spec, *c.first_witness));
        ctx.emit_witness(factor_witness(g, spec, *c.first_witness));
      }
      ctx.code = c.count > 0 ? kOk : kNegative;
      return;
    }
    const WeightPredicate p = f.pred == "vc" ? WeightPredicate::VertexColoring : WeightPredicate::AdjacentVD;
    ctx.report.field("oracle.mode", "weightings");
    ctx.report.field("oracle.k", std::to_string(f.k));
    ctx.report.field("oracle.pred", f.pred);
    const WeightingCount c = enumerate_weightings(g, f.k, p, f.budget);
    ctx.report.field("verdict", c.count > 0 ? "exists" : "none");
    ctx.report.field("oracle.count", std::to_string(c.count));
    ctx.report.field("oracle.enumerated", std::to_string(c.enumerated));
    if (c.first_witness) {
      const EdgeWeighting wt = EdgeWeighting::integers(f.k, *c.first_witness);
      ctx.report.verify(f.pred, p == WeightPredicate::VertexColoring ? is_vertex_coloring(g, wt) : is_adjacent_vd(g, wt));
      ctx.emit_witness(weighting_witness(g, wt));
    }
    ctx.code = c.count > 0 ? kOk : kNegative;
  } catch (const BudgetExceeded& e) {
    ctx.report.field("verdict", "budget-exceeded");
    ctx.report.field("reason", e.what());
    ctx.code = kUndetermined;
  }
}

struct GenFlags {
  std::string kind;
  int n = 6, a = 3, b = 3, k = 4, min_degree = 0;
  double p = 0.3, drop = 0.0;
  std::uint64_t seed = 1;
  std::string format = "edges";
};

Graph generate(const GenFlags& f) {
  Rng rng(f.seed);
  if (f.kind == "complete") return complete_graph(f.n);
  if (f.kind == "complete-bipartite") return complete_bipartite(f.a, f.b);
  if (f.kind == "cycle") return cycle_graph(f.n);
  if (f.kind == "path") return path_graph(f.n);
  if (f.kind == "wheel") return wheel_graph(f.n);
  if (f.kind == "petersen") return petersen_graph();
  if (f.kind == "random") return random_graph_min_degree(f.n, f.min_degree, f.p, rng);
  if (f.kind == "random-bipartite") return random_bipartite_min_degree(f.a, f.b, f.min_degree, f.p, rng);
  if (f.kind == "planar") return random_planar(f.n, rng, f.drop);
  return random_k_colorable(f.n, f.k, f.p, rng);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"List factors and edge weightings of graphs", "lfw"};
  app.require_subcommand(1);
  app.fallthrough();
  bool no_timing = false;
  app.add_flag("--no-timing", no_timing, "omit the timing line so reports can be diffed");

  std::string in_path, witness_out;
  auto add_io = [&](CLI::App* sub) {
    sub->add_option("--in", in_path, "graph file: edge list, or 'graph6:' followed by a graph6 string ('-' = stdin)")
        ->required();
    sub->add_option("--witness-out", witness_out, "also write the witness to this file");
  };

  SpecFlags factor_spec;
  auto* factor = app.add_subcommand("factor", "find an L-factor");
  add_io(factor);
  factor_spec.add(factor, "--spec");
  factor_spec.opts["kind"]->required();

  WeightFlags wf;
  auto* weight = app.add_subcommand("weight", "construct an edge weighting");
  add_io(weight);
  wf.group_opt = weight->add_option("--group", wf.group, "vertex-coloring r-edge-weighting via Z_r")
                     ->check(CLI::Range(2, 1 << 20));
  weight->add_flag("--avd2", wf.avd2, "adjacent vertex-distinguishing {1,2}-weighting of a bipartite graph");
  weight->add_flag("--vc2", wf.vc2, "vertex-coloring {1,2}-weighting of a bipartite graph");
  wf.vertex_opt = weight->add_option("--vertex", wf.vertex, "degree-gap vertex for --avd2");
  weight->add_option("--method", wf.method, "--avd2 construction")
      ->check(CLI::IsMember({"auto", "delta6", "gap"}))
      ->capture_default_str();

  std::string check_path, check_pred;
  auto* check = app.add_subcommand("check", "re-verify a witness file");
  check->add_option("--witness", check_path, "witness file")->required();
  check->add_option("--pred", check_pred, "predicate")->required()->check(CLI::IsMember({"vc", "avd", "factor"}));

  OracleFlags of;
  auto* oracle = app.add_subcommand("oracle", "exhaustive count with a lexicographically first witness");
  add_io(oracle);
  oracle->add_option("--k", of.k, "number of labels")->check(CLI::Range(1, 64))->capture_default_str();
  oracle->add_option("--pred", of.pred, "weighting predicate")->check(CLI::IsMember({"vc", "avd"}));
  oracle->add_option("--budget", of.budget, "enumeration cap")->check(CLI::PositiveNumber)->capture_default_str();
  of.spec.add(oracle, "--lfactor");

  GenFlags gf;
  auto* gen = app.add_subcommand("gen", "print a generated graph");
  gen->add_option("kind", gf.kind, "graph family")
      ->required()
      ->check(CLI::IsMember({"complete", "complete-bipartite", "cycle", "path", "wheel", "petersen", "random",
                             "random-bipartite", "planar", "random-colorable"}));
  gen->add_option("--n", gf.n, "vertices (rim size for wheel)")->capture_default_str();
  gen->add_option("--a", gf.a, "first part size")->capture_default_str();
  gen->add_option("--b", gf.b, "second part size")->capture_default_str();
  gen->add_option("--k", gf.k, "color count for random-colorable")->capture_default_str();
  gen->add_option("--p", gf.p, "edge probability")->check(CLI::Range(0.0, 1.0))->capture_default_str();
  gen->add_option("--min-degree", gf.min_degree, "minimum degree floor")->capture_default_str();
  gen->add_option("--drop", gf.drop, "planar edge drop probability")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", gf.seed, "random seed")->capture_default_str();
  gen->add_option("--format", gf.format, "output format")
      ->check(CLI::IsMember({"edges", "graph6"}))
      ->capture_default_str();

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (gen->parsed()) {
      const Graph g = generate(gf);
      out << (gf.format == "graph6" ? "graph6:" + to_graph6(g) + "\n" : to_edge_list(g));
      return kOk;
    }

    std::vector<std::string> echo;
    for (const auto& a : args)
      if (a != "--no-timing") echo.push_back(a);
    Context ctx{Report(join(echo, " ")), witness_out};
    const auto start = std::chrono::steady_clock::now();

    if (check->parsed()) {
      cmd_check(ctx, check_path, check_pred);
    } else {
      const Graph g = read_graph(read_file(in_path));
      ctx.report.input(g);
      if (factor->parsed()) cmd_factor(ctx, g, factor_spec);
      else if (weight->parsed()) cmd_weight(ctx, g, wf);
      else cmd_oracle(ctx, g, of);
    }

    const auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
    out << ctx.report.str(no_timing ? std::nullopt : std::optional<long long>(us.count()));
    return ctx.code;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SpecInvalid& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionViolated& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InternalBound& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace lfw::cli
