// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fail.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "lfw/avd.hpp"
#include "lfw/error.hpp"
#include "lfw/factor_engine.hpp"
#include "lfw/gf_criterion.hpp"
#include "lfw/group_weighting.hpp"
#include "lfw/oracle.hpp"
#include "lfw/weighting.hpp"
#include "support.hpp"

using namespace lfw;
using namespace lfw::test;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& what) {
    if (pass) first_failure = what;
    pass = false;
  }
};

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
double uniform_real(Rng& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

int ceil_frac(long long num, long long den) { return static_cast<int>((num + den - 1) / den); }
int floor_frac(long long num, long long den) { return static_cast<int>(num / den); }

const std::array<Rational, 3> kThirds{Rational(1, 3), Rational(1, 2), Rational(2, 3)};

// Up to `limit` distinct anchor choices from per-vertex candidate lists:
// all of them when the product is small, a seeded sample otherwise.
template <typename T>
std::vector<std::vector<T>> choose_specs(const std::vector<std::vector<T>>& options, int limit, Rng& rng) {
  long long product = 1;
  for (const auto& o : options) {
    if (o.empty()) return {};
    product = std::min<long long>(product * static_cast<long long>(o.size()), 1'000'000);
  }
  std::vector<std::vector<T>> out;
  if (product <= limit) {
    std::vector<std::size_t> idx(options.size(), 0);
    for (long long k = 0; k < product; ++k) {
      std::vector<T> pick;
      for (std::size_t v = 0; v < options.size(); ++v) pick.push_back(options[v][idx[v]]);
      out.push_back(std::move(pick));
      for (std::size_t v = 0; v < options.size(); ++v) {
        if (++idx[v] < options[v].size()) break;
        idx[v] = 0;
      }
    }
    return out;
  }
  std::set<std::vector<T>> seen;
  for (int tries = 0; static_cast<int>(out.size()) < limit && tries < 20 * limit; ++tries) {
    std::vector<T> pick;
    for (const auto& o : options) pick.push_back(o[rng() % o.size()]);
    if (seen.insert(pick).second) out.push_back(std::move(pick));
  }
  return out;
}

std::vector<std::vector<std::array<int, 2>>> pair_options(const Graph& g) {
  std::vector<std::vector<std::array<int, 2>>> options(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    for (int lo = ceil_frac(d, 3); lo <= floor_frac(d, 2); ++lo)
      for (int hi = ceil_frac(d, 2); hi <= floor_frac(2LL * d, 3); ++hi) options[v].push_back({lo, hi});
  }
  return options;
}

std::vector<std::vector<std::array<int, 3>>> triple_options(const Graph& g) {
  std::vector<std::vector<std::array<int, 3>>> options(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    for (int a1 = ceil_frac(3LL * d, 10); a1 <= floor_frac(4LL * d, 10); ++a1)
      for (int a2 = ceil_frac(4LL * d, 10); a2 <= floor_frac(6LL * d, 10); ++a2)
        for (int a3 = ceil_frac(6LL * d, 10); a3 <= floor_frac(7LL * d, 10); ++a3) options[v].push_back({a1, a2, a3});
  }
  return options;
}

std::string method_summary(const std::map<std::string, long long>& methods) {
  std::string s;
  for (const auto& [m, c] : methods) s += (s.empty() ? "" : ", ") + m + " " + std::to_string(c);
  return " (" + (s.empty() ? "none" : s) + ")";
}

std::string describe(const Graph& g) { return "graph6 " + to_graph6(g); }

// Solves and post-checks one spec; records the first failure.
void solve_and_verify(const Graph& g, const DegreeListSpec& spec, Outcome& out, long long& solved,
                      std::map<std::string, long long>& methods) {
  try {
    const auto r = solve_list_factor(g, spec);
    ++methods[r.method];
    if (r.status != FactorStatus::Found) {
      out.fail(describe(g) + ": status " + std::string(to_string(r.status)));
    } else if (!verify_factor(g, spec, r.solution->edges)) {
      out.fail(describe(g) + ": degree post-scan failed");
    } else {
      ++solved;
    }
  } catch (const InternalBound& e) {
    out.fail(describe(g) + ": InternalBound: " + e.what());
  } catch (const std::exception& e) {
    out.fail(describe(g) + ": " + e.what());
  }
}

Outcome pair_lists() {
  Outcome out;
  Rng rng(101);
  long long specs = 0, solved = 0, graphs = 0, with_spec = 0;
  std::map<std::string, long long> methods;
  auto run = [&](const Graph& g) {
    ++graphs;
    const auto chosen = choose_specs(pair_options(g), 50, rng);
    if (!chosen.empty()) ++with_spec;
    for (const auto& anchors : chosen) {
      const auto spec = DegreeListSpec::pair(kThirds, anchors);
      if (!validate_spec(g, spec).guaranteed()) {
        out.fail(describe(g) + ": sampled spec does not validate");
        continue;
      }
      ++specs;
      solve_and_verify(g, spec, out, solved, methods);
    }
  };
  for (int n = 1; n <= 6; ++n)
    for (const auto& g : all_labeled_graphs(n)) run(g);
  for (int i = 0; i < 500; ++i) run(random_graph_min_degree(uniform_int(rng, 3, 12), 2, uniform_real(rng, 0.2, 0.8), rng));
  out.detail = std::to_string(graphs) + " graphs (" + std::to_string(with_spec) + " with valid specs), " +
               std::to_string(solved) + "/" + std::to_string(specs) + " specs solved and verified" + method_summary(methods);
  return out;
}

Outcome triple_lists() {
  Outcome out;
  Rng rng(202);
  long long specs = 0, solved = 0;
  std::map<std::string, long long> methods;
  for (int i = 0; i < 200; ++i) {
    const Graph g = random_graph_min_degree(uniform_int(rng, 14, 30), 10, uniform_real(rng, 0.4, 0.9), rng);
    const auto options = triple_options(g);
    std::vector<std::array<int, 3>> anchors;
    for (const auto& o : options) anchors.push_back(o[rng() % o.size()]);
    const auto spec = DegreeListSpec::triple(anchors);
    if (g.min_degree() < 10 || !validate_spec(g, spec).guaranteed()) {
      out.fail(describe(g) + ": generated instance outside the hypotheses");
      continue;
    }
    ++specs;
    solve_and_verify(g, spec, out, solved, methods);
  }
  out.detail = std::to_string(solved) + "/" + std::to_string(specs) + " random graphs solved and verified" + method_summary(methods);
  return out;
}

Outcome interval_agreement() {
  Outcome out;
  Rng rng(303);
  long long graphs = 0, specs = 0, feasible = 0, skipped = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& g : non_isomorphic_graphs(n)) {
      const bool bip = bipartition(g).has_value();
      if (!bip && g.min_degree() == 0) {
        ++skipped;  // a_v < b_v is impossible at an isolated vertex
        continue;
      }
      ++graphs;
      for (int rep = 0; rep < 100; ++rep) {
        IntervalSpec s{std::vector<int>(n), std::vector<int>(n)};
        const bool strict = !bip || rng() % 2;
        for (Vertex v = 0; v < n; ++v) {
          const int d = g.degree(v);
          if (strict && d > 0) {
            s.lower[v] = uniform_int(rng, 0, d - 1);
            s.upper[v] = uniform_int(rng, s.lower[v] + 1, d);
          } else {
            s.lower[v] = uniform_int(rng, 0, d);
            s.upper[v] = uniform_int(rng, s.lower[v], d);
          }
        }
        if (!heinrich_applicable(g, s)) {
          out.fail(describe(g) + ": generated spec outside the hypotheses");
          continue;
        }
        std::vector<std::vector<char>> allowed(n);
        for (Vertex v = 0; v < n; ++v) {
          allowed[v].assign(g.degree(v) + 1, 0);
          for (int k = s.lower[v]; k <= s.upper[v]; ++k) allowed[v][k] = 1;
        }
        const bool h = heinrich_check(g, s).status == HeinrichStatus::Feasible;
        const auto f = gf_factor_flow(g, s);
        const bool e = enumerate_l_factors(g, allowed).count > 0;
        ++specs;
        feasible += e;
        if (f.status == FlowStatus::Undetermined) out.fail(describe(g) + ": flow undetermined");
        else if (h != e || (f.status == FlowStatus::Found) != e) out.fail(describe(g) + ": disagreement");
      }
    }
  }
  out.detail = std::to_string(graphs) + " non-isomorphic graphs, " + std::to_string(specs) + " interval specs (" +
               std::to_string(feasible) + " feasible), " + std::to_string(skipped) +
               " non-bipartite graphs with isolated vertices skipped";
  return out;
}

Outcome bipartite_two_value() {
  Outcome out;
  Rng rng(404);
  std::vector<Graph> gs{complete_bipartite(6, 6), complete_bipartite(7, 7), complete_bipartite(6, 7)};
  for (int i = 0; i < 200; ++i) {
    const int a = uniform_int(rng, 6, 20);
    const int b = uniform_int(rng, 6, 40 - a);
    gs.push_back(random_bipartite_min_degree(a, b, 6, uniform_real(rng, 0.3, 0.9), rng));
  }
  int ok = 0;
  for (const auto& g : gs) {
    try {
      if (is_adjacent_vd(g, advd2_bipartite_delta6(g))) ++ok;
      else out.fail(describe(g) + ": weighting is not adjacent-distinguishing");
    } catch (const std::exception& e) {
      out.fail(describe(g) + ": " + e.what());
    }
  }
  out.detail = std::to_string(ok) + "/" + std::to_string(gs.size()) + " bipartite graphs weighted";
  return out;
}

Outcome group_realizer() {
  Outcome out;
  Rng rng(505);
  const std::array<int, 5> moduli{3, 4, 5, 6, 8};
  int ok = 0;
  for (int i = 0; i < 500; ++i) {
    const Graph g = random_connected_non_bipartite(uniform_int(rng, 3, 12), uniform_real(rng, 0.1, 0.7), rng);
    const int r = moduli[i % moduli.size()];
    std::vector<int> t(g.order());
    long long sum = 0;
    for (auto& x : t) sum += x = uniform_int(rng, 0, r - 1);
    if (!is_doubled(sum, r)) t[0] = (t[0] + 1) % r;
    try {
      const auto w = realize_targets(g, r, t);
      std::vector<long long> s(g.order(), 0);
      for (EdgeId e = 0; e < g.size(); ++e) {
        s[g.edge(e).u] += w.labels[e];
        s[g.edge(e).v] += w.labels[e];
      }
      bool exact = true;
      for (Vertex v = 0; v < g.order(); ++v) exact = exact && s[v] % r == t[v];
      if (exact) ++ok;
      else out.fail(describe(g) + ": sums differ from targets, r = " + std::to_string(r));
    } catch (const std::exception& e) {
      out.fail(describe(g) + ": " + e.what());
    }
  }
  out.detail = std::to_string(ok) + "/500 target vectors realized exactly";
  return out;
}

Outcome four_weighting() {
  Outcome out;
  Rng rng(606);
  std::vector<Graph> gs{complete_graph(4), wheel_graph(5)};
  for (int i = 0; i < 100; ++i) gs.push_back(random_planar(uniform_int(rng, 4, 25), rng, uniform_real(rng, 0.0, 0.5)));
  for (int i = 0; i < 100; ++i)
    gs.push_back(random_k_colorable(uniform_int(rng, 4, 25), 4, uniform_real(rng, 0.2, 0.8), rng));
  int ok = 0;
  for (const auto& g : gs) {
    try {
      if (is_vertex_coloring(g, vertex_coloring_weighting_zr(g, 4).weighting)) ++ok;
      else out.fail(describe(g) + ": induced coloring is not proper");
    } catch (const std::exception& e) {
      out.fail(describe(g) + ": " + e.what());
    }
  }
  out.detail = std::to_string(ok) + "/" + std::to_string(gs.size()) + " graphs (K4, W5, 100 planar, 100 4-colorable)";
  return out;
}

Outcome six_cycle_control() {
  Outcome out;
  const Graph c6 = cycle_graph(6);
  try {
    vertex_coloring_weighting_zr(c6, 2);
    out.fail("C6 with r = 2 was not obstructed");
  } catch (const Obstructed&) {
  } catch (const std::exception& e) {
    out.fail(std::string("unexpected error: ") + e.what());
  }
  const auto count = enumerate_weightings(c6, 2, WeightPredicate::VertexColoring).count;
  if (count != 0) out.fail("C6 has " + std::to_string(count) + " vertex-coloring 2-weightings");
  int proper = 0;
  for (int mask = 0; mask < 64; ++mask) {
    std::vector<int> color(6);
    for (int v = 0; v < 6; ++v) color[v] = 1 + (mask >> v & 1);
    const ColorClasses c{2, color};
    if (!c.is_proper(c6)) continue;
    ++proper;
    for (int s : c.sizes())
      if (s % 2 == 0) out.fail("proper 2-coloring with an even class");
  }
  if (proper != 2) out.fail("expected 2 proper 2-colorings, found " + std::to_string(proper));
  out.detail = "obstructed, 0 weightings, " + std::to_string(proper) + " proper 2-colorings all with odd classes";
  return out;
}

Outcome implication() {
  Outcome out;
  Rng rng(808);
  int colorings = 0;
  for (int i = 0; i < 10000; ++i) {
    const Graph g = random_graph(uniform_int(rng, 2, 12), uniform_real(rng, 0.1, 0.9), rng);
    const int k = uniform_int(rng, 1, 4);
    std::vector<int> labels(g.size());
    for (auto& l : labels) l = uniform_int(rng, 1, k);
    const auto w = EdgeWeighting::integers(k, labels);
    if (!is_vertex_coloring(g, w)) continue;
    ++colorings;
    if (!is_adjacent_vd(g, w)) out.fail(describe(g) + ": counterexample");
  }
  out.detail = "10000 samples, " + std::to_string(colorings) + " vertex-coloring weightings, all adjacent-distinguishing";
  return out;
}

Outcome cli_round_trip() {
  namespace fs = std::filesystem;
  Outcome out;
  const fs::path dir = fs::temp_directory_path() / ("lfw_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  auto write = [&](const std::string& name, const std::string& text) {
    std::ofstream((dir / name), std::ios::binary) << text;
    return (dir / name).string();
  };
  auto slurp = [](const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  };
  auto call = [](std::vector<std::string> args, std::string& report) {
    std::ostringstream o, e;
    const int code = cli::run(args, o, e);
    report = o.str();
    return code;
  };

  Rng rng(909);
  const auto k4 = write("k4.txt", to_edge_list(complete_graph(4)));
  const auto c4 = write("c4.txt", to_edge_list(cycle_graph(4)));
  const auto c5 = write("c5.txt", to_edge_list(cycle_graph(5)));
  const auto pet = write("petersen.txt", "graph6:" + to_graph6(petersen_graph()) + "\n");
  const auto k66 = write("k66.txt", to_edge_list(complete_bipartite(6, 6)));
  const auto k1010 = write("k1010.txt", to_edge_list(complete_bipartite(10, 10)));
  const auto k35 = write("k35.txt", to_edge_list(complete_bipartite(3, 5)));
  const auto k33 = write("k33.txt", to_edge_list(complete_bipartite(3, 3)));
  const auto p7 = write("p7.txt", to_edge_list(path_graph(7)));
  const auto planar = write("planar.txt", to_edge_list(random_planar(18, rng, 0.2)));
  const auto lists = write("lists.txt", "0 1 3\n1 1\n2 1 2\n3 0 3\n");

  struct Case {
    std::vector<std::string> args;
    std::string pred;
  };
  std::vector<Case> cases{
      {{"factor", "--spec", "pair", "--aminus", "1", "--aplus", "2", "--in", k4}, "factor"},
      {{"factor", "--spec", "pair", "--in", pet}, "factor"},
      {{"factor", "--spec", "triple", "--in", k1010}, "factor"},
      {{"factor", "--spec", "pairc", "--c", "1/2", "--in", planar}, "factor"},
      {{"factor", "--spec", "bip2", "--c", "1/2", "--in", k66}, "factor"},
      {{"factor", "--spec", "generic", "--lists", lists, "--in", k4}, "factor"},
      {{"weight", "--group", "4", "--in", k4}, "vc"},
      {{"weight", "--group", "3", "--in", c5}, "vc"},
      {{"weight", "--group", "4", "--in", planar}, "vc"},
      {{"weight", "--group", "8", "--in", pet}, "vc"},
      {{"weight", "--group", "2", "--in", c4}, "vc"},
      {{"weight", "--avd2", "--in", k66}, "avd"},
      {{"weight", "--avd2", "--vertex", "0", "--in", p7}, "avd"},
      {{"weight", "--avd2", "--in", k35}, "avd"},
      {{"weight", "--vc2", "--in", c4}, "vc"},
      {{"weight", "--vc2", "--in", k33}, "vc"},
      {{"oracle", "--k", "3", "--pred", "vc", "--in", k4}, "vc"},
      {{"oracle", "--k", "2", "--pred", "avd", "--in", pet}, "avd"},
      {{"oracle", "--lfactor", "pair", "--aminus", "1", "--aplus", "1", "--in", pet}, "factor"},
  };

  int verified = 0, idx = 0;
  for (auto& c : cases) {
    const auto wit = (dir / ("w" + std::to_string(idx++) + ".txt")).string();
    auto args = c.args;
    args.insert(args.begin(), "--no-timing");
    args.insert(args.end(), {"--witness-out", wit});
    const std::string label = c.args[0] + " " + c.args[1] + " #" + std::to_string(idx);
    std::string report;
    if (call(args, report) != cli::kOk || !fs::exists(wit)) {
      out.fail(label + ": command did not emit a witness");
      continue;
    }
    const std::string text = slurp(wit);
    if (report.find("witness.begin\n" + text + "witness.end\n") == std::string::npos)
      out.fail(label + ": report witness differs from the witness file");
    std::string checked;
    const int code = call({"--no-timing", "check", "--witness", wit, "--pred", c.pred}, checked);
    if (code != cli::kOk || checked.find("verdict: verified\n") == std::string::npos ||
        checked.find("check.byte_identical: yes\n") == std::string::npos ||
        checked.find("witness.begin\n" + text + "witness.end\n") == std::string::npos) {
      out.fail(label + ": check did not verify byte-identically");
      continue;
    }
    ++verified;
  }
  fs::remove_all(dir);
  out.detail = std::to_string(verified) + "/" + std::to_string(cases.size()) + " emitted witnesses re-verified";
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"pair lists with constants (1/3, 1/2, 2/3)", pair_lists},
      {"triple lists on minimum degree >= 10", triple_lists},
      {"interval factors: criterion, flow and enumeration agree", interval_agreement},
      {"bipartite {1,2}-weighting, minimum degree >= 6", bipartite_two_value},
      {"Z_r target realizer", group_realizer},
      {"vertex-coloring 4-edge-weightings", four_weighting},
      {"C6 negative control", six_cycle_control},
      {"vertex-coloring implies adjacent-distinguishing", implication},
      {"CLI witness round trip", cli_round_trip},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("uncaught: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << o.detail;
    std::cout << " [" << std::fixed << std::setprecision(2) << secs << " s]\n";
    if (!o.pass) std::cout << "     first failure: " << o.first_failure << "\n";
    std::cout.flush();
  }
  return all ? 0 : 1;
}
