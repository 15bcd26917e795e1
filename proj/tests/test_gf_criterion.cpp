#include <doctest.h>

#include "lfw/error.hpp"
#include "lfw/gf_criterion.hpp"
#include "lfw/oracle.hpp"
#include "support.hpp"

using namespace lfw;
using namespace lfw::test;

namespace {

IntervalSpec uniform(int n, int a, int b) { return {std::vector<int>(n, a), std::vector<int>(n, b)}; }

std::vector<std::vector<char>> allowed_of(const Graph& g, const IntervalSpec& s) {
  std::vector<std::vector<char>> out(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    out[v].assign(g.degree(v) + 1, 0);
    for (int d = s.lower[v]; d <= s.upper[v]; ++d) out[v][d] = 1;
  }
  return out;
}

long long recompute_lhs_minus_rhs(const Graph& g, const IntervalSpec& s, const HeinrichWitness& w) {
  std::vector<char> in_b(g.order(), 0);
  for (Vertex v : w.b) in_b[v] = 1;
  long long diff = 0;
  for (Vertex v : w.a) {
    int outside_b = 0;
    for (Vertex u : g.neighbors(v)) outside_b += !in_b[u];
    diff += s.lower[v] - outside_b;
  }
  for (Vertex v : w.b) diff -= s.upper[v];
  return diff;
}

}  // namespace

TEST_CASE("heinrich criterion examples") {
  IntervalSpec path{{1, 2, 1}, {1, 2, 1}};
  CHECK(heinrich_check(p3(), path).status == HeinrichStatus::Feasible);

  const Graph s = star(3);
  IntervalSpec st{{3, 0, 0, 0}, {3, 0, 0, 0}};
  const auto r = heinrich_check(s, st);
  REQUIRE(r.status == HeinrichStatus::Infeasible);
  CHECK(r.witness->a == std::vector<Vertex>{0});
  CHECK(r.witness->b == std::vector<Vertex>{1});
  CHECK(r.witness->lhs == 1);
  CHECK(r.witness->rhs == 0);

  // K3 with a = b is outside both hypotheses.
  CHECK(heinrich_check(k3(), uniform(3, 2, 2)).status == HeinrichStatus::NotApplicable);
  CHECK_THROWS_AS(heinrich_check(Graph(17), uniform(17, 0, 0)), BudgetExceeded);
  CHECK_THROWS_AS(heinrich_check(p3(), uniform(3, 2, 1)), SpecInvalid);
}

TEST_CASE("interval factors by flow") {
  const auto c4 = gf_factor_flow(cycle_graph(4), uniform(4, 1, 1));
  REQUIRE(c4.status == FlowStatus::Found);
  CHECK(c4.solution->degrees == std::vector<int>{1, 1, 1, 1});

  IntervalSpec st{{3, 0, 0, 0}, {3, 0, 0, 0}};
  CHECK(gf_factor_flow(star(3), st).status == FlowStatus::Infeasible);

  const auto tri = gf_factor_flow(k3(), uniform(3, 2, 2));
  REQUIRE(tri.status == FlowStatus::Found);
  CHECK(tri.solution->edges == std::vector<EdgeId>{0, 1, 2});

  // Odd cycle with exact degree 1 has no perfect matching.
  CHECK(gf_factor_flow(cycle_graph(5), uniform(5, 1, 1)).status != FlowStatus::Found);
}

TEST_CASE("heinrich, flow and enumeration agree on small graphs") {
  Rng rng(21);
  int checked = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& g : all_labeled_graphs(n)) {
      for (int rep = 0; rep < 3; ++rep) {
        IntervalSpec s{std::vector<int>(n), std::vector<int>(n)};
        const bool strict = !bipartition(g) || rng() % 2;
        for (Vertex v = 0; v < n; ++v) {
          const int d = g.degree(v);
          if (strict && d > 0) {
            s.lower[v] = static_cast<int>(rng() % d);
            s.upper[v] = s.lower[v] + 1 + static_cast<int>(rng() % (d - s.lower[v]));
          } else {
            s.lower[v] = static_cast<int>(rng() % (d + 1));
            s.upper[v] = s.lower[v] + static_cast<int>(rng() % (d - s.lower[v] + 1));
          }
        }
        if (!heinrich_applicable(g, s)) continue;
        const auto h = heinrich_check(g, s);
        const auto f = gf_factor_flow(g, s);
        const auto e = enumerate_l_factors(g, allowed_of(g, s));
        REQUIRE(f.status != FlowStatus::Undetermined);
        REQUIRE((h.status == HeinrichStatus::Feasible) == (e.count > 0));
        REQUIRE((f.status == FlowStatus::Found) == (e.count > 0));
        if (h.witness) REQUIRE(recompute_lhs_minus_rhs(g, s, *h.witness) == h.witness->lhs - h.witness->rhs);
        if (h.witness) REQUIRE(h.witness->lhs > h.witness->rhs);
        ++checked;
      }
    }
  }
  CHECK(checked > 1000);
}
