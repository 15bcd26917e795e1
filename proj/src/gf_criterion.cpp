#include "lfw/gf_criterion.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "lfw/error.hpp"
#include "max_flow.hpp"

namespace lfw {

void validate_interval_spec(const Graph& g, const IntervalSpec& spec) {
  if (static_cast<int>(spec.lower.size()) != g.order() || static_cast<int>(spec.upper.size()) != g.order())
    throw SpecInvalid("interval spec size does not match the graph");
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!(0 <= spec.lower[v] && spec.lower[v] <= spec.upper[v] && spec.upper[v] <= g.degree(v)))
      throw SpecInvalid("need 0 <= a_v <= b_v <= d(v) at vertex " + std::to_string(v));
  }
}

bool heinrich_applicable(const Graph& g, const IntervalSpec& spec) {
  bool strict = true;
  for (Vertex v = 0; v < g.order(); ++v) strict = strict && spec.lower[v] < spec.upper[v];
  return strict || bipartition(g).has_value();
}

HeinrichResult heinrich_check(const Graph& g, const IntervalSpec& spec, int max_vertices) {
  validate_interval_spec(g, spec);
  const int n = g.order();
  if (n > max_vertices || n > 30)
    throw BudgetExceeded("heinrich_check: " + std::to_string(n) + " vertices exceeds the 3^n scan limit");

  HeinrichResult res;
  if (!heinrich_applicable(g, spec)) return res;

  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& e : g.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  // lhs - rhs = sum_A (a_v - d(v) + d_B(v)) - sum_B b_v
  std::vector<int> digit(n, 0);
  std::uint32_t amask = 0, bmask = 0;
  long long rhs = 0;
  while (true) {
    int i = 0;
    while (i < n && digit[i] == 2) {
      digit[i] = 0;
      bmask &= ~(1u << i);
      rhs -= spec.upper[i];
      ++i;
    }
    if (i == n) break;
    if (++digit[i] == 1) {
      amask |= 1u << i;
    } else {
      amask &= ~(1u << i);
      bmask |= 1u << i;
      rhs += spec.upper[i];
    }
    long long lhs = 0;
    for (std::uint32_t m = amask; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      lhs += spec.lower[v] - g.degree(v) + std::popcount(adj[v] & bmask);
    }
    if (lhs > rhs) {
      HeinrichWitness w;
      for (Vertex v = 0; v < n; ++v) {
        if (digit[v] == 1) w.a.push_back(v);
        if (digit[v] == 2) w.b.push_back(v);
      }
      w.lhs = lhs;
      w.rhs = rhs;
      res.status = HeinrichStatus::Infeasible;
      res.witness = std::move(w);
      return res;
    }
  }
  res.status = HeinrichStatus::Feasible;
  return res;
}

// ------------------------------------------------------------------- flows

namespace {

FlowOutcome bipartite_flow(const Graph& g, const IntervalSpec& spec, const Bipartition& bp) {
  const int n = g.order();
  const int s = n, t = n + 1;
  detail::BoundedFlow net(n + 2);
  for (Vertex v = 0; v < n; ++v) {
    if (bp.in_x(v)) {
      net.add_arc(s, v, spec.lower[v], spec.upper[v]);
    } else {
      net.add_arc(v, t, spec.lower[v], spec.upper[v]);
    }
  }
  std::vector<int> arc(g.size());
  for (EdgeId e = 0; e < g.size(); ++e) {
    const auto [u, v] = g.edge(e);
    arc[e] = bp.in_x(u) ? net.add_arc(u, v, 0, 1) : net.add_arc(v, u, 0, 1);
  }
  FlowOutcome out;
  if (!net.solve(s, t)) {
    out.status = FlowStatus::Infeasible;
    out.reason = "bipartite degree network has no feasible flow";
    return out;
  }
  std::vector<EdgeId> chosen;
  for (EdgeId e = 0; e < g.size(); ++e)
    if (net.flow(arc[e]) == 1) chosen.push_back(e);
  out.status = FlowStatus::Found;
  out.solution = make_solution(g, std::move(chosen));
  return out;
}

// Rounds the half edges of a half-integral degree-feasible solution.
// Returns false when some odd circuit has no vertex with slack.
bool round_half_edges(const Graph& g, const IntervalSpec& spec, const std::vector<int>& weight2,
                      std::vector<char>& in_h) {
  const int n = g.order();
  const int dummy = n;
  struct HalfEdge {
    int u, v;
    EdgeId host;  // -1 for dummy edges
  };
  std::vector<HalfEdge> f;
  std::vector<int> full(n, 0), half(n, 0);
  for (EdgeId e = 0; e < g.size(); ++e) {
    const auto [u, v] = g.edge(e);
    if (weight2[e] == 2) {
      in_h[e] = 1;
      ++full[u];
      ++full[v];
    } else if (weight2[e] == 1) {
      f.push_back({u, v, e});
      ++half[u];
      ++half[v];
    }
  }
  for (Vertex v = 0; v < n; ++v)
    if (half[v] % 2 == 1) f.push_back({v, dummy, -1});

  std::vector<std::vector<int>> inc(n + 1);
  for (int i = 0; i < static_cast<int>(f.size()); ++i) {
    inc[f[i].u].push_back(i);
    inc[f[i].v].push_back(i);
  }
  auto other = [&](int i, int v) { return f[i].u == v ? f[i].v : f[i].u; };

  std::vector<char> used(f.size(), 0);
  std::vector<std::size_t> ptr(n + 1, 0);
  std::vector<char> done(n + 1, 0);

  // Component discovery, then one Euler circuit per component.
  for (int root = n; root >= 0; --root) {
    if (done[root] || inc[root].empty()) continue;
    std::vector<int> comp{root};
    done[root] = 1;
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (int i : inc[comp[k]]) {
        const int w = other(i, comp[k]);
        if (!done[w]) {
          done[w] = 1;
          comp.push_back(w);
        }
      }
    int start = -1;
    bool even_up = true;
    if (std::find(comp.begin(), comp.end(), dummy) != comp.end()) {
      start = dummy;
    } else {
      std::sort(comp.begin(), comp.end());
      for (int v : comp) {
        const int level = full[v] + half[v] / 2;
        if (level < spec.upper[v]) {
          start = v;
          even_up = true;
          break;
        }
      }
      if (start < 0) {
        for (int v : comp) {
          const int level = full[v] + half[v] / 2;
          if (level > spec.lower[v]) {
            start = v;
            even_up = false;
            break;
          }
        }
      }
    }
    const bool have_slack = start >= 0;
    if (!have_slack) start = *std::min_element(comp.begin(), comp.end());

    std::vector<int> circuit;
    std::vector<std::pair<int, int>> stack{{start, -1}};
    while (!stack.empty()) {
      const int v = stack.back().first;
      while (ptr[v] < inc[v].size() && used[inc[v][ptr[v]]]) ++ptr[v];
      if (ptr[v] < inc[v].size()) {
        const int i = inc[v][ptr[v]];
        used[i] = 1;
        stack.push_back({other(i, v), i});
      } else {
        if (stack.back().second >= 0) circuit.push_back(stack.back().second);
        stack.pop_back();
      }
    }
    std::reverse(circuit.begin(), circuit.end());
    if (circuit.size() % 2 == 1 && !have_slack) return false;
    for (std::size_t k = 0; k < circuit.size(); ++k) {
      const bool up = (k % 2 == 0) == even_up;
      if (up && f[circuit[k]].host >= 0) in_h[f[circuit[k]].host] = 1;
    }
  }
  return true;
}

FlowOutcome double_cover_flow(const Graph& g, const IntervalSpec& spec) {
  const int n = g.order();
  // v+ = v, v- = n + v
  const int s = 2 * n, t = 2 * n + 1;
  detail::BoundedFlow net(2 * n + 2);
  for (Vertex v = 0; v < n; ++v) {
    net.add_arc(s, v, spec.lower[v], spec.upper[v]);
    net.add_arc(n + v, t, spec.lower[v], spec.upper[v]);
  }
  std::vector<std::pair<int, int>> arc(g.size());
  for (EdgeId e = 0; e < g.size(); ++e) {
    const auto [u, v] = g.edge(e);
    arc[e] = {net.add_arc(u, n + v, 0, 1), net.add_arc(v, n + u, 0, 1)};
  }
  FlowOutcome out;
  if (!net.solve(s, t)) {
    out.status = FlowStatus::Infeasible;
    out.reason = "fractional relaxation (double cover network) is infeasible";
    return out;
  }
  std::vector<int> weight2(g.size());
  for (EdgeId e = 0; e < g.size(); ++e)
    weight2[e] = static_cast<int>(net.flow(arc[e].first) + net.flow(arc[e].second));

  std::vector<char> in_h(g.size(), 0);
  if (!round_half_edges(g, spec, weight2, in_h)) {
    out.status = FlowStatus::Undetermined;
    out.reason = "odd circuit of half edges through vertices with a_v = b_v";
    return out;
  }
  std::vector<EdgeId> chosen;
  for (EdgeId e = 0; e < g.size(); ++e)
    if (in_h[e]) chosen.push_back(e);
  auto sol = make_solution(g, std::move(chosen));
  for (Vertex v = 0; v < n; ++v)
    if (sol.degrees[v] < spec.lower[v] || sol.degrees[v] > spec.upper[v])
      throw std::logic_error("half-edge rounding produced an out-of-range degree");
  out.status = FlowStatus::Found;
  out.solution = std::move(sol);
  return out;
}

}  // namespace

FlowOutcome gf_factor_flow(const Graph& g, const IntervalSpec& spec) {
  validate_interval_spec(g, spec);
  if (auto bp = bipartition(g)) return bipartite_flow(g, spec, *bp);
  return double_cover_flow(g, spec);
}

}  // namespace lfw
