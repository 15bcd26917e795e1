#include "lfw/oracle.hpp"

#include "lfw/error.hpp"

namespace lfw {

std::string_view to_string(WeightPredicate p) {
  return p == WeightPredicate::VertexColoring ? "vc" : "avd";
}

namespace {

// base^exp, or -1 when it exceeds limit.
long long bounded_power(long long base, int exp, long long limit) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > limit / base) return -1;
    r *= base;
  }
  return r <= limit ? r : -1;
}

}  // namespace

WeightingCount enumerate_weightings(const Graph& g, int k, WeightPredicate pred, long long budget) {
  if (k < 1) throw PreconditionViolated("enumerate_weightings: k must be at least 1");
  const int m = g.size();
  const long long total = bounded_power(k, m, budget);
  if (total < 0)
    throw BudgetExceeded(std::to_string(k) + "^" + std::to_string(m) + " weightings exceed the budget of " +
                         std::to_string(budget));

  std::vector<int> label(m, 1);
  std::vector<long long> sum(g.order(), 0);
  std::vector<int> mult(static_cast<std::size_t>(g.order()) * k, 0);
  for (Vertex v = 0; v < g.order(); ++v) {
    sum[v] = g.degree(v);
    mult[static_cast<std::size_t>(v) * k] = g.degree(v);
  }
  auto same_multiset = [&](Vertex a, Vertex b) {
    for (int i = 0; i < k; ++i)
      if (mult[static_cast<std::size_t>(a) * k + i] != mult[static_cast<std::size_t>(b) * k + i]) return false;
    return true;
  };
  auto clashes = [&](EdgeId e) {
    const auto& ed = g.edge(e);
    return pred == WeightPredicate::VertexColoring ? sum[ed.u] == sum[ed.v] : same_multiset(ed.u, ed.v);
  };
  std::vector<char> clash(m, 0);
  int bad = 0;
  for (EdgeId e = 0; e < m; ++e) bad += clash[e] = clashes(e);

  auto refresh = [&](Vertex v) {
    for (EdgeId f : g.incident(v)) {
      const char now = clashes(f);
      bad += now - clash[f];
      clash[f] = now;
    }
  };
  auto set_label = [&](EdgeId e, int value) {
    const auto [u, v] = g.edge(e);
    for (Vertex x : {u, v}) {
      sum[x] += value - label[e];
      --mult[static_cast<std::size_t>(x) * k + label[e] - 1];
      ++mult[static_cast<std::size_t>(x) * k + value - 1];
    }
    label[e] = value;
    refresh(u);
    refresh(v);
  };

  WeightingCount out;
  while (true) {
    ++out.enumerated;
    if (bad == 0) {
      ++out.count;
      if (!out.first_witness) out.first_witness = label;
    }
    int e = m - 1;
    while (e >= 0 && label[e] == k) set_label(e--, 1);
    if (e < 0) break;
    set_label(e, label[e] + 1);
  }
  return out;
}

LFactorCount enumerate_l_factors(const Graph& g, const std::vector<std::vector<char>>& allowed, long long budget) {
  const int m = g.size();
  if (static_cast<int>(allowed.size()) != g.order())
    throw SpecInvalid("allowed-degree table does not cover every vertex");
  if (bounded_power(2, m, budget) < 0)
    throw BudgetExceeded("2^" + std::to_string(m) + " subsets exceed the budget of " + std::to_string(budget));

  auto ok = [&](Vertex v, int d) { return d < static_cast<int>(allowed[v].size()) && allowed[v][d]; };
  std::vector<int> deg(g.order(), 0);
  std::vector<char> in(m, 0);
  int bad = 0;
  for (Vertex v = 0; v < g.order(); ++v) bad += !ok(v, 0);

  auto shift = [&](Vertex v, int delta) {
    bad -= !ok(v, deg[v]);
    deg[v] += delta;
    bad += !ok(v, deg[v]);
  };
  auto flip = [&](EdgeId e) {
    const int delta = in[e] ? -1 : 1;
    in[e] ^= 1;
    shift(g.edge(e).u, delta);
    shift(g.edge(e).v, delta);
  };

  LFactorCount out;
  while (true) {
    ++out.enumerated;
    if (bad == 0) {
      ++out.count;
      if (!out.first_witness) {
        std::vector<EdgeId> h;
        for (EdgeId e = 0; e < m; ++e)
          if (in[e]) h.push_back(e);
        out.first_witness = std::move(h);
      }
    }
    int e = m - 1;
    while (e >= 0 && in[e]) flip(e--);
    if (e < 0) break;
    flip(e);
  }
  return out;
}

LFactorCount enumerate_l_factors(const Graph& g, const DegreeListSpec& spec, long long budget) {
  if (spec.vertex_count() != g.order()) throw SpecInvalid("spec does not cover every vertex");
  std::vector<std::vector<char>> allowed(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    allowed[v].assign(g.degree(v) + 1, 0);
    for (int d : spec.expanded(v, g.degree(v))) allowed[v][d] = 1;
  }
  return enumerate_l_factors(g, allowed, budget);
}

}  // namespace lfw
