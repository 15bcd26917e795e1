#include "lfw/factor_engine.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "lfw/error.hpp"
#include "lfw/gf_criterion.hpp"
#include "lfw/oracle.hpp"

namespace lfw {

FactorState FactorState::initial(const Graph& g, const DegreeListSpec& spec) {
  if (spec.vertex_count() != g.order())
    throw SpecInvalid("spec covers " + std::to_string(spec.vertex_count()) + " vertices, graph has " +
                      std::to_string(g.order()));
  FactorState s;
  s.graph = &g;
  s.windows.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) s.windows.push_back(spec.windows(v, g.degree(v)));
  s.in_h.assign(g.size(), 0);
  s.deg_h.assign(g.order(), 0);
  s.choice.assign(g.order(), 0);
  return s;
}

void FactorState::toggle(EdgeId e) {
  const auto [u, v] = graph->edge(e);
  const int delta = in_h[e] ? -1 : 1;
  in_h[e] ^= 1;
  deg_h[u] += delta;
  deg_h[v] += delta;
}

long long compute_deficiency(const FactorState& state) {
  long long def = 0;
  for (Vertex v = 0; v < static_cast<int>(state.deg_h.size()); ++v)
    def += std::max(0, state.anchor(v) - state.deg_h[v]);
  return def;
}

// ------------------------------------------------------------ reachability

std::vector<Vertex> ReachabilitySets::a() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; 2 * v < static_cast<int>(reached_.size()); ++v)
    if (in_a(v)) out.push_back(v);
  return out;
}

std::vector<Vertex> ReachabilitySets::b() const {
  std::vector<Vertex> out;
  for (Vertex v = 0; 2 * v < static_cast<int>(reached_.size()); ++v)
    if (in_b(v)) out.push_back(v);
  return out;
}

bool ReachabilitySets::disjoint() const {
  for (Vertex v = 0; 2 * v < static_cast<int>(reached_.size()); ++v)
    if (in_a(v) && in_b(v)) return false;
  return true;
}

std::optional<Trail> ReachabilitySets::trail(Vertex v, int parity) const {
  int s = 2 * v + parity;
  if (!reached_[s]) return std::nullopt;
  Trail t;
  t.vertices.push_back(v);
  while (pred_state_[s] >= 0) {
    t.edges.push_back(pred_edge_[s]);
    s = pred_state_[s];
    t.vertices.push_back(s / 2);
  }
  std::reverse(t.vertices.begin(), t.vertices.end());
  std::reverse(t.edges.begin(), t.edges.end());
  return t;
}

ReachabilitySets reachability_sets(const FactorState& state) {
  const Graph& g = *state.graph;
  ReachabilitySets rs;
  rs.graph_ = &g;
  const int states = 2 * g.order();
  rs.reached_.assign(states, 0);
  rs.pred_state_.assign(states, -1);
  rs.pred_edge_.assign(states, -1);

  std::deque<int> queue;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (state.deg_h[v] < state.anchor(v)) {
      rs.a0_.push_back(v);
      rs.reached_[2 * v] = 1;
      queue.push_back(2 * v);
    }
  }
  if (rs.a0_.empty()) throw PreconditionViolated("reachability_sets: deficiency is zero");

  auto on_trail = [&](int s, EdgeId e) {
    for (; rs.pred_state_[s] >= 0; s = rs.pred_state_[s])
      if (rs.pred_edge_[s] == e) return true;
    return false;
  };

  while (!queue.empty()) {
    const int s = queue.front();
    queue.pop_front();
    const Vertex v = s / 2;
    const int parity = s % 2;
    const auto nb = g.neighbors(v);
    const auto inc = g.incident(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const EdgeId e = inc[i];
      // even positions leave along non-H edges, odd positions along H edges
      if (static_cast<bool>(state.in_h[e]) != (parity == 1)) continue;
      const int next = 2 * nb[i] + (1 - parity);
      if (rs.reached_[next] || on_trail(s, e)) continue;
      rs.reached_[next] = 1;
      rs.pred_state_[next] = s;
      rs.pred_edge_[next] = e;
      queue.push_back(next);
    }
  }
  return rs;
}

// -------------------------------------------------------------------- moves

std::string_view to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::EvenTrail: return "even-trail";
    case MoveKind::OddTrail: return "odd-trail";
    case MoveKind::LowerAnchor: return "lower-anchor";
    case MoveKind::RaiseAnchor: return "raise-anchor";
  }
  return "unknown";
}

std::string_view to_string(FactorStatus status) {
  switch (status) {
    case FactorStatus::Found: return "found";
    case FactorStatus::Infeasible: return "infeasible";
    case FactorStatus::Undetermined: return "undetermined";
  }
  return "unknown";
}

namespace {

void alternate(FactorState& s, const Trail& t) {
  for (EdgeId e : t.edges) s.toggle(e);
}

bool caps_hold(const FactorState& s) {
  for (Vertex v = 0; v < static_cast<int>(s.deg_h.size()); ++v)
    if (s.deg_h[v] > s.cap(v)) return false;
  return true;
}

bool trail_uses(const Trail& t, EdgeId e) {
  return std::find(t.edges.begin(), t.edges.end(), e) != t.edges.end();
}

// Re-choose a lower window at v in A. If v currently meets its anchor, an
// even trail ending at v first moves one unit of deficiency onto v.
std::optional<FactorState> try_lower_anchor(const FactorState& state, const ReachabilitySets& sets, Vertex v,
                                            int j, long long before) {
  const Graph& g = *state.graph;
  const Window target = state.windows[v][j];
  int outside_b = 0;
  for (Vertex u : g.neighbors(v))
    if (!sets.in_b(u)) ++outside_b;
  if (outside_b > target.hi) return std::nullopt;

  FactorState cand = state;
  if (cand.deg_h[v] >= cand.anchor(v)) {
    auto t = sets.trail(v, 0);
    if (!t || t->start() == v) return std::nullopt;
    alternate(cand, *t);
  }
  cand.choice[v] = j;
  const auto nb = g.neighbors(v);
  const auto inc = g.incident(v);
  for (std::size_t i = 0; i < nb.size() && cand.deg_h[v] > target.hi; ++i)
    if (cand.in_h[inc[i]] && sets.in_b(nb[i])) cand.toggle(inc[i]);
  if (cand.deg_h[v] > target.hi || !caps_hold(cand)) return std::nullopt;
  if (compute_deficiency(cand) >= before) return std::nullopt;
  return cand;
}

// Re-choose a higher window at v in B and add edges from v into A,
// starting with vw where w is made deficient first if necessary.
std::optional<FactorState> try_raise_anchor(const FactorState& state, const ReachabilitySets& sets, Vertex v,
                                            int j, long long before) {
  const Graph& g = *state.graph;
  const Window target = state.windows[v][j];
  const auto nb = g.neighbors(v);
  const auto inc = g.incident(v);
  for (std::size_t k = 0; k < nb.size(); ++k) {
    const Vertex w = nb[k];
    const EdgeId vw = inc[k];
    if (!sets.in_a(w) || state.in_h[vw]) continue;

    FactorState cand = state;
    if (cand.deg_h[w] >= cand.anchor(w)) {
      auto t = sets.trail(w, 0);
      if (!t || trail_uses(*t, vw)) continue;
      alternate(cand, *t);
    }
    if (cand.in_h[vw] || cand.deg_h[w] >= cand.cap(w)) continue;
    cand.choice[v] = j;
    cand.toggle(vw);
    for (std::size_t i = 0; i < nb.size() && cand.deg_h[v] < target.lo; ++i) {
      if (cand.in_h[inc[i]] || !sets.in_a(nb[i])) continue;
      if (cand.deg_h[nb[i]] >= cand.cap(nb[i])) continue;
      cand.toggle(inc[i]);
    }
    if (cand.deg_h[v] < target.lo || cand.deg_h[v] > target.hi || !caps_hold(cand)) continue;
    if (compute_deficiency(cand) >= before) continue;
    return cand;
  }
  return std::nullopt;
}

}  // namespace

std::optional<MoveKind> apply_move(FactorState& state, const ReachabilitySets& sets) {
  const long long before = compute_deficiency(state);
  if (before == 0) throw PreconditionViolated("apply_move: deficiency is already zero");
  const int n = static_cast<int>(state.deg_h.size());

  for (Vertex v = 0; v < n; ++v) {
    if (sets.in_a(v) && state.deg_h[v] > state.anchor(v)) {
      alternate(state, *sets.trail(v, 0));
      return MoveKind::EvenTrail;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!sets.in_b(v)) continue;
    const auto t = sets.trail(v, 1);
    const int gain = t->start() == v ? 2 : 1;
    if (state.deg_h[v] + gain <= state.cap(v)) {
      alternate(state, *t);
      return MoveKind::OddTrail;
    }
  }
  // With no trail move left, a vertex in both A and B must have b_v = a_v.
  for (Vertex v = 0; v < n; ++v)
    if (sets.in_a(v) && sets.in_b(v) && state.cap(v) > state.anchor(v))
      throw std::logic_error("reachability sets overlap at a vertex with b_v > a_v");

  for (Vertex v = 0; v < n; ++v) {
    if (!sets.in_a(v)) continue;
    for (int j = state.choice[v] - 1; j >= 0; --j) {
      if (auto cand = try_lower_anchor(state, sets, v, j, before)) {
        state = std::move(*cand);
        return MoveKind::LowerAnchor;
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (!sets.in_b(v)) continue;
    for (int j = state.choice[v] + 1; j < static_cast<int>(state.windows[v].size()); ++j) {
      if (auto cand = try_raise_anchor(state, sets, v, j, before)) {
        state = std::move(*cand);
        return MoveKind::RaiseAnchor;
      }
    }
  }
  return std::nullopt;
}

// ------------------------------------------------------------------ solving

namespace {

FactorOutcome finish(const Graph& g, const DegreeListSpec& spec, std::vector<EdgeId> edges, std::string method) {
  if (!verify_factor(g, spec, edges)) throw std::logic_error(method + " produced a subgraph outside the lists");
  FactorOutcome out;
  out.status = FactorStatus::Found;
  out.solution = make_solution(g, std::move(edges));
  out.method = std::move(method);
  return out;
}

class WindowSearch {
 public:
  WindowSearch(const Graph& g, std::vector<std::vector<Window>> windows, long long budget)
      : g_(g), windows_(std::move(windows)), budget_(budget), fixed_(g.order(), -1) {}

  std::optional<std::vector<EdgeId>> run() {
    if (dfs()) return found_;
    return std::nullopt;
  }
  bool exhausted_cleanly() const { return !aborted_ && !inconclusive_; }
  bool aborted() const { return aborted_; }

 private:
  Window bounds(Vertex v) const {
    const auto& w = windows_[v];
    if (fixed_[v] >= 0) return w[fixed_[v]];
    return {w.front().lo, w.back().hi};
  }

  int window_of(Vertex v, int degree) const {
    const auto& w = windows_[v];
    for (int i = 0; i < static_cast<int>(w.size()); ++i)
      if (w[i].lo <= degree && degree <= w[i].hi) return i;
    return -1;
  }

  bool dfs() {
    if (++nodes_ > budget_) {
      aborted_ = true;
      return false;
    }
    IntervalSpec spec;
    for (Vertex v = 0; v < g_.order(); ++v) {
      const Window b = bounds(v);
      spec.lower.push_back(b.lo);
      spec.upper.push_back(b.hi);
    }
    const FlowOutcome flow = gf_factor_flow(g_, spec);
    if (flow.status == FlowStatus::Infeasible) return false;

    Vertex branch = -1;
    int hint = 0;
    if (flow.status == FlowStatus::Found) {
      for (Vertex v = 0; v < g_.order() && branch < 0; ++v) {
        if (window_of(v, flow.solution->degrees[v]) < 0) {
          branch = v;
          hint = flow.solution->degrees[v];
        }
      }
      if (branch < 0) {
        found_ = flow.solution->edges;
        return true;
      }
    } else {
      for (Vertex v = 0; v < g_.order() && branch < 0; ++v)
        if (fixed_[v] < 0 && windows_[v].size() > 1) branch = v;
      if (branch < 0) {
        inconclusive_ = true;
        return false;
      }
      hint = windows_[branch].front().lo;
    }

    std::vector<int> order(windows_[branch].size());
    std::iota(order.begin(), order.end(), 0);
    auto gap = [&](int i) {
      const Window w = windows_[branch][i];
      return hint < w.lo ? w.lo - hint : (hint > w.hi ? hint - w.hi : 0);
    };
    std::stable_sort(order.begin(), order.end(), [&](int p, int q) { return gap(p) < gap(q); });
    for (int i : order) {
      fixed_[branch] = i;
      if (dfs()) return true;
      if (aborted_) break;
    }
    fixed_[branch] = -1;
    return false;
  }

  const Graph& g_;
  std::vector<std::vector<Window>> windows_;
  long long budget_;
  long long nodes_ = 0;
  bool aborted_ = false;
  bool inconclusive_ = false;
  std::vector<int> fixed_;
  std::vector<EdgeId> found_;
};

}  // namespace

FactorOutcome search_list_factor(const Graph& g, const DegreeListSpec& spec, const SolveOptions& options) {
  std::vector<std::vector<Window>> windows;
  for (Vertex v = 0; v < g.order(); ++v) windows.push_back(spec.windows(v, g.degree(v)));

  WindowSearch search(g, std::move(windows), options.fallback_nodes);
  if (auto edges = search.run()) return finish(g, spec, std::move(*edges), "window-search");

  FactorOutcome out;
  if (search.exhausted_cleanly()) {
    out.status = FactorStatus::Infeasible;
    out.method = "window-search";
    out.reason = "every window choice has an infeasible interval-factor network";
    return out;
  }
  if (g.size() <= options.oracle_edge_limit) {
    const auto r = enumerate_l_factors(g, spec);
    if (r.first_witness) return finish(g, spec, *r.first_witness, "oracle");
    out.status = FactorStatus::Infeasible;
    out.method = "oracle";
    out.reason = "exhaustive subset enumeration found no L-factor";
    return out;
  }
  out.status = FactorStatus::Undetermined;
  out.method = "window-search";
  out.reason = search.aborted() ? "window search exceeded its node budget"
                                : "interval factors with a_v = b_v could not be rounded";
  return out;
}

FactorOutcome solve_list_factor(const Graph& g, const DegreeListSpec& spec, const SolveOptions& options) {
  FactorState state = FactorState::initial(g, spec);
  const ValidationReport report = validate_spec(g, spec);
  const bool guaranteed = report.guaranteed() && spec.kind() != SpecKind::BipartiteTwoValue;

  long long degree_sum = 0;
  for (Vertex v = 0; v < g.order(); ++v) degree_sum += g.degree(v);
  const long long move_cap = 4 * degree_sum;

  long long moves = 0;
  std::array<long long, 4> counts{};
  while (compute_deficiency(state) > 0) {
    if (moves >= move_cap)
      throw InternalBound("deficiency descent exceeded " + std::to_string(move_cap) + " moves");
    const ReachabilitySets sets = reachability_sets(state);
    const auto kind = apply_move(state, sets);
    if (!kind) {
      if (guaranteed)
        throw InternalBound("no deficiency-reducing move at deficiency " + std::to_string(compute_deficiency(state)) +
                            " under a spec whose hypotheses hold");
      FactorOutcome out = search_list_factor(g, spec, options);
      out.moves = moves;
      out.move_counts = counts;
      out.reason = "descent stalled at deficiency " + std::to_string(compute_deficiency(state)) +
                   (out.reason.empty() ? "" : "; " + out.reason);
      return out;
    }
    ++counts[static_cast<int>(*kind)];
    ++moves;
  }

  std::vector<EdgeId> edges;
  for (EdgeId e = 0; e < g.size(); ++e)
    if (state.in_h[e]) edges.push_back(e);
  FactorOutcome out = finish(g, spec, std::move(edges), "descent");
  out.moves = moves;
  out.move_counts = counts;
  return out;
}

}  // namespace lfw
