#include "lfw/avd.hpp"

#include <stdexcept>

#include "lfw/degree_spec.hpp"
#include "lfw/error.hpp"
#include "lfw/factor_engine.hpp"
#include "lfw/group_weighting.hpp"

namespace lfw {

namespace {

// Z_2 residue 1 -> label 1, residue 0 -> label 2.
std::vector<int> parity_labels(const EdgeWeighting& residues) {
  std::vector<int> out(residues.labels.size());
  for (std::size_t e = 0; e < out.size(); ++e) out[e] = residues.labels[e] == 1 ? 1 : 2;
  return out;
}

void require_nice_bipartite(const Graph& g, const char* who) {
  if (!is_nice(g)) throw PreconditionViolated(std::string(who) + ": graph has a component isomorphic to K2");
  if (!bipartition(g)) throw PreconditionViolated(std::string(who) + ": graph is not bipartite");
}

const std::vector<Vertex>& even_part(const Bipartition& bp) {
  return bp.x.size() % 2 == 0 ? bp.x : bp.y;
}

// Component labels from parity targets: odd sums on `ones`, even elsewhere.
std::vector<int> parity_weighting(const Graph& h, std::span<const Vertex> ones) {
  std::vector<int> t(h.order(), 0);
  for (Vertex v : ones) t[v] = 1;
  return parity_labels(realize_targets(h, 2, t));
}

void copy_back(const InducedSubgraph& sub, const std::vector<int>& labels, std::vector<int>& host) {
  for (EdgeId e = 0; e < sub.graph.size(); ++e) host[sub.to_host_edge[e]] = labels[e];
}

}  // namespace

EdgeWeighting advd2_bipartite_delta6(const Graph& g) {
  require_nice_bipartite(g, "advd2_bipartite_delta6");
  if (g.order() == 0 || g.min_degree() < 6)
    throw PreconditionViolated("advd2_bipartite_delta6: minimum degree " + std::to_string(g.min_degree()) +
                               " is below 6");
  const Bipartition bp = *bipartition(g);
  const DegreeListSpec spec = bipartite_preset(g, bp, Rational(1, 2), {-1, 2});
  const FactorOutcome fo = solve_list_factor(g, spec);
  if (fo.status != FactorStatus::Found)
    throw InternalBound("no factor with the two-value degree lists: " + fo.reason);

  EdgeWeighting w = EdgeWeighting::integers(2, std::vector<int>(g.size(), 2));
  for (EdgeId e : fo.solution->edges) w.labels[e] = 1;
  for (Vertex v = 0; v < g.order(); ++v) {
    const int half = g.degree(v) / 2;
    const int ones = fo.solution->degrees[v];
    const bool ok = bp.in_x(v) ? (ones == half || ones == half + 1) : (ones == half - 1 || ones == half + 2);
    if (!ok) throw std::logic_error("label-1 count outside its list at vertex " + std::to_string(v));
  }
  if (!is_adjacent_vd(g, w)) throw std::logic_error("two-value factor weighting is not adjacent-distinguishing");
  return w;
}

std::optional<Vertex> find_degree_gap_vertex(const Graph& g, std::span<const Vertex> among) {
  for (Vertex v : among) {
    bool gap = true;
    for (Vertex u : g.neighbors(v)) gap = gap && g.degree(u) != g.degree(v);
    if (gap) return v;
  }
  return std::nullopt;
}

EdgeWeighting advd2_degree_gap(const Graph& g, std::optional<Vertex> v) {
  require_nice_bipartite(g, "advd2_degree_gap");
  if (v) {
    if (*v < 0 || *v >= g.order()) throw PreconditionViolated("vertex " + std::to_string(*v) + " is out of range");
    const Vertex one[] = {*v};
    if (!find_degree_gap_vertex(g, one))
      throw PreconditionViolated("vertex " + std::to_string(*v) + " has a neighbor of the same degree " +
                                 std::to_string(g.degree(*v)));
  }

  std::vector<int> labels(g.size(), 2);
  for (const auto& comp : components(g)) {
    const auto sub = induced_subgraph(g, comp);
    const Bipartition bp = *bipartition(sub.graph);
    if (bp.x.size() % 2 == 0 || bp.y.size() % 2 == 0) {
      copy_back(sub, parity_weighting(sub.graph, even_part(bp)), labels);
      continue;
    }
    std::optional<Vertex> gap;
    if (v) {
      for (Vertex i = 0; i < sub.graph.order(); ++i)
        if (sub.to_host_vertex[i] == *v) gap = i;
    }
    if (!gap) {
      std::vector<Vertex> all(sub.graph.order());
      for (Vertex i = 0; i < sub.graph.order(); ++i) all[i] = i;
      gap = find_degree_gap_vertex(sub.graph, all);
    }
    if (!gap)
      throw PreconditionViolated("component of vertex " + std::to_string(comp.front()) +
                                 " has parts of odd size and no vertex with a degree gap");
    std::vector<Vertex> ones;
    for (Vertex u : bp.in_x(*gap) ? bp.x : bp.y)
      if (u != *gap) ones.push_back(u);
    copy_back(sub, parity_weighting(sub.graph, ones), labels);
  }

  EdgeWeighting w = EdgeWeighting::integers(2, std::move(labels));
  if (!is_adjacent_vd(g, w)) throw std::logic_error("degree-gap weighting is not adjacent-distinguishing");
  return w;
}

Vc2Result vc2_bipartite(const Graph& g, long long oracle_budget) {
  require_nice_bipartite(g, "vc2_bipartite");
  Vc2Result out;

  bool all_even = true;
  std::vector<int> labels(g.size(), 2);
  std::vector<InducedSubgraph> odd_components;
  for (const auto& comp : components(g)) {
    auto sub = induced_subgraph(g, comp);
    const Bipartition bp = *bipartition(sub.graph);
    if (bp.x.size() % 2 == 0 || bp.y.size() % 2 == 0) {
      copy_back(sub, parity_weighting(sub.graph, even_part(bp)), labels);
    } else {
      all_even = false;
      odd_components.push_back(std::move(sub));
    }
  }

  if (all_even) {
    out.condition = "even-part";
  } else if (g.min_degree() == 1) {
    out.condition = "min-degree-one";
  } else {
    const Bipartition bp = *bipartition(g);
    bool gap = true;
    for (const auto& e : g.edges()) {
      const Vertex x = bp.in_x(e.u) ? e.u : e.v;
      gap = gap && g.degree(x) / 2 + 1 != g.degree(e.u == x ? e.v : e.u);
    }
    out.condition = gap ? "half-degree-gap" : "none";
  }

  out.route = all_even ? "z2-parity" : "oracle";
  for (const auto& sub : odd_components) {
    WeightingCount wc;
    try {
      wc = enumerate_weightings(sub.graph, 2, WeightPredicate::VertexColoring, oracle_budget);
    } catch (const BudgetExceeded&) {
      out.route = "none";
      return out;
    }
    if (!wc.first_witness) {
      out.route = "oracle";
      out.certified_none = true;
      return out;
    }
    copy_back(sub, *wc.first_witness, labels);
  }

  EdgeWeighting w = EdgeWeighting::integers(2, std::move(labels));
  if (!is_vertex_coloring(g, w)) throw std::logic_error("vc2 weighting does not induce a proper coloring");
  out.weighting = std::move(w);
  return out;
}

}  // namespace lfw
