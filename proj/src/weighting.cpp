#include "lfw/weighting.hpp"

#include "lfw/error.hpp"

namespace lfw {

void check_total(const Graph& g, const EdgeWeighting& w) {
  if (static_cast<int>(w.labels.size()) != g.size())
    throw PreconditionViolated("weighting labels " + std::to_string(w.labels.size()) + " edges, graph has " +
                               std::to_string(g.size()));
  const int lo = w.domain == LabelDomain::Residue ? 0 : 1;
  const int hi = w.domain == LabelDomain::Residue ? w.modulus - 1 : w.modulus;
  for (EdgeId e = 0; e < g.size(); ++e)
    if (w.labels[e] < lo || w.labels[e] > hi)
      throw PreconditionViolated("label " + std::to_string(w.labels[e]) + " on edge " + std::to_string(e) +
                                 " is outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

std::vector<long long> induced_coloring(const Graph& g, const EdgeWeighting& w) {
  check_total(g, w);
  std::vector<long long> c(g.order(), 0);
  for (EdgeId e = 0; e < g.size(); ++e) {
    c[g.edge(e).u] += w.labels[e];
    c[g.edge(e).v] += w.labels[e];
  }
  if (w.domain == LabelDomain::Residue)
    for (auto& x : c) x %= w.modulus;
  return c;
}

std::map<int, int> signature(const Graph& g, const EdgeWeighting& w, Vertex v) {
  check_total(g, w);
  std::map<int, int> out;
  for (EdgeId e : g.incident(v)) ++out[w.labels[e]];
  return out;
}

bool is_vertex_coloring(const Graph& g, const EdgeWeighting& w) {
  const auto c = induced_coloring(g, w);
  for (const auto& e : g.edges())
    if (c[e.u] == c[e.v]) return false;
  return true;
}

bool is_adjacent_vd(const Graph& g, const EdgeWeighting& w) {
  check_total(g, w);
  std::vector<std::map<int, int>> sig(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    for (EdgeId e : g.incident(v)) ++sig[v][w.labels[e]];
  for (const auto& e : g.edges())
    if (sig[e.u] == sig[e.v]) return false;
  return true;
}

EdgeWeighting residues_to_labels(const EdgeWeighting& w) {
  if (w.domain != LabelDomain::Residue) return w;
  EdgeWeighting out = EdgeWeighting::integers(w.modulus, w.labels);
  for (auto& x : out.labels)
    if (x == 0) x = w.modulus;
  return out;
}

}  // namespace lfw
