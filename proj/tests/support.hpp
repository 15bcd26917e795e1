#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "lfw/generators.hpp"
#include "lfw/graph.hpp"

namespace lfw::test {

inline Graph graph_of(int n, std::vector<Edge> edges) { return Graph(n, std::move(edges)); }

inline Graph k2() { return graph_of(2, {{0, 1}}); }
inline Graph k3() { return complete_graph(3); }
inline Graph p3() { return path_graph(3); }
inline Graph star(int leaves) { return complete_bipartite(1, leaves); }

/// Every labeled graph on n vertices, by edge mask over the pairs (u < v)
/// in lexicographic order.
inline std::vector<Graph> all_labeled_graphs(int n) {
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
  std::vector<Graph> out;
  const long long total = 1LL << pairs.size();
  out.reserve(static_cast<std::size_t>(total));
  for (long long mask = 0; mask < total; ++mask) {
    std::vector<Edge> e;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) e.push_back(pairs[i]);
    out.emplace_back(n, std::move(e));
  }
  return out;
}

/// Canonical form: lexicographically smallest sorted edge list over all
/// vertex permutations.
inline std::vector<Edge> canonical_edges(const Graph& g) {
  std::vector<Vertex> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Edge> best;
  bool first = true;
  do {
    std::vector<Edge> e;
    for (const auto& ed : g.edges()) e.push_back({std::min(perm[ed.u], perm[ed.v]), std::max(perm[ed.u], perm[ed.v])});
    std::sort(e.begin(), e.end());
    if (first || e < best) best = std::move(e);
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// One representative per isomorphism class on n vertices.
inline std::vector<Graph> non_isomorphic_graphs(int n) {
  std::vector<std::vector<Edge>> seen;
  std::vector<Graph> out;
  for (const auto& g : all_labeled_graphs(n)) {
    auto c = canonical_edges(g);
    if (std::find(seen.begin(), seen.end(), c) != seen.end()) continue;
    seen.push_back(c);
    out.emplace_back(n, std::move(c));
  }
  return out;
}

inline std::vector<Vertex> random_permutation(int n, Rng& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace lfw::test
