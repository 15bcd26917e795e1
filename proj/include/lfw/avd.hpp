#pragma once

#include <optional>
#include <string>

#include "lfw/graph.hpp"
#include "lfw/oracle.hpp"
#include "lfw/weighting.hpp"

namespace lfw {

/// Adjacent vertex-distinguishing {1,2}-weighting of a nice bipartite graph
/// with minimum degree at least 6. Solves for H with d_H in
/// {floor(d/2), floor(d/2)+1} on X and {floor(d/2)-1, floor(d/2)+2} on Y,
/// then labels H-edges 1 and the rest 2.
/// Throws PreconditionViolated, or InternalBound if no such H is found.
EdgeWeighting advd2_bipartite_delta6(const Graph& g);

/// Adjacent vertex-distinguishing {1,2}-weighting of a nice bipartite graph
/// from a vertex v whose degree differs from all its neighbors' degrees.
///
/// Per component: if both parts have odd size, part sums are forced odd on
/// U - v and even on W + v, where U is the part holding the gap vertex;
/// otherwise the component gets the parity weighting of vc2_bipartite.
/// With no v given, a gap vertex is picked per odd-by-odd component.
/// Throws PreconditionViolated when v has no degree gap or some odd-by-odd
/// component has no gap vertex.
EdgeWeighting advd2_degree_gap(const Graph& g, std::optional<Vertex> v = std::nullopt);

/// Lowest vertex whose degree differs from every neighbor's degree.
std::optional<Vertex> find_degree_gap_vertex(const Graph& g, std::span<const Vertex> among);

struct Vc2Result {
  std::optional<EdgeWeighting> weighting;
  /// Set when exhaustive search proved that no weighting exists.
  bool certified_none = false;
  /// "even-part", "min-degree-one", "half-degree-gap" or "none".
  std::string condition;
  /// "z2-parity", "oracle" or "none".
  std::string route;
};

inline constexpr long long kVc2OracleBudget = 1LL << 24;

/// Vertex-coloring {1,2}-weighting of a nice bipartite graph. Components
/// with an even part get parity targets over Z_2 (even part odd sums, the
/// other even). Otherwise an exhaustive search is tried within
/// `oracle_budget`; beyond it the result is Unknown.
Vc2Result vc2_bipartite(const Graph& g, long long oracle_budget = kVc2OracleBudget);

}  // namespace lfw
