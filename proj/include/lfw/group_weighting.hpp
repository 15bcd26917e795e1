#pragma once

#include <string>
#include <vector>

#include "lfw/graph.hpp"
#include "lfw/weighting.hpp"

namespace lfw {

/// True when s = 2h (mod r) for some h.
bool is_doubled(long long s, int r);

/// Checks the per-component sum conditions for realizing `target` over Z_r.
/// Returns an empty string when they hold, otherwise a description of the
/// first failing component.
std::string target_obstruction(const Graph& g, int r, const std::vector<int>& target);

/// Residue edge weights with sum_{e at v} w(e) = target[v] (mod r) for every v.
///
/// Per component: a BFS spanning tree fixes every non-root vertex through
/// its parent edge, leaves untouched non-tree edges at 0, and repairs the
/// root by +x/-x along an odd closed walk (2x = defect, smallest x).
/// Requires: non-bipartite components have a doubled target sum, bipartite
/// ones have equal part sums, and isolated vertices have target 0.
/// Throws PreconditionViolated otherwise.
EdgeWeighting realize_targets(const Graph& g, int r, const std::vector<int>& target);

/// Permutes color names so that sum_i i * |class i| is even.
///
/// Odd r and already-even colorings are returned unchanged. Swaps one
/// odd-indexed class with one even-indexed class of different size parity.
/// Throws Obstructed when r = 2 (mod 4) and every class has odd size.
ColorClasses parity_normalize_coloring(const ColorClasses& c, int r);

struct ZrWeighting {
  EdgeWeighting weighting;  // integer labels 1..r
  std::vector<int> target;  // residue target per vertex
  std::vector<std::string> routes;  // one entry per component
};

/// Vertex-coloring r-edge-weighting from a proper r-coloring (colors as
/// Z_r targets), handled per component. Bipartite components use targets
/// that balance the two part sums directly.
/// Throws PreconditionViolated (not nice, r < 2), ColoringUnavailable
/// (no proper r-coloring of some component), or Obstructed.
ZrWeighting vertex_coloring_weighting_zr(const Graph& g, int r);

}  // namespace lfw
