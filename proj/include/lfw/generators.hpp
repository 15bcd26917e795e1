#pragma once

#include <cstdint>
#include <random>

#include "lfw/graph.hpp"

namespace lfw {

using Rng = std::mt19937_64;

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);  // X = 0..a-1, Y = a..a+b-1
Graph cycle_graph(int n);
Graph path_graph(int n);
/// Hub 0 joined to a rim cycle 1..rim.
Graph wheel_graph(int rim);
Graph petersen_graph();

/// G(n, p).
Graph random_graph(int n, double p, Rng& rng);

/// G(n, p) resampled until the minimum degree reaches `min_degree`
/// (p is raised after every 50 failed draws).
Graph random_graph_min_degree(int n, int min_degree, double p, Rng& rng);

/// Connected non-bipartite graph: a random spanning tree, a chord closing
/// an odd cycle, then extra edges with probability p.
Graph random_connected_non_bipartite(int n, double p, Rng& rng);

/// Bipartite graph on parts of sizes a and b where every vertex has degree
/// at least `min_degree`: random edges with probability p, then repair
/// edges for each deficient vertex. Requires min_degree <= min(a, b).
Graph random_bipartite_min_degree(int a, int b, int min_degree, double p, Rng& rng);

/// Stacked triangulation: start from a triangle and repeatedly insert a
/// vertex into a random face. Each edge is then dropped with probability
/// `drop` while the graph stays nice.
Graph random_planar(int n, Rng& rng, double drop = 0.0);

/// Random k-partite graph: hidden color per vertex, edges between distinct
/// colors with probability p. Retried until nice.
Graph random_k_colorable(int n, int k, double p, Rng& rng);

/// Applies a vertex permutation (new id of v is perm[v]).
Graph relabel(const Graph& g, const std::vector<Vertex>& perm);

}  // namespace lfw
