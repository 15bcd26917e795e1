#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace lfw {

using Vertex = int;
using EdgeId = int;

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Edges are kept sorted by (min endpoint, max endpoint); an EdgeId is the
/// position in that order, which every module uses as the canonical edge
/// enumeration order. Neighbor lists are sorted ascending and carry the
/// incident EdgeId in a parallel array.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Duplicates are collapsed; endpoints may be given in either order.
  /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
  Graph(int n, std::vector<Edge> edges);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  Vertex other(EdgeId e, Vertex v) const {
    return edges_[e].u == v ? edges_[e].v : edges_[e].u;
  }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  std::span<const EdgeId> incident(Vertex v) const {
    return {inc_.data() + offsets_[v], inc_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  int min_degree() const;
  int max_degree() const;

  std::optional<EdgeId> find_edge(Vertex a, Vertex b) const;
  bool adjacent(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> offsets_{0};
  std::vector<Vertex> adj_;
  std::vector<EdgeId> inc_;
};

// ---------------------------------------------------------------- ingestion

/// Largest vertex count accepted by the parsers.
inline constexpr int kMaxVertices = 10'000'000;

/// Line-oriented "u v" pairs, optionally preceded by a header "n <count>".
/// Blank lines and lines starting with '#' are skipped.
Graph parse_edge_list(std::string_view text);

/// Decodes one graph6 string (optional ">>graph6<<" header, trailing
/// whitespace ignored). Supports the 1-, 4- and 8-byte size prefixes.
Graph parse_graph6(std::string_view text);

std::string to_graph6(const Graph& g);

/// Canonical edge-list text: "n <count>" header followed by one "u v" line
/// per edge in EdgeId order.
std::string to_edge_list(const Graph& g);

/// Routes on a leading "graph6:" prefix; anything else is an edge list.
Graph read_graph(std::string_view text);

// ------------------------------------------------------- structural queries

/// Component index per vertex, numbered in order of their lowest vertex.
std::vector<int> component_ids(const Graph& g);
int component_count(const Graph& g);
std::vector<std::vector<Vertex>> components(const Graph& g);

/// A subgraph induced on a vertex subset, with maps back to the host.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host_vertex;
  std::vector<EdgeId> to_host_edge;
};
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

struct Bipartition {
  std::vector<int> side;  // 0 for X, 1 for Y
  std::vector<Vertex> x;
  std::vector<Vertex> y;

  bool in_x(Vertex v) const { return side[v] == 0; }
};

/// 2-coloring by BFS from the lowest vertex of each component, which is
/// placed in X. Empty when some component contains an odd cycle.
std::optional<Bipartition> bipartition(const Graph& g);

/// No connected component is a single edge.
bool is_nice(const Graph& g);

/// Closed walk of odd length through `root`, as a vertex sequence whose
/// first and last entries are `root`. Throws PreconditionViolated when the
/// component of `root` is bipartite.
std::vector<Vertex> find_odd_closed_walk(const Graph& g, Vertex root);

// ----------------------------------------------------------------- coloring

/// Total map vertex -> color in 1..k. Classes may be empty.
struct ColorClasses {
  int k = 0;
  std::vector<int> color;

  /// sizes()[i - 1] is the size of class i.
  std::vector<int> sizes() const;
  std::vector<Vertex> members(int c) const;
  bool is_proper(const Graph& g) const;
};

inline constexpr long long kDefaultColoringNodeLimit = 50'000'000;

/// Exact backtracking (DSatur order, first-fit with symmetry breaking).
/// Deterministic. Throws BudgetExceeded past `node_limit` search nodes.
std::optional<ColorClasses> proper_coloring_exact(
    const Graph& g, int k, long long node_limit = kDefaultColoringNodeLimit);

/// Same search, but returns the first proper k-coloring whose class-size
/// vector satisfies `accept`. Colorings are visited up to permutation of
/// color names, so `accept` should be invariant under such permutations.
std::optional<ColorClasses> find_coloring_if(
    const Graph& g, int k, const std::function<bool(const std::vector<int>&)>& accept,
    long long node_limit = kDefaultColoringNodeLimit);

}  // namespace lfw
