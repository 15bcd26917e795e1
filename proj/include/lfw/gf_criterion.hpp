#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lfw/degree_spec.hpp"
#include "lfw/graph.hpp"

namespace lfw {

/// Per-vertex degree interval [lower, upper].
struct IntervalSpec {
  std::vector<int> lower;
  std::vector<int> upper;
};

/// Throws SpecInvalid unless 0 <= a_v <= b_v <= d(v) for every vertex.
void validate_interval_spec(const Graph& g, const IntervalSpec& spec);

/// a_v < b_v everywhere, or the graph is bipartite.
bool heinrich_applicable(const Graph& g, const IntervalSpec& spec);

struct HeinrichWitness {
  std::vector<Vertex> a;
  std::vector<Vertex> b;
  long long lhs = 0;  // sum over A of (a_v - d_{G-B}(v))
  long long rhs = 0;  // sum over B of b_v
};

enum class HeinrichStatus { Feasible, Infeasible, NotApplicable };

struct HeinrichResult {
  HeinrichStatus status = HeinrichStatus::NotApplicable;
  std::optional<HeinrichWitness> witness;
};

inline constexpr int kHeinrichMaxVertices = 16;

/// Scans all 3^n assignments vertex -> {neither, A, B} in base-3 counter
/// order (vertex 0 least significant) and returns the first pair violating
///   sum_{v in A} (a_v - d_{G-B}(v)) <= sum_{v in B} b_v.
/// Throws BudgetExceeded when n > max_vertices.
HeinrichResult heinrich_check(const Graph& g, const IntervalSpec& spec, int max_vertices = kHeinrichMaxVertices);

enum class FlowStatus { Found, Infeasible, Undetermined };

struct FlowOutcome {
  FlowStatus status = FlowStatus::Undetermined;
  std::optional<FactorSolution> solution;
  std::string reason;
};

/// (a_v, b_v)-factor by max-flow with lower bounds.
///
/// Bipartite graphs use the direct X -> Y network, which is exact.
/// Otherwise the vertex-split (double cover) network gives a half-integral
/// solution that is rounded along Euler circuits of its half edges; this
/// always succeeds when a_v < b_v everywhere. An infeasible network is a
/// certificate of infeasibility in both cases. Undetermined is returned only
/// for non-bipartite graphs with some a_v = b_v where rounding gets stuck.
FlowOutcome gf_factor_flow(const Graph& g, const IntervalSpec& spec);

}  // namespace lfw
