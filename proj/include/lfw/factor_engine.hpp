#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "lfw/degree_spec.hpp"
#include "lfw/graph.hpp"

namespace lfw {

/// Candidate subgraph H together with the current window choice per vertex.
///
/// Invariant: d_H(v) <= cap(v) for every vertex. The deficiency
/// sum_v max(0, anchor(v) - d_H(v)) is zero exactly when H is an L-factor.
struct FactorState {
  const Graph* graph = nullptr;
  std::vector<std::vector<Window>> windows;
  std::vector<char> in_h;
  std::vector<int> deg_h;
  std::vector<int> choice;

  /// H = empty, every vertex on its lowest window.
  static FactorState initial(const Graph& g, const DegreeListSpec& spec);

  int anchor(Vertex v) const { return windows[v][choice[v]].lo; }
  int cap(Vertex v) const { return windows[v][choice[v]].hi; }
  void toggle(EdgeId e);
};

long long compute_deficiency(const FactorState& state);

/// An H-alternating trail: edges alternate not-in-H, in-H, ... starting at a
/// deficient vertex, and no edge repeats. vertices.size() == edges.size() + 1.
struct Trail {
  std::vector<Vertex> vertices;
  std::vector<EdgeId> edges;

  Vertex start() const { return vertices.front(); }
  Vertex end() const { return vertices.back(); }
  int parity() const { return static_cast<int>(edges.size() % 2); }
};

/// A = ends of even H-alternating trails from A0 = {v : d_H(v) < a_v},
/// B = ends of odd ones, each with one certificate trail.
///
/// The search runs over (vertex, parity) states; extending a state's trail
/// by an edge already on it is refused, so every certificate is a genuine
/// trail. Whenever A and B are disjoint the sets coincide with the full
/// trail-reachability sets, since they are then closed under extension.
class ReachabilitySets {
 public:
  bool in_a(Vertex v) const { return reached_[2 * v]; }
  bool in_b(Vertex v) const { return reached_[2 * v + 1]; }
  std::vector<Vertex> a() const;
  std::vector<Vertex> b() const;
  std::vector<Vertex> a0() const { return a0_; }
  bool disjoint() const;

  /// Certificate trail ending at v with the given parity (0 even, 1 odd).
  std::optional<Trail> trail(Vertex v, int parity) const;

 private:
  friend ReachabilitySets reachability_sets(const FactorState& state);

  const Graph* graph_ = nullptr;
  std::vector<Vertex> a0_;
  std::vector<char> reached_;
  std::vector<int> pred_state_;
  std::vector<EdgeId> pred_edge_;
};

/// Throws PreconditionViolated when the state has zero deficiency.
ReachabilitySets reachability_sets(const FactorState& state);

enum class MoveKind {
  EvenTrail,    // alternate an even trail ending at v with d_H(v) > a_v
  OddTrail,     // alternate an odd trail ending at v with d_H(v) < b_v
  LowerAnchor,  // re-choose a lower window at v in A, dropping v-B edges
  RaiseAnchor,  // re-choose a higher window at v in B, adding v-A edges
};

std::string_view to_string(MoveKind kind);

/// Applies the first deficiency-reducing move in priority order
/// (even trail, odd trail, lower anchor, raise anchor; lowest vertex first).
/// Returns the kind applied, or nullopt when no move reduces the deficiency.
/// Throws PreconditionViolated when the deficiency is already zero.
std::optional<MoveKind> apply_move(FactorState& state, const ReachabilitySets& sets);

enum class FactorStatus { Found, Infeasible, Undetermined };

std::string_view to_string(FactorStatus status);

struct SolveOptions {
  /// Node budget of the window-branching fallback search.
  long long fallback_nodes = 200'000;
  /// Subset enumeration is used as a last resort up to this many edges.
  int oracle_edge_limit = 22;
};

struct FactorOutcome {
  FactorStatus status = FactorStatus::Undetermined;
  std::optional<FactorSolution> solution;
  /// "descent", "window-search", or "oracle".
  std::string method;
  std::string reason;
  long long moves = 0;
  std::array<long long, 4> move_counts{};
};

/// Deficiency descent from H = empty until the deficiency is zero.
///
/// Under a spec that passes validate_spec (other than BipartiteTwoValue) the
/// descent cannot get stuck; if it does, InternalBound is thrown. Otherwise a
/// stuck descent falls back to a window-branching search over interval
/// factors, then to subset enumeration. Returned solutions are re-verified
/// by verify_factor. Throws SpecInvalid for malformed lists.
FactorOutcome solve_list_factor(const Graph& g, const DegreeListSpec& spec, const SolveOptions& options = {});

/// Exact search over window choices with interval-factor flows as the
/// relaxation. Exposed for tests; solve_list_factor uses it as fallback.
FactorOutcome search_list_factor(const Graph& g, const DegreeListSpec& spec, const SolveOptions& options = {});

}  // namespace lfw
