#pragma once

#include <map>
#include <vector>

#include "lfw/graph.hpp"

namespace lfw {

enum class LabelDomain {
  Residue,  // labels in [0, modulus), sums taken mod modulus
  Integer,  // labels in [1, modulus], exact integer sums
};

/// Total map EdgeId -> label.
struct EdgeWeighting {
  LabelDomain domain = LabelDomain::Integer;
  int modulus = 2;  // r for residues, k for integer labels
  std::vector<int> labels;

  static EdgeWeighting residues(int r, std::vector<int> labels) { return {LabelDomain::Residue, r, std::move(labels)}; }
  static EdgeWeighting integers(int k, std::vector<int> labels) { return {LabelDomain::Integer, k, std::move(labels)}; }
};

/// Throws PreconditionViolated when the weighting is not total on E(g) or a
/// label is outside its domain.
void check_total(const Graph& g, const EdgeWeighting& w);

/// c(v) = sum of incident labels (reduced mod r for residue weightings).
std::vector<long long> induced_coloring(const Graph& g, const EdgeWeighting& w);

/// Label -> multiplicity at v. Multiplicities sum to d(v).
std::map<int, int> signature(const Graph& g, const EdgeWeighting& w, Vertex v);

/// c(u) != c(v) on every edge.
bool is_vertex_coloring(const Graph& g, const EdgeWeighting& w);
/// X_u != X_v (as multisets) on every edge.
bool is_adjacent_vd(const Graph& g, const EdgeWeighting& w);

/// Residue rho in [0, r) -> integer label rho, or r when rho = 0.
EdgeWeighting residues_to_labels(const EdgeWeighting& w);

}  // namespace lfw
