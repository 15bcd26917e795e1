#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "lfw/degree_spec.hpp"
#include "lfw/graph.hpp"

namespace lfw {

inline constexpr long long kDefaultOracleBudget = 1LL << 30;

enum class WeightPredicate { VertexColoring, AdjacentVD };

std::string_view to_string(WeightPredicate p);

struct WeightingCount {
  long long count = 0;
  /// Integer labels 1..k per EdgeId.
  std::optional<std::vector<int>> first_witness;
  long long enumerated = 0;
};

/// Counts all k^|E| weightings satisfying the predicate. Weightings are
/// visited in base-k order with edge 0 most significant, so the witness is
/// the lexicographically first label vector. Throws BudgetExceeded when
/// k^|E| exceeds `budget`.
WeightingCount enumerate_weightings(const Graph& g, int k, WeightPredicate pred,
                                    long long budget = kDefaultOracleBudget);

struct LFactorCount {
  long long count = 0;
  std::optional<std::vector<EdgeId>> first_witness;
  long long enumerated = 0;
};

/// Counts edge subsets H with d_H(v) in L(v) for every v. Subsets are
/// visited as binary numbers with edge 0 the most significant bit.
/// Throws BudgetExceeded when 2^|E| exceeds `budget`.
LFactorCount enumerate_l_factors(const Graph& g, const DegreeListSpec& spec, long long budget = kDefaultOracleBudget);

/// Same, for explicit allowed-degree sets (allowed[v][d] != 0).
LFactorCount enumerate_l_factors(const Graph& g, const std::vector<std::vector<char>>& allowed,
                                 long long budget = kDefaultOracleBudget);

}  // namespace lfw
