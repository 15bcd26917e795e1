#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lfw/graph.hpp"

namespace lfw::cli {

/// Self-contained witness: the host graph plus either a factor (edge
/// membership and the allowed-degree lists) or an integer edge weighting.
///
///   lfw-witness v1
///   kind: factor | weighting
///   n: <vertices>
///   m: <edges>
///   k: <labels>            (weighting only)
///   edge <u> <v> <value>   (m lines, EdgeId order; value is 0/1 or a label)
///   list <v> <d>...        (n lines, factor only)
///   end
struct Witness {
  enum class Kind { Factor, Weighting };

  Kind kind = Kind::Factor;
  Graph graph;
  std::vector<int> values;
  int k = 0;
  std::vector<std::vector<int>> lists;
};

std::string serialize(const Witness& w);

/// Throws ParseError on anything but the canonical layout above.
Witness parse_witness(std::string_view text);

}  // namespace lfw::cli
