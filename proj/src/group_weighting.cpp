#include "lfw/group_weighting.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "lfw/error.hpp"

namespace lfw {

namespace {

int mod(long long a, int r) { return static_cast<int>(((a % r) + r) % r); }

struct ComponentInfo {
  std::vector<int> id;        // component per vertex
  std::vector<int> side;      // BFS 2-coloring, meaningful when bipartite
  std::vector<char> bipartite;  // per component
  std::vector<Vertex> root;     // lowest vertex per component
};

ComponentInfo component_info(const Graph& g) {
  ComponentInfo info;
  info.id.assign(g.order(), -1);
  info.side.assign(g.order(), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (info.id[s] >= 0) continue;
    const int c = static_cast<int>(info.root.size());
    info.root.push_back(s);
    info.bipartite.push_back(1);
    info.id[s] = c;
    std::deque<Vertex> q{s};
    while (!q.empty()) {
      const Vertex v = q.front();
      q.pop_front();
      for (Vertex u : g.neighbors(v)) {
        if (info.id[u] < 0) {
          info.id[u] = c;
          info.side[u] = 1 - info.side[v];
          q.push_back(u);
        } else if (info.side[u] == info.side[v]) {
          info.bipartite[c] = 0;
        }
      }
    }
  }
  return info;
}

}  // namespace

bool is_doubled(long long s, int r) { return r % 2 == 1 || mod(s, r) % 2 == 0; }

std::string target_obstruction(const Graph& g, int r, const std::vector<int>& target) {
  const ComponentInfo info = component_info(g);
  const int k = static_cast<int>(info.root.size());
  std::vector<long long> part[2] = {std::vector<long long>(k, 0), std::vector<long long>(k, 0)};
  for (Vertex v = 0; v < g.order(); ++v) part[info.side[v]][info.id[v]] += target[v];
  for (int c = 0; c < k; ++c) {
    const std::string where = "component of vertex " + std::to_string(info.root[c]);
    if (info.bipartite[c]) {
      if (mod(part[0][c], r) != mod(part[1][c], r))
        return where + " is bipartite with part sums " + std::to_string(mod(part[0][c], r)) + " and " +
               std::to_string(mod(part[1][c], r)) + " (mod " + std::to_string(r) + ")";
    } else if (!is_doubled(part[0][c] + part[1][c], r)) {
      return where + " has target sum " + std::to_string(mod(part[0][c] + part[1][c], r)) +
             ", which is not of the form 2h mod " + std::to_string(r);
    }
  }
  return {};
}

EdgeWeighting realize_targets(const Graph& g, int r, const std::vector<int>& target) {
  if (r < 1) throw PreconditionViolated("modulus must be positive");
  if (static_cast<int>(target.size()) != g.order()) throw PreconditionViolated("target does not cover every vertex");
  std::vector<int> t(g.order());
  for (Vertex v = 0; v < g.order(); ++v) t[v] = mod(target[v], r);
  if (auto why = target_obstruction(g, r, t); !why.empty()) throw PreconditionViolated(why);

  std::vector<int> w(g.size(), 0);
  auto vertex_sum = [&](Vertex v) {
    long long s = 0;
    for (EdgeId e : g.incident(v)) s += w[e];
    return mod(s, r);
  };

  std::vector<char> seen(g.order(), 0);
  std::vector<EdgeId> parent_edge(g.order(), -1);
  for (Vertex root = 0; root < g.order(); ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> order{root};
    seen[root] = 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const Vertex v = order[i];
      const auto nb = g.neighbors(v);
      const auto inc = g.incident(v);
      for (std::size_t j = 0; j < nb.size(); ++j) {
        if (seen[nb[j]]) continue;
        seen[nb[j]] = 1;
        parent_edge[nb[j]] = inc[j];
        order.push_back(nb[j]);
      }
    }
    for (std::size_t i = order.size(); i-- > 1;) {
      const Vertex v = order[i];
      w[parent_edge[v]] = mod(t[v] - vertex_sum(v), r);
    }
    const int defect = mod(t[root] - vertex_sum(root), r);
    if (defect == 0) continue;

    int x = 0;
    while (x < r && mod(2LL * x, r) != defect) ++x;
    if (x == r) throw std::logic_error("root defect is not doubled after the precondition check");
    const auto walk = find_odd_closed_walk(g, root);
    for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
      const EdgeId e = *g.find_edge(walk[i], walk[i + 1]);
      w[e] = mod(w[e] + (i % 2 == 0 ? x : -x), r);
    }
  }

  for (Vertex v = 0; v < g.order(); ++v)
    if (vertex_sum(v) != t[v]) throw std::logic_error("realized sum differs from target at vertex " + std::to_string(v));
  return EdgeWeighting::residues(r, std::move(w));
}

// ------------------------------------------------------------ normalization

ColorClasses parity_normalize_coloring(const ColorClasses& c, int r) {
  if (c.k != r) throw PreconditionViolated("coloring has " + std::to_string(c.k) + " classes, expected " + std::to_string(r));
  const auto n = c.sizes();
  long long weighted = 0;
  for (int i = 1; i <= r; ++i) weighted += static_cast<long long>(i) * n[i - 1];
  if (r % 2 == 1 || weighted % 2 == 0) return c;

  auto size = [&](int i) { return n[i - 1]; };
  auto first = [&](int start, auto pred) {
    for (int i = start; i <= r; i += 2)
      if (pred(i)) return i;
    return 0;
  };
  auto even = [&](int i) { return size(i) % 2 == 0; };
  auto odd = [&](int i) { return size(i) % 2 == 1; };

  int p = 0, q = 0;  // p odd-indexed, q even-indexed
  if (r % 4 == 0) {
    // An odd weighted sum forces some odd-indexed class of even size.
    p = first(1, even);
    q = first(2, odd);
    if (q == 0) {
      p = first(1, odd);
      q = 2;
    }
  } else {
    q = first(2, even);
    if (q != 0) {
      p = first(1, odd);
    } else {
      p = first(1, even);
      q = 2;
      if (p == 0) throw Obstructed("every color class has odd size and r = 2 (mod 4)");
    }
  }
  if (p == 0 || q == 0 || size(p) % 2 == size(q) % 2)
    throw std::logic_error("parity normalization found no class pair to swap");

  ColorClasses out = c;
  for (int& col : out.color) {
    if (col == p) col = q;
    else if (col == q) col = p;
  }
  return out;
}

// ------------------------------------------------------------ Z_r weighting

namespace {

// Targets for a connected bipartite component (as a local graph): one part
// is constant p, the other avoids p and carries the balancing sum.
std::vector<int> bipartite_targets(const Bipartition& bp, int r, std::string& route) {
  const int nv = static_cast<int>(bp.side.size());
  std::vector<int> t(nv, 0);
  if (nv == 1) {
    route = "isolated";
    return t;
  }
  if (r == 2) {
    int ones = -1;
    if (bp.x.size() % 2 == 0) ones = 0;
    else if (bp.y.size() % 2 == 0) ones = 1;
    if (ones < 0)
      throw Obstructed("bipartite component with parts of odd sizes " + std::to_string(bp.x.size()) + " and " +
                       std::to_string(bp.y.size()) + " has no vertex-coloring Z_2 weighting");
    for (Vertex v = 0; v < nv; ++v) t[v] = bp.side[v] == ones ? 1 : 0;
    route = "bipartite-even-part";
    return t;
  }
  // The larger part varies; it has at least two vertices in a nice component.
  const auto& vary = bp.x.size() >= bp.y.size() ? bp.x : bp.y;
  const auto& fixed = bp.x.size() >= bp.y.size() ? bp.y : bp.x;
  const int p = 0;
  for (Vertex v : fixed) t[v] = p;
  for (Vertex v : vary) t[v] = 1;
  const int rest = mod(static_cast<long long>(fixed.size()) * p - static_cast<long long>(vary.size() - 2), r);
  int a = 0;
  while (a == p || mod(rest - a, r) == p) ++a;
  t[vary[0]] = a;
  t[vary[1]] = mod(rest - a, r);
  route = "bipartite-balance";
  return t;
}

bool has_even_class(const std::vector<int>& sizes) {
  return std::any_of(sizes.begin(), sizes.end(), [](int s) { return s % 2 == 0; });
}

std::vector<int> non_bipartite_targets(const Graph& h, int r, std::string& route) {
  auto found = proper_coloring_exact(h, r);
  if (!found) throw ColoringUnavailable("component has no proper " + std::to_string(r) + "-coloring");
  ColorClasses c = *found;
  c.k = r;
  route = r % 2 == 1 ? "odd-r" : "normalized";

  if (r % 4 == 2 && !has_even_class(c.sizes())) {
    bool recolored = false;
    for (Vertex v = 0; v < h.order() && !recolored; ++v) {
      if (h.degree(v) > r - 2) continue;
      std::vector<char> used(r + 1, 0);
      for (Vertex u : h.neighbors(v)) used[c.color[u]] = 1;
      for (int j = 1; j <= r; ++j) {
        if (j != c.color[v] && !used[j]) {
          c.color[v] = j;
          recolored = true;
          break;
        }
      }
    }
    if (recolored) {
      route = "low-degree-recolor";
    } else {
      auto alt = find_coloring_if(h, r, has_even_class);
      if (!alt)
        throw Obstructed("every proper " + std::to_string(r) + "-coloring of a component has all classes odd");
      c = *alt;
      c.k = r;
      route = "recolor-search";
    }
  }
  if (r % 2 == 0) c = parity_normalize_coloring(c, r);
  std::vector<int> t(h.order());
  for (Vertex v = 0; v < h.order(); ++v) t[v] = c.color[v] % r;
  return t;
}

}  // namespace

ZrWeighting vertex_coloring_weighting_zr(const Graph& g, int r) {
  if (r < 2) throw PreconditionViolated("r must be at least 2");
  if (!is_nice(g)) throw PreconditionViolated("graph has a component isomorphic to K2");

  ZrWeighting out;
  out.target.assign(g.order(), 0);
  for (const auto& comp : components(g)) {
    const auto sub = induced_subgraph(g, comp);
    std::string route;
    std::vector<int> t;
    if (auto bp = bipartition(sub.graph)) {
      t = bipartite_targets(*bp, r, route);
    } else {
      t = non_bipartite_targets(sub.graph, r, route);
    }
    for (Vertex v = 0; v < sub.graph.order(); ++v) out.target[sub.to_host_vertex[v]] = t[v];
    out.routes.push_back(std::move(route));
  }

  out.weighting = residues_to_labels(realize_targets(g, r, out.target));
  if (!is_vertex_coloring(g, out.weighting))
    throw std::logic_error("Z_r weighting does not induce a proper coloring");
  return out;
}

}  // namespace lfw
