#include "lfw/generators.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace lfw {

Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.push_back({u, v});
  return Graph(n, std::move(e));
}

Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.push_back({u, a + v});
  return Graph(a + b, std::move(e));
}

Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.push_back({v, (v + 1) % n});
  return Graph(n, std::move(e));
}

Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.push_back({v, v + 1});
  return Graph(std::max(n, 0), std::move(e));
}

Graph wheel_graph(int rim) {
  if (rim < 3) throw std::invalid_argument("wheel rim needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 1; i <= rim; ++i) {
    e.push_back({0, i});
    e.push_back({i, i % rim + 1});
  }
  return Graph(rim + 1, std::move(e));
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, (i + 1) % 5});
    e.push_back({i, i + 5});
    e.push_back({5 + i, 5 + (i + 2) % 5});
  }
  return Graph(10, std::move(e));
}

namespace {

bool coin(Rng& rng, double p) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng) < p; }

int pick(Rng& rng, int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

}  // namespace

Graph random_graph(int n, double p, Rng& rng) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng, p)) e.push_back({u, v});
  return Graph(n, std::move(e));
}

Graph random_graph_min_degree(int n, int min_degree, double p, Rng& rng) {
  if (min_degree >= n && n > 0) throw std::invalid_argument("minimum degree must be below n");
  for (int attempt = 0;; ++attempt) {
    if (attempt > 0 && attempt % 50 == 0) p = std::min(1.0, p + 0.05);
    Graph g = random_graph(n, p, rng);
    if (n == 0 || g.min_degree() >= min_degree) return g;
  }
}

Graph random_connected_non_bipartite(int n, double p, Rng& rng) {
  if (n < 3) throw std::invalid_argument("non-bipartite graphs need at least 3 vertices");
  std::vector<Vertex> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Edge> e;
  std::vector<int> depth(n, 0);
  for (int i = 1; i < n; ++i) {
    const Vertex parent = order[pick(rng, i)];
    e.push_back({std::min(parent, order[i]), std::max(parent, order[i])});
    depth[order[i]] = depth[parent] + 1;
  }
  std::vector<Edge> chords;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (depth[u] % 2 == depth[v] % 2) chords.push_back({u, v});
  e.push_back(chords[pick(rng, static_cast<int>(chords.size()))]);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng, p)) e.push_back({u, v});
  return Graph(n, std::move(e));
}

Graph random_bipartite_min_degree(int a, int b, int min_degree, double p, Rng& rng) {
  if (min_degree > std::min(a, b)) throw std::invalid_argument("minimum degree exceeds a part size");
  std::vector<std::vector<char>> adj(a, std::vector<char>(b, 0));
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) adj[u][v] = coin(rng, p);
  auto deg_x = [&](int u) { return static_cast<int>(std::count(adj[u].begin(), adj[u].end(), 1)); };
  auto deg_y = [&](int v) {
    int d = 0;
    for (int u = 0; u < a; ++u) d += adj[u][v];
    return d;
  };
  for (int u = 0; u < a; ++u)
    while (deg_x(u) < min_degree) {
      int v = pick(rng, b);
      while (adj[u][v]) v = (v + 1) % b;
      adj[u][v] = 1;
    }
  for (int v = 0; v < b; ++v)
    while (deg_y(v) < min_degree) {
      int u = pick(rng, a);
      while (adj[u][v]) u = (u + 1) % a;
      adj[u][v] = 1;
    }
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v)
      if (adj[u][v]) e.push_back({u, a + v});
  return Graph(a + b, std::move(e));
}

Graph random_planar(int n, Rng& rng, double drop) {
  if (n < 3) throw std::invalid_argument("planar generator needs at least 3 vertices");
  std::vector<Edge> e{{0, 1}, {0, 2}, {1, 2}};
  std::vector<std::array<Vertex, 3>> faces{{0, 1, 2}, {0, 1, 2}};
  for (Vertex v = 3; v < n; ++v) {
    const int f = pick(rng, static_cast<int>(faces.size()));
    const auto [x, y, z] = faces[f];
    e.push_back({x, v});
    e.push_back({y, v});
    e.push_back({z, v});
    faces[f] = {x, y, v};
    faces.push_back({x, z, v});
    faces.push_back({y, z, v});
  }
  Graph g(n, e);
  if (drop <= 0.0) return g;
  std::vector<Edge> kept(g.edges().begin(), g.edges().end());
  for (std::size_t i = kept.size(); i-- > 0;) {
    if (!coin(rng, drop)) continue;
    std::vector<Edge> trial = kept;
    trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
    if (is_nice(Graph(n, trial))) kept = std::move(trial);
  }
  return Graph(n, std::move(kept));
}

Graph random_k_colorable(int n, int k, double p, Rng& rng) {
  while (true) {
    std::vector<int> color(n);
    for (auto& c : color) c = pick(rng, k);
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (color[u] != color[v] && coin(rng, p)) e.push_back({u, v});
    Graph g(n, std::move(e));
    if (is_nice(g)) return g;
  }
}

Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  std::vector<Edge> e;
  for (const auto& ed : g.edges()) e.push_back({perm[ed.u], perm[ed.v]});
  return Graph(g.order(), std::move(e));
}

}  // namespace lfw
