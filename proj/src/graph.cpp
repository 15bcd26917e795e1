#include "lfw/graph.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "lfw/error.hpp"

namespace lfw {

Graph::Graph(int n) : Graph(n, {}) {}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  for (auto& e : edges) {
    if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);

  std::vector<int> deg(n, 0);
  for (const auto& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  adj_.resize(offsets_[n]);
  inc_.resize(offsets_[n]);
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  // Appending in edge order leaves every neighbor list sorted: for vertex w,
  // neighbors u < w arrive first (edges (u, w), ordered by u), then
  // neighbors v > w (edges (w, v), ordered by v).
  for (EdgeId id = 0; id < size(); ++id) {
    const auto& e = edges_[id];
    adj_[fill[e.u]] = e.v;
    inc_[fill[e.u]++] = id;
    adj_[fill[e.v]] = e.u;
    inc_[fill[e.v]++] = id;
  }
}

int Graph::min_degree() const {
  int d = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return n_ == 0 ? 0 : d;
}

int Graph::max_degree() const {
  int d = 0;
  for (Vertex v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::optional<EdgeId> Graph::find_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= n_ || b >= n_) return std::nullopt;
  auto nb = neighbors(a);
  auto it = std::lower_bound(nb.begin(), nb.end(), b);
  if (it == nb.end() || *it != b) return std::nullopt;
  return incident(a)[it - nb.begin()];
}

// ---------------------------------------------------------------- ingestion

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_nonneg(std::string_view tok, long long& out) {
  if (tok.empty()) return false;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && p == tok.data() + tok.size() && out >= 0;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<long long> declared;
  std::vector<Edge> edges;
  long long max_id = -1;
  bool seen_content = false;
  int line_no = 0;

  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    auto line = trim(text.substr(pos, nl - pos));
    pos = nl + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    const auto toks = split_ws(line);
    const auto where = " (line " + std::to_string(line_no) + ")";
    if (toks.size() != 2) throw ParseError("malformed line" + where);
    if (toks[0] == "n") {
      long long n = 0;
      if (seen_content || declared) throw ParseError("header must be the first line" + where);
      if (!parse_nonneg(toks[1], n) || n > kMaxVertices)
        throw ParseError("malformed vertex count" + where);
      declared = n;
      seen_content = true;
      continue;
    }
    seen_content = true;
    long long u = 0, v = 0;
    if (!parse_nonneg(toks[0], u) || !parse_nonneg(toks[1], v))
      throw ParseError("malformed line" + where);
    if (u == v) throw ParseError("self-loop" + where);
    if (declared && (u >= *declared || v >= *declared))
      throw ParseError("vertex id exceeds declared n" + where);
    if (u >= kMaxVertices || v >= kMaxVertices)
      throw ParseError("vertex id too large" + where);
    max_id = std::max({max_id, u, v});
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  const int n = declared ? static_cast<int>(*declared) : static_cast<int>(max_id + 1);
  return Graph(n, std::move(edges));
}

Graph parse_graph6(std::string_view text) {
  auto s = trim(text);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (s.starts_with(kHeader)) s.remove_prefix(kHeader.size());
  if (s.empty()) throw ParseError("graph6: empty input");
  for (char ch : s) {
    const auto c = static_cast<unsigned char>(ch);
    if (c < 63 || c > 126) throw ParseError("graph6: invalid character");
  }
  auto byte = [&](std::size_t i) { return static_cast<long long>(s[i]) - 63; };

  long long n = 0;
  std::size_t at = 0;
  if (s[0] != '~') {
    n = byte(0);
    at = 1;
  } else if (s.size() >= 2 && s[1] != '~') {
    if (s.size() < 4) throw ParseError("graph6: truncated size field");
    n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
    at = 4;
  } else {
    if (s.size() < 8) throw ParseError("graph6: truncated size field");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | byte(i);
    at = 8;
  }
  if (n > 100'000) throw ParseError("graph6: graph too large");

  const long long bits = n * (n - 1) / 2;
  const long long need = (bits + 5) / 6;
  const long long have = static_cast<long long>(s.size() - at);
  if (have < need) throw ParseError("graph6: truncated bit vector");
  if (have > need) throw ParseError("graph6: trailing data");

  std::vector<Edge> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const long long b = byte(at + static_cast<std::size_t>(k / 6));
      if ((b >> (5 - k % 6)) & 1) edges.push_back({i, j});
    }
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_graph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n < 258048) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  const long long bits = n * (n - 1) / 2;
  std::vector<unsigned char> packed(static_cast<std::size_t>((bits + 5) / 6), 0);
  for (const auto& e : g.edges()) {
    // column-major upper triangle: bit index of (i, j), i < j
    const long long k = static_cast<long long>(e.v) * (e.v - 1) / 2 + e.u;
    packed[static_cast<std::size_t>(k / 6)] |= static_cast<unsigned char>(1u << (5 - k % 6));
  }
  for (auto b : packed) out.push_back(static_cast<char>(63 + b));
  return out;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.order() << '\n';
  for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Graph read_graph(std::string_view text) {
  const auto t = trim(text);
  constexpr std::string_view kPrefix = "graph6:";
  if (t.starts_with(kPrefix)) return parse_graph6(t.substr(kPrefix.size()));
  return parse_edge_list(text);
}

// ------------------------------------------------------- structural queries

std::vector<int> component_ids(const Graph& g) {
  std::vector<int> comp(g.order(), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v)) {
        if (comp[u] < 0) {
          comp[u] = next;
          stack.push_back(u);
        }
      }
    }
    ++next;
  }
  return comp;
}

int component_count(const Graph& g) {
  const auto ids = component_ids(g);
  return ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  const auto ids = component_ids(g);
  std::vector<std::vector<Vertex>> out(ids.empty() ? 0 : *std::max_element(ids.begin(), ids.end()) + 1);
  for (Vertex v = 0; v < g.order(); ++v) out[ids[v]].push_back(v);
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  InducedSubgraph sub;
  sub.to_host_vertex.assign(vertices.begin(), vertices.end());
  std::sort(sub.to_host_vertex.begin(), sub.to_host_vertex.end());
  std::vector<int> local(g.order(), -1);
  for (int i = 0; i < static_cast<int>(sub.to_host_vertex.size()); ++i) local[sub.to_host_vertex[i]] = i;

  std::vector<Edge> edges;
  std::vector<EdgeId> host_ids;
  for (EdgeId id = 0; id < g.size(); ++id) {
    const auto& e = g.edge(id);
    if (local[e.u] >= 0 && local[e.v] >= 0) {
      edges.push_back({local[e.u], local[e.v]});
      host_ids.push_back(id);
    }
  }
  // Vertex relabeling is monotone, so host edge order is preserved.
  sub.graph = Graph(static_cast<int>(sub.to_host_vertex.size()), std::move(edges));
  sub.to_host_edge = std::move(host_ids);
  return sub;
}

std::optional<Bipartition> bipartition(const Graph& g) {
  Bipartition bp;
  bp.side.assign(g.order(), -1);
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (bp.side[s] >= 0) continue;
    bp.side[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex u : g.neighbors(v)) {
        if (bp.side[u] < 0) {
          bp.side[u] = 1 - bp.side[v];
          queue.push_back(u);
        } else if (bp.side[u] == bp.side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) (bp.side[v] == 0 ? bp.x : bp.y).push_back(v);
  return bp;
}

bool is_nice(const Graph& g) {
  for (const auto& comp : components(g)) {
    if (comp.size() == 2) return false;
  }
  return true;
}

std::vector<Vertex> find_odd_closed_walk(const Graph& g, Vertex root) {
  if (root < 0 || root >= g.order()) throw std::out_of_range("root vertex out of range");
  std::vector<int> dist(g.order(), -1);
  std::vector<Vertex> parent(g.order(), -1);
  std::deque<Vertex> queue{root};
  dist[root] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex u : g.neighbors(v)) {
      if (dist[u] < 0) {
        dist[u] = dist[v] + 1;
        parent[u] = v;
        queue.push_back(u);
      }
    }
  }
  // An edge joining two vertices at equal BFS depth closes an odd cycle.
  std::optional<Edge> best;
  for (const auto& e : g.edges()) {
    if (dist[e.u] < 0 || dist[e.u] != dist[e.v]) continue;
    if (!best || dist[e.u] < dist[best->u]) best = e;
  }
  if (!best) throw PreconditionViolated("component of vertex " + std::to_string(root) + " is bipartite");

  std::vector<Vertex> walk;
  for (Vertex v = best->u; v != -1; v = parent[v]) walk.push_back(v);
  std::reverse(walk.begin(), walk.end());
  for (Vertex v = best->v; v != -1; v = parent[v]) walk.push_back(v);
  return walk;
}

// ----------------------------------------------------------------- coloring

std::vector<int> ColorClasses::sizes() const {
  std::vector<int> out(k, 0);
  for (int c : color) ++out[c - 1];
  return out;
}

std::vector<Vertex> ColorClasses::members(int c) const {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < static_cast<int>(color.size()); ++v)
    if (color[v] == c) out.push_back(v);
  return out;
}

bool ColorClasses::is_proper(const Graph& g) const {
  if (static_cast<int>(color.size()) != g.order()) return false;
  for (int c : color)
    if (c < 1 || c > k) return false;
  for (const auto& e : g.edges())
    if (color[e.u] == color[e.v]) return false;
  return true;
}

namespace {

class ColoringSearch {
 public:
  ColoringSearch(const Graph& g, int k, const std::function<bool(const std::vector<int>&)>& accept,
                 long long node_limit)
      : g_(g), k_(k), accept_(accept), limit_(node_limit),
        color_(g.order(), 0), seen_(static_cast<std::size_t>(g.order()) * (k + 1), 0),
        saturation_(g.order(), 0), sizes_(k, 0) {}

  std::optional<ColorClasses> run() {
    if (k_ < 1) {
      if (g_.order() == 0) return ColorClasses{k_, {}};
      return std::nullopt;
    }
    if (!search(0, 0)) return std::nullopt;
    return ColorClasses{k_, color_};
  }

 private:
  int& seen(Vertex v, int c) { return seen_[static_cast<std::size_t>(v) * (k_ + 1) + c]; }

  Vertex pick() const {
    Vertex best = -1;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (color_[v]) continue;
      if (best < 0 || saturation_[v] > saturation_[best] ||
          (saturation_[v] == saturation_[best] && g_.degree(v) > g_.degree(best)))
        best = v;
    }
    return best;
  }

  void assign(Vertex v, int c) {
    color_[v] = c;
    ++sizes_[c - 1];
    for (Vertex u : g_.neighbors(v))
      if (seen(u, c)++ == 0) ++saturation_[u];
  }

  void unassign(Vertex v) {
    const int c = color_[v];
    for (Vertex u : g_.neighbors(v))
      if (--seen(u, c) == 0) --saturation_[u];
    --sizes_[c - 1];
    color_[v] = 0;
  }

  bool search(int colored, int used) {
    if (colored == g_.order()) return accept_(sizes_);
    if (++nodes_ > limit_) throw BudgetExceeded("coloring search exceeded node limit");
    const Vertex v = pick();
    const int top = std::min(k_, used + 1);
    for (int c = 1; c <= top; ++c) {
      if (seen(v, c)) continue;
      assign(v, c);
      if (search(colored + 1, std::max(used, c))) return true;
      unassign(v);
    }
    return false;
  }

  const Graph& g_;
  int k_;
  const std::function<bool(const std::vector<int>&)>& accept_;
  long long limit_;
  long long nodes_ = 0;
  std::vector<int> color_;
  std::vector<int> seen_;
  std::vector<int> saturation_;
  std::vector<int> sizes_;
};

}  // namespace

std::optional<ColorClasses> proper_coloring_exact(const Graph& g, int k, long long node_limit) {
  const std::function<bool(const std::vector<int>&)> any = [](const std::vector<int>&) { return true; };
  return ColoringSearch(g, k, any, node_limit).run();
}

std::optional<ColorClasses> find_coloring_if(const Graph& g, int k,
                                             const std::function<bool(const std::vector<int>&)>& accept,
                                             long long node_limit) {
  return ColoringSearch(g, k, accept, node_limit).run();
}

}  // namespace lfw
