#include "witness.hpp"

#include <sstream>

#include "lfw/error.hpp"

namespace lfw::cli {

std::string serialize(const Witness& w) {
  std::ostringstream out;
  out << "lfw-witness v1\n";
  out << "kind: " << (w.kind == Witness::Kind::Factor ? "factor" : "weighting") << "\n";
  out << "n: " << w.graph.order() << "\n";
  out << "m: " << w.graph.size() << "\n";
  if (w.kind == Witness::Kind::Weighting) out << "k: " << w.k << "\n";
  for (EdgeId e = 0; e < w.graph.size(); ++e)
    out << "edge " << w.graph.edge(e).u << " " << w.graph.edge(e).v << " " << w.values[e] << "\n";
  if (w.kind == Witness::Kind::Factor) {
    for (Vertex v = 0; v < w.graph.order(); ++v) {
      out << "list " << v;
      for (int d : w.lists[v]) out << " " << d;
      out << "\n";
    }
  }
  out << "end\n";
  return out.str();
}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : in_(std::string(text)) {}

  std::istringstream next(std::string_view keyword) {
    std::string line;
    ++line_no_;
    if (!std::getline(in_, line)) fail("unexpected end of witness, expected '" + std::string(keyword) + "'");
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word != keyword) fail("expected '" + std::string(keyword) + "', found '" + word + "'");
    return ls;
  }

  template <typename T>
  T value(std::istringstream& ls) {
    T x{};
    if (!(ls >> x)) fail("malformed value");
    return x;
  }

  void done(std::istringstream& ls) {
    std::string rest;
    if (ls >> rest) fail("trailing token '" + rest + "'");
  }

  void finish() {
    std::string rest;
    while (std::getline(in_, rest))
      if (!rest.empty()) fail("data after 'end'");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("witness line " + std::to_string(line_no_) + ": " + what);
  }

 private:
  std::istringstream in_;
  int line_no_ = 0;
};

}  // namespace

Witness parse_witness(std::string_view text) {
  LineReader r(text);
  Witness w;
  {
    auto ls = r.next("lfw-witness");
    if (r.value<std::string>(ls) != "v1") r.fail("unsupported witness version");
  }
  {
    auto ls = r.next("kind:");
    const auto kind = r.value<std::string>(ls);
    if (kind == "factor") w.kind = Witness::Kind::Factor;
    else if (kind == "weighting") w.kind = Witness::Kind::Weighting;
    else r.fail("unknown witness kind '" + kind + "'");
  }
  auto ls_n = r.next("n:");
  const int n = r.value<int>(ls_n);
  auto ls_m = r.next("m:");
  const int m = r.value<int>(ls_m);
  if (n < 0 || n > kMaxVertices || m < 0) r.fail("vertex or edge count out of range");
  if (w.kind == Witness::Kind::Weighting) {
    auto ls = r.next("k:");
    w.k = r.value<int>(ls);
    if (w.k < 1) r.fail("label count must be positive");
  }
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i) {
    auto ls = r.next("edge");
    const int u = r.value<int>(ls), v = r.value<int>(ls), x = r.value<int>(ls);
    r.done(ls);
    if (u < 0 || v >= n || u >= v) r.fail("edge endpoints must satisfy 0 <= u < v < n");
    if (!edges.empty() && !(edges.back() < Edge{u, v})) r.fail("edges must be sorted and distinct");
    edges.push_back({u, v});
    w.values.push_back(x);
  }
  w.graph = Graph(n, std::move(edges));
  if (w.kind == Witness::Kind::Factor) {
    for (int i = 0; i < n; ++i) {
      auto ls = r.next("list");
      if (r.value<int>(ls) != i) r.fail("lists must appear in vertex order");
      std::vector<int> list;
      int d = 0;
      while (ls >> d) list.push_back(d);
      if (!ls.eof()) r.fail("malformed degree list");
      w.lists.push_back(std::move(list));
    }
  }
  auto ls_end = r.next("end");
  r.done(ls_end);
  r.finish();
  return w;
}

}  // namespace lfw::cli
