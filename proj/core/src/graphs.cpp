#include "gm/graphs.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

namespace gm {
namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  // Returns false if a and b were already joined.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent_[a] = b;  // smaller label is the root
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Gosper's hack: next bitmask with the same popcount.
std::uint64_t next_same_popcount(std::uint64_t x) {
  const std::uint64_t c = x & -x;
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

}  // namespace

Graph::Graph(int n_vertices, std::vector<Edge> edges) : n_(n_vertices), edges_(std::move(edges)) {
  if (n_ < 0) throw BadVertex("negative vertex count");
  if (static_cast<int>(edges_.size()) > kMaxEdges) {
    throw TooLarge("graphs are limited to " + std::to_string(kMaxEdges) + " edges");
  }
  for (const auto& e : edges_) {
    if (e.u < 0 || e.u >= n_ || e.v < 0 || e.v >= n_) {
      throw BadVertex("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      "} outside vertex range [0," + std::to_string(n_) + ")");
    }
  }
}

bool Graph::is_simple() const {
  std::set<std::pair<int, int>> seen;
  for (const auto& e : edges_) {
    if (e.u == e.v) return false;
    if (!seen.insert(std::minmax(e.u, e.v)).second) return false;
  }
  return true;
}

bool Graph::has_edge(int u, int v) const {
  return std::any_of(edges_.begin(), edges_.end(), [&](const Edge& e) {
    return (e.u == u && e.v == v) || (e.u == v && e.v == u);
  });
}

void require_simple(const Graph& G, std::string_view op) {
  if (!G.is_simple()) throw NotSimple(std::string(op) + " requires a simple graph");
}

Betti betti(const Graph& G, EdgeSubset S) {
  UnionFind uf(G.n_vertices());
  int components = G.n_vertices();
  int n_edges = 0;
  for (int i = 0; i < G.n_edges(); ++i) {
    if (!S.contains(i)) continue;
    ++n_edges;
    if (uf.unite(G.edge(i).u, G.edge(i).v)) --components;
  }
  return Betti{components, n_edges - G.n_vertices() + components};
}

Betti betti(const Graph& G) { return betti(G, full_subset(G.n_edges())); }

bool is_connected(const Graph& G) { return betti(G).b0 <= 1; }

bool is_forest(const Graph& G) { return betti(G).b1 == 0; }

bool is_forest(const Graph& G, EdgeSubset S) { return betti(G, S).b1 == 0; }

std::vector<EdgeSubset> spanning_trees(const Graph& G) {
  std::vector<EdgeSubset> trees;
  const int n = G.n_vertices();
  const int m = G.n_edges();
  const int k = n - 1;
  if (k > m) return trees;
  // The vertexless graph and a single vertex each have one (empty) tree.
  if (k <= 0) {
    trees.push_back(EdgeSubset{0});
    return trees;
  }
  const std::uint64_t limit = 1ULL << m;
  for (std::uint64_t mask = (1ULL << k) - 1; mask < limit; mask = next_same_popcount(mask)) {
    UnionFind uf(n);
    bool acyclic = true;
    for (int i = 0; i < m && acyclic; ++i) {
      if ((mask >> i) & 1ULL) acyclic = uf.unite(G.edge(i).u, G.edge(i).v);
    }
    if (acyclic) trees.push_back(EdgeSubset{static_cast<std::uint32_t>(mask)});
  }
  return trees;
}

Graph discrete_graph(int n) { return Graph(n, {}); }

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  }
  return Graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph(n, std::move(edges));
}

Graph path_graph(int n_vertices) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n_vertices; ++i) edges.push_back({i, i + 1});
  return Graph(n_vertices, std::move(edges));
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Graph(leaves + 1, std::move(edges));
}

Graph apex_extension(const Graph& G) {
  require_simple(G, "apex_extension");
  std::vector<Edge> edges;
  for (const auto& e : G.edges()) edges.push_back({e.u + 1, e.v + 1});
  for (int i = 0; i < G.n_vertices(); ++i) edges.push_back({0, i + 1});
  return Graph(G.n_vertices() + 1, std::move(edges));
}

Graph complement(const Graph& G) {
  require_simple(G, "complement");
  std::vector<Edge> edges;
  for (int i = 0; i < G.n_vertices(); ++i) {
    for (int j = i + 1; j < G.n_vertices(); ++j) {
      if (!G.has_edge(i, j)) edges.push_back({i, j});
    }
  }
  return Graph(G.n_vertices(), std::move(edges));
}

Graph add_disjoint_vertex(const Graph& G) { return Graph(G.n_vertices() + 1, G.edges()); }

Graph insert_edge(const Graph& G, int v) {
  if (v < 0 || v >= G.n_vertices()) throw BadVertex("insert_edge: no vertex " + std::to_string(v));
  auto edges = G.edges();
  edges.push_back({v, G.n_vertices()});
  return Graph(G.n_vertices() + 1, std::move(edges));
}

Graph remove_vertex(const Graph& G, int v) {
  if (v < 0 || v >= G.n_vertices()) throw BadVertex("remove_vertex: no vertex " + std::to_string(v));
  std::vector<Edge> edges;
  auto shift = [v](int x) { return x > v ? x - 1 : x; };
  for (const auto& e : G.edges()) {
    if (e.u == v || e.v == v) continue;
    edges.push_back({shift(e.u), shift(e.v)});
  }
  return Graph(G.n_vertices() - 1, std::move(edges));
}

Graph delete_edges(const Graph& G, EdgeSubset S) {
  std::vector<Edge> edges;
  for (int i = 0; i < G.n_edges(); ++i) {
    if (!S.contains(i)) edges.push_back(G.edge(i));
  }
  return Graph(G.n_vertices(), std::move(edges));
}

Graph contract(const Graph& G, EdgeSubset S) {
  UnionFind uf(G.n_vertices());
  for (int i = 0; i < G.n_edges(); ++i) {
    if (S.contains(i)) uf.unite(G.edge(i).u, G.edge(i).v);
  }
  // Roots are the least vertex of each component; number them in order.
  std::vector<int> label(G.n_vertices(), -1);
  int next = 0;
  for (int v = 0; v < G.n_vertices(); ++v) {
    const int root = uf.find(v);
    if (label[root] < 0) label[root] = next++;
    label[v] = label[root];
  }
  std::vector<Edge> edges;
  for (int i = 0; i < G.n_edges(); ++i) {
    if (S.contains(i)) continue;
    edges.push_back({label[G.edge(i).u], label[G.edge(i).v]});
  }
  return Graph(next, std::move(edges));
}

std::vector<Edge> normalized_edge_multiset(const Graph& G) {
  std::vector<Edge> out;
  out.reserve(G.n_edges());
  for (const auto& e : G.edges()) out.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  std::sort(out.begin(), out.end());
  return out;
}

Graph relabel(const Graph& G, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != G.n_vertices()) throw BadVertex("relabel: permutation size");
  std::vector<Edge> edges;
  for (const auto& e : G.edges()) edges.push_back({perm[e.u], perm[e.v]});
  return Graph(G.n_vertices(), std::move(edges));
}

std::vector<Graph> all_simple_graphs(int n) {
  const Graph K = complete_graph(n);
  const int m = K.n_edges();
  if (m > 20) throw TooLarge("all_simple_graphs: too many vertices");
  std::vector<Graph> out;
  out.reserve(std::size_t{1} << m);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) {
      if ((mask >> i) & 1u) edges.push_back(K.edge(i));
    }
    out.emplace_back(n, std::move(edges));
  }
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) throw ParseError("edge list: expected header \"n m\"");
  if (m > kMaxEdges) throw ParseError("edge list: too many edges");
  std::vector<Edge> edges;
  for (long long i = 0; i < m; ++i) {
    long long u = -1, v = -1;
    if (!(in >> u >> v)) throw ParseError("edge list: expected " + std::to_string(m) + " edges");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("edge list: vertex out of range on edge " + std::to_string(i));
    }
    edges.push_back({static_cast<int>(u), static_cast<int>(v)});
  }
  std::string extra;
  if (in >> extra) throw ParseError("edge list: trailing data \"" + extra + "\"");
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_edge_list(const Graph& G) {
  std::ostringstream os;
  os << G.n_vertices() << ' ' << G.n_edges() << '\n';
  for (const auto& e : G.edges()) os << e.u << ' ' << e.v << '\n';
  return os.str();
}

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) {
    text.remove_suffix(1);
  }
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw ParseError("graph6: empty input");
  for (char c : text) {
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of range");
  }
  std::size_t pos = 0;
  long long n = 0;
  if (text[0] != 126) {
    n = text[0] - 63;
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) throw ParseError("graph6: unsupported size header");
    n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
    pos = 4;
  }
  const long long n_pairs = n * (n - 1) / 2;
  const long long n_bytes = (n_pairs + 5) / 6;
  if (static_cast<long long>(text.size() - pos) != n_bytes) {
    throw ParseError("graph6: expected " + std::to_string(n_bytes) + " data bytes");
  }
  std::vector<Edge> edges;
  long long bit = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++bit) {
      const int byte = text[pos + bit / 6] - 63;
      if ((byte >> (5 - bit % 6)) & 1) edges.push_back({i, j});
    }
  }
  std::sort(edges.begin(), edges.end());
  if (static_cast<int>(edges.size()) > kMaxEdges) throw ParseError("graph6: too many edges");
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_graph6(const Graph& G) {
  require_simple(G, "write_graph6");
  const int n = G.n_vertices();
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(126);
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (G.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

std::ostream& operator<<(std::ostream& os, const Graph& G) {
  os << "Graph(n=" << G.n_vertices() << ", edges=[";
  for (int i = 0; i < G.n_edges(); ++i) {
    if (i) os << ", ";
    os << G.edge(i).u << "-" << G.edge(i).v;
  }
  return os << "])";
}

}  // namespace gm
