#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gm/errors.hpp"

namespace gm {

inline constexpr int kMaxEdges = 32;

// A set of edges of a host graph, as a bitmask over edge indices.
struct EdgeSubset {
  std::uint32_t bits = 0;

  constexpr bool contains(int e) const { return (bits >> e) & 1u; }
  constexpr int size() const { return std::popcount(bits); }
  constexpr EdgeSubset with(int e) const { return EdgeSubset{bits | (1u << e)}; }

  friend constexpr auto operator<=>(const EdgeSubset&, const EdgeSubset&) = default;
};

constexpr EdgeSubset full_subset(int n_edges) {
  return EdgeSubset{n_edges >= 32 ? 0xffffffffu : ((1u << n_edges) - 1u)};
}

struct Edge {
  int u = 0;
  int v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Labeled multigraph: dense vertex labels 0..n-1, edges indexed by position.
// Loops and parallel edges are allowed; the edge index is the variable index
// of x_e in the graph polynomials.
class Graph {
 public:
  Graph() = default;
  // Throws BadVertex for endpoints outside [0, n), TooLarge beyond kMaxEdges edges.
  Graph(int n_vertices, std::vector<Edge> edges);

  int n_vertices() const { return n_; }
  int n_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[i]; }

  // No loops, no parallel edges.
  bool is_simple() const;
  bool has_edge(int u, int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
};

// Throws NotSimple naming `op` unless G is simple.
void require_simple(const Graph& G, std::string_view op);

struct Betti {
  int b0 = 0;
  int b1 = 0;
  friend bool operator==(const Betti&, const Betti&) = default;
};

Betti betti(const Graph& G);
// Betti numbers of the spanning subgraph (all vertices) with edge set S.
Betti betti(const Graph& G, EdgeSubset S);
bool is_connected(const Graph& G);
bool is_forest(const Graph& G);
bool is_forest(const Graph& G, EdgeSubset S);

// All spanning trees, as edge subsets in increasing bitmask order.
std::vector<EdgeSubset> spanning_trees(const Graph& G);

// Standard families. Edges of complete graphs are listed as (i, j), i < j,
// lexicographically.
Graph discrete_graph(int n);
Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n_vertices);
Graph star_graph(int leaves);  // K_{1,leaves}, center 0

// G -> G*: prepends an apex as vertex 0 (original vertex i becomes i + 1).
// Original edges keep their indices; apex edges {0, i+1} follow in order.
Graph apex_extension(const Graph& G);
// G -> G^o = K_n - G, edges in lexicographic (i < j) order.
Graph complement(const Graph& G);
// D: appends an isolated vertex at index n.
Graph add_disjoint_vertex(const Graph& G);
// I_v: appends vertex w = n and edge {v, w} as the last edge.
Graph insert_edge(const Graph& G, int v);
// R_v: removes v and its incident edges; later vertices shift down by one.
Graph remove_vertex(const Graph& G, int v);
// G - S: removes the edges of S, keeps every vertex and the order of the rest.
Graph delete_edges(const Graph& G, EdgeSubset S);
// G / S: contracts each component of the subgraph S to one vertex. Component
// representatives are numbered by their least original vertex. Remaining
// edges keep their relative order; loops and parallel edges are kept.
Graph contract(const Graph& G, EdgeSubset S);

// Edge sets as sorted normalized (min, max) pairs; label-level comparison
// that ignores edge order.
std::vector<Edge> normalized_edge_multiset(const Graph& G);
// Relabels vertex i to perm[i], keeping edge order.
Graph relabel(const Graph& G, const std::vector<int>& perm);

// Every labeled simple graph on n vertices (2^(n(n-1)/2) of them).
std::vector<Graph> all_simple_graphs(int n);

// Edge-list text: "n m" then m lines "u v".
Graph parse_edge_list(std::string_view text);
std::string write_edge_list(const Graph& G);
// graph6 for simple graphs (n < 63 uses the one-byte size header;
// n up to 258047 uses the 4-byte header).
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& G);

std::ostream& operator<<(std::ostream& os, const Graph& G);

}  // namespace gm
