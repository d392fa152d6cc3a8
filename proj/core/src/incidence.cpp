#include "gm/incidence.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <tuple>

#include "gm/counting.hpp"

namespace gm {

std::uint64_t ATable::at(int r, int k) const {
  if (r < 0 || k < 0 || r >= static_cast<int>(a.size())) return 0;
  if (k >= static_cast<int>(a[r].size())) return 0;
  return a[r][k];
}

std::uint64_t ATable::total() const {
  std::uint64_t t = 0;
  for (const auto& row : a) {
    for (auto v : row) t += v;
  }
  return t;
}

namespace {

int n_sym_entries(int s) { return s * (s + 1) / 2; }

// Decodes the index-th symmetric s x s matrix: upper-triangle entries read
// row by row as base-q digits, most significant first.
FMatrix symmetric_from_index(int s, std::uint32_t q, std::uint64_t index) {
  FMatrix Q(s, s);
  for (int i = s - 1; i >= 0; --i) {
    for (int j = s - 1; j >= i; --j) {
      const FieldElem e{static_cast<std::uint32_t>(index % q)};
      index /= q;
      Q.at(i, j) = e;
      Q.at(j, i) = e;
    }
  }
  return Q;
}

// orth[x * N + y] = 1 iff x^T Q y = 0.
std::vector<std::uint8_t> orthogonality_table(const VectorSpace& V, const FMatrix& Q) {
  const auto& F = V.field();
  const std::uint32_t N = V.size();
  const int s = V.dim();
  std::vector<std::uint32_t> Qy(N);
  std::vector<FieldElem> img(s);
  for (std::uint32_t y = 0; y < N; ++y) {
    const auto c = V.coords(y);
    for (int i = 0; i < s; ++i) {
      FieldElem acc = F.zero();
      for (int j = 0; j < s; ++j) acc = F.add(acc, F.mul(Q.at(i, j), c[j]));
      img[i] = acc;
    }
    Qy[y] = V.encode(img);
  }
  std::vector<std::uint8_t> orth(static_cast<std::size_t>(N) * N);
  for (std::uint32_t x = 0; x < N; ++x) {
    for (std::uint32_t y = 0; y < N; ++y) orth[static_cast<std::size_t>(x) * N + y] = F.is_zero(V.dot(x, Qy[y]));
  }
  return orth;
}

using Constraint = std::pair<std::uint32_t, int>;

// Depth-first search over f: V -> F_q^s in vertex order. Optional edge
// orthogonality (earlier neighbours only) and rank constraints checked at
// the largest vertex of each constrained set. Leaves are tallied by the
// dimension of span f(V).
class FSearch {
 public:
  FSearch(const VectorSpace& V, int n, std::vector<std::vector<int>> earlier_nbrs,
          std::vector<std::vector<Constraint>> checks)
      : V_(V), n_(n), nbrs_(std::move(earlier_nbrs)), checks_(std::move(checks)), f_(n) {}

  void set_orth(const std::vector<std::uint8_t>* orth) { orth_ = orth; }

  // by_k must have at least min(s, n) + 1 entries.
  void run(std::vector<std::uint64_t>& by_k) {
    by_k_ = &by_k;
    dfs(0, EchelonBasis(V_.field(), V_.dim()));
  }

  // Runs with f(0) fixed.
  void run_from(std::uint32_t first, std::vector<std::uint64_t>& by_k) {
    by_k_ = &by_k;
    EchelonBasis basis(V_.field(), V_.dim());
    if (n_ == 0) {
      ++by_k[0];
      return;
    }
    f_[0] = first;
    basis.insert(V_.coords(first));
    if (!satisfies_checks(0)) return;
    dfs(1, basis);
  }

 private:
  bool satisfies_checks(int v) const {
    for (const auto& [mask, rank] : checks_[v]) {
      EchelonBasis b(V_.field(), V_.dim());
      for (int u = 0; u <= v; ++u) {
        if ((mask >> u) & 1u) b.insert(V_.coords(f_[u]));
      }
      if (b.rank() != rank) return false;
    }
    return true;
  }

  void dfs(int v, const EchelonBasis& basis) {
    if (v == n_) {
      ++(*by_k_)[basis.rank()];
      return;
    }
    const std::uint32_t N = V_.size();
    for (std::uint32_t y = 0; y < N; ++y) {
      bool ok = true;
      if (orth_) {
        for (int u : nbrs_[v]) {
          if (!(*orth_)[static_cast<std::size_t>(f_[u]) * N + y]) {
            ok = false;
            break;
          }
        }
      }
      if (!ok) continue;
      f_[v] = y;
      if (!satisfies_checks(v)) continue;
      EchelonBasis next = basis;
      next.insert(V_.coords(y));
      dfs(v + 1, next);
    }
  }

  const VectorSpace& V_;
  int n_;
  std::vector<std::vector<int>> nbrs_;
  std::vector<std::vector<Constraint>> checks_;
  std::vector<std::uint32_t> f_;
  const std::vector<std::uint8_t>* orth_ = nullptr;
  std::vector<std::uint64_t>* by_k_ = nullptr;
};

std::vector<std::vector<int>> earlier_neighbours(const Graph& G) {
  std::vector<std::vector<int>> nbrs(G.n_vertices());
  for (const auto& e : G.edges()) {
    const int lo = std::min(e.u, e.v), hi = std::max(e.u, e.v);
    nbrs[hi].push_back(lo);
  }
  return nbrs;
}

// Sorts constraints by their largest vertex. Returns nullopt when some
// constraint can never hold (rank above |H| or s, or a nonzero rank on the
// empty set).
std::optional<std::vector<std::vector<Constraint>>> bucket_constraints(const PartialRank& pi, int n, int s) {
  std::vector<std::vector<Constraint>> checks(std::max(n, 1));
  for (const auto& [mask, rank] : pi.constraints) {
    if (n < 32 && (mask >> n) != 0) throw BadArgs("partial rank: subset outside the vertex set");
    if (rank < 0) throw BadArgs("partial rank: negative rank");
    if (rank > std::min(s, std::popcount(mask))) return std::nullopt;
    if (mask == 0) continue;  // rank 0 on the empty set always holds
    checks[31 - std::countl_zero(mask)].emplace_back(mask, rank);
  }
  return checks;
}

using CacheKey = std::tuple<int, std::vector<Edge>, int, std::uint64_t>;

std::mutex g_cache_mu;
std::map<CacheKey, ATable>& table_cache() {
  static std::map<CacheKey, ATable> cache;
  return cache;
}

std::uint64_t incidence_budget(int s, int n, std::uint64_t q) {
  return saturating_pow(q, static_cast<std::uint64_t>(n_sym_entries(s) + s * n));
}

void check_dims(int s) {
  if (s < 0) throw BadArgs("incidence: negative dimension");
  if (s > EchelonBasis::kMaxDim) throw TooLarge("incidence: dimension too large");
}

// Sums FSearch tallies over every symmetric Q accepted by `keep_rank`.
template <typename KeepRank>
std::vector<std::vector<std::uint64_t>> sweep_forms(const Graph& G, int s, const FieldSpec& F,
                                                    const std::vector<std::vector<Constraint>>& checks,
                                                    KeepRank keep_rank, const CountOptions& opts) {
  const int n = G.n_vertices();
  const VectorSpace V(F, s);
  const std::uint64_t n_forms = saturating_pow(F.q(), n_sym_entries(s));
  const auto nbrs = earlier_neighbours(G);
  std::vector<std::vector<std::uint64_t>> result(s + 1, std::vector<std::uint64_t>(std::min(s, n) + 1, 0));
  std::mutex mu;
  parallel_sum(n_forms, opts.threads, [&](std::uint64_t index) -> std::uint64_t {
    const FMatrix Q = symmetric_from_index(s, F.q(), index);
    const int r = matrix_rank(F, Q);
    if (!keep_rank(r)) return 0;
    const auto orth = orthogonality_table(V, Q);
    FSearch search(V, n, nbrs, checks);
    search.set_orth(&orth);
    std::vector<std::uint64_t> by_k(std::min(s, n) + 1, 0);
    search.run(by_k);
    std::lock_guard lock(mu);
    for (std::size_t k = 0; k < by_k.size(); ++k) result[r][k] += by_k[k];
    return 0;
  });
  return result;
}

}  // namespace

ATable a_table(const Graph& G, int s, std::uint64_t q, const CountOptions& opts) {
  check_dims(s);
  require_simple(G, "a_table");
  const CacheKey key{G.n_vertices(), G.edges(), s, q};
  {
    std::lock_guard lock(g_cache_mu);
    const auto it = table_cache().find(key);
    if (it != table_cache().end()) return it->second;
  }
  const FieldSpec F = make_field(q);
  const int n = G.n_vertices();
  require_budget(incidence_budget(s, n, q), opts, "A_G(s, r, k)");
  note_enumeration();
  ATable table;
  table.s = s;
  table.n = n;
  const std::vector<std::vector<Constraint>> no_checks(std::max(n, 1));
  table.a = sweep_forms(G, s, F, no_checks, [](int) { return true; }, opts);
  std::lock_guard lock(g_cache_mu);
  table_cache().emplace(key, table);
  return table;
}

std::uint64_t count_A(const Graph& G, const IncidenceParams& p, std::uint64_t q, const CountOptions& opts) {
  if (p.s < 0 || p.r < 0 || p.k < 0) throw BadArgs("count_A: negative parameter");
  if (p.r > p.s || p.k > std::min(p.s, G.n_vertices())) {
    require_simple(G, "count_A");
    return 0;
  }
  return a_table(G, p.s, q, opts).at(p.r, p.k);
}

std::uint64_t count_A_unstratified(const Graph& G, int s, std::uint64_t q, const CountOptions& opts) {
  check_dims(s);
  require_simple(G, "count_A_unstratified");
  const FieldSpec F = make_field(q);
  const int n = G.n_vertices();
  require_budget(incidence_budget(s, n, q), opts, "A_G(s)");
  note_enumeration();
  const int n_free = n_sym_entries(s) + s * n;
  if (n_free == 0) return 1;
  // Digits: the symmetric entries of Q (row-major upper triangle), then the
  // coordinates of f(0), ..., f(n-1).
  std::vector<std::pair<int, int>> sym_pos;
  for (int i = 0; i < s; ++i) {
    for (int j = i; j < s; ++j) sym_pos.emplace_back(i, j);
  }
  const auto& edges = G.edges();
  return parallel_sum(F.q(), opts.threads, [&](std::uint64_t first) {
    std::vector<std::uint32_t> digit(n_free, 0);
    digit[0] = static_cast<std::uint32_t>(first);
    std::uint64_t hits = 0;
    while (true) {
      auto Qat = [&](int i, int j) {
        if (i > j) std::swap(i, j);
        const int idx = i * s - i * (i - 1) / 2 + (j - i);
        return FieldElem{digit[idx]};
      };
      auto fat = [&](int v, int i) { return FieldElem{digit[sym_pos.size() + v * s + i]}; };
      bool ok = true;
      for (const auto& e : edges) {
        FieldElem acc = F.zero();
        for (int i = 0; i < s; ++i) {
          for (int j = 0; j < s; ++j) acc = F.add(acc, F.mul(fat(e.u, i), F.mul(Qat(i, j), fat(e.v, j))));
        }
        if (!F.is_zero(acc)) {
          ok = false;
          break;
        }
      }
      if (ok) ++hits;
      int d = n_free - 1;
      while (d >= 1) {
        if (++digit[d] < F.q()) break;
        digit[d] = 0;
        --d;
      }
      if (d < 1) break;
    }
    return hits;
  });
}

std::uint64_t count_J(const Graph& G, int s, std::uint64_t q, const CountOptions& opts) {
  const ATable t = a_table(G, s, q, opts);
  std::uint64_t total = 0;
  for (int k = 0; k <= std::min(s, G.n_vertices()); ++k) total += t.at(s, k);
  return total;
}

std::uint64_t count_K(const Graph& G, int s, std::uint64_t q, const CountOptions& opts) {
  return count_A(G, {s, s, s}, q, opts);
}

std::uint64_t count_H(const Graph& G, int s, std::uint64_t q, const CountOptions& opts) {
  const int n = G.n_vertices();
  return count_A(G, {n, s, n}, q, opts);
}

std::uint64_t count_J_partial(const Graph& G, int s, const PartialRank& pi, std::uint64_t q,
                              const CountOptions& opts) {
  check_dims(s);
  require_simple(G, "count_J_partial");
  const int n = G.n_vertices();
  if (pi.ground_size > n) throw BadArgs("count_J_partial: ground set larger than V(G)");
  const auto checks = bucket_constraints(pi, n, s);
  const FieldSpec F = make_field(q);
  if (!checks) return 0;
  if (pi.constraints.empty()) return count_J(G, s, q, opts);
  require_budget(incidence_budget(s, n, q), opts, "J_G(s, pi)");
  note_enumeration();
  const auto by_rank = sweep_forms(G, s, F, *checks, [s](int r) { return r == s; }, opts);
  std::uint64_t total = 0;
  for (auto v : by_rank[s]) total += v;
  return total;
}

std::uint64_t count_L(int s, const PartialRank& pi, std::uint64_t q, const CountOptions& opts) {
  check_dims(s);
  const int n = pi.ground_size;
  if (n < 0 || n > kMaxEdges) throw BadArgs("count_L: ground set size out of range");
  const auto checks = bucket_constraints(pi, n, s);
  const FieldSpec F = make_field(q);
  if (!checks) return 0;
  require_budget(saturating_pow(q, static_cast<std::uint64_t>(s) * n), opts, "L(s, pi)");
  note_enumeration();
  const VectorSpace V(F, s);
  const std::vector<std::vector<int>> no_nbrs(n);
  if (n == 0) return 1;
  return parallel_sum(V.size(), opts.threads, [&](std::uint64_t first) {
    FSearch search(V, n, no_nbrs, *checks);
    std::vector<std::uint64_t> by_k(std::min(s, n) + 1, 0);
    search.run_from(static_cast<std::uint32_t>(first), by_k);
    std::uint64_t total = 0;
    for (auto v : by_k) total += v;
    return total;
  });
}

Integer forest_J(const Graph& F, int s, std::uint64_t q) {
  if (s < 0) throw BadArgs("forest_J: negative dimension");
  if (!is_forest(F)) throw NotAForest("forest_J: input has a cycle");
  const int n = F.n_vertices();
  if (n == 0) return sym_count(s, s, q);
  std::vector<int> degree(n, 0);
  for (const auto& e : F.edges()) {
    ++degree[e.u];
    ++degree[e.v];
  }
  Integer qs = 1;
  for (int i = 0; i < s; ++i) qs *= q;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 0) return qs * forest_J(remove_vertex(F, v), s, q);
  }
  // No isolated vertex, so a leaf exists; detach it from its neighbour w.
  const int leaf = static_cast<int>(std::find(degree.begin(), degree.end(), 1) - degree.begin());
  int w = -1;
  for (const auto& e : F.edges()) {
    if (e.u == leaf) w = e.v;
    if (e.v == leaf) w = e.u;
  }
  const Graph rest = remove_vertex(F, leaf);
  const int w_in_rest = w > leaf ? w - 1 : w;
  const Integer inner = forest_J(rest, s, q) + Integer(q - 1) * forest_J(remove_vertex(rest, w_in_rest), s, q);
  return qs * inner / q;  // q^(s-1) (...), exact also for s = 0
}

Integer forest_Z(const Graph& F, std::uint64_t q) {
  if (!is_forest(F)) throw NotAForest("forest_Z: input has a cycle");
  const int n = F.n_vertices();
  auto qpow = [q](int e) {
    Integer r = 1;
    for (int i = 0; i < e; ++i) r *= q;
    return r;
  };
  // J(s) = sum_{j <= s} c(s, j) K(j) with c(s, s) = 1; solve for K(0..n).
  std::vector<Integer> K(n + 1);
  for (int s = 0; s <= n; ++s) {
    Integer rest = forest_J(F, s, q);
    for (int j = 0; j < s; ++j) {
      Integer c = 0;
      for (int k = j; k <= s; ++k) {
        if (k > n) break;
        c += gr_count(k, s, q) * macwilliams_C(s, s, k, j, q) * gr_count(j, k, q) * gr_count(n - k, n - j, q) *
             gl_count(k - j, q) * qpow(j * (k - j));
      }
      rest -= c * K[j];
    }
    K[s] = rest;
  }
  return K[n] / gl_count(n, q);
}

Graph attach_to_subset(const Graph& G, std::uint32_t H, int t) {
  const int n = G.n_vertices();
  if (t < 0) throw BadArgs("attach_to_subset: negative t");
  if (n < 32 && (H >> n) != 0) throw BadVertex("attach_to_subset: subset outside V(G)");
  std::vector<Edge> edges = G.edges();
  for (int y = 0; y < t; ++y) {
    for (int h = 0; h < n; ++h) {
      if ((H >> h) & 1u) edges.push_back({h, n + y});
    }
  }
  return Graph(n + t, std::move(edges));
}

}  // namespace gm
