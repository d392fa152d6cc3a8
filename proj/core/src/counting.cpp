#include "gm/counting.hpp"

#include <algorithm>
#include <string>

namespace gm {
namespace {

// Walks every point of F_q^n with coordinate 0 fixed to `first` (or the
// single empty point when n = 0), calling visit(point).
template <typename Visit>
void for_each_point(int n, std::uint32_t q, std::uint32_t first, Visit&& visit) {
  std::vector<FieldElem> x(std::max(n, 1));
  if (n == 0) {
    visit(x.data());
    return;
  }
  x[0] = FieldElem{first};
  while (true) {
    visit(x.data());
    int i = n - 1;
    while (i >= 1) {
      if (++x[i].index < q) break;
      x[i].index = 0;
      --i;
    }
    if (i < 1) return;
  }
}

std::uint64_t chunked_count(int n, std::uint32_t q, unsigned threads,
                            const std::function<std::uint64_t(std::uint32_t)>& chunk) {
  if (n == 0) return chunk(0);
  return parallel_sum(q, threads, [&](std::uint64_t c) { return chunk(static_cast<std::uint32_t>(c)); });
}

Integer ipow(std::uint64_t q, int e) {
  Integer r = 1;
  for (int i = 0; i < e; ++i) r *= q;
  return r;
}

Integer exact_div(const Integer& a, const Integer& b, const char* what) {
  if (b == 0 || a % b != 0) throw InternalError(std::string("inexact division in ") + what);
  return a / b;
}

std::uint64_t q_pow_edges(const Graph& G, std::uint64_t q) {
  return saturating_pow(q, static_cast<std::uint64_t>(G.n_edges()));
}

}  // namespace

std::uint64_t count_zeros(const MultilinearPoly& P, std::uint64_t q, const CountOptions& opts) {
  const FieldSpec F = make_field(q);
  const int n = P.n_vars();
  require_budget(saturating_pow(q, n), opts, "count_zeros");
  note_enumeration();
  const PolyEvaluator eval(P, F);
  return chunked_count(n, F.q(), opts.threads, [&](std::uint32_t first) {
    std::uint64_t zeros = 0;
    for_each_point(n, F.q(), first, [&](const FieldElem* x) {
      if (F.is_zero(eval(x))) ++zeros;
    });
    return zeros;
  });
}

std::uint64_t count_Y(const Graph& G, std::uint64_t q, const CountOptions& opts) {
  return q_pow_edges(G, q) - count_zeros(kirchhoff_P(G), q, opts);
}

std::uint64_t count_X(const Graph& G, std::uint64_t q, const CountOptions& opts) {
  return q_pow_edges(G, q) - count_zeros(stanley_Q(G), q, opts);
}

StrataCounts strata_counts(const Graph& G, std::uint64_t q, const CountOptions& opts) {
  const int m = G.n_edges();
  if (m > 14) throw TooLarge("strata_counts supports at most 14 edges");
  const FieldSpec F = make_field(q);
  require_budget(saturating_pow(q, m) + saturating_pow(q + 1, m), opts, "strata_counts");
  note_enumeration();
  const MultilinearPoly Q = stanley_Q(G);
  const PolyEvaluator eval(Q, F);
  const std::uint32_t n_sets = 1u << m;

  StrataCounts out;
  out.n_edges = m;
  out.x_s.assign(n_sets, 0);
  out.x_s_plus.assign(n_sets, 0);

  // Classifying pass: each zero of Q_G lands in the stratum of its zero set.
  std::vector<FieldElem> x(m);
  {
    std::vector<std::uint32_t> digits(m, 0);
    while (true) {
      std::uint32_t zero_set = 0;
      for (int i = 0; i < m; ++i) {
        x[i] = FieldElem{digits[i]};
        if (digits[i] == 0) zero_set |= 1u << i;
      }
      if (F.is_zero(eval(x.data()))) ++out.x_s_plus[zero_set];
      int i = m - 1;
      while (i >= 0) {
        if (++digits[i] < F.q()) break;
        digits[i] = 0;
        --i;
      }
      if (i < 0) break;
    }
  }

  // Direct pass: for each S, enumerate the coordinate subspace x_S = 0.
  for (std::uint32_t S = 0; S < n_sets; ++S) {
    std::vector<int> free_coords;
    for (int i = 0; i < m; ++i) {
      if (!((S >> i) & 1u)) free_coords.push_back(i);
    }
    std::fill(x.begin(), x.end(), F.zero());
    std::vector<std::uint32_t> digits(free_coords.size(), 0);
    std::uint64_t zeros = 0;
    while (true) {
      for (std::size_t k = 0; k < free_coords.size(); ++k) x[free_coords[k]] = FieldElem{digits[k]};
      if (F.is_zero(eval(x.data()))) ++zeros;
      int k = static_cast<int>(free_coords.size()) - 1;
      while (k >= 0) {
        if (++digits[k] < F.q()) break;
        digits[k] = 0;
        --k;
      }
      if (k < 0) break;
    }
    out.x_s[S] = zeros;
  }

  out.decomposition_holds = true;
  out.inclusion_exclusion_holds = true;
  for (std::uint32_t S = 0; S < n_sets; ++S) {
    std::uint64_t sum = 0;
    std::int64_t signed_sum = 0;
    for (std::uint32_t T = 0; T < n_sets; ++T) {
      if ((T & S) != S) continue;
      sum += out.x_s_plus[T];
      const int sign = std::popcount(T & ~S) % 2 == 0 ? 1 : -1;
      signed_sum += sign * static_cast<std::int64_t>(out.x_s[T]);
    }
    if (sum != out.x_s[S]) out.decomposition_holds = false;
    if (signed_sum != static_cast<std::int64_t>(out.x_s_plus[S])) out.inclusion_exclusion_holds = false;
  }
  return out;
}

SignedSumReport signed_sum_report(const Graph& G, std::uint64_t q, const CountOptions& opts) {
  const int m = G.n_edges();
  if (m > 8) throw TooLarge("verify_signed_sums supports at most 8 edges");
  SignedSumReport rep;
  rep.y_direct = static_cast<std::int64_t>(count_Y(G, q, opts));
  rep.x_direct = static_cast<std::int64_t>(count_X(G, q, opts));

  const std::uint32_t n_sets = 1u << m;
  // [Y_G] = sum over forests S, subsets T of E(G/S): (-1)^|T| [X_{(G/S) - T}].
  for (std::uint32_t S = 0; S < n_sets; ++S) {
    if (!is_forest(G, EdgeSubset{S})) continue;
    const Graph H = contract(G, EdgeSubset{S});
    const std::uint32_t n_t = 1u << H.n_edges();
    for (std::uint32_t T = 0; T < n_t; ++T) {
      const std::int64_t x = static_cast<std::int64_t>(count_X(delete_edges(H, EdgeSubset{T}), q, opts));
      rep.y_from_x += (std::popcount(T) % 2 == 0) ? x : -x;
    }
  }
  // [X_G] = sum over S, forests T in E - S: (-1)^|T| [Y_{(G-S)/T}].
  for (std::uint32_t S = 0; S < n_sets; ++S) {
    const Graph H = delete_edges(G, EdgeSubset{S});
    const std::uint32_t n_t = 1u << H.n_edges();
    for (std::uint32_t T = 0; T < n_t; ++T) {
      if (!is_forest(H, EdgeSubset{T})) continue;
      const std::int64_t y = static_cast<std::int64_t>(count_Y(contract(H, EdgeSubset{T}), q, opts));
      rep.x_from_y += (std::popcount(T) % 2 == 0) ? y : -y;
    }
  }
  return rep;
}

bool verify_signed_sums(const Graph& G, std::uint64_t q, const CountOptions& opts) {
  return signed_sum_report(G, q, opts).holds();
}

std::vector<std::uint64_t> symmetric_rank_census(int n, const std::vector<std::vector<bool>>& allowed,
                                                 std::uint64_t q, const CountOptions& opts) {
  if (n < 0 || n > EchelonBasis::kMaxDim) throw TooLarge("symmetric census dimension out of range");
  const FieldSpec F = make_field(q);
  std::vector<std::pair<int, int>> free_pos;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      if (i == j || allowed[i][j]) free_pos.emplace_back(i, j);
    }
  }
  const int n_free = static_cast<int>(free_pos.size());
  require_budget(saturating_pow(q, n_free), opts, "symmetric_rank_census");
  note_enumeration();

  std::vector<std::uint64_t> census(n + 1, 0);
  if (n_free == 0) {
    census[0] = 1;
    return census;
  }
  std::vector<std::vector<std::uint64_t>> partial(F.q(), std::vector<std::uint64_t>(n + 1, 0));
  parallel_sum(F.q(), opts.threads, [&](std::uint64_t first) {
    auto& local = partial[first];
    FMatrix M(n, n);
    std::vector<std::uint32_t> digits(n_free, 0);
    digits[0] = static_cast<std::uint32_t>(first);
    while (true) {
      for (int k = 0; k < n_free; ++k) {
        const auto [i, j] = free_pos[k];
        M.at(i, j) = FieldElem{digits[k]};
        M.at(j, i) = FieldElem{digits[k]};
      }
      ++local[matrix_rank(F, M)];
      int k = n_free - 1;
      while (k >= 1) {
        if (++digits[k] < F.q()) break;
        digits[k] = 0;
        --k;
      }
      if (k < 1) break;
    }
    return std::uint64_t{0};
  });
  for (const auto& local : partial) {
    for (int r = 0; r <= n; ++r) census[r] += local[r];
  }
  return census;
}

namespace {

std::vector<std::vector<bool>> edge_pattern(const Graph& G, bool edges_free) {
  const int n = G.n_vertices();
  std::vector<std::vector<bool>> allowed(n, std::vector<bool>(n, !edges_free));
  for (const auto& e : G.edges()) {
    allowed[e.u][e.v] = edges_free;
    allowed[e.v][e.u] = edges_free;
  }
  return allowed;
}

}  // namespace

std::uint64_t count_Zo(const Graph& G, std::uint64_t q, const CountOptions& opts) {
  require_simple(G, "count_Zo");
  return symmetric_rank_census(G.n_vertices(), edge_pattern(G, true), q, opts)[G.n_vertices()];
}

std::uint64_t count_Z(const Graph& G, std::uint64_t q, const CountOptions& opts) {
  return count_Z_rank(G, G.n_vertices(), q, opts);
}

std::uint64_t count_Z_rank(const Graph& G, int r, std::uint64_t q, const CountOptions& opts) {
  require_simple(G, "count_Z");
  if (r < 0) throw BadArgs("count_Z_rank: negative rank");
  if (r > G.n_vertices()) return 0;
  return symmetric_rank_census(G.n_vertices(), edge_pattern(G, false), q, opts)[r];
}

bool verify_stanley_iso(const Graph& G, std::uint64_t q, const CountOptions& opts) {
  return count_X(apex_extension(G), q, opts) == count_Zo(G, q, opts);
}

Integer gl_count(int n, std::uint64_t q) {
  if (n < 0) throw BadArgs("gl: negative size");
  Integer r = 1;
  const Integer qn = ipow(q, n);
  for (int i = 0; i < n; ++i) r *= qn - ipow(q, i);
  return r;
}

Integer gr_count(int a, int b, std::uint64_t q) {
  if (a < 0 || b < 0) throw BadArgs("gr: negative argument");
  if (a > b) return 0;
  const Integer denom = gl_count(a, q) * gl_count(b - a, q) * ipow(q, a * (b - a));
  return exact_div(gl_count(b, q), denom, "gr_count");
}

Integer hom_r_count(int e, int f, int r, std::uint64_t q) {
  if (e < 0 || f < 0 || r < 0) throw BadArgs("hom_r: negative argument");
  if (r > std::min(e, f)) return 0;
  return gr_count(r, e, q) * gr_count(r, f, q) * gl_count(r, q);
}

Integer sym_count(int n, int r, std::uint64_t q) {
  if (n < 0 || r < 0) throw BadArgs("sym: negative argument");
  if (r > n) return 0;
  if (r == 0) return 1;
  const int s = r / 2;
  Integer num = 1;
  Integer den = 1;
  for (int i = 1; i <= s; ++i) {
    num *= ipow(q, 2 * i);
    den *= ipow(q, 2 * i) - 1;
  }
  const int last = (r % 2 == 0) ? 2 * s - 1 : 2 * s;
  for (int i = 0; i <= last; ++i) num *= ipow(q, n - i) - 1;
  return exact_div(num, den, "sym_count");
}

}  // namespace gm
