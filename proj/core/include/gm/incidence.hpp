#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gm/budget.hpp"
#include "gm/graphs.hpp"
#include "gm/integer.hpp"
#include "gm/matroids.hpp"

namespace gm {

// s: ambient dimension, r: rank of the symmetric form Q, k: dimension of the
// span of f. Counts vanish unless r <= s and k <= min(s, n).
struct IncidenceParams {
  int s = 0;
  int r = 0;
  int k = 0;
};

// All counts A_G(s, r, k) for one (G, s, q): a[r][k] for r in [0, s],
// k in [0, min(s, n)].
struct ATable {
  int s = 0;
  int n = 0;
  std::vector<std::vector<std::uint64_t>> a;

  std::uint64_t at(int r, int k) const;
  std::uint64_t total() const;
};

// Enumerates every symmetric Q on F_q^s (outer loop, chunk-parallel) and
// every f: V -> F_q^s with Q(f(u), f(v)) = 0 on edges (depth-first, pruned at
// the first violated edge). Results are cached per (G, s, q) for the life of
// the process. Budget q^(s(s+1)/2 + s n). Requires simple G.
ATable a_table(const Graph& G, int s, std::uint64_t q, const CountOptions& opts = {});

std::uint64_t count_A(const Graph& G, const IncidenceParams& p, std::uint64_t q, const CountOptions& opts = {});
// |A_G(s)|: all (Q, f) pairs orthogonal across edges, any rank, any span.
// Plain odometer over (Q, f); does not share code with a_table.
std::uint64_t count_A_unstratified(const Graph& G, int s, std::uint64_t q, const CountOptions& opts = {});

// J_G(s) = union over k of A_G(s, s, k); K_G(s) = A_G(s, s, s); H_G(s) = A_G(n, s, n).
std::uint64_t count_J(const Graph& G, int s, std::uint64_t q, const CountOptions& opts = {});
std::uint64_t count_K(const Graph& G, int s, std::uint64_t q, const CountOptions& opts = {});
std::uint64_t count_H(const Graph& G, int s, std::uint64_t q, const CountOptions& opts = {});

// Pairs in J_G(s) with dim span f(H) = pi(H) for every constrained H.
// Constraint masks must lie within V(G). Unattainable ranks give 0.
std::uint64_t count_J_partial(const Graph& G, int s, const PartialRank& pi, std::uint64_t q,
                              const CountOptions& opts = {});
// f: V -> F_q^s with dim span f(H) = pi(H) for every constrained H, where
// V = {0..pi.ground_size-1}. Budget q^(s |V|).
std::uint64_t count_L(int s, const PartialRank& pi, std::uint64_t q, const CountOptions& opts = {});

// [J_F(s)](q) for a forest F by peeling isolated vertices and leaves:
//   J_{DG} = q^s J_G,  J_{I_v G} = q^(s-1) (J_G + (q-1) J_{G - v}),  J_empty = sym(s, s).
// Throws NotAForest.
Integer forest_J(const Graph& F, int s, std::uint64_t q);

// [Z_F](q) for a forest, recovered from forest_J(F, 0..n) by inverting
// J(s) = sum_j c(s, j) K(j), where K(j) = A(j, j, j) and K(n) = Z_F gl(n).
// Throws NotAForest.
Integer forest_Z(const Graph& F, std::uint64_t q);

// G plus t new vertices, each joined to every vertex of H (a vertex mask).
Graph attach_to_subset(const Graph& G, std::uint32_t H, int t);

// Inputs for verify_identity. Which fields matter depends on the identity:
//   firstred, secondred, Dreduction   G, s, r, k
//   cor-secondred                     G, s, r
//   yuck                              G, r (needs r <= n_G + 1)
//   Jyuck                             G, s
//   pi-strat                          G, s, t, pi, H (H outside dom pi)
//   grassmann-factor                  s, matroid (default: cycle matroid of G)
struct IdentityParams {
  Graph G;
  int s = 0;
  int r = 0;
  int k = 0;
  int t = 0;
  PartialRank pi;
  std::uint32_t H = 0;
  std::optional<Matroid> matroid;
};

struct IdentityReport {
  std::string name;
  Integer lhs;
  Integer rhs;
  bool equal = false;
};

const std::vector<std::string>& identity_names();

// Evaluates both sides at q from brute-force counts and closed forms.
// Throws BadParams for an unknown name or parameters outside an identity's
// hypotheses, BudgetExceeded from the underlying counts.
IdentityReport verify_identity(std::string_view name, const IdentityParams& params, std::uint64_t q,
                               const CountOptions& opts = {});

}  // namespace gm
