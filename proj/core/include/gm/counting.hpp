#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "gm/budget.hpp"
#include "gm/count_table.hpp"
#include "gm/ffield.hpp"
#include "gm/graphs.hpp"
#include "gm/integer.hpp"
#include "gm/polys.hpp"

namespace gm {

// |{x in F_q^n : P(x) = 0}| by full enumeration. Throws BudgetExceeded.
std::uint64_t count_zeros(const MultilinearPoly& P, std::uint64_t q, const CountOptions& opts = {});

// [Y_G] = q^|E| - #V(P_G) and [X_G] = q^|E| - #V(Q_G).
std::uint64_t count_Y(const Graph& G, std::uint64_t q, const CountOptions& opts = {});
std::uint64_t count_X(const Graph& G, std::uint64_t q, const CountOptions& opts = {});

// Coordinate strata of X = V(Q_G). Indexed by edge-subset bitmask S:
//   x_s[S]      = #{x in X : x_e = 0 for e in S}
//   x_s_plus[S] = #{x in X : x_e = 0 exactly for e in S}
// x_s is counted directly per S, x_s_plus by one classifying pass; the two
// stratification identities are checked against each other.
struct StrataCounts {
  int n_edges = 0;
  std::vector<std::uint64_t> x_s;
  std::vector<std::uint64_t> x_s_plus;
  bool decomposition_holds = false;        // [X_S] = sum_{T >= S} [X_T^+]
  bool inclusion_exclusion_holds = false;  // [X_S^+] = sum_{T >= S} (-1)^|T-S| [X_T]
};
StrataCounts strata_counts(const Graph& G, std::uint64_t q, const CountOptions& opts = {});

// Both signed-sum expressions relating [Y_G] and [X_G], evaluated at q.
struct SignedSumReport {
  std::int64_t y_direct = 0;
  std::int64_t y_from_x = 0;
  std::int64_t x_direct = 0;
  std::int64_t x_from_y = 0;
  bool holds() const { return y_direct == y_from_x && x_direct == x_from_y; }
};
SignedSumReport signed_sum_report(const Graph& G, std::uint64_t q, const CountOptions& opts = {});
bool verify_signed_sums(const Graph& G, std::uint64_t q, const CountOptions& opts = {});

// Census of symmetric n x n matrices over F_q by rank. Diagonal entries are
// always free; off-diagonal entry (i, j) is free iff allowed(i, j), else 0.
// Returned vector has n + 1 entries.
std::vector<std::uint64_t> symmetric_rank_census(int n, const std::vector<std::vector<bool>>& allowed,
                                                 std::uint64_t q, const CountOptions& opts = {});

// Z_G^o: nondegenerate symmetric forms vanishing off the edges of G.
std::uint64_t count_Zo(const Graph& G, std::uint64_t q, const CountOptions& opts = {});
// Z_G: nondegenerate symmetric forms vanishing on the edges of G.
std::uint64_t count_Z(const Graph& G, std::uint64_t q, const CountOptions& opts = {});
// Z_G(r): rank-r symmetric forms vanishing on the edges of G.
std::uint64_t count_Z_rank(const Graph& G, int r, std::uint64_t q, const CountOptions& opts = {});

// [X_{G*}](q) == [Z_G^o](q).
bool verify_stanley_iso(const Graph& G, std::uint64_t q, const CountOptions& opts = {});

// Closed-form counts. Negative arguments throw BadArgs; arguments outside the
// support (a > b, r > min(e, f), r > n) give 0.
Integer gl_count(int n, std::uint64_t q);
Integer gr_count(int a, int b, std::uint64_t q);
Integer hom_r_count(int e, int f, int r, std::uint64_t q);
Integer sym_count(int n, int r, std::uint64_t q);

// Same closed forms with q bound once.
class ClosedCounts {
 public:
  explicit ClosedCounts(std::uint64_t q) : q_(q) {}
  Integer gl(int n) const { return gl_count(n, q_); }
  Integer gr(int a, int b) const { return gr_count(a, b, q_); }
  Integer hom_r(int e, int f, int r) const { return hom_r_count(e, f, r, q_); }
  Integer sym(int n, int r) const { return sym_count(n, r, q_); }
  std::uint64_t q() const { return q_; }

 private:
  std::uint64_t q_;
};
inline ClosedCounts closed_counts(std::uint64_t q) { return ClosedCounts(q); }

// Number of extensions of a fixed rank-r1 symmetric form on F_q^d1 to a
// rank-r2 symmetric form on F_q^d2. One-step values by the four-case
// formula, larger gaps by the recursion over the intermediate rank; memoized.
// Throws BadArgs for negative arguments or d1 > d2.
Integer macwilliams_C(int d2, int r2, int d1, int r1, std::uint64_t q);

// Brute-force oracle: enumerates every symmetric d2 x d2 matrix whose leading
// d1 x d1 block equals `base` and counts those of rank r2. Without `base`,
// uses diag(1,..,1,0,..,0) of rank r1. Throws BadArgs if base has the wrong
// shape or rank.
std::uint64_t macwilliams_C_oracle(int d2, int r2, int d1, int r1, std::uint64_t q,
                                   const std::optional<FMatrix>& base = std::nullopt,
                                   const CountOptions& opts = {});

// Support: nonzero iff d2 >= r2, d1 >= r1, 0 <= r1 <= r2 <= r1 + 2(d2 - d1).
bool macwilliams_support(int d2, int r2, int d1, int r1);

}  // namespace gm
