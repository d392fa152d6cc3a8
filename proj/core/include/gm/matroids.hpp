#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gm/budget.hpp"
#include "gm/count_table.hpp"
#include "gm/ffield.hpp"
#include "gm/graphs.hpp"

namespace gm {

inline constexpr int kMaxMatroidSize = 12;

// Matroid on {0..m-1} given by its full rank table, indexed by subset bitmask.
// Construction checks only the table's shape; validate_axioms checks the rest.
class Matroid {
 public:
  Matroid() = default;
  Matroid(int m, std::vector<int> ranks);

  int size() const { return m_; }
  int rank() const { return ranks_.empty() ? 0 : ranks_.back(); }
  int rank(std::uint32_t subset) const { return ranks_[subset]; }
  const std::vector<int>& ranks() const { return ranks_; }

  friend bool operator==(const Matroid&, const Matroid&) = default;

 private:
  int m_ = 0;
  std::vector<int> ranks_;
};

// Rank requirements on selected subsets of a ground set; no axioms assumed.
struct PartialRank {
  int ground_size = 0;
  std::vector<std::pair<std::uint32_t, int>> constraints;
};

// rho(empty) = 0, rho(X u e) <= rho(X) + 1, monotone, submodular, rho(E) <= |E|.
// Throws TooLarge for m > kMaxMatroidSize.
bool validate_axioms(const Matroid& M);

// rho(X) = dim span of the columns in X. Columns are vectors of equal length.
Matroid vector_matroid(const FieldSpec& F, const std::vector<std::vector<FieldElem>>& columns);
Matroid uniform_matroid(int r, int m);
// Cycle matroid: rho(S) = n - b0(V, S). Loops of G are loops of the matroid.
Matroid graphic_matroid(const Graph& G);
// The 7 nonzero vectors of F_2^3 in binary order 001, 010, ..., 111.
Matroid fano();
// Relabels element i to perm[i].
Matroid relabel(const Matroid& M, const std::vector<int>& perm);
// The full rank table as a PartialRank over the same ground set.
PartialRank total_rank_function(const Matroid& M);

// #X(M, s)(F_q): maps f from the ground set to F_q^s with
// dim span f(X) = rho(X) for every X. Counts completions of a fixed image of
// one basis (GL_s acts simply transitively on independent frames) with each
// further non-loop element taken up to scalars.
std::uint64_t count_X(const Matroid& M, int s, std::uint64_t q, const CountOptions& opts = {});
// Same count by depth-first enumeration of all of (F_q^s)^m, pruning on every
// fully assigned subset. Budget q^(s m).
std::uint64_t count_X_bruteforce(const Matroid& M, int s, std::uint64_t q, const CountOptions& opts = {});

// [X(Fano)](q) for each q (q must lie in {2,3,4,5,7,8,9}).
CountTable fano_demo(const std::vector<std::uint64_t>& qs, const CountOptions& opts = {});

// Classical line constructions in P^2 from the frame (1,0,0), (0,1,0),
// (0,0,1), (1,1,1) locating (x + x', 0, 1), (x x', 0, 1) and (-x, 0, 1).
// nullopt when a step has coincident points or lines.
std::optional<FieldElem> staudt_sum(const FieldSpec& F, FieldElem x, FieldElem y);
std::optional<FieldElem> staudt_product(const FieldSpec& F, FieldElem x, FieldElem y);
std::optional<FieldElem> staudt_negation(const FieldSpec& F, FieldElem x);

struct VonStaudtReport {
  bool ok = false;
  int checked = 0;
  int skipped = 0;
  std::vector<std::string> failures;
};
// Runs all three constructions for every pair in F (q <= 9).
VonStaudtReport von_staudt_check(const FieldSpec& F);

// Text format: "m" then 2^m lines with the rank of each subset in bitmask
// order; or "vector p n s" followed by one column per line, s coordinates
// each written as polynomial codes (sum c_i p^i).
Matroid parse_matroid(std::string_view text);
std::string write_matroid(const Matroid& M);
std::string write_matroid_vector_form(const FieldSpec& F, int s,
                                      const std::vector<std::vector<FieldElem>>& columns);

}  // namespace gm
