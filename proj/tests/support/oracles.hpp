#pragma once

// Deliberately naive reference implementations used only by the tests. None
// of them call into the library's enumerators; they share only FieldSpec
// arithmetic (itself checked against NaiveField) and the Graph type.

#include <cstdint>
#include <vector>

#include "gm/ffield.hpp"
#include "gm/graphs.hpp"
#include "gm/integer.hpp"
#include "gm/matroids.hpp"

namespace gm::oracle {

// F_p[X]/(m) with elements as coefficient vectors (constant term first) and
// schoolbook arithmetic. The modulus is found by trial division.
class NaiveField {
 public:
  NaiveField(std::uint32_t p, int n);

  std::uint32_t p() const { return p_; }
  int n() const { return n_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  std::vector<std::uint32_t> add(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const;
  std::vector<std::uint32_t> mul(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) const;

 private:
  std::uint32_t p_;
  int n_;
  std::vector<std::uint32_t> modulus_;
};

// Lexicographically least (constant term first) monic irreducible of degree n.
std::vector<std::uint32_t> least_irreducible(std::uint32_t p, int n);

using Mat = std::vector<std::vector<FieldElem>>;

// Determinant by Leibniz expansion.
FieldElem leibniz_det(const FieldSpec& F, const Mat& M);
// Rank as the size of the largest nonvanishing minor.
int minor_rank(const FieldSpec& F, const Mat& M);

// Censuses by enumerating every matrix.
std::uint64_t census_rank(const FieldSpec& F, int rows, int cols, int r);
std::uint64_t census_symmetric_rank(const FieldSpec& F, int n, int r);

// Extensions of diag(1^r1, 0) on F^d1 to symmetric forms of rank r2 on F^d2.
std::uint64_t census_extensions(const FieldSpec& F, int d2, int r2, int d1, int r1);

// Spanning trees by checking every (n-1)-subset for connectivity with DFS.
std::uint64_t count_spanning_trees(const Graph& G);
// det of the reduced Laplacian over Q (vertex 0 removed).
Integer laplacian_minor(const Graph& G);

// #{x in F_q^m : P(x) = 0} for P = sum over spanning trees of products over
// the edges selected by `in_tree` (true: edges in the tree, false: outside).
std::uint64_t graph_poly_zeros(const Graph& G, const FieldSpec& F, bool in_tree);

// Symmetric n x n forms with rank r (-1: any) and zeros at the listed
// positions; nondegenerate variants are r = n.
std::uint64_t census_pattern(const FieldSpec& F, int n, const std::vector<std::pair<int, int>>& zeros, int r);

// (Q, f) pairs with rank Q = r, dim span f = k, f(u)^T Q f(v) = 0 on edges.
// r or k equal to -1 mean "any".
std::uint64_t census_A(const Graph& G, int s, int r, int k, const FieldSpec& F);
// Same with rank Q = s and dim span f(H) = rank for each constraint.
std::uint64_t census_J_partial(const Graph& G, int s, const PartialRank& pi, const FieldSpec& F);
// Maps V -> F^s meeting every rank constraint.
std::uint64_t census_L(int s, const PartialRank& pi, const FieldSpec& F);

// Matroid rank table checked against every axiom by direct definition.
bool axioms_hold(const Matroid& M);

}  // namespace gm::oracle
