#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "gm/ffield.hpp"
#include "gm/graphs.hpp"
#include "gm/integer.hpp"

namespace gm {

// Sparse polynomial in x_0..x_{n-1} whose monomials are squarefree, keyed by
// the set of variables they contain. Zero coefficients are never stored.
class MultilinearPoly {
 public:
  using Terms = std::map<EdgeSubset, Integer>;

  explicit MultilinearPoly(int n_vars = 0);

  int n_vars() const { return n_vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Adds c * x^m. Throws BadArgs if m uses variables >= n_vars.
  void add_term(EdgeSubset m, const Integer& c);
  Integer coefficient(EdgeSubset m) const;

  // -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;
  bool all_coefficients_one() const;

  // Canonical text: monomials ordered by degree then variable indices, joined
  // by " + "; unit coefficients omitted, others written "c * x_ix_j".
  std::string to_string() const;

  friend MultilinearPoly operator+(const MultilinearPoly& a, const MultilinearPoly& b);
  friend MultilinearPoly operator-(const MultilinearPoly& a, const MultilinearPoly& b);
  // Throws InternalError if the product would square a variable.
  friend MultilinearPoly operator*(const MultilinearPoly& a, const MultilinearPoly& b);
  friend bool operator==(const MultilinearPoly&, const MultilinearPoly&) = default;

 private:
  int n_vars_;
  Terms terms_;
};

// P_G: sum over spanning trees T of the product of x_e for e not in T.
MultilinearPoly kirchhoff_P(const Graph& G);
// Q_G: sum over spanning trees T of the product of x_e for e in T.
MultilinearPoly stanley_Q(const Graph& G);

struct SymbolicMatrix {
  int dim = 0;
  std::vector<MultilinearPoly> entries;

  SymbolicMatrix() = default;
  SymbolicMatrix(int d, int n_vars) : dim(d), entries(static_cast<std::size_t>(d) * d, MultilinearPoly(n_vars)) {}

  MultilinearPoly& at(int i, int j) { return entries[static_cast<std::size_t>(i) * dim + j]; }
  const MultilinearPoly& at(int i, int j) const { return entries[static_cast<std::size_t>(i) * dim + j]; }
};

// Generic Laplacian: L_ii = sum of x_e over edges at i, L_ij = -x_ij.
// Throws NotSimple.
SymbolicMatrix laplacian(const Graph& G);
// L with the row and column of vertex 0 removed.
SymbolicMatrix reduced_laplacian(const Graph& G);

inline constexpr int kMaxSymbolicDim = 8;

// Exact determinant by memoized cofactor expansion. Intermediate products are
// computed in the full polynomial ring; the result must be multilinear
// (InternalError otherwise). Throws TooLarge beyond kMaxSymbolicDim.
MultilinearPoly symbolic_det(const SymbolicMatrix& M);

// Throws LengthMismatch unless point.size() == P.n_vars().
FieldElem evaluate(const MultilinearPoly& P, const FieldSpec& F, std::span<const FieldElem> point);

// Checks Q_G(x) = P_G(1/x) * prod x_e term by term: the monomials of Q_G are
// exactly the complements of those of P_G, with equal coefficients.
bool duality_check(const Graph& G);

// A polynomial reduced into a fixed field for repeated evaluation.
class PolyEvaluator {
 public:
  PolyEvaluator(const MultilinearPoly& P, const FieldSpec& F);

  FieldElem operator()(const FieldElem* point) const;
  int n_vars() const { return n_vars_; }

 private:
  const FieldSpec* field_;
  int n_vars_;
  std::vector<std::pair<std::uint32_t, FieldElem>> terms_;
};

}  // namespace gm
