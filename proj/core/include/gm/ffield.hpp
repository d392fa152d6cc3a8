#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gm/errors.hpp"

namespace gm {

// An element of an explicit finite field, identified by its position in
// FieldSpec::elements(). The position is the coefficient vector (constant
// term first) read as a base-p numeral with the constant term most
// significant, so ordering by index is lexicographic on coefficients.
struct FieldElem {
  std::uint32_t index = 0;

  friend constexpr auto operator<=>(const FieldElem&, const FieldElem&) = default;
};

// F_q with q = p^n, realized as F_p[X]/(modulus). Immutable; copies share the
// arithmetic tables.
class FieldSpec {
 public:
  // Throws NotPrimePower for q with two distinct prime factors, BadArgs for q < 2.
  static FieldSpec make(std::uint64_t q);

  std::uint32_t p() const { return p_; }
  int n() const { return n_; }
  std::uint32_t q() const { return q_; }
  // Monic irreducible polynomial over F_p, constant term first (length n+1).
  const std::vector<std::uint32_t>& modulus() const;

  FieldElem zero() const { return FieldElem{0}; }
  FieldElem one() const { return FieldElem{one_index_}; }

  FieldElem add(FieldElem a, FieldElem b) const {
    if (add_tab_) return FieldElem{add_tab_[a.index * q_ + b.index]};
    return slow_add(a, b);
  }
  FieldElem mul(FieldElem a, FieldElem b) const {
    if (mul_tab_) return FieldElem{mul_tab_[a.index * q_ + b.index]};
    return slow_mul(a, b);
  }
  FieldElem neg(FieldElem a) const {
    if (neg_tab_) return FieldElem{neg_tab_[a.index]};
    return slow_neg(a);
  }
  FieldElem sub(FieldElem a, FieldElem b) const { return add(a, neg(b)); }
  // Throws DivisionByZero on zero.
  FieldElem inv(FieldElem a) const;
  FieldElem div(FieldElem a, FieldElem b) const { return mul(a, inv(b)); }
  bool eq(FieldElem a, FieldElem b) const { return a.index == b.index; }
  bool is_zero(FieldElem a) const { return a.index == 0; }

  // Image of an integer under Z -> F_p -> F_q.
  FieldElem from_int(std::int64_t v) const;

  std::vector<std::uint32_t> coeffs(FieldElem a) const;
  FieldElem from_coeffs(std::span<const std::uint32_t> c) const;

  // Natural polynomial code sum c_i p^i; used by text formats.
  std::uint32_t poly_code(FieldElem a) const;
  FieldElem from_poly_code(std::uint32_t code) const;

  // All q elements in index order, zero first.
  std::vector<FieldElem> elements() const;

  std::string to_string(FieldElem a) const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.p_ == b.p_ && a.n_ == b.n_;
  }

 private:
  struct Tables;

  FieldSpec() = default;

  FieldElem slow_add(FieldElem a, FieldElem b) const;
  FieldElem slow_mul(FieldElem a, FieldElem b) const;
  FieldElem slow_neg(FieldElem a) const;

  std::uint32_t p_ = 0;
  int n_ = 0;
  std::uint32_t q_ = 0;
  std::uint32_t one_index_ = 0;
  std::shared_ptr<const Tables> tables_;
  const std::uint16_t* add_tab_ = nullptr;
  const std::uint16_t* mul_tab_ = nullptr;
  const std::uint16_t* neg_tab_ = nullptr;
};

inline FieldSpec make_field(std::uint64_t q) { return FieldSpec::make(q); }

// Returns (p, n) with q = p^n, or throws NotPrimePower.
std::pair<std::uint32_t, int> prime_power_decomposition(std::uint64_t q);
bool is_prime_power(std::uint64_t q);

// Dense row-major matrix over a FieldSpec.
struct FMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<FieldElem> entries;

  FMatrix() = default;
  FMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<std::size_t>(r) * c) {}

  FieldElem& at(int i, int j) { return entries[static_cast<std::size_t>(i) * cols + j]; }
  FieldElem at(int i, int j) const { return entries[static_cast<std::size_t>(i) * cols + j]; }
};

// Rank by Gaussian elimination.
int matrix_rank(const FieldSpec& F, FMatrix M);

// Incremental row-echelon basis of a subspace of F^dim. Supports the
// span-dimension bookkeeping in the enumerators without re-running a full
// elimination at every step.
class EchelonBasis {
 public:
  static constexpr int kMaxDim = 8;

  EchelonBasis(const FieldSpec& F, int dim);

  int rank() const { return rank_; }
  int dim() const { return dim_; }
  // Adds v; returns true iff the rank grew.
  bool insert(std::span<const FieldElem> v);
  bool contains(std::span<const FieldElem> v) const;

 private:
  // Reduces v in place against the basis; returns the pivot of the residue or -1.
  int reduce(FieldElem* v) const;

  const FieldSpec* field_;
  int dim_;
  int rank_ = 0;
  FieldElem rows_[kMaxDim][kMaxDim];
  int pivots_[kMaxDim];
};

// F_q^dim with vectors encoded as integers in [0, q^dim): the coordinate
// vector read as a base-q numeral, first coordinate most significant.
class VectorSpace {
 public:
  VectorSpace(FieldSpec F, int dim);

  const FieldSpec& field() const { return field_; }
  int dim() const { return dim_; }
  std::uint32_t size() const { return size_; }

  std::span<const FieldElem> coords(std::uint32_t v) const {
    return {coords_.data() + static_cast<std::size_t>(v) * dim_, static_cast<std::size_t>(dim_)};
  }
  std::uint32_t encode(std::span<const FieldElem> c) const;

  // Image of every vector under a dim x dim matrix, as encoded vectors.
  std::vector<std::uint32_t> apply(const FMatrix& M) const;
  // Standard dot product.
  FieldElem dot(std::uint32_t u, std::uint32_t v) const;

 private:
  FieldSpec field_;
  int dim_;
  std::uint32_t size_;
  std::vector<FieldElem> coords_;
};

}  // namespace gm
