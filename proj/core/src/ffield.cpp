#include "gm/ffield.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "gm/budget.hpp"

namespace gm {
namespace {

using Poly = std::vector<std::uint32_t>;  // over F_p, constant term first

constexpr std::uint32_t kTableLimit = 256;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

Poly poly_mod(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::uint32_t lead_inv = mod_pow(b.back(), p - 2, p);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    for (std::size_t i = 0; i < b.size(); ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

// Monic polynomial of degree d whose lower coefficients are the base-p digits
// of t with the constant term most significant: t = 0, 1, ... walks the
// candidates lexicographically, low degree first.
Poly monic_candidate(std::uint64_t t, int d, std::uint32_t p) {
  Poly c(d + 1, 0);
  c[d] = 1;
  for (int i = d - 1; i >= 0; --i) {
    c[i] = static_cast<std::uint32_t>(t % p);
    t /= p;
  }
  return c;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const int n = static_cast<int>(f.size()) - 1;
  for (int d = 1; d <= n / 2; ++d) {
    const std::uint64_t count = saturating_pow(p, d);
    for (std::uint64_t t = 0; t < count; ++t) {
      if (poly_mod(f, monic_candidate(t, d, p), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

struct FieldSpec::Tables {
  Poly modulus;
  std::vector<std::uint16_t> add;
  std::vector<std::uint16_t> mul;
  std::vector<std::uint16_t> neg;
  std::vector<std::uint16_t> inv;
};

std::pair<std::uint32_t, int> prime_power_decomposition(std::uint64_t q) {
  if (q < 2) throw NotPrimePower("q = " + std::to_string(q) + " is not a prime power");
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) p = q;
  std::uint64_t rest = q;
  int n = 0;
  while (rest % p == 0) {
    rest /= p;
    ++n;
  }
  if (rest != 1 || p > 0xffffffffULL) {
    throw NotPrimePower("q = " + std::to_string(q) + " is not a prime power");
  }
  return {static_cast<std::uint32_t>(p), n};
}

bool is_prime_power(std::uint64_t q) {
  try {
    prime_power_decomposition(q);
    return true;
  } catch (const NotPrimePower&) {
    return false;
  }
}

FieldSpec FieldSpec::make(std::uint64_t q) {
  if (q < 2) throw BadArgs("field order must be at least 2");
  if (q > 0x7fffffffULL) throw BadArgs("field order too large");
  const auto [p, n] = prime_power_decomposition(q);

  auto tables = std::make_shared<Tables>();
  if (n == 1) {
    tables->modulus = {0, 1};
  } else {
    const std::uint64_t count = saturating_pow(p, n);
    for (std::uint64_t t = 0; t < count; ++t) {
      Poly cand = monic_candidate(t, n, p);
      if (is_irreducible(cand, p)) {
        tables->modulus = std::move(cand);
        break;
      }
    }
    if (tables->modulus.empty()) throw InternalError("no irreducible polynomial found");
  }

  FieldSpec F;
  F.p_ = p;
  F.n_ = n;
  F.q_ = static_cast<std::uint32_t>(q);
  F.one_index_ = static_cast<std::uint32_t>(saturating_pow(p, n - 1));
  F.tables_ = tables;

  if (q <= kTableLimit) {
    const std::uint32_t Q = F.q_;
    tables->add.resize(Q * Q);
    tables->mul.resize(Q * Q);
    tables->neg.resize(Q);
    tables->inv.resize(Q);
    for (std::uint32_t a = 0; a < Q; ++a) {
      tables->neg[a] = static_cast<std::uint16_t>(F.slow_neg(FieldElem{a}).index);
      for (std::uint32_t b = 0; b < Q; ++b) {
        tables->add[a * Q + b] =
            static_cast<std::uint16_t>(F.slow_add(FieldElem{a}, FieldElem{b}).index);
        tables->mul[a * Q + b] =
            static_cast<std::uint16_t>(F.slow_mul(FieldElem{a}, FieldElem{b}).index);
      }
    }
    for (std::uint32_t a = 1; a < Q; ++a) {
      for (std::uint32_t b = 1; b < Q; ++b) {
        if (tables->mul[a * Q + b] == F.one_index_) {
          tables->inv[a] = static_cast<std::uint16_t>(b);
          break;
        }
      }
    }
    F.add_tab_ = tables->add.data();
    F.mul_tab_ = tables->mul.data();
    F.neg_tab_ = tables->neg.data();
  }
  return F;
}

const std::vector<std::uint32_t>& FieldSpec::modulus() const { return tables_->modulus; }

std::vector<std::uint32_t> FieldSpec::coeffs(FieldElem a) const {
  std::vector<std::uint32_t> c(n_, 0);
  std::uint32_t t = a.index;
  for (int i = n_ - 1; i >= 0; --i) {
    c[i] = t % p_;
    t /= p_;
  }
  return c;
}

FieldElem FieldSpec::from_coeffs(std::span<const std::uint32_t> c) const {
  std::uint32_t idx = 0;
  for (int i = 0; i < n_; ++i) {
    const std::uint32_t digit = i < static_cast<int>(c.size()) ? c[i] % p_ : 0;
    idx = idx * p_ + digit;
  }
  return FieldElem{idx};
}

std::uint32_t FieldSpec::poly_code(FieldElem a) const {
  const auto c = coeffs(a);
  std::uint32_t code = 0;
  for (int i = n_ - 1; i >= 0; --i) code = code * p_ + c[i];
  return code;
}

FieldElem FieldSpec::from_poly_code(std::uint32_t code) const {
  if (code >= q_) throw BadArgs("field element code out of range");
  std::vector<std::uint32_t> c(n_, 0);
  for (int i = 0; i < n_; ++i) {
    c[i] = code % p_;
    code /= p_;
  }
  return from_coeffs(c);
}

FieldElem FieldSpec::slow_add(FieldElem a, FieldElem b) const {
  auto ca = coeffs(a);
  const auto cb = coeffs(b);
  for (int i = 0; i < n_; ++i) ca[i] = (ca[i] + cb[i]) % p_;
  return from_coeffs(ca);
}

FieldElem FieldSpec::slow_neg(FieldElem a) const {
  auto c = coeffs(a);
  for (auto& x : c) x = (p_ - x) % p_;
  return from_coeffs(c);
}

FieldElem FieldSpec::slow_mul(FieldElem a, FieldElem b) const {
  const auto ca = coeffs(a);
  const auto cb = coeffs(b);
  Poly prod(2 * n_ - 1, 0);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      prod[i + j] = static_cast<std::uint32_t>(
          (prod[i + j] + static_cast<std::uint64_t>(ca[i]) * cb[j]) % p_);
    }
  }
  return from_coeffs(poly_mod(std::move(prod), tables_->modulus, p_));
}

FieldElem FieldSpec::inv(FieldElem a) const {
  if (a.index == 0) throw DivisionByZero("inverse of zero in F_" + std::to_string(q_));
  if (!tables_->inv.empty()) return FieldElem{tables_->inv[a.index]};
  // a^(q-2) by square-and-multiply.
  FieldElem result = one();
  FieldElem base = a;
  std::uint64_t e = q_ - 2;
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

FieldElem FieldSpec::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  const std::uint32_t c0 = static_cast<std::uint32_t>(r);
  return FieldElem{c0 * one_index_};
}

std::vector<FieldElem> FieldSpec::elements() const {
  std::vector<FieldElem> out(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out[i] = FieldElem{i};
  return out;
}

std::string FieldSpec::to_string(FieldElem a) const {
  if (n_ == 1) return std::to_string(a.index);
  const auto c = coeffs(a);
  std::ostringstream os;
  bool first = true;
  for (int i = n_ - 1; i >= 0; --i) {
    if (c[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0 || c[i] != 1) os << c[i];
    if (i >= 1) os << "X";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

int matrix_rank(const FieldSpec& F, FMatrix M) {
  int rank = 0;
  for (int col = 0; col < M.cols && rank < M.rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < M.rows; ++r) {
      if (!F.is_zero(M.at(r, col))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) {
      for (int c = 0; c < M.cols; ++c) std::swap(M.at(pivot, c), M.at(rank, c));
    }
    const FieldElem inv = F.inv(M.at(rank, col));
    for (int r = rank + 1; r < M.rows; ++r) {
      if (F.is_zero(M.at(r, col))) continue;
      const FieldElem factor = F.mul(M.at(r, col), inv);
      for (int c = col; c < M.cols; ++c) {
        M.at(r, c) = F.sub(M.at(r, c), F.mul(factor, M.at(rank, c)));
      }
    }
    ++rank;
  }
  return rank;
}

EchelonBasis::EchelonBasis(const FieldSpec& F, int dim) : field_(&F), dim_(dim) {
  if (dim < 0 || dim > kMaxDim) throw TooLarge("echelon dimension out of range");
}

int EchelonBasis::reduce(FieldElem* v) const {
  const FieldSpec& F = *field_;
  for (int b = 0; b < rank_; ++b) {
    const int piv = pivots_[b];
    if (F.is_zero(v[piv])) continue;
    // Basis rows are normalized to 1 at the pivot.
    const FieldElem factor = v[piv];
    for (int c = piv; c < dim_; ++c) v[c] = F.sub(v[c], F.mul(factor, rows_[b][c]));
  }
  for (int c = 0; c < dim_; ++c) {
    if (!F.is_zero(v[c])) return c;
  }
  return -1;
}

bool EchelonBasis::contains(std::span<const FieldElem> v) const {
  FieldElem tmp[kMaxDim];
  std::copy(v.begin(), v.end(), tmp);
  return reduce(tmp) < 0;
}

bool EchelonBasis::insert(std::span<const FieldElem> v) {
  FieldElem tmp[kMaxDim];
  std::copy(v.begin(), v.end(), tmp);
  const int piv = reduce(tmp);
  if (piv < 0) return false;
  const FieldSpec& F = *field_;
  const FieldElem inv = F.inv(tmp[piv]);
  for (int c = 0; c < dim_; ++c) rows_[rank_][c] = F.mul(tmp[c], inv);
  // Keep rows ordered by pivot so a single forward pass reduces completely.
  int pos = rank_;
  pivots_[rank_] = piv;
  while (pos > 0 && pivots_[pos - 1] > piv) {
    std::swap(pivots_[pos - 1], pivots_[pos]);
    std::swap(rows_[pos - 1], rows_[pos]);
    --pos;
  }
  ++rank_;
  return true;
}

VectorSpace::VectorSpace(FieldSpec F, int dim) : field_(std::move(F)), dim_(dim) {
  if (dim < 0 || dim > EchelonBasis::kMaxDim) throw TooLarge("vector space dimension out of range");
  const std::uint64_t size = saturating_pow(field_.q(), dim);
  if (size > (1u << 22)) throw TooLarge("vector space too large to tabulate");
  size_ = static_cast<std::uint32_t>(size);
  coords_.resize(static_cast<std::size_t>(size_) * dim_);
  for (std::uint32_t v = 0; v < size_; ++v) {
    std::uint32_t t = v;
    for (int i = dim_ - 1; i >= 0; --i) {
      coords_[static_cast<std::size_t>(v) * dim_ + i] = FieldElem{t % field_.q()};
      t /= field_.q();
    }
  }
}

std::uint32_t VectorSpace::encode(std::span<const FieldElem> c) const {
  std::uint32_t v = 0;
  for (int i = 0; i < dim_; ++i) v = v * field_.q() + c[i].index;
  return v;
}

std::vector<std::uint32_t> VectorSpace::apply(const FMatrix& M) const {
  std::vector<std::uint32_t> out(size_);
  FieldElem img[EchelonBasis::kMaxDim];
  for (std::uint32_t v = 0; v < size_; ++v) {
    const auto x = coords(v);
    for (int i = 0; i < dim_; ++i) {
      FieldElem acc = field_.zero();
      for (int j = 0; j < dim_; ++j) acc = field_.add(acc, field_.mul(M.at(i, j), x[j]));
      img[i] = acc;
    }
    out[v] = encode({img, static_cast<std::size_t>(dim_)});
  }
  return out;
}

FieldElem VectorSpace::dot(std::uint32_t u, std::uint32_t v) const {
  const auto a = coords(u);
  const auto b = coords(v);
  FieldElem acc = field_.zero();
  for (int i = 0; i < dim_; ++i) acc = field_.add(acc, field_.mul(a[i], b[i]));
  return acc;
}

}  // namespace gm
