#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gm/count_table.hpp"
#include "gm/integer.hpp"

namespace gm {

// Polynomial in q over Z, coefficients low degree first, no trailing zeros.
// The zero polynomial has no coefficients.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, int degree);
  // The variable q itself.
  static IntPoly var() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  Integer coeff(int i) const { return i >= 0 && i < static_cast<int>(coeffs_.size()) ? coeffs_[i] : Integer(0); }
  Integer leading() const { return is_zero() ? Integer(0) : coeffs_.back(); }

  Integer eval(const Integer& x) const;
  Rational eval(const Rational& x) const;

  // "q^3 - q^2", "2*q + 1", "0".
  std::string to_string() const;

  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a);
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

// a = quotient * b + remainder with deg remainder < deg b. b must have
// leading coefficient +-1 (throws BadArgs otherwise, DivisionByZero on 0).
struct PolyDivision {
  IntPoly quotient;
  IntPoly remainder;
};
PolyDivision divmod_monic(const IntPoly& a, const IntPoly& b);

// d-th cyclotomic polynomial, d >= 1.
IntPoly cyclotomic(int d);

enum class Membership { yes, no, unknown };
std::string to_string(Membership m);

inline constexpr int kDefaultSBound = 64;

// Is f (up to sign) a divisor of a product of polynomials q^n - q with
// n <= bound? Since q^n - q = q * prod_{d | n-1} Phi_d, this strips q and
// Phi_d (d < bound) and inspects what remains. Throws BadArgs on f = 0.
Membership in_S(const IntPoly& f, int bound = kDefaultSBound);

// Element of S^-1 Z[q]. Always stored reduced: numerator and denominator
// coprime over Q, jointly primitive, denominator with positive leading
// coefficient. The denominator is monic whenever the reduced fraction
// allows it.
class RationalFn {
 public:
  RationalFn() : den_(IntPoly{1}) {}
  RationalFn(const IntPoly& p) : num_(p), den_(IntPoly{1}), flag_(Membership::yes) {}  // NOLINT
  // Throws DivisionByZero when den is zero.
  RationalFn(const IntPoly& num, const IntPoly& den);

  const IntPoly& numerator() const { return num_; }
  const IntPoly& denominator() const { return den_; }
  Membership denominator_in_S() const { return flag_; }

  // Throws DivisionByZero when the denominator vanishes at q.
  Rational eval_at(const Integer& q) const;

  std::string to_string() const;

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);
  // Throws DivisionByZero on a zero divisor.
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b);
  friend bool operator==(const RationalFn& a, const RationalFn& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  IntPoly num_;
  IntPoly den_;
  Membership flag_ = Membership::yes;
};

// Division f = d + r/s with s the (monic) denominator. Returns d when r = 0.
struct NotPolynomial {
  IntPoly remainder;
};
// Throws BadArgs when the denominator is not monic.
std::variant<IntPoly, NotPolynomial> integrality_reduce(const RationalFn& f);

struct NoFit {
  // First q beyond the interpolation nodes where the interpolant is wrong,
  // if there is one.
  std::optional<std::uint64_t> witness;
  std::string reason;
};
using FitResult = std::variant<IntPoly, NoFit>;

// Exact interpolation through the first max_deg + 1 points (ascending q).
// Accepted only with integer coefficients and exact agreement on every
// remaining point. Throws InsufficientPoints with fewer than max_deg + 2
// points, BadArgs for max_deg < 0.
FitResult fit_polynomial(const CountTable& table, int max_deg);

// JSON: an IntPoly is its coefficient array, low degree first. Coefficients
// outside the 64-bit range are written as decimal strings.
std::string to_json(const IntPoly& p);
IntPoly intpoly_from_json(std::string_view json);  // throws ParseError
// {"fit": [...]} or {"nofit": {"witness": q or null, "reason": "..."}}
std::string to_json(const FitResult& r);
FitResult fit_result_from_json(std::string_view json);  // throws ParseError

}  // namespace gm
