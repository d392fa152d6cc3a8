#include "gm/motive.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>

#include "json.hpp"

#include "gm/errors.hpp"

namespace gm {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, int degree) {
  if (degree < 0) throw BadArgs("monomial: negative degree");
  std::vector<Integer> v(degree + 1, 0);
  v[degree] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rational IntPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = degree(); d >= 0; --d) {
    Integer c = coeffs_[d];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (d == 0) {
      os << c;
      continue;
    }
    if (c != 1) os << c << '*';
    os << 'q';
    if (d > 1) os << '^' << d;
  }
  return os.str();
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Integer> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) v[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) v[i] += b.coeffs_[i];
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a) {
  std::vector<Integer> v = a.coeffs_;
  for (auto& c : v) c = -c;
  return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(v));
}

PolyDivision divmod_monic(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
  const Integer lead = b.leading();
  if (lead != 1 && lead != -1) throw BadArgs("divmod_monic: divisor leading coefficient must be +-1");
  std::vector<Integer> rem = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return {IntPoly{}, a};
  std::vector<Integer> quot(da - db + 1, 0);
  for (int d = da; d >= db; --d) {
    const Integer c = rem[d] * lead;  // lead is its own inverse
    if (c == 0) continue;
    quot[d - db] = c;
    for (int i = 0; i <= db; ++i) rem[d - db + i] -= c * b.coeffs()[i];
  }
  return {IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

IntPoly cyclotomic(int d) {
  if (d < 1) throw BadArgs("cyclotomic: index must be positive");
  static std::mutex mu;
  static std::map<int, IntPoly> memo;
  {
    std::lock_guard lock(mu);
    const auto it = memo.find(d);
    if (it != memo.end()) return it->second;
  }
  // q^d - 1 divided by Phi_e for every proper divisor e of d.
  IntPoly p = IntPoly::monomial(1, d) - IntPoly{1};
  for (int e = 1; e < d; ++e) {
    if (d % e == 0) p = divmod_monic(p, cyclotomic(e)).quotient;
  }
  std::lock_guard lock(mu);
  memo.emplace(d, p);
  return p;
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::yes:
      return "yes";
    case Membership::no:
      return "no";
    case Membership::unknown:
      return "unknown";
  }
  return "unknown";
}

Membership in_S(const IntPoly& f, int bound) {
  if (f.is_zero()) throw BadArgs("in_S: zero polynomial");
  if (bound < 2) throw BadArgs("in_S: bound must be at least 2");
  IntPoly rest = f;
  while (rest.coeff(0) == 0) rest = divmod_monic(rest, IntPoly::var()).quotient;
  for (int d = 1; d < bound && rest.degree() > 0; ++d) {
    const IntPoly phi = cyclotomic(d);
    if (phi.degree() > rest.degree()) continue;
    while (rest.degree() >= phi.degree()) {
      auto [quot, rem] = divmod_monic(rest, phi);
      if (!rem.is_zero()) break;
      rest = quot;
    }
  }
  const Integer lead = rest.leading();
  const Integer c0 = rest.coeff(0);
  if (rest.degree() == 0) return (lead == 1 || lead == -1) ? Membership::yes : Membership::no;
  if ((lead != 1 && lead != -1) || (c0 != 1 && c0 != -1)) return Membership::no;
  // Integer roots divide c0 = +-1, and Phi_1, Phi_2 are already gone.
  for (int x : {1, -1}) {
    if (rest.eval(Integer(x)) == 0) return Membership::unknown;
  }
  // A cyclotomic factor Phi_d of degree <= deg has d <= 2 deg^2.
  const int deg = rest.degree();
  if (bound - 1 >= 2 * deg * deg) return Membership::no;
  return Membership::unknown;
}

namespace {

using RatPoly = std::vector<Rational>;  // low degree first, no trailing zeros

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RatPoly to_rat(const IntPoly& p) {
  RatPoly r;
  for (const auto& c : p.coeffs()) r.emplace_back(c);
  return r;
}

// Quotient and remainder over Q.
std::pair<RatPoly, RatPoly> rat_divmod(RatPoly a, const RatPoly& b) {
  const int db = static_cast<int>(b.size()) - 1;
  trim(a);
  if (static_cast<int>(a.size()) - 1 < db) return {RatPoly{}, a};
  RatPoly quot(a.size() - db, 0);
  for (int d = static_cast<int>(a.size()) - 1; d >= db; --d) {
    const Rational c = a[d] / b.back();
    if (c == 0) continue;
    quot[d - db] = c;
    for (int i = 0; i <= db; ++i) a[d - db + i] -= c * b[i];
  }
  trim(a);
  trim(quot);
  return {quot, a};
}

RatPoly rat_gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RatPoly r = rat_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

Integer int_gcd(Integer a, Integer b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Integer t = a % b;
    a = b;
    b = t;
  }
  return a;
}

}  // namespace

RationalFn::RationalFn(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
  if (num.is_zero()) {
    num_ = IntPoly{};
    den_ = IntPoly{1};
    flag_ = Membership::yes;
    return;
  }
  const RatPoly g = rat_gcd(to_rat(num), to_rat(den));
  RatPoly n = rat_divmod(to_rat(num), g).first;
  RatPoly d = rat_divmod(to_rat(den), g).first;
  // Clear denominators, then remove the joint content.
  Integer scale = 1;
  for (const auto* p : {&n, &d}) {
    for (const auto& c : *p) {
      const Integer dc = boost::multiprecision::denominator(c);
      scale = scale / int_gcd(scale, dc) * dc;
    }
  }
  std::vector<Integer> ni, di;
  Integer content = 0;
  for (const auto& c : n) {
    ni.push_back(boost::multiprecision::numerator(Rational(c * scale)));
    content = int_gcd(content, ni.back());
  }
  for (const auto& c : d) {
    di.push_back(boost::multiprecision::numerator(Rational(c * scale)));
    content = int_gcd(content, di.back());
  }
  const bool flip = di.back() < 0;
  for (auto& c : ni) c = (flip ? -c : c) / content;
  for (auto& c : di) c = (flip ? -c : c) / content;
  num_ = IntPoly(std::move(ni));
  den_ = IntPoly(std::move(di));
  flag_ = in_S(den_);
}

Rational RationalFn::eval_at(const Integer& q) const {
  const Integer d = den_.eval(q);
  if (d == 0) throw DivisionByZero("denominator vanishes at q = " + q.str());
  return Rational(num_.eval(q), d);
}

std::string RationalFn::to_string() const {
  if (den_ == IntPoly{1}) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator-(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFn operator/(const RationalFn& a, const RationalFn& b) {
  if (b.num_.is_zero()) throw DivisionByZero("division by the zero rational function");
  return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
}

std::variant<IntPoly, NotPolynomial> integrality_reduce(const RationalFn& f) {
  if (f.denominator().leading() != 1) throw BadArgs("integrality_reduce: denominator is not monic");
  auto [quot, rem] = divmod_monic(f.numerator(), f.denominator());
  if (rem.is_zero()) return quot;
  return NotPolynomial{rem};
}

FitResult fit_polynomial(const CountTable& table, int max_deg) {
  if (max_deg < 0) throw BadArgs("fit_polynomial: negative degree");
  if (table.values.size() < static_cast<std::size_t>(max_deg) + 2) {
    throw InsufficientPoints("fit_polynomial: need at least max_deg + 2 points");
  }
  std::vector<Rational> xs, ys;
  for (const auto& [q, v] : table.values) {
    xs.emplace_back(Integer(q));
    ys.emplace_back(Integer(v));
  }
  const int m = max_deg + 1;
  // Newton divided differences on the first m nodes.
  std::vector<Rational> dd(ys.begin(), ys.begin() + m);
  for (int level = 1; level < m; ++level) {
    for (int i = m - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  }
  // Expand into the monomial basis by Horner on the Newton form.
  RatPoly coeffs{dd[m - 1]};
  for (int i = m - 2; i >= 0; --i) {
    RatPoly next(coeffs.size() + 1, 0);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      next[j + 1] += coeffs[j];
      next[j] -= coeffs[j] * xs[i];
    }
    next[0] += dd[i];
    coeffs = std::move(next);
  }
  trim(coeffs);

  auto eval = [&](const Rational& x) {
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  std::optional<std::uint64_t> witness;
  std::size_t idx = 0;
  for (const auto& [q, v] : table.values) {
    if (idx++ < static_cast<std::size_t>(m)) continue;
    if (eval(Rational(Integer(q))) != Rational(Integer(v))) {
      witness = q;
      break;
    }
  }
  const bool integral = std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& c) {
    return boost::multiprecision::denominator(c) == 1;
  });
  if (!integral) return NoFit{witness, "non-integer coefficient"};
  if (witness) return NoFit{witness, "mismatch"};
  std::vector<Integer> ints;
  for (const auto& c : coeffs) ints.push_back(boost::multiprecision::numerator(c));
  return IntPoly(std::move(ints));
}

namespace {

nlohmann::json coeff_json(const Integer& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(c);
  }
  return c.str();
}

nlohmann::json poly_json(const IntPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : p.coeffs()) arr.push_back(coeff_json(c));
  return arr;
}

IntPoly poly_from(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("IntPoly JSON must be an array");
  std::vector<Integer> coeffs;
  for (const auto& c : j) {
    if (c.is_number_integer()) {
      coeffs.emplace_back(c.get<std::int64_t>());
    } else if (c.is_string()) {
      try {
        coeffs.emplace_back(c.get<std::string>());
      } catch (const std::exception&) {
        throw ParseError("IntPoly JSON: bad integer string");
      }
    } else {
      throw ParseError("IntPoly JSON: coefficients must be integers");
    }
  }
  return IntPoly(std::move(coeffs));
}

nlohmann::json parse(std::string_view text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

std::string to_json(const IntPoly& p) { return poly_json(p).dump(); }

IntPoly intpoly_from_json(std::string_view json) { return poly_from(parse(json)); }

std::string to_json(const FitResult& r) {
  nlohmann::json j;
  if (const auto* p = std::get_if<IntPoly>(&r)) {
    j["fit"] = poly_json(*p);
  } else {
    const auto& nf = std::get<NoFit>(r);
    j["nofit"] = {{"witness", nf.witness ? nlohmann::json(*nf.witness) : nlohmann::json(nullptr)},
                  {"reason", nf.reason}};
  }
  return j.dump();
}

FitResult fit_result_from_json(std::string_view json) {
  const auto j = parse(json);
  if (j.contains("fit")) return poly_from(j["fit"]);
  if (!j.contains("nofit")) throw ParseError("fit JSON: expected \"fit\" or \"nofit\"");
  const auto& nf = j["nofit"];
  NoFit out;
  try {
    if (!nf.at("witness").is_null()) out.witness = nf.at("witness").get<std::uint64_t>();
    out.reason = nf.at("reason").get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  return out;
}

}  // namespace gm
