#include "gm/polys.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <sstream>

namespace gm {
namespace {

// Monomial with explicit exponents, used only inside determinant expansion.
using Exponents = std::array<std::uint8_t, kMaxEdges>;
using GeneralPoly = std::map<Exponents, Integer>;

GeneralPoly lift(const MultilinearPoly& p) {
  GeneralPoly out;
  for (const auto& [mask, c] : p.terms()) {
    Exponents e{};
    for (int i = 0; i < kMaxEdges; ++i) e[i] = mask.contains(i) ? 1 : 0;
    out.emplace(e, c);
  }
  return out;
}

void accumulate(GeneralPoly& acc, const Exponents& e, const Integer& c) {
  auto [it, inserted] = acc.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) acc.erase(it);
  }
}

GeneralPoly multiply(const GeneralPoly& a, const GeneralPoly& b) {
  GeneralPoly out;
  for (const auto& [ea, ca] : a) {
    for (const auto& [eb, cb] : b) {
      Exponents e;
      for (int i = 0; i < kMaxEdges; ++i) e[i] = static_cast<std::uint8_t>(ea[i] + eb[i]);
      accumulate(out, e, ca * cb);
    }
  }
  return out;
}

std::vector<int> variables_of(EdgeSubset m) {
  std::vector<int> v;
  for (int i = 0; i < kMaxEdges; ++i) {
    if (m.contains(i)) v.push_back(i);
  }
  return v;
}

}  // namespace

MultilinearPoly::MultilinearPoly(int n_vars) : n_vars_(n_vars) {
  if (n_vars < 0 || n_vars > kMaxEdges) throw TooLarge("polynomials are limited to 32 variables");
}

void MultilinearPoly::add_term(EdgeSubset m, const Integer& c) {
  if ((m.bits & ~full_subset(n_vars_).bits) != 0) {
    throw BadArgs("monomial uses a variable outside x_0..x_" + std::to_string(n_vars_ - 1));
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer MultilinearPoly::coefficient(EdgeSubset m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

int MultilinearPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.size());
  return d;
}

bool MultilinearPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.size();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.size() == d; });
}

bool MultilinearPoly::all_coefficients_one() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second == 1; });
}

std::string MultilinearPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<std::pair<std::vector<int>, Integer>> sorted;
  for (const auto& [m, c] : terms_) sorted.emplace_back(variables_of(m), c);
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [vars, c] : sorted) {
    if (!first) os << " + ";
    first = false;
    if (vars.empty()) {
      os << c;
      continue;
    }
    if (c != 1) os << c << " * ";
    for (int v : vars) os << "x_" << v;
  }
  return os.str();
}

MultilinearPoly operator+(const MultilinearPoly& a, const MultilinearPoly& b) {
  MultilinearPoly out(std::max(a.n_vars_, b.n_vars_));
  for (const auto& [m, c] : a.terms_) out.add_term(m, c);
  for (const auto& [m, c] : b.terms_) out.add_term(m, c);
  return out;
}

MultilinearPoly operator-(const MultilinearPoly& a, const MultilinearPoly& b) {
  MultilinearPoly out(std::max(a.n_vars_, b.n_vars_));
  for (const auto& [m, c] : a.terms_) out.add_term(m, c);
  for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
  return out;
}

MultilinearPoly operator*(const MultilinearPoly& a, const MultilinearPoly& b) {
  MultilinearPoly out(std::max(a.n_vars_, b.n_vars_));
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      if (ma.bits & mb.bits) throw InternalError("multilinear product squares a variable");
      out.add_term(EdgeSubset{ma.bits | mb.bits}, ca * cb);
    }
  }
  return out;
}

MultilinearPoly kirchhoff_P(const Graph& G) {
  MultilinearPoly P(G.n_edges());
  const EdgeSubset all = full_subset(G.n_edges());
  for (const auto& T : spanning_trees(G)) P.add_term(EdgeSubset{all.bits & ~T.bits}, 1);
  return P;
}

MultilinearPoly stanley_Q(const Graph& G) {
  MultilinearPoly Q(G.n_edges());
  for (const auto& T : spanning_trees(G)) Q.add_term(T, 1);
  return Q;
}

SymbolicMatrix laplacian(const Graph& G) {
  require_simple(G, "laplacian");
  const int n = G.n_vertices();
  SymbolicMatrix L(n, G.n_edges());
  for (int e = 0; e < G.n_edges(); ++e) {
    const auto [u, v] = G.edge(e);
    const EdgeSubset x = EdgeSubset{}.with(e);
    L.at(u, u).add_term(x, 1);
    L.at(v, v).add_term(x, 1);
    L.at(u, v).add_term(x, -1);
    L.at(v, u).add_term(x, -1);
  }
  return L;
}

SymbolicMatrix reduced_laplacian(const Graph& G) {
  const SymbolicMatrix L = laplacian(G);
  const int n = L.dim;
  if (n == 0) return SymbolicMatrix(0, G.n_edges());
  SymbolicMatrix L0(n - 1, G.n_edges());
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) L0.at(i - 1, j - 1) = L.at(i, j);
  }
  return L0;
}

MultilinearPoly symbolic_det(const SymbolicMatrix& M) {
  const int n = M.dim;
  if (n > kMaxSymbolicDim) {
    throw TooLarge("symbolic_det supports dimension <= " + std::to_string(kMaxSymbolicDim));
  }
  const int n_vars = M.entries.empty() ? 0 : M.entries.front().n_vars();
  std::vector<GeneralPoly> entries;
  entries.reserve(M.entries.size());
  for (const auto& e : M.entries) entries.push_back(lift(e));

  // minor[C] = determinant of the last |C| rows restricted to columns C.
  const std::uint32_t full = (1u << n) - 1u;
  std::vector<GeneralPoly> minor(full + 1);
  minor[0].emplace(Exponents{}, Integer(1));
  for (std::uint32_t cols = 1; cols <= full; ++cols) {
    const int k = std::popcount(cols);
    const int row = n - k;
    GeneralPoly acc;
    int position = 0;
    for (int j = 0; j < n; ++j) {
      if (!((cols >> j) & 1u)) continue;
      const auto& entry = entries[static_cast<std::size_t>(row) * n + j];
      const auto& sub = minor[cols & ~(1u << j)];
      if (!entry.empty() && !sub.empty()) {
        const bool negative = position % 2 == 1;
        for (auto& [e, c] : multiply(entry, sub)) accumulate(acc, e, negative ? Integer(-c) : c);
      }
      ++position;
    }
    minor[cols] = std::move(acc);
  }

  MultilinearPoly out(n_vars);
  for (const auto& [e, c] : minor[full]) {
    EdgeSubset m;
    for (int i = 0; i < kMaxEdges; ++i) {
      if (e[i] > 1) throw InternalError("determinant is not multilinear");
      if (e[i] == 1) m = m.with(i);
    }
    out.add_term(m, c);
  }
  return out;
}

FieldElem evaluate(const MultilinearPoly& P, const FieldSpec& F, std::span<const FieldElem> point) {
  if (static_cast<int>(point.size()) != P.n_vars()) {
    throw LengthMismatch("evaluate: expected " + std::to_string(P.n_vars()) + " coordinates, got " +
                         std::to_string(point.size()));
  }
  return PolyEvaluator(P, F)(point.data());
}

bool duality_check(const Graph& G) {
  const MultilinearPoly P = kirchhoff_P(G);
  const MultilinearPoly Q = stanley_Q(G);
  if (P.size() != Q.size()) return false;
  const EdgeSubset all = full_subset(G.n_edges());
  for (const auto& [m, c] : P.terms()) {
    if (Q.coefficient(EdgeSubset{all.bits & ~m.bits}) != c) return false;
  }
  return true;
}

PolyEvaluator::PolyEvaluator(const MultilinearPoly& P, const FieldSpec& F)
    : field_(&F), n_vars_(P.n_vars()) {
  const Integer p = F.p();
  for (const auto& [m, c] : P.terms()) {
    Integer r = c % p;
    if (r < 0) r += p;
    const FieldElem coef = F.from_int(static_cast<std::int64_t>(r));
    if (!F.is_zero(coef)) terms_.emplace_back(m.bits, coef);
  }
}

FieldElem PolyEvaluator::operator()(const FieldElem* point) const {
  const FieldSpec& F = *field_;
  FieldElem total = F.zero();
  for (const auto& [bits, coef] : terms_) {
    FieldElem term = coef;
    for (std::uint32_t b = bits; b != 0 && !F.is_zero(term); b &= b - 1) {
      term = F.mul(term, point[std::countr_zero(b)]);
    }
    total = F.add(total, term);
  }
  return total;
}

}  // namespace gm
