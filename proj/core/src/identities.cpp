#include <algorithm>

#include "gm/counting.hpp"
#include "gm/incidence.hpp"

namespace gm {
namespace {

Integer qpow(std::uint64_t q, int e) {
  Integer r = 1;
  for (int i = 0; i < e; ++i) r *= q;
  return r;
}

// Closed forms extended by zero to negative arguments, which appear at the
// edges of the summation ranges below.
Integer gl0(int n, std::uint64_t q) { return n < 0 ? Integer(0) : gl_count(n, q); }
Integer gr0(int a, int b, std::uint64_t q) { return a < 0 || b < 0 ? Integer(0) : gr_count(a, b, q); }

Integer A(const Graph& G, int s, int r, int k, std::uint64_t q, const CountOptions& opts) {
  if (s < 0 || r < 0 || k < 0) return 0;
  return count_A(G, {s, r, k}, q, opts);
}

Integer H(const Graph& G, int r, std::uint64_t q, const CountOptions& opts) {
  if (r < 0) return 0;
  const int n = G.n_vertices();
  return A(G, n, r, n, q, opts);
}

void require_nonneg(const IdentityParams& p) {
  if (p.s < 0 || p.r < 0 || p.k < 0 || p.t < 0) throw BadParams("identity parameters must be nonnegative");
}

IdentityReport firstred(const IdentityParams& p, std::uint64_t q, const CountOptions& opts) {
  IdentityReport rep;
  rep.lhs = A(p.G, p.s, p.r, p.k, q, opts);
  Integer sum = 0;
  for (int j = 0; j <= p.k; ++j) {
    if (p.k > p.s) break;
    const Integer c = macwilliams_C(p.s, p.r, p.k, j, q);
    if (c != 0) sum += c * A(p.G, p.k, j, p.k, q, opts);
  }
  rep.rhs = p.k > p.s ? Integer(0) : gr_count(p.k, p.s, q) * sum;
  return rep;
}

IdentityReport secondred(const IdentityParams& p, std::uint64_t q, const CountOptions& opts) {
  const int n = p.G.n_vertices();
  IdentityReport rep;
  rep.lhs = A(p.G, p.s, p.r, p.k, q, opts);
  Integer sum = 0;
  if (p.r <= p.s) {
    for (int l = 0; l <= p.k; ++l) {
      const Integer factor = gr0(n - p.k, n - l, q) * gr0(p.k - l, p.s - p.r, q) * gl0(p.k - l, q) *
                             qpow(q, l * (p.s - p.r));
      if (factor != 0) sum += factor * A(p.G, p.r, p.r, l, q, opts);
    }
    sum *= gr_count(p.r, p.s, q);
  }
  rep.rhs = sum;
  return rep;
}

IdentityReport cor_secondred(const IdentityParams& p, std::uint64_t q, const CountOptions& opts) {
  const int n = p.G.n_vertices();
  IdentityReport rep;
  rep.lhs = A(p.G, p.s, p.r, p.s, q, opts);
  if (p.r > p.s) {
    rep.rhs = 0;
  } else {
    // The k = s case of secondred forces l = r; the Gr(r, s) factor stays.
    const Integer factor =
        gr_count(p.r, p.s, q) * gr0(n - p.s, n - p.r, q) * gl0(p.s - p.r, q) * qpow(q, p.r * (p.s - p.r));
    rep.rhs = factor == 0 ? Integer(0) : factor * A(p.G, p.r, p.r, p.r, q, opts);
  }
  return rep;
}

IdentityReport dreduction(const IdentityParams& p, std::uint64_t q, const CountOptions& opts) {
  const Graph DG = add_disjoint_vertex(p.G);
  IdentityReport rep;
  rep.lhs = A(DG, p.s, p.r, p.k, q, opts);
  rep.rhs = qpow(q, p.k) * A(p.G, p.s, p.r, p.k, q, opts);
  if (p.k >= 1) rep.rhs += (qpow(q, p.s) - qpow(q, p.k - 1)) * A(p.G, p.s, p.r, p.k - 1, q, opts);
  return rep;
}

IdentityReport yuck(const IdentityParams& p, std::uint64_t q, const CountOptions& opts) {
  const int n = p.G.n_vertices();
  if (p.r > n + 1) throw BadParams("yuck: requires r <= n_G + 1");
  const Graph DG = add_disjoint_vertex(p.G);
  const int r = p.r;
  const Integer qn1 = qpow(q, n + 1) - 1;
  const Integer a = qpow(q, n + r) * qn1;
  IdentityReport rep;
  rep.lhs = H(DG, r, q, opts);
  rep.rhs = a * H(p.G, r, q, opts);
  if (r >= 1) rep.rhs += qpow(q, n + r - 1) * qn1 * Integer(q - 1) * H(p.G, r - 1, q, opts);
  if (r >= 2) rep.rhs += qpow(q, n) * qn1 * (qpow(q, n + 1) - qpow(q, r - 1)) * H(p.G, r - 2, q, opts);
  return rep;
}

IdentityReport jyuck(const IdentityParams& p, std::uint64_t q, const CountOptions& opts) {
  IdentityReport rep;
  rep.lhs = count_J(add_disjoint_vertex(p.G), p.s, q, opts);
  rep.rhs = qpow(q, p.s) * count_J(p.G, p.s, q, opts);
  return rep;
}

IdentityReport pi_strat(const IdentityParams& p, std::uint64_t q, const CountOptions& opts) {
  const int n = p.G.n_vertices();
  if (n < 32 && (p.H >> n) != 0) throw BadParams("pi-strat: H must be a subset of V(G)");
  for (const auto& c : p.pi.constraints) {
    if (c.first == p.H) throw BadParams("pi-strat: H already lies in dom(pi)");
  }
  PartialRank pi = p.pi;
  pi.ground_size = n;
  IdentityReport rep;
  rep.lhs = count_J_partial(attach_to_subset(p.G, p.H, p.t), p.s, pi, q, opts);
  Integer sum = 0;
  for (int i = 0; i <= p.s; ++i) {
    PartialRank pi_i = pi;
    pi_i.constraints.emplace_back(p.H, p.s - i);
    sum += qpow(q, p.t * i) * count_J_partial(p.G, p.s, pi_i, q, opts);
  }
  rep.rhs = sum;
  return rep;
}

IdentityReport grassmann_factor(const IdentityParams& p, std::uint64_t q, const CountOptions& opts) {
  const Matroid M = p.matroid ? *p.matroid : graphic_matroid(p.G);
  const int r = M.rank();
  IdentityReport rep;
  rep.lhs = count_X_bruteforce(M, p.s, q, opts);
  rep.rhs = r > p.s ? Integer(0) : gr_count(r, p.s, q) * count_X_bruteforce(M, r, q, opts);
  return rep;
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names{"firstred", "secondred", "cor-secondred", "Dreduction",
                                              "yuck",     "Jyuck",     "pi-strat",      "grassmann-factor"};
  return names;
}

IdentityReport verify_identity(std::string_view name, const IdentityParams& params, std::uint64_t q,
                               const CountOptions& opts) {
  require_nonneg(params);
  IdentityReport rep;
  if (name == "firstred") {
    rep = firstred(params, q, opts);
  } else if (name == "secondred") {
    rep = secondred(params, q, opts);
  } else if (name == "cor-secondred") {
    rep = cor_secondred(params, q, opts);
  } else if (name == "Dreduction") {
    rep = dreduction(params, q, opts);
  } else if (name == "yuck") {
    rep = yuck(params, q, opts);
  } else if (name == "Jyuck") {
    rep = jyuck(params, q, opts);
  } else if (name == "pi-strat") {
    rep = pi_strat(params, q, opts);
  } else if (name == "grassmann-factor") {
    rep = grassmann_factor(params, q, opts);
  } else {
    throw BadParams("unknown identity: " + std::string(name));
  }
  rep.name = std::string(name);
  rep.equal = rep.lhs == rep.rhs;
  return rep;
}

}  // namespace gm
