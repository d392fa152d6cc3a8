// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <unistd.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gm/counting.hpp"
#include "gm/incidence.hpp"
#include "gm/matroids.hpp"
#include "gm/motive.hpp"
#include "gm/polys.hpp"
#include "gm_cli/cli.hpp"
#include "oracles.hpp"

namespace {

using namespace gm;

// Collects mismatches for one criterion; the first few are printed.
class Check {
 public:
  template <class A, class B>
  void eq(const A& a, const B& b, const std::string& what) {
    ++checks_;
    if (a == b) return;
    std::ostringstream os;
    os << what << ": " << a << " != " << b;
    failures_.push_back(os.str());
  }
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
  }

  bool ok() const { return failures_.empty(); }
  long checks() const { return checks_; }
  const std::vector<std::string>& failures() const { return failures_; }

 private:
  long checks_ = 0;
  std::vector<std::string> failures_;
};

Integer qpow(std::uint64_t q, int e) {
  Integer r = 1;
  for (int i = 0; i < e; ++i) r *= q;
  return r;
}

std::string str(const Graph& G) {
  std::ostringstream os;
  os << G;
  return os.str();
}

std::vector<Graph> simple_graphs_upto(int n_max) {
  std::vector<Graph> out;
  for (int n = 0; n <= n_max; ++n) {
    for (auto& G : all_simple_graphs(n)) out.push_back(G);
  }
  return out;
}

std::vector<Graph> connected_upto(int n_max) {
  std::vector<Graph> out;
  for (auto& G : simple_graphs_upto(n_max)) {
    if (G.n_vertices() > 0 && is_connected(G)) out.push_back(G);
  }
  return out;
}

// Edge multisets (loops included) on up to three vertices.
std::vector<Graph> multigraphs_upto(int n_max, int m_max) {
  std::vector<Graph> out;
  for (int n = 1; n <= n_max; ++n) {
    std::vector<Edge> slots;
    for (int u = 0; u < n; ++u) {
      for (int v = u; v < n; ++v) slots.push_back({u, v});
    }
    std::function<void(std::size_t, std::vector<Edge>&)> rec = [&](std::size_t from, std::vector<Edge>& cur) {
      out.emplace_back(n, cur);
      if (static_cast<int>(cur.size()) == m_max) return;
      for (std::size_t i = from; i < slots.size(); ++i) {
        cur.push_back(slots[i]);
        rec(i, cur);
        cur.pop_back();
      }
    };
    std::vector<Edge> cur;
    rec(0, cur);
  }
  return out;
}

std::vector<std::pair<int, int>> pairs_of(const Graph& G) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : G.edges()) out.emplace_back(e.u, e.v);
  return out;
}

// ---- criteria --------------------------------------------------------------

void cycle_law(Check& c) {
  for (int n = 3; n <= 5; ++n) {
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) {
      c.eq(Integer(count_Y(cycle_graph(n), q)), qpow(q, n) - qpow(q, n - 1),
           "Y(C_" + std::to_string(n) + ") q=" + std::to_string(q));
    }
  }
}

void matrix_tree(Check& c) {
  for (const auto& G : connected_upto(5)) {
    const auto Q = stanley_Q(G);
    const auto det = symbolic_det(reduced_laplacian(G));
    c.expect(det == Q, "det L_0 != Q for " + str(G));
    c.eq(static_cast<std::uint64_t>(Q.size()), oracle::count_spanning_trees(G), "tree count " + str(G));
    c.expect(Q.all_coefficients_one(), "Q coefficients " + str(G));
  }
}

void duality(Check& c) {
  for (const auto& G : connected_upto(5)) {
    const auto P = kirchhoff_P(G);
    const std::uint32_t full = full_subset(G.n_edges()).bits;
    // P(1/x) * prod x_e, one monomial at a time.
    MultilinearPoly dual(G.n_edges());
    for (const auto& [m, coef] : P.terms()) dual.add_term(EdgeSubset{full & ~m.bits}, coef);
    c.expect(dual == stanley_Q(G), "duality " + str(G));
  }
  std::vector<Graph> corpus;
  for (auto& G : simple_graphs_upto(5)) {
    if (G.n_edges() <= 4) corpus.push_back(G);
  }
  for (auto& G : multigraphs_upto(3, 4)) {
    if (!G.is_simple()) corpus.push_back(G);
  }
  for (const auto& G : corpus) {
    for (std::uint64_t q : {2, 3}) {
      const auto rep = signed_sum_report(G, q);
      c.expect(rep.holds(), "signed sums " + str(G) + " q=" + std::to_string(q));
      const auto F = make_field(q);
      const std::uint64_t total = saturating_pow(q, G.n_edges());
      c.eq(static_cast<std::uint64_t>(rep.y_direct), total - oracle::graph_poly_zeros(G, F, false),
           "Y oracle " + str(G));
      c.eq(static_cast<std::uint64_t>(rep.x_direct), total - oracle::graph_poly_zeros(G, F, true),
           "X oracle " + str(G));
    }
  }
}

void closed_forms(Check& c) {
  for (std::uint64_t q : {2, 3, 4}) {
    const auto F = make_field(q);
    const std::string at = " q=" + std::to_string(q);
    for (int n = 0; n <= 3; ++n) {
      c.eq(gl_count(n, q), Integer(oracle::census_rank(F, n, n, n)), "gl(" + std::to_string(n) + ")" + at);
      for (int r = 0; r <= n; ++r) {
        c.eq(sym_count(n, r, q), Integer(oracle::census_symmetric_rank(F, n, r)),
             "sym(" + std::to_string(n) + "," + std::to_string(r) + ")" + at);
      }
    }
    for (int e = 0; e <= 3; ++e) {
      for (int f = 0; f <= 3; ++f) {
        for (int r = 0; r <= 3; ++r) {
          c.eq(hom_r_count(e, f, r, q), Integer(oracle::census_rank(F, e, f, r)),
               "hom_r(" + std::to_string(e) + "," + std::to_string(f) + "," + std::to_string(r) + ")" + at);
        }
      }
    }
  }
  c.eq(sym_count(2, 2, 2), Integer(4), "sym(2,2)(2)");
}

void macwilliams(Check& c) {
  for (std::uint64_t q : {2, 3}) {
    for (int d2 = 0; d2 <= 4; ++d2) {
      for (int d1 = 0; d1 <= std::min(d2, 3); ++d1) {
        for (int r1 = 0; r1 <= d1; ++r1) {
          for (int r2 = 0; r2 <= d2; ++r2) {
            const std::string tag = "C(" + std::to_string(d2) + "," + std::to_string(r2) + "," + std::to_string(d1) +
                                    "," + std::to_string(r1) + ") q=" + std::to_string(q);
            const Integer value = macwilliams_C(d2, r2, d1, r1, q);
            c.eq(value, Integer(macwilliams_C_oracle(d2, r2, d1, r1, q)), tag);
            c.eq(value != 0, macwilliams_support(d2, r2, d1, r1), "support " + tag);
            if (d2 <= 3 && q == 2) {
              c.eq(value, Integer(oracle::census_extensions(make_field(q), d2, r2, d1, r1)), "naive " + tag);
            }
          }
        }
      }
    }
    for (int d1 = 0; d1 <= 3; ++d1) {
      for (int r1 = 0; r1 <= d1; ++r1) {
        Integer total = 0;
        for (int r2 = 0; r2 <= d1 + 1; ++r2) total += macwilliams_C(d1 + 1, r2, d1, r1, q);
        c.eq(total, qpow(q, d1 + 1), "telescope d1=" + std::to_string(d1) + " r1=" + std::to_string(r1));
      }
    }
  }
}

// Runs s = 3 only when the nominal enumeration q^(s(s+1)/2 + s n) stays
// below 10^7 for the largest graph the identity touches.
bool affordable(int s, int n, std::uint64_t q) {
  if (s <= 2) return true;
  return saturating_pow(q, static_cast<std::uint64_t>(s * (s + 1) / 2 + s * n)) < 10'000'000;
}

void identities(Check& c) {
  std::vector<Graph> corpus = simple_graphs_upto(3);
  corpus.push_back(complete_graph(2));
  corpus.push_back(cycle_graph(3));
  corpus.push_back(star_graph(2));
  auto run = [&c](const char* name, const IdentityParams& p, std::uint64_t q) {
    const auto rep = verify_identity(name, p, q);
    std::ostringstream os;
    os << name << " " << p.G << " s=" << p.s << " r=" << p.r << " k=" << p.k << " t=" << p.t << " H=" << p.H
       << " q=" << q << ": " << rep.lhs << " vs " << rep.rhs;
    c.expect(rep.equal, os.str());
  };
  for (const auto& G : corpus) {
    const int n = G.n_vertices();
    for (std::uint64_t q : {2, 3}) {
      for (int s = 0; s <= 3; ++s) {
        IdentityParams p;
        p.G = G;
        p.s = s;
        if (affordable(s, n, q)) {
          for (int r = 0; r <= s; ++r) {
            for (int k = 0; k <= std::min(s, n); ++k) {
              p.r = r;
              p.k = k;
              run("firstred", p, q);
              run("secondred", p, q);
              run("cor-secondred", p, q);
            }
          }
        }
        if (affordable(s, n + 1, q)) {
          for (int r = 0; r <= s; ++r) {
            for (int k = 0; k <= std::min(s, n + 1); ++k) {
              p.r = r;
              p.k = k;
              run("Dreduction", p, q);
            }
          }
          p.r = p.k = 0;
          run("Jyuck", p, q);
        }
        if (saturating_pow(q, static_cast<std::uint64_t>(s) * G.n_edges()) < 10'000'000) {
          p.r = p.k = 0;
          run("grassmann-factor", p, q);
        }
        for (std::uint32_t H = 1; H < (1u << n); ++H) {
          for (int t = 0; t <= 1; ++t) {
            if (s == 0 || !affordable(s, n + t, q)) continue;
            std::vector<PartialRank> pis{PartialRank{n, {}}};
            if ((H & 1u) == 0) pis.push_back(PartialRank{n, {{1u, 1}}});
            if (H != (1u << n) - 1) pis.push_back(PartialRank{n, {{(1u << n) - 1, std::min(n, s)}}});
            for (const auto& pi : pis) {
              p.r = p.k = 0;
              p.t = t;
              p.H = H;
              p.pi = pi;
              run("pi-strat", p, q);
            }
          }
        }
      }
      // yuck builds H on n + 1 vertices with s = n + 1.
      if (n == 3 && q == 3) continue;
      for (int r = 0; r <= n + 1; ++r) {
        IdentityParams p;
        p.G = G;
        p.r = r;
        run("yuck", p, q);
      }
    }
  }
}

void stanley(Check& c) {
  for (const auto& G : simple_graphs_upto(3)) {
    const int n = G.n_vertices();
    for (std::uint64_t q : {2, 3}) {
      const auto F = make_field(q);
      const std::string tag = str(G) + " q=" + std::to_string(q);
      const Graph apex = apex_extension(G);
      const std::uint64_t x_oracle = saturating_pow(q, apex.n_edges()) - oracle::graph_poly_zeros(apex, F, true);
      c.eq(count_X(apex, q), count_Zo(G, q), "X(G*) vs Zo " + tag);
      c.eq(count_X(apex, q), x_oracle, "X(G*) oracle " + tag);
      c.eq(count_Zo(G, q), oracle::census_pattern(F, n, pairs_of(complement(G)), n), "Zo oracle " + tag);
      const Integer z_oracle = oracle::census_pattern(F, n, pairs_of(G), n);
      c.eq(Integer(count_A(G, {n, n, n}, q)), Integer(count_Z(G, q)) * gl_count(n, q), "A(n,n,n) " + tag);
      c.eq(Integer(count_Z(G, q)), z_oracle, "Z oracle " + tag);
    }
  }
}

void forests(Check& c) {
  static const std::vector<std::uint64_t> kNodes{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19};
  for (const auto& F : simple_graphs_upto(4)) {
    if (!is_forest(F)) continue;
    const int n = F.n_vertices();
    for (std::uint64_t q : {2, 3}) {
      for (int s = 0; s <= 2; ++s) {
        c.eq(forest_J(F, s, q), Integer(count_J(F, s, q)),
             "forest_J " + str(F) + " s=" + std::to_string(s) + " q=" + std::to_string(q));
      }
    }
    // Z_F has degree n(n+1)/2 - |E|, which needs degree + 2 nodes; the
    // brute-force table covers the small q and forest_Z the rest.
    const int deg = n * (n + 1) / 2 - F.n_edges();
    const std::size_t n_nodes = std::max<std::size_t>(6, deg + 2);
    CountTable t;
    for (std::size_t i = 0; i < n_nodes; ++i) {
      const std::uint64_t q = kNodes[i];
      const Integer z = forest_Z(F, q);
      if (saturating_pow(q, deg) <= 2'000'000) {
        c.eq(z, Integer(count_Z(F, q)), "forest_Z " + str(F) + " q=" + std::to_string(q));
      }
      t.values[q] = static_cast<std::uint64_t>(z);
    }
    const auto fit = fit_polynomial(t, deg);
    c.expect(std::holds_alternative<IntPoly>(fit), "Z fit " + str(F));
    if (const auto* p = std::get_if<IntPoly>(&fit)) {
      c.eq(p->degree(), deg, "Z degree " + str(F));
      for (std::uint64_t q : {2, 3}) c.eq(p->eval(Integer(q)), Integer(count_Z(F, q)), "Z poly " + str(F));
    }
  }
}

void counterexample(Check& c) {
  const auto t = fano_demo({2, 3, 4, 5, 7, 8, 9});
  for (std::uint64_t q : {3, 5, 7, 9}) c.eq(t.values.at(q), std::uint64_t{0}, "Fano q=" + std::to_string(q));
  for (std::uint64_t q : {2, 4, 8}) c.expect(t.values.at(q) > 0, "Fano q=" + std::to_string(q) + " positive");
  const auto brute = count_X_bruteforce(fano(), 3, 2);
  c.eq(brute, std::uint64_t{168}, "Fano exhaustive q=2");
  c.eq(t.values.at(2), brute, "Fano q=2 vs exhaustive");
  c.expect(std::holds_alternative<NoFit>(fit_polynomial(t, 5)), "Fano table fits a polynomial");
  std::ostringstream out, err;
  c.eq(cli::run({"counterexample", "--no-cache"}, out, err), cli::kOk, "counterexample exit code");
}

void properties(Check& c) {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
    const auto F = make_field(q);
    const auto [p, deg] = prime_power_decomposition(q);
    const oracle::NaiveField N(p, deg);
    const auto els = F.elements();
    bool ok = true;
    for (auto a : els) {
      if (!F.is_zero(a)) ok = ok && F.mul(a, F.inv(a)) == F.one();
      ok = ok && F.add(a, F.neg(a)) == F.zero() && F.add(a, F.zero()) == a && F.mul(a, F.one()) == a;
      for (auto b : els) {
        ok = ok && F.add(a, b) == F.add(b, a) && F.mul(a, b) == F.mul(b, a);
        ok = ok && F.coeffs(F.add(a, b)) == N.add(F.coeffs(a), F.coeffs(b));
        ok = ok && F.coeffs(F.mul(a, b)) == N.mul(F.coeffs(a), F.coeffs(b));
        for (auto x : els) {
          ok = ok && F.add(F.add(a, b), x) == F.add(a, F.add(b, x));
          ok = ok && F.mul(F.mul(a, b), x) == F.mul(a, F.mul(b, x));
          ok = ok && F.mul(a, F.add(b, x)) == F.add(F.mul(a, b), F.mul(a, x));
        }
      }
    }
    c.expect(ok, "field axioms q=" + std::to_string(q));
  }

  for (const auto& G : simple_graphs_upto(3)) {
    const int n = G.n_vertices();
    for (std::uint64_t q : {2, 3}) {
      for (int s = 0; s <= 2; ++s) {
        std::uint64_t sum = 0;
        for (int r = 0; r <= s; ++r) {
          for (int k = 0; k <= s; ++k) sum += count_A(G, {s, r, k}, q);
        }
        const std::string tag = str(G) + " s=" + std::to_string(s) + " q=" + std::to_string(q);
        c.eq(sum, count_A_unstratified(G, s, q), "partition " + tag);
        if (G.n_edges() == 0) c.eq(Integer(sum), qpow(q, s * (s + 1) / 2 + s * n), "total pairs " + tag);
      }
    }
  }

  CountOptions par;
  par.threads = 4;
  c.eq(count_Y(complete_graph(4), 4, par), count_Y(complete_graph(4), 4), "threaded Y");
  c.eq(count_Zo(complete_graph(4), 3, par), count_Zo(complete_graph(4), 3), "threaded Zo");
  c.eq(count_A_unstratified(cycle_graph(3), 2, 3, par), count_A_unstratified(cycle_graph(3), 2, 3), "threaded A");
  c.eq(count_X(fano(), 3, 4, par), count_X(fano(), 3, 4), "threaded X");
  c.eq(count_X_bruteforce(uniform_matroid(2, 4), 2, 3, par), count_X_bruteforce(uniform_matroid(2, 4), 2, 3),
       "threaded X brute force");

  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / ("gm-acceptance-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  ::setenv("GRAPHMOTIVE_CACHE", dir.c_str(), 1);
  const std::vector<std::string> args{"count", "--kind", "J", "--g6", "Cr", "--s", "2", "--q", "2,3", "--format",
                                      "json"};
  std::ostringstream out1, out2, err;
  c.eq(cli::run(args, out1, err), cli::kOk, "cache first run");
  const auto before = enumerations_performed();
  c.eq(cli::run(args, out2, err), cli::kOk, "cache second run");
  c.eq(enumerations_performed(), before, "enumerations on cached run");
  c.eq(out2.str(), out1.str(), "cached output");
  const auto parsed = cli::count_result_from_json(out1.str());
  c.eq(parsed.table.values.size(), std::size_t{2}, "cached table size");
  fs::remove_all(dir);
  ::unsetenv("GRAPHMOTIVE_CACHE");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    void (*body)(Check&);
  };
  const Criterion criteria[] = {
      {"cycle law", cycle_law},
      {"Matrix-Tree", matrix_tree},
      {"duality and signed sums", duality},
      {"closed forms vs censuses", closed_forms},
      {"MacWilliams coefficients", macwilliams},
      {"incidence identities", identities},
      {"Stanley isomorphism", stanley},
      {"forests", forests},
      {"Fano counterexample", counterexample},
      {"property suites", properties},
  };
  int failed = 0;
  int index = 0;
  for (const auto& cr : criteria) {
    ++index;
    Check check;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      cr.body(check);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = error.empty() && check.ok();
    if (!ok) ++failed;
    std::cout << "criterion " << index << " (" << cr.name << "): " << (ok ? "PASS" : "FAIL") << "  [" << check.checks()
              << " checks, " << std::fixed << std::setprecision(2) << secs << " s]\n";
    if (!error.empty()) std::cout << "  exception: " << error << '\n';
    for (std::size_t i = 0; i < check.failures().size() && i < 10; ++i) {
      std::cout << "  " << check.failures()[i] << '\n';
    }
    std::cout.flush();
  }
  std::cout << (failed == 0 ? "all criteria PASS" : std::to_string(failed) + " criteria FAIL") << '\n';
  return failed == 0 ? 0 : 1;
}
