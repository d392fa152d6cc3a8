#include "gm_cli/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "gm/counting.hpp"
#include "gm/errors.hpp"
#include "gm/graphs.hpp"
#include "gm/incidence.hpp"
#include "gm/matroids.hpp"
#include "gm/motive.hpp"
#include "gm/polys.hpp"
#include "gm_cli/cache.hpp"
#include "json.hpp"

namespace gm::cli {
namespace {

using nlohmann::json;

// ---- inputs ---------------------------------------------------------------

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool has_graph(const JobSpec& job) { return !job.graph_file.empty() || !job.graph6.empty(); }

Graph load_graph(const JobSpec& job) {
  if (!job.graph_file.empty()) return parse_edge_list(read_file(job.graph_file));
  if (!job.graph6.empty()) return parse_graph6(job.graph6);
  throw BadParams("a graph is required (--graph FILE or --g6 STR)");
}

Matroid load_matroid(const JobSpec& job) {
  if (job.matroid.empty()) throw BadParams("a matroid is required (--matroid FILE or --matroid fano)");
  if (job.matroid == "fano") return fano();
  return parse_matroid(read_file(job.matroid));
}

std::vector<int> parse_vertex_list(const std::string& text) {
  std::vector<int> out;
  std::string tok;
  std::istringstream in(text);
  while (in >> tok) {
    std::istringstream parts(tok);
    std::string piece;
    while (std::getline(parts, piece, ',')) {
      if (piece.empty()) continue;
      try {
        std::size_t used = 0;
        const int v = std::stoi(piece, &used);
        if (used != piece.size() || v < 0 || v >= 32) throw ParseError("");
        out.push_back(v);
      } catch (const std::exception&) {
        throw ParseError("bad vertex '" + piece + "'");
      }
    }
  }
  return out;
}

std::uint32_t vertex_mask(const std::string& text) {
  std::uint32_t mask = 0;
  for (int v : parse_vertex_list(text)) mask |= 1u << v;
  return mask;
}

// "0 1:2;2:1" -> rank 2 on {0,1}, rank 1 on {2}.
PartialRank parse_pi(const std::string& text, int ground_size) {
  PartialRank pi;
  pi.ground_size = ground_size;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("--pi entries look like 'v v ...:rank'");
    const std::uint32_t mask = vertex_mask(item.substr(0, colon));
    int rank = 0;
    try {
      rank = std::stoi(item.substr(colon + 1));
    } catch (const std::exception&) {
      throw ParseError("bad rank in --pi entry '" + item + "'");
    }
    if (ground_size < 32 && (mask >> ground_size) != 0) throw ParseError("--pi subset outside the ground set");
    pi.constraints.emplace_back(mask, rank);
  }
  return pi;
}

CountOptions options(const JobSpec& job) {
  CountOptions o;
  if (job.budget) o.budget = job.budget;
  o.threads = std::max(1u, job.threads);
  return o;
}

// ---- counting with cache --------------------------------------------------

const std::vector<std::string> kKinds{"YG", "XG", "Z", "Zo", "Zrank", "A", "J", "K", "H", "XM", "L"};

int need(const std::optional<int>& v, const char* flag, const std::string& what) {
  if (!v) throw BadParams(what + " needs --" + flag);
  if (*v < 0) throw BadParams(std::string("--") + flag + " must be nonnegative");
  return *v;
}

struct CountJob {
  std::string kind;
  std::optional<Graph> G;
  std::optional<Matroid> M;
  int s = 0, r = 0, k = 0;
  std::optional<PartialRank> pi;
  std::string label;
  std::string key_prefix;
};

CountJob prepare_count(const JobSpec& job) {
  CountJob c;
  c.kind = job.kind;
  if (std::find(kKinds.begin(), kKinds.end(), c.kind) == kKinds.end()) {
    throw BadParams("unknown count kind '" + c.kind + "'");
  }
  std::ostringstream label, key;
  label << c.kind;
  std::string input;
  if (c.kind == "XM") {
    c.M = load_matroid(job);
    c.s = job.s ? need(job.s, "s", "XM") : c.M->rank();
    input = "M:" + write_matroid(*c.M);
    label << "(s=" << c.s << ")";
  } else if (c.kind == "L") {
    int ground = 0;
    if (!job.matroid.empty()) {
      c.M = load_matroid(job);
      ground = c.M->size();
    } else if (job.n) {
      ground = need(job.n, "n", "L");
    } else if (has_graph(job)) {
      ground = load_graph(job).n_vertices();
    } else {
      throw BadParams("L needs --pi with --n, a graph, or --matroid");
    }
    c.s = need(job.s, "s", "L");
    c.pi = job.pi.empty() && c.M ? total_rank_function(*c.M) : parse_pi(job.pi, ground);
    input = "V:" + std::to_string(ground);
    label << "(s=" << c.s << ")";
  } else {
    c.G = load_graph(job);
    input = "G:" + write_edge_list(*c.G);
    if (c.kind == "Zrank") {
      c.r = need(job.r, "r", "Zrank");
      label << "(r=" << c.r << ")";
    } else if (c.kind == "A") {
      c.s = need(job.s, "s", "A");
      c.r = need(job.r, "r", "A");
      c.k = need(job.k, "k", "A");
      label << "(s=" << c.s << ",r=" << c.r << ",k=" << c.k << ")";
    } else if (c.kind == "J" || c.kind == "K" || c.kind == "H") {
      c.s = need(job.s, "s", c.kind);
      label << "(s=" << c.s << ")";
      if (c.kind == "J" && !job.pi.empty()) c.pi = parse_pi(job.pi, c.G->n_vertices());
    }
  }
  key << c.kind << '|' << input << "|s=" << c.s << "|r=" << c.r << "|k=" << c.k;
  if (c.pi) {
    key << "|pi=";
    for (const auto& [mask, rank] : c.pi->constraints) key << mask << ':' << rank << ';';
  }
  c.label = label.str();
  c.key_prefix = key.str();
  return c;
}

std::uint64_t count_uncached(const CountJob& c, std::uint64_t q, const CountOptions& o) {
  const std::string& kd = c.kind;
  if (kd == "YG") return count_Y(*c.G, q, o);
  if (kd == "XG") return count_X(*c.G, q, o);
  if (kd == "Z") return count_Z(*c.G, q, o);
  if (kd == "Zo") return count_Zo(*c.G, q, o);
  if (kd == "Zrank") return count_Z_rank(*c.G, c.r, q, o);
  if (kd == "A") return count_A(*c.G, {c.s, c.r, c.k}, q, o);
  if (kd == "J") return c.pi ? count_J_partial(*c.G, c.s, *c.pi, q, o) : count_J(*c.G, c.s, q, o);
  if (kd == "K") return count_K(*c.G, c.s, q, o);
  if (kd == "H") return count_H(*c.G, c.s, q, o);
  if (kd == "XM") return count_X(*c.M, c.s, q, o);
  if (kd == "L") return count_L(c.s, *c.pi, q, o);
  throw BadParams("unknown count kind '" + kd + "'");
}

// Budget failures are recorded per q; anything else aborts the command.
CountResult compute_counts(const JobSpec& job, const CountJob& c, ResultCache* cache) {
  CountResult res;
  res.table.label = c.label;
  const CountOptions o = options(job);
  for (auto q : job.qs) {
    const std::string key = c.key_prefix + "|q=" + std::to_string(q);
    if (cache) {
      if (auto hit = cache->lookup(key)) {
        res.table.values[q] = std::stoull(*hit);
        continue;
      }
    }
    try {
      const std::uint64_t v = count_uncached(c, q, o);
      res.table.values[q] = v;
      if (cache) cache->store(key, std::to_string(v));
    } catch (const BudgetExceeded& e) {
      res.errors[q] = e.what();
    }
  }
  return res;
}

std::optional<ResultCache> open_cache(const JobSpec& job) {
  if (job.cache == CachePolicy::bypass) return std::nullopt;
  return ResultCache(default_cache_dir());
}

// ---- commands -------------------------------------------------------------

int cmd_poly(const JobSpec& job, std::ostream& out, std::ostream& err) {
  const Graph G = load_graph(job);
  const MultilinearPoly P = kirchhoff_P(G);
  const MultilinearPoly Q = stanley_Q(G);
  std::string verdict;
  std::string problem;
  try {
    verdict = symbolic_det(reduced_laplacian(G)) == Q ? "PASS" : "FAIL";
  } catch (const NotSimple& e) {
    problem = e.what();
  }
  if (job.format == Format::json) {
    json j{{"P", P.to_string()}, {"Q", Q.to_string()}};
    j["matrix_tree"] = problem.empty() ? json(verdict) : json(nullptr);
    out << j.dump() << '\n';
  } else if (job.format == Format::csv) {
    out << "P,Q,matrix_tree\n\"" << P.to_string() << "\",\"" << Q.to_string() << "\"," << verdict << '\n';
  } else {
    out << "P = " << P.to_string() << '\n' << "Q = " << Q.to_string() << '\n';
    if (problem.empty()) out << "Matrix-Tree det L_0 = Q: " << verdict << '\n';
  }
  if (!problem.empty()) {
    err << "gm: Matrix-Tree check skipped: " << problem << '\n';
    return kUsage;
  }
  return verdict == "PASS" ? kOk : kFail;
}

int cmd_count(const JobSpec& job, std::ostream& out, std::ostream&) {
  if (job.qs.empty()) throw BadParams("count needs --q");
  const CountJob c = prepare_count(job);
  auto cache = open_cache(job);
  const CountResult res = compute_counts(job, c, cache ? &*cache : nullptr);
  out << format_count_result(res, job.format);
  return res.errors.empty() ? kOk : kFail;
}

struct VerifyLine {
  std::uint64_t q = 0;
  std::string lhs, rhs;
  bool pass = false;
  std::string note;
};

IdentityParams identity_params(const JobSpec& job) {
  IdentityParams p;
  const std::string& id = job.identity;
  if (id != "grassmann-factor" || has_graph(job)) p.G = load_graph(job);
  if (!job.matroid.empty()) p.matroid = load_matroid(job);
  if (id == "grassmann-factor" && !p.matroid && !has_graph(job)) {
    throw BadParams("grassmann-factor needs --matroid or a graph");
  }
  const bool uses_s = id != "yuck";
  const bool uses_r = id == "firstred" || id == "secondred" || id == "cor-secondred" || id == "Dreduction" || id == "yuck";
  const bool uses_k = id == "firstred" || id == "secondred" || id == "Dreduction";
  if (uses_s) p.s = need(job.s, "s", id);
  if (uses_r) p.r = need(job.r, "r", id);
  if (uses_k) p.k = need(job.k, "k", id);
  if (id == "pi-strat") {
    p.t = need(job.t, "t", id);
    if (job.subset.empty()) throw BadParams("pi-strat needs --subset");
    p.H = vertex_mask(job.subset);
    p.pi = parse_pi(job.pi, p.G.n_vertices());
  }
  return p;
}

std::vector<VerifyLine> run_verify(const JobSpec& job) {
  const std::string& id = job.identity;
  const CountOptions o = options(job);
  std::vector<VerifyLine> lines;
  const auto& names = identity_names();
  const bool incidence = std::find(names.begin(), names.end(), id) != names.end();
  std::optional<IdentityParams> params;
  std::optional<Graph> G;
  if (incidence) {
    params = identity_params(job);
  } else if (id == "signed-sums" || id == "stanley-iso") {
    G = load_graph(job);
  } else if (id != "von-staudt") {
    throw BadParams("unknown identity '" + id + "'");
  }
  for (auto q : job.qs) {
    VerifyLine line;
    line.q = q;
    try {
      if (incidence) {
        const auto rep = verify_identity(id, *params, q, o);
        line.lhs = rep.lhs.str();
        line.rhs = rep.rhs.str();
        line.pass = rep.equal;
      } else if (id == "signed-sums") {
        const auto rep = signed_sum_report(*G, q, o);
        line.lhs = std::to_string(rep.y_direct) + "," + std::to_string(rep.x_direct);
        line.rhs = std::to_string(rep.y_from_x) + "," + std::to_string(rep.x_from_y);
        line.pass = rep.holds();
      } else if (id == "stanley-iso") {
        line.lhs = std::to_string(count_X(apex_extension(*G), q, o));
        line.rhs = std::to_string(count_Zo(*G, q, o));
        line.pass = line.lhs == line.rhs;
      } else {
        const auto rep = von_staudt_check(make_field(q));
        line.lhs = std::to_string(rep.checked);
        line.rhs = std::to_string(rep.checked - static_cast<int>(rep.failures.size()));
        line.pass = rep.ok;
        line.note = std::to_string(rep.skipped) + " degenerate constructions skipped";
      }
    } catch (const BudgetExceeded& e) {
      line.note = e.what();
    }
    lines.push_back(line);
  }
  return lines;
}

int cmd_verify(const JobSpec& job, std::ostream& out, std::ostream&) {
  if (job.identity.empty()) throw BadParams("verify needs --identity");
  if (job.qs.empty()) throw BadParams("verify needs --q");
  const auto lines = run_verify(job);
  bool all = true;
  for (const auto& l : lines) all = all && l.pass;
  if (job.format == Format::json) {
    json arr = json::array();
    for (const auto& l : lines) {
      arr.push_back({{"q", l.q}, {"lhs", l.lhs}, {"rhs", l.rhs}, {"pass", l.pass}, {"note", l.note}});
    }
    out << json{{"identity", job.identity}, {"results", arr}}.dump() << '\n';
  } else if (job.format == Format::csv) {
    out << "q,lhs,rhs,pass\n";
    for (const auto& l : lines) out << l.q << ",\"" << l.lhs << "\",\"" << l.rhs << "\"," << (l.pass ? "PASS" : "FAIL") << '\n';
  } else {
    for (const auto& l : lines) {
      out << job.identity << " q=" << l.q << ": " << (l.pass ? "PASS" : "FAIL");
      if (!l.lhs.empty()) out << "  lhs=" << l.lhs << "  rhs=" << l.rhs;
      if (!l.note.empty()) out << "  (" << l.note << ")";
      out << '\n';
    }
  }
  return all ? kOk : kFail;
}

std::string describe(const FitResult& fit) {
  if (const auto* p = std::get_if<IntPoly>(&fit)) return p->to_string();
  const auto& nf = std::get<NoFit>(fit);
  std::string s = "NoFit (" + nf.reason;
  if (nf.witness) s += ", witness q=" + std::to_string(*nf.witness);
  return s + ")";
}

void print_fit(const CountResult& res, const FitResult& fit, Format f, std::ostream& out) {
  if (f == Format::json) {
    json j{{"table", json::parse(format_count_result(res, Format::json))}, {"result", json::parse(to_json(fit))}};
    out << j.dump() << '\n';
  } else if (f == Format::csv) {
    const auto* p = std::get_if<IntPoly>(&fit);
    out << "q,count,fitted\n";
    for (const auto& [q, v] : res.table.values) {
      out << q << ',' << v << ',';
      if (p) out << p->eval(Integer(q));
      out << '\n';
    }
  } else {
    out << res.table.label << '\n';
    for (const auto& [q, v] : res.table.values) out << "  q=" << q << ": " << v << '\n';
    out << "fit: " << describe(fit) << '\n';
  }
}

int cmd_fit(const JobSpec& job, std::ostream& out, std::ostream&) {
  if (job.qs.empty()) throw BadParams("fit needs --q");
  if (job.expect != "fit" && job.expect != "nofit") throw BadParams("--expect is fit or nofit");
  JobSpec counted = job;
  if (counted.kind.empty()) counted.kind = job.matroid.empty() ? "YG" : "XM";
  const CountJob c = prepare_count(counted);
  auto cache = open_cache(job);
  const CountResult res = compute_counts(counted, c, cache ? &*cache : nullptr);
  if (!res.errors.empty()) {
    throw BudgetExceeded("fit: could not compute the table at q=" + std::to_string(res.errors.begin()->first));
  }
  const FitResult fit = fit_polynomial(res.table, job.max_deg);
  print_fit(res, fit, job.format, out);
  const bool fitted = std::holds_alternative<IntPoly>(fit);
  return fitted == (job.expect == "fit") ? kOk : kFail;
}

int cmd_counterexample(const JobSpec& job, std::ostream& out, std::ostream&) {
  static const std::vector<std::uint64_t> kQs{2, 3, 4, 5, 7, 8, 9};
  JobSpec counted = job;
  counted.kind = "XM";
  counted.matroid = "fano";
  counted.s = 3;
  counted.qs = kQs;
  const CountJob c = prepare_count(counted);
  auto cache = open_cache(job);
  const CountResult res = compute_counts(counted, c, cache ? &*cache : nullptr);
  if (!res.errors.empty()) throw BudgetExceeded(res.errors.begin()->second);

  const CountOptions o = options(job);
  const std::uint64_t oracle = count_X_bruteforce(fano(), 3, 2, o);
  bool support_ok = true;
  for (const auto& [q, v] : res.table.values) support_ok = support_ok && ((q % 2 == 0) == (v > 0));
  const FitResult fit = fit_polynomial(res.table, job.max_deg);
  const bool nofit = std::holds_alternative<NoFit>(fit);
  const bool oracle_ok = oracle == res.table.values.at(2);
  const bool ok = support_ok && nofit && oracle_ok;

  if (job.format == Format::json) {
    json j{{"table", json::parse(format_count_result(res, Format::json))},
           {"oracle_q2", oracle},
           {"fit", json::parse(to_json(fit))},
           {"support_even_only", support_ok},
           {"demonstrated", ok}};
    out << j.dump() << '\n';
  } else if (job.format == Format::csv) {
    out << "q,count\n";
    for (const auto& [q, v] : res.table.values) out << q << ',' << v << '\n';
  } else {
    out << "Fano matroid: 7 points of the projective plane over F_2, rank 3.\n"
        << "Representations in F_q^3, #X(Fano, 3)(F_q):\n";
    for (const auto& [q, v] : res.table.values) out << "  q=" << q << ": " << v << '\n';
    out << "Exhaustive enumeration at q=2: " << oracle << (oracle_ok ? " (agrees)" : " (DISAGREES)") << '\n'
        << "Nonzero exactly at even q: " << (support_ok ? "yes" : "no") << '\n'
        << "Polynomial fit, degree <= " << job.max_deg << ": " << describe(fit) << '\n'
        << "A polynomial or rational function in q vanishing at every odd prime power\n"
        << "would vanish identically, yet the count is positive at q = 2, 4, 8.\n"
        << "So [X(Fano)] is not a rational function of q. Since representation spaces of\n"
        << "matroids are combinations of graph hypersurface counts with coefficients\n"
        << "rational in q, some graph hypersurface is not polynomially countable.\n"
        << "Demonstration: " << (ok ? "PASS" : "FAIL") << '\n';
  }
  return ok ? kOk : kFail;
}

std::vector<std::uint64_t> parse_q_list(const std::string& text) {
  std::vector<std::uint64_t> qs;
  std::istringstream in(text);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    tok.erase(tok.find_last_not_of(" \t") + 1);
    if (tok.empty()) continue;
    std::uint64_t q = 0;
    try {
      std::size_t used = 0;
      q = std::stoull(tok, &used);
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw BadParams("bad q value '" + tok + "'");
    }
    if (!is_prime_power(q)) throw BadParams("q=" + tok + " is not a prime power");
    if (std::find(qs.begin(), qs.end(), q) == qs.end()) qs.push_back(q);
  }
  return qs;
}

}  // namespace

// ---- output formats -------------------------------------------------------

std::string format_count_result(const CountResult& r, Format f) {
  std::ostringstream os;
  if (f == Format::json) {
    json values = json::object();
    for (const auto& [q, v] : r.table.values) values[std::to_string(q)] = v;
    json j{{"label", r.table.label}, {"values", values}};
    if (!r.errors.empty()) {
      json errors = json::object();
      for (const auto& [q, e] : r.errors) errors[std::to_string(q)] = e;
      j["errors"] = errors;
    }
    os << j.dump() << '\n';
  } else if (f == Format::csv) {
    os << "q,count\n";
    for (const auto& [q, v] : r.table.values) os << q << ',' << v << '\n';
    for (const auto& [q, e] : r.errors) os << q << ",\n";
  } else {
    os << r.table.label << '\n';
    for (const auto& [q, v] : r.table.values) os << "  q=" << q << ": " << v << '\n';
    for (const auto& [q, e] : r.errors) os << "  q=" << q << ": error: " << e << '\n';
  }
  return os.str();
}

CountResult count_result_from_json(std::string_view text) {
  CountResult r;
  try {
    const auto j = json::parse(text);
    r.table.label = j.at("label").get<std::string>();
    for (const auto& [q, v] : j.at("values").items()) r.table.values[std::stoull(q)] = v.get<std::uint64_t>();
    if (j.contains("errors")) {
      for (const auto& [q, e] : j["errors"].items()) r.errors[std::stoull(q)] = e.get<std::string>();
    }
  } catch (const std::exception& e) {
    throw ParseError(std::string("count JSON: ") + e.what());
  }
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Point counts of graph hypersurfaces, incidence schemes and matroid representation spaces"};
  app.name("gm");
  app.require_subcommand(1);
  JobSpec job;
  std::string q_text, format_text = "text";
  bool no_cache = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--q", q_text, "comma-separated prime powers");
    sub->add_option("--format", format_text, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--budget", job.budget, "cap on the size of any enumeration");
    sub->add_option("--threads", job.threads, "worker threads for enumeration");
    sub->add_flag("--no-cache", no_cache, "neither read nor write the result cache");
  };
  auto inputs = [&](CLI::App* sub) {
    sub->add_option("--graph", job.graph_file, "edge-list file");
    sub->add_option("--g6", job.graph6, "graph6 string");
    sub->add_option("--matroid", job.matroid, "matroid file, or 'fano'");
  };
  auto params = [&](CLI::App* sub) {
    sub->add_option("--s", job.s);
    sub->add_option("--r", job.r);
    sub->add_option("--k", job.k);
    sub->add_option("--t", job.t, "number of vertices attached to --subset (pi-strat)");
    sub->add_option("--n", job.n, "ground set size for L");
    sub->add_option("--pi", job.pi, "partial rank function, e.g. '0 1:2;2:1'");
    sub->add_option("--subset", job.subset, "vertex list, e.g. '0 1'");
  };

  auto* poly = app.add_subcommand("poly", "print P_G and Q_G and check det L_0 = Q_G");
  inputs(poly);
  poly->add_option("--format", format_text)->check(CLI::IsMember({"json", "csv", "text"}));

  auto* count = app.add_subcommand("count", "point counts over each q");
  inputs(count);
  params(count);
  common(count);
  count->add_option("--kind", job.kind, "YG XG Z Zo Zrank A J K H XM L")->required();

  auto* verify = app.add_subcommand("verify", "check an identity at each q");
  inputs(verify);
  params(verify);
  common(verify);
  verify->add_option("--identity", job.identity)->required();

  auto* fit = app.add_subcommand("fit", "fit an integer polynomial to a count table");
  inputs(fit);
  params(fit);
  common(fit);
  fit->add_option("--kind", job.kind, "count kind (default YG, or XM with --matroid)");
  fit->add_option("--max-deg", job.max_deg);
  fit->add_option("--expect", job.expect, "fit or nofit: which outcome exits 0");

  auto* counter = app.add_subcommand("counterexample", "the Fano matroid demonstration");
  common(counter);
  counter->add_option("--max-deg", job.max_deg);

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  job.command = app.get_subcommands().front()->get_name();
  job.format = format_text == "json" ? Format::json : format_text == "csv" ? Format::csv : Format::text;
  job.cache = no_cache ? CachePolicy::bypass : CachePolicy::use;
  try {
    job.qs = parse_q_list(q_text);
    if (job.command == "poly") return cmd_poly(job, out, err);
    if (job.command == "count") return cmd_count(job, out, err);
    if (job.command == "verify") return cmd_verify(job, out, err);
    if (job.command == "fit") return cmd_fit(job, out, err);
    return cmd_counterexample(job, out, err);
  } catch (const BudgetExceeded& e) {
    err << "gm: " << e.what() << '\n';
    return kFail;
  } catch (const Error& e) {
    err << "gm: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace gm::cli
