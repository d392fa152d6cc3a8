#include "gm/matroids.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>

#include "gm/counting.hpp"

namespace gm {

Matroid::Matroid(int m, std::vector<int> ranks) : m_(m), ranks_(std::move(ranks)) {
  if (m < 0 || m > kMaxMatroidSize) throw TooLarge("matroids are limited to 12 elements");
  if (ranks_.size() != (std::size_t{1} << m)) throw BadArgs("rank table must have 2^m entries");
  for (int r : ranks_) {
    if (r < 0) throw BadArgs("negative rank in rank table");
  }
}

bool validate_axioms(const Matroid& M) {
  const int m = M.size();
  if (m > kMaxMatroidSize) throw TooLarge("validate_axioms: too many elements");
  const std::uint32_t n_sets = 1u << m;
  if (M.rank(0) != 0) return false;
  if (M.rank() > m) return false;
  for (std::uint32_t X = 0; X < n_sets; ++X) {
    for (int e = 0; e < m; ++e) {
      if ((X >> e) & 1u) continue;
      const int grown = M.rank(X | (1u << e));
      if (grown < M.rank(X) || grown > M.rank(X) + 1) return false;
    }
  }
  for (std::uint32_t X = 0; X < n_sets; ++X) {
    for (std::uint32_t Y = 0; Y < n_sets; ++Y) {
      if ((X & Y) == X && M.rank(X) > M.rank(Y)) return false;
      if (M.rank(X | Y) + M.rank(X & Y) > M.rank(X) + M.rank(Y)) return false;
    }
  }
  return true;
}

Matroid vector_matroid(const FieldSpec& F, const std::vector<std::vector<FieldElem>>& columns) {
  const int m = static_cast<int>(columns.size());
  if (m > kMaxMatroidSize) throw TooLarge("vector_matroid: too many columns");
  const int s = m == 0 ? 0 : static_cast<int>(columns.front().size());
  for (const auto& c : columns) {
    if (static_cast<int>(c.size()) != s) throw LengthMismatch("vector_matroid: ragged columns");
  }
  std::vector<int> ranks(std::size_t{1} << m);
  for (std::uint32_t X = 0; X < ranks.size(); ++X) {
    FMatrix A(std::popcount(X), s);
    int row = 0;
    for (int e = 0; e < m; ++e) {
      if (!((X >> e) & 1u)) continue;
      for (int j = 0; j < s; ++j) A.at(row, j) = columns[e][j];
      ++row;
    }
    ranks[X] = matrix_rank(F, A);
  }
  return Matroid(m, std::move(ranks));
}

Matroid uniform_matroid(int r, int m) {
  std::vector<int> ranks(std::size_t{1} << m);
  for (std::uint32_t X = 0; X < ranks.size(); ++X) ranks[X] = std::min(std::popcount(X), r);
  return Matroid(m, std::move(ranks));
}

Matroid graphic_matroid(const Graph& G) {
  const int m = G.n_edges();
  if (m > kMaxMatroidSize) throw TooLarge("graphic_matroid: too many edges");
  std::vector<int> ranks(std::size_t{1} << m);
  for (std::uint32_t S = 0; S < ranks.size(); ++S) ranks[S] = G.n_vertices() - betti(G, EdgeSubset{S}).b0;
  return Matroid(m, std::move(ranks));
}

Matroid fano() {
  const FieldSpec F2 = make_field(2);
  std::vector<std::vector<FieldElem>> columns;
  for (std::uint32_t v = 1; v < 8; ++v) {
    columns.push_back({FieldElem{(v >> 2) & 1u}, FieldElem{(v >> 1) & 1u}, FieldElem{v & 1u}});
  }
  return vector_matroid(F2, columns);
}

Matroid relabel(const Matroid& M, const std::vector<int>& perm) {
  const int m = M.size();
  if (static_cast<int>(perm.size()) != m) throw BadArgs("relabel: permutation size");
  std::uint32_t seen = 0;
  for (int x : perm) {
    if (x < 0 || x >= m || ((seen >> x) & 1u)) throw BadArgs("relabel: not a permutation");
    seen |= 1u << x;
  }
  std::vector<int> ranks(M.ranks().size());
  for (std::uint32_t X = 0; X < ranks.size(); ++X) {
    std::uint32_t image = 0;
    for (int e = 0; e < m; ++e) {
      if ((X >> e) & 1u) image |= 1u << perm[e];
    }
    ranks[image] = M.rank(X);
  }
  return Matroid(m, std::move(ranks));
}

PartialRank total_rank_function(const Matroid& M) {
  PartialRank pi;
  pi.ground_size = M.size();
  for (std::uint32_t X = 0; X < M.ranks().size(); ++X) pi.constraints.emplace_back(X, M.rank(X));
  return pi;
}

namespace {

using Coords = std::array<FieldElem, EchelonBasis::kMaxDim>;

// Depth-first assignment of vectors to matroid elements in a fixed order.
// After each assignment, every subset of the assigned elements that contains
// the newest one must already have its prescribed rank.
class RepresentationSearch {
 public:
  RepresentationSearch(const Matroid& M, const FieldSpec& F, int dim, std::vector<int> order,
                       std::vector<std::vector<Coords>> candidates)
      : M_(M), F_(F), dim_(dim), order_(std::move(order)), candidates_(std::move(candidates)),
        image_(M.size()) {}

  void fix(int element, const Coords& v) {
    image_[element] = v;
    assigned_mask_ |= 1u << element;
  }

  bool prefix_consistent(int newest) const {
    const std::uint32_t others = assigned_mask_ & ~(1u << newest);
    // Iterate over all subsets of `others`, each joined with `newest`.
    std::uint32_t sub = others;
    while (true) {
      const std::uint32_t X = sub | (1u << newest);
      if (span_rank(X) != M_.rank(X)) return false;
      if (sub == 0) break;
      sub = (sub - 1) & others;
    }
    return true;
  }

  std::uint64_t count(std::size_t depth = 0) {
    if (depth == order_.size()) return 1;
    const int e = order_[depth];
    std::uint64_t total = 0;
    for (const auto& v : candidates_[depth]) {
      image_[e] = v;
      assigned_mask_ |= 1u << e;
      if (prefix_consistent(e)) total += count(depth + 1);
      assigned_mask_ &= ~(1u << e);
    }
    return total;
  }

  // Same as count() but the first element in the order is fixed to the
  // candidate at `first_index`.
  std::uint64_t count_from(std::size_t first_index) {
    const int e = order_[0];
    image_[e] = candidates_[0][first_index];
    assigned_mask_ |= 1u << e;
    std::uint64_t total = prefix_consistent(e) ? count(1) : 0;
    assigned_mask_ &= ~(1u << e);
    return total;
  }

 private:
  int span_rank(std::uint32_t X) const {
    EchelonBasis basis(F_, dim_);
    for (int e = 0; e < M_.size(); ++e) {
      if ((X >> e) & 1u) basis.insert({image_[e].data(), static_cast<std::size_t>(dim_)});
    }
    return basis.rank();
  }

  const Matroid& M_;
  const FieldSpec& F_;
  int dim_;
  std::vector<int> order_;
  std::vector<std::vector<Coords>> candidates_;
  std::vector<Coords> image_;
  std::uint32_t assigned_mask_ = 0;
};

std::vector<Coords> all_vectors(const FieldSpec& F, int dim) {
  const VectorSpace V(F, dim);
  std::vector<Coords> out(V.size());
  for (std::uint32_t v = 0; v < V.size(); ++v) {
    const auto c = V.coords(v);
    std::copy(c.begin(), c.end(), out[v].begin());
  }
  return out;
}

// Nonzero vectors whose first nonzero coordinate is 1.
std::vector<Coords> projective_points(const FieldSpec& F, int dim) {
  std::vector<Coords> out;
  for (const auto& v : all_vectors(F, dim)) {
    for (int i = 0; i < dim; ++i) {
      if (F.is_zero(v[i])) continue;
      if (v[i] == F.one()) out.push_back(v);
      break;
    }
  }
  return out;
}

}  // namespace

std::uint64_t count_X(const Matroid& M, int s, std::uint64_t q, const CountOptions& opts) {
  if (s < 0 || s > EchelonBasis::kMaxDim) throw BadArgs("count_X: dimension out of range");
  const int r = M.rank();
  if (s < r) return 0;
  const FieldSpec F = make_field(q);

  // Greedy basis in element order.
  std::vector<int> basis;
  std::uint32_t basis_mask = 0;
  for (int e = 0; e < M.size(); ++e) {
    if (M.rank(basis_mask | (1u << e)) > M.rank(basis_mask)) {
      basis.push_back(e);
      basis_mask |= 1u << e;
    }
  }
  if (static_cast<int>(basis.size()) != r) return 0;  // rank table not a matroid

  const auto points = projective_points(F, r);
  std::vector<int> order;
  std::vector<std::vector<Coords>> candidates;
  int scaled = 0;
  for (int e = 0; e < M.size(); ++e) {
    if ((basis_mask >> e) & 1u) continue;
    order.push_back(e);
    if (M.rank(1u << e) == 0) {
      candidates.push_back({Coords{}});
    } else {
      candidates.push_back(points);
      ++scaled;
    }
  }
  require_budget(saturating_pow(points.size() + 1, order.size()), opts, "count_X");
  note_enumeration();

  RepresentationSearch search(M, F, std::max(r, 0), order, candidates);
  for (int i = 0; i < r; ++i) {
    Coords unit{};
    unit[i] = F.one();
    search.fix(basis[i], unit);
  }
  // The basis itself must realize its own ranks (true for any matroid).
  std::uint64_t completions = 0;
  if (order.empty()) {
    completions = 1;
  } else {
    completions = parallel_sum(candidates[0].size(), opts.threads, [&](std::uint64_t i) {
      RepresentationSearch local = search;
      return local.count_from(i);
    });
  }

  // Independent ordered r-frames in F_q^s, times scalars on the scaled elements.
  Integer frames = 1;
  const Integer qs = saturating_pow(q, s);
  for (int i = 0; i < r; ++i) frames *= qs - Integer(saturating_pow(q, i));
  Integer total = frames * completions;
  for (int i = 0; i < scaled; ++i) total *= (q - 1);
  return static_cast<std::uint64_t>(total);
}

std::uint64_t count_X_bruteforce(const Matroid& M, int s, std::uint64_t q, const CountOptions& opts) {
  if (s < 0 || s > EchelonBasis::kMaxDim) throw BadArgs("count_X: dimension out of range");
  const FieldSpec F = make_field(q);
  require_budget(saturating_pow(q, static_cast<std::uint64_t>(s) * M.size()), opts, "count_X_bruteforce");
  note_enumeration();
  if (M.size() == 0) return 1;
  std::vector<int> order(M.size());
  for (int e = 0; e < M.size(); ++e) order[e] = e;
  const auto vectors = all_vectors(F, s);
  std::vector<std::vector<Coords>> candidates(M.size(), vectors);
  RepresentationSearch search(M, F, s, order, candidates);
  return parallel_sum(vectors.size(), opts.threads, [&](std::uint64_t i) {
    RepresentationSearch local = search;
    return local.count_from(i);
  });
}

CountTable fano_demo(const std::vector<std::uint64_t>& qs, const CountOptions& opts) {
  static constexpr std::array<std::uint64_t, 7> kAllowed{2, 3, 4, 5, 7, 8, 9};
  const Matroid M = fano();
  CountTable table;
  table.label = "X(Fano,3)";
  for (auto q : qs) {
    if (std::find(kAllowed.begin(), kAllowed.end(), q) == kAllowed.end()) {
      throw BadArgs("fano_demo: q must be one of 2,3,4,5,7,8,9");
    }
    table.values[q] = count_X(M, 3, q, opts);
  }
  return table;
}

namespace {

using Point = std::array<FieldElem, 3>;

Point cross(const FieldSpec& F, const Point& a, const Point& b) {
  return {F.sub(F.mul(a[1], b[2]), F.mul(a[2], b[1])),
          F.sub(F.mul(a[2], b[0]), F.mul(a[0], b[2])),
          F.sub(F.mul(a[0], b[1]), F.mul(a[1], b[0]))};
}

bool is_null(const FieldSpec& F, const Point& a) {
  return F.is_zero(a[0]) && F.is_zero(a[1]) && F.is_zero(a[2]);
}

// Line through two points, or the meet of two lines: both are the cross
// product in P^2, undefined when the inputs coincide.
std::optional<Point> join(const FieldSpec& F, const std::optional<Point>& a, const std::optional<Point>& b) {
  if (!a || !b) return std::nullopt;
  Point c = cross(F, *a, *b);
  if (is_null(F, c)) return std::nullopt;
  return c;
}

// Reads (x : 0 : 1) off a point on the x-axis.
std::optional<FieldElem> axis_coordinate(const FieldSpec& F, const std::optional<Point>& p) {
  if (!p || F.is_zero((*p)[2]) || !F.is_zero((*p)[1])) return std::nullopt;
  return F.div((*p)[0], (*p)[2]);
}

struct Frame {
  explicit Frame(const FieldSpec& F)
      : x_inf{F.one(), F.zero(), F.zero()},
        y_inf{F.zero(), F.one(), F.zero()},
        origin{F.zero(), F.zero(), F.one()},
        unit{F.one(), F.one(), F.one()} {
    line_inf = *join(F, x_inf, y_inf);
    x_axis = *join(F, origin, x_inf);
    y_axis = *join(F, origin, y_inf);
    p = *join(F, join(F, origin, y_inf), join(F, unit, x_inf));  // (0,1,1)
    e = *join(F, join(F, unit, y_inf), x_axis);                   // (1,0,1)
    horizontal = *join(F, p, x_inf);                              // y = z
  }
  Point x_inf, y_inf, origin, unit;
  Point line_inf, x_axis, y_axis, p, e, horizontal;
};

Point on_axis(const FieldSpec& F, FieldElem x) { return {x, F.zero(), F.one()}; }

}  // namespace

std::optional<FieldElem> staudt_sum(const FieldSpec& F, FieldElem x, FieldElem y) {
  const Frame fr(F);
  const Point A = on_axis(F, x), B = on_axis(F, y);
  const auto R = join(F, join(F, A, fr.y_inf), fr.horizontal);
  const auto D = join(F, join(F, fr.p, B), fr.line_inf);
  return axis_coordinate(F, join(F, join(F, R, D), fr.x_axis));
}

std::optional<FieldElem> staudt_product(const FieldSpec& F, FieldElem x, FieldElem y) {
  const Frame fr(F);
  const Point A = on_axis(F, x), B = on_axis(F, y);
  const auto D1 = join(F, join(F, fr.e, fr.p), fr.line_inf);
  const auto B_on_y = join(F, join(F, B, D1), fr.y_axis);
  const auto D2 = join(F, join(F, fr.e, B_on_y), fr.line_inf);
  const auto C_on_y = join(F, join(F, A, D2), fr.y_axis);
  return axis_coordinate(F, join(F, join(F, C_on_y, D1), fr.x_axis));
}

std::optional<FieldElem> staudt_negation(const FieldSpec& F, FieldElem x) {
  const Frame fr(F);
  const Point A = on_axis(F, x);
  const auto R = join(F, join(F, A, fr.y_inf), fr.horizontal);
  const auto D = join(F, join(F, fr.origin, R), fr.line_inf);
  return axis_coordinate(F, join(F, join(F, fr.p, D), fr.x_axis));
}

VonStaudtReport von_staudt_check(const FieldSpec& F) {
  if (F.q() > 9) throw BadArgs("von_staudt_check supports q <= 9");
  VonStaudtReport rep;
  auto record = [&](const std::optional<FieldElem>& got, FieldElem want, const std::string& what) {
    if (!got) {
      ++rep.skipped;
      return;
    }
    ++rep.checked;
    if (*got != want) rep.failures.push_back(what + " gave " + F.to_string(*got));
  };
  for (auto x : F.elements()) {
    record(staudt_negation(F, x), F.neg(x), "-(" + F.to_string(x) + ")");
    for (auto y : F.elements()) {
      const std::string pair = "(" + F.to_string(x) + ", " + F.to_string(y) + ")";
      record(staudt_sum(F, x, y), F.add(x, y), "sum" + pair);
      record(staudt_product(F, x, y), F.mul(x, y), "product" + pair);
    }
  }
  rep.ok = rep.failures.empty() && rep.checked > 0;
  return rep;
}

Matroid parse_matroid(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string head;
  if (!(in >> head)) throw ParseError("matroid: empty input");
  if (head == "vector") {
    long long p = 0, n = 0, s = 0;
    if (!(in >> p >> n >> s) || p < 2 || n < 1 || s < 0 || s > EchelonBasis::kMaxDim) {
      throw ParseError("matroid: expected \"vector p n s\"");
    }
    std::uint64_t q = 1;
    for (long long i = 0; i < n; ++i) q *= static_cast<std::uint64_t>(p);
    FieldSpec F = [&] {
      try {
        auto field = make_field(q);
        if (field.p() != p) throw ParseError("matroid: p is not prime");
        return field;
      } catch (const NotPrimePower&) {
        throw ParseError("matroid: p^n is not a prime power");
      }
    }();
    std::vector<std::vector<FieldElem>> columns;
    long long code = 0;
    std::vector<FieldElem> col;
    while (in >> code) {
      if (code < 0 || static_cast<std::uint64_t>(code) >= q) throw ParseError("matroid: coordinate out of range");
      col.push_back(F.from_poly_code(static_cast<std::uint32_t>(code)));
      if (static_cast<long long>(col.size()) == s) {
        columns.push_back(std::move(col));
        col.clear();
      }
    }
    if (!in.eof()) throw ParseError("matroid: bad coordinate token");
    if (!col.empty()) throw ParseError("matroid: incomplete final column");
    if (static_cast<int>(columns.size()) > kMaxMatroidSize) throw ParseError("matroid: too many columns");
    return vector_matroid(F, columns);
  }
  long long m = 0;
  try {
    m = std::stoll(head);
  } catch (const std::exception&) {
    throw ParseError("matroid: expected element count or \"vector\"");
  }
  if (m < 0 || m > kMaxMatroidSize) throw ParseError("matroid: element count out of range");
  std::vector<int> ranks(std::size_t{1} << m);
  for (auto& r : ranks) {
    long long v = -1;
    if (!(in >> v) || v < 0) throw ParseError("matroid: expected 2^m nonnegative ranks");
    r = static_cast<int>(v);
  }
  std::string extra;
  if (in >> extra) throw ParseError("matroid: trailing data");
  return Matroid(static_cast<int>(m), std::move(ranks));
}

std::string write_matroid(const Matroid& M) {
  std::ostringstream os;
  os << M.size() << '\n';
  for (int r : M.ranks()) os << r << '\n';
  return os.str();
}

std::string write_matroid_vector_form(const FieldSpec& F, int s,
                                      const std::vector<std::vector<FieldElem>>& columns) {
  std::ostringstream os;
  os << "vector " << F.p() << ' ' << F.n() << ' ' << s << '\n';
  for (const auto& c : columns) {
    if (static_cast<int>(c.size()) != s) throw LengthMismatch("vector form: column length");
    for (int i = 0; i < s; ++i) os << (i ? " " : "") << F.poly_code(c[i]);
    os << '\n';
  }
  return os.str();
}

}  // namespace gm
