#include <map>
#include <mutex>
#include <tuple>

#include "gm/counting.hpp"

namespace gm {
namespace {

Integer ipow(std::uint64_t q, int e) {
  Integer r = 1;
  for (int i = 0; i < e; ++i) r *= q;
  return r;
}

// One-step extension count C(d1 + 1, r2, d1, r1).
Integer one_step(int r2, int d1, int r1, std::uint64_t q) {
  if (r2 == r1) return ipow(q, r1);
  if (r2 == r1 + 1) return ipow(q, r1 + 1) - ipow(q, r1);
  if (r2 == r1 + 2) return ipow(q, d1 + 1) - ipow(q, r1 + 1);
  return 0;
}

using Key = std::tuple<int, int, int, int, std::uint64_t>;

std::mutex g_memo_mu;
std::map<Key, Integer>& memo() {
  static std::map<Key, Integer> m;
  return m;
}

Integer compute(int d2, int r2, int d1, int r1, std::uint64_t q) {
  if (r1 > d1 || r2 > d2 || r1 < 0 || r2 < 0) return 0;
  if (d2 == d1) return r2 == r1 ? 1 : 0;
  if (d2 == d1 + 1) return one_step(r2, d1, r1, q);
  {
    std::lock_guard lock(g_memo_mu);
    const auto it = memo().find(Key{d2, r2, d1, r1, q});
    if (it != memo().end()) return it->second;
  }
  Integer total = 0;
  for (int j = 0; j <= 2; ++j) {
    const Integer step = one_step(r1 + j, d1, r1, q);
    if (step == 0) continue;
    total += compute(d2, r2, d1 + 1, r1 + j, q) * step;
  }
  std::lock_guard lock(g_memo_mu);
  memo().emplace(Key{d2, r2, d1, r1, q}, total);
  return total;
}

}  // namespace

Integer macwilliams_C(int d2, int r2, int d1, int r1, std::uint64_t q) {
  if (d1 < 0 || d2 < 0 || r1 < 0 || r2 < 0) throw BadArgs("macwilliams_C: negative argument");
  if (d1 > d2) throw BadArgs("macwilliams_C: requires d1 <= d2");
  return compute(d2, r2, d1, r1, q);
}

bool macwilliams_support(int d2, int r2, int d1, int r1) {
  return d2 >= r2 && d1 >= r1 && 0 <= r1 && r1 <= r2 && r2 <= r1 + 2 * (d2 - d1);
}

std::uint64_t macwilliams_C_oracle(int d2, int r2, int d1, int r1, std::uint64_t q,
                                   const std::optional<FMatrix>& base, const CountOptions& opts) {
  if (d1 < 0 || d2 < 0 || r1 < 0 || r2 < 0 || d1 > d2) throw BadArgs("macwilliams oracle: bad arguments");
  if (d2 > EchelonBasis::kMaxDim) throw TooLarge("macwilliams oracle: dimension too large");
  const FieldSpec F = make_field(q);
  if (r1 > d1) return 0;

  FMatrix start(d2, d2);
  if (base) {
    if (base->rows != d1 || base->cols != d1) throw BadArgs("macwilliams oracle: base has wrong shape");
    if (matrix_rank(F, *base) != r1) throw BadArgs("macwilliams oracle: base has wrong rank");
    for (int i = 0; i < d1; ++i) {
      for (int j = 0; j < d1; ++j) {
        if (base->at(i, j) != base->at(j, i)) throw BadArgs("macwilliams oracle: base not symmetric");
        start.at(i, j) = base->at(i, j);
      }
    }
  } else {
    for (int i = 0; i < r1; ++i) start.at(i, i) = F.one();
  }

  std::vector<std::pair<int, int>> free_pos;
  for (int j = d1; j < d2; ++j) {
    for (int i = 0; i <= j; ++i) free_pos.emplace_back(i, j);
  }
  const int n_free = static_cast<int>(free_pos.size());
  require_budget(saturating_pow(q, n_free), opts, "macwilliams oracle");
  note_enumeration();
  if (n_free == 0) return matrix_rank(F, start) == r2 ? 1 : 0;

  return parallel_sum(F.q(), opts.threads, [&](std::uint64_t first) {
    FMatrix M = start;
    std::vector<std::uint32_t> digits(n_free, 0);
    digits[0] = static_cast<std::uint32_t>(first);
    std::uint64_t hits = 0;
    while (true) {
      for (int k = 0; k < n_free; ++k) {
        const auto [i, j] = free_pos[k];
        M.at(i, j) = FieldElem{digits[k]};
        M.at(j, i) = FieldElem{digits[k]};
      }
      if (matrix_rank(F, M) == r2) ++hits;
      int k = n_free - 1;
      while (k >= 1) {
        if (++digits[k] < F.q()) break;
        digits[k] = 0;
        --k;
      }
      if (k < 1) break;
    }
    return hits;
  });
}

}  // namespace gm
