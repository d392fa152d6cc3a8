#include "gm/budget.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "gm/errors.hpp"

namespace gm {
namespace {

std::atomic<std::uint64_t> g_enumerations{0};

}  // namespace

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exponent) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exponent; ++i) {
    if (base != 0 && result > kMax / base) return kMax;
    result *= base;
  }
  return result;
}

void require_budget(std::uint64_t work, const CountOptions& opts,
                    std::string_view what) {
  if (work > opts.budget) {
    throw BudgetExceeded(std::string(what) + ": enumeration size " +
                         std::to_string(work) + " exceeds budget " +
                         std::to_string(opts.budget));
  }
}

std::uint64_t enumerations_performed() { return g_enumerations.load(); }

void note_enumeration() { g_enumerations.fetch_add(1); }

std::uint64_t parallel_sum(
    std::uint64_t n_chunks, unsigned threads,
    const std::function<std::uint64_t(std::uint64_t)>& body) {
  if (threads <= 1 || n_chunks <= 1) {
    std::uint64_t total = 0;
    for (std::uint64_t c = 0; c < n_chunks; ++c) total += body(c);
    return total;
  }
  const unsigned workers =
      static_cast<unsigned>(std::min<std::uint64_t>(threads, n_chunks));
  std::atomic<std::uint64_t> next{0};
  std::vector<std::uint64_t> partial(workers, 0);
  std::exception_ptr failure;
  std::mutex failure_mu;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::uint64_t c = next++; c < n_chunks; c = next++) {
          partial[w] += body(c);
        }
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  std::uint64_t total = 0;
  for (auto v : partial) total += v;
  return total;
}

}  // namespace gm
