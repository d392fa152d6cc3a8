#pragma once

#include <cstdint>
#include <functional>
#include <string_view>

namespace gm {

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

// Options shared by every brute-force enumeration.
struct CountOptions {
  // Upper bound on the nominal size of the enumerated space.
  std::uint64_t budget = kDefaultBudget;
  // Worker threads for chunk-parallel enumeration; 1 means sequential.
  unsigned threads = 1;
};

// base^exponent, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exponent);

// Throws BudgetExceeded when `work` exceeds opts.budget. `what` names the
// enumeration in the message.
void require_budget(std::uint64_t work, const CountOptions& opts,
                    std::string_view what);

// Process-wide instrumentation: number of brute-force enumerations started.
// Used to prove cache hits do no recomputation.
std::uint64_t enumerations_performed();
void note_enumeration();

// Runs body(chunk) for chunk in [0, n_chunks) on up to `threads` workers and
// returns the sum. The total is independent of scheduling.
std::uint64_t parallel_sum(std::uint64_t n_chunks, unsigned threads,
                           const std::function<std::uint64_t(std::uint64_t)>& body);

}  // namespace gm
