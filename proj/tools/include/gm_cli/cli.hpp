#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gm/count_table.hpp"

namespace gm::cli {

enum class Format { text, json, csv };

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kFail = 1;
inline constexpr int kUsage = 2;

enum class CachePolicy { use, bypass };

// One parsed invocation.
struct JobSpec {
  std::string command;
  std::string kind;                 // count/fit: YG, XG, Z, Zo, Zrank, A, J, K, H, XM, L
  std::string graph_file;
  std::string graph6;
  std::string matroid;              // file path or "fano"
  std::vector<std::uint64_t> qs;
  std::optional<int> s, r, k, t, n;
  std::string identity;
  std::string pi;                   // "0 1:2;2:1" = rank 2 on {0,1}, rank 1 on {2}
  std::string subset;               // "0 1"
  int max_deg = 3;
  std::string expect = "fit";       // fit: which outcome counts as success
  Format format = Format::text;
  std::uint64_t budget = 0;         // 0 = library default
  unsigned threads = 1;
  CachePolicy cache = CachePolicy::use;
};

// Runs the gm command line with args (program name excluded). Writes results
// to out and diagnostics to err and returns the exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Count table with per-q failures, as printed by `gm count`.
struct CountResult {
  CountTable table;
  std::map<std::uint64_t, std::string> errors;
};

std::string format_count_result(const CountResult& r, Format f);
// Inverse of the JSON rendering of format_count_result. Throws ParseError.
CountResult count_result_from_json(std::string_view json);

}  // namespace gm::cli
