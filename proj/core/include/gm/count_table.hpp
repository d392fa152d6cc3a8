#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace gm {

// The function q -> #X(F_q) sampled at finitely many prime powers.
struct CountTable {
  std::string label;
  std::map<std::uint64_t, std::uint64_t> values;

  friend bool operator==(const CountTable&, const CountTable&) = default;
};

}  // namespace gm
