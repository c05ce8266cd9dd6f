#pragma once

#include <cstddef>
#include <cstdint>

namespace ppdim {

// Process-wide run configuration. The tolerance here is the single value
// every matrix-level predicate and certificate refers to; the dimension cap
// guards the tower and block constructions, which grow as n^k.
struct RunConfig {
  double tolerance = 1e-10;
  std::size_t dimension_cap = 4096;
  std::uint64_t seed = 7;
};

inline RunConfig& config() {
  static RunConfig cfg;
  return cfg;
}

}  // namespace ppdim
