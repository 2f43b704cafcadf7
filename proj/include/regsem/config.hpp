#ifndef REGSEM_CONFIG_HPP_
#define REGSEM_CONFIG_HPP_

#include <cstddef>

namespace regsem {

/// All tunable resource caps live here; the CLI exposes each one as a
/// --cap-* flag and a REGSEM_CAP_* environment variable.
struct Caps {
  /// Largest semigroup order any generator or file loader will produce.
  std::size_t max_order = 512;
  /// Largest object count for which the cone semigroup T(C) is materialized.
  std::size_t cone_objects = 6;
  /// Default length bound L for E-cycle enumeration.
  std::size_t cycle_length = 12;
  /// State budget for the chain-equivalence search.
  std::size_t oracle_budget = 100000;
  /// Hard ceiling on the number of chains materialized for the groupoid of
  /// E-chains (the length bound there is 2|E|; this guards the count).
  std::size_t chain_count = 1000000;
};

inline Caps& default_caps() {
  static Caps caps;
  return caps;
}

}  // namespace regsem

#endif  // REGSEM_CONFIG_HPP_
