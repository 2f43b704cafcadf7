#ifndef REGSEM_TYPES_HPP_
#define REGSEM_TYPES_HPP_

#include <cstdint>
#include <limits>

namespace regsem {

/// Dense element index. Elements of every finite structure in this library
/// are the integers 0..n-1; display labels are presentation-only.
using Idx = std::uint32_t;

/// Sentinel for "no element" (absent identity, unassigned slot, ...).
/// Partial product tables do NOT use this sentinel; they carry an explicit
/// definedness mask so that "undefined" can never collide with element 0.
inline constexpr Idx kNoIdx = std::numeric_limits<Idx>::max();

}  // namespace regsem

#endif  // REGSEM_TYPES_HPP_
