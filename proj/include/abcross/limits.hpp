#pragma once

#include <cstdint>

namespace abcross {

/// Work bounds for operations that enumerate group elements or candidate
/// tables. Exceeding a bound raises ErrorKind::size_exceeded; exact
/// lattice-based operations ignore these.
struct Limits {
  std::int64_t max_enumeration_order = 4096;
  std::int64_t max_candidates = std::int64_t{1} << 24;
  std::int64_t max_table_cells = std::int64_t{1} << 24;
  std::int64_t max_solver_rows = std::int64_t{1} << 20;

  /// Lower the enumeration bound; requests above the default are clamped.
  Limits with_max_order(std::int64_t n) const {
    Limits out = *this;
    if (n < out.max_enumeration_order) out.max_enumeration_order = n;
    return out;
  }
};

/// Hard bound on |M| for the linear-algebra cohomology route.
inline constexpr std::int64_t kCohomologyMaxBase = 64;

}  // namespace abcross
