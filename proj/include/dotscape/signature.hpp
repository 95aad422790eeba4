#pragma once

#include <compare>
#include <cstddef>
#include <ostream>

namespace dotscape {

// Number of pieces and number of holes at one scale; objects with equal
// signatures are grouped together.
struct topology_signature {
  std::size_t pieces = 0;
  std::size_t holes = 0;

  friend auto operator<=>(const topology_signature&, const topology_signature&) = default;

  friend std::ostream& operator<<(std::ostream& os, const topology_signature& s) {
    return os << '(' << s.pieces << ", " << s.holes << ')';
  }
};

}  // namespace dotscape
