#pragma once

// Diagonal conics a U^2 + b V^2 + c T^2 = 0 over Q: membership, local
// solvability, and a small-height point search.

#include <optional>

#include "hct/arith.hpp"
#include "hct/local.hpp"

namespace hct {

struct ConicPoint {
  Int u, v, t;
};

struct DiagonalConic {
  Rat a, b, c;  // a U^2 + b V^2 + c T^2 = 0, all nonzero

  bool contains(const ConicPoint& pt) const;
  bool contains(const Rat& u, const Rat& v, const Rat& t) const;

  // Solvable over the completion at v? By diagonalization this is the
  // Hilbert symbol condition (-a/c, -b/c)_v = +1.
  bool local_solvable(const Place& v) const;

  // Exhaustive scan of primitive integer points with all coordinates bounded
  // by height_bound; returns the lexicographically least (|u|,|v|,|t|)-then-
  // sign-normalized (u >= 0) primitive point, or nullopt.
  std::optional<ConicPoint> search_point(const Int& height_bound) const;
};

}  // namespace hct
