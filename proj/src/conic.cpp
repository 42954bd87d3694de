#include "hct/conic.hpp"

#include <stdexcept>

namespace hct {

bool DiagonalConic::contains(const Rat& u, const Rat& v, const Rat& t) const {
  return a * u * u + b * v * v + c * t * t == 0;
}

bool DiagonalConic::contains(const ConicPoint& pt) const {
  if (pt.u == 0 && pt.v == 0 && pt.t == 0)
    throw std::invalid_argument("contains: zero point");
  return contains(Rat(pt.u), Rat(pt.v), Rat(pt.t));
}

bool DiagonalConic::local_solvable(const Place& v) const {
  if (a == 0 || b == 0 || c == 0) throw std::invalid_argument("conic is degenerate");
  return hilbert_symbol(-a / c, -b / c, v) == 1;
}

std::optional<ConicPoint> DiagonalConic::search_point(const Int& height_bound) const {
  if (a == 0 || b == 0 || c == 0) throw std::invalid_argument("conic is degenerate");
  // Clear denominators to integer coefficients A U^2 + B V^2 + C T^2 = 0.
  Int den = lcm(lcm(a.get_den(), b.get_den()), c.get_den());
  Int A = Int(a * Rat(den));
  Int B = Int(b * Rat(den));
  Int C = Int(c * Rat(den));

  long bound = height_bound.get_si();
  // Scan u ascending, then |v| ascending (positive sign first), taking t >= 0:
  // the first primitive hit is the canonical small point.
  for (long u = 0; u <= bound; ++u) {
    for (long av = 0; av <= bound; ++av) {
      for (int sign : {+1, -1}) {
        if (av == 0 && sign < 0) continue;
        long v = sign * av;
        Int rhs = -(A * u * u + B * v * v);
        if (C == 0) continue;
        if (rhs % C != 0) continue;
        Int t2 = rhs / C;
        if (t2 < 0) continue;
        if (mpz_perfect_square_p(t2.get_mpz_t()) == 0) continue;
        Int t = sqrt(t2);
        if (t > height_bound) continue;
        if (u == 0 && v == 0 && t == 0) continue;
        Int g = gcd(gcd(Int(u), Int(v)), t);
        if (g != 1) continue;
        return ConicPoint{Int(u), Int(v), t};
      }
    }
  }
  return std::nullopt;
}

}  // namespace hct
