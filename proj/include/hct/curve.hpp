#pragma once

// The hyperelliptic curves z^2 = f(x): emission of the defining polynomial
// from a sextuple or a family instance, the separability criterion and its
// exact-gcd oracle, per-place local solvability reports with Hensel
// certificates, bounded rational point search, and the quaternion-class
// invariant computations on the underlying threefolds.

#include <optional>
#include <string>
#include <vector>

#include "hct/construct.hpp"
#include "hct/family.hpp"
#include "hct/local.hpp"
#include "hct/poly.hpp"

namespace hct {

struct CurveSpec {
  Poly f;  // degree 2n+2; the curve is z^2 = f(x)
  Int n;   // genus
  std::optional<int> family_id;
  std::optional<Rat> T;
  Sextuple source;
};

// Generic path: f = p a^2 Q^2 x^{2n+2} + (2 b^2 P x^2 + b Q)(d^2 p P x^2 + 2 b Q).
CurveSpec family_polynomial(const Sextuple& s, const Int& n);

// Family instance at parameter T: specializes the family's functions,
// builds the sextuple by the extension step (verifying its conditions), and
// cross-checks the generic polynomial against the family's printed constant
// form coefficient by coefficient.
CurveSpec family_polynomial(int family_id, const Int& n, const Rat& T);

struct SeparabilityInput {
  Rat a, b, c, d, e;
  Int n, m, k;
  Int p;
};

struct SeparabilityResult {
  long n1, n2, n3, n4, n5;
  bool s1, s2;
  bool separable() const { return s1 && s2; }
};

// Sufficient criterion for f = a x^{2n+2} + (b x^{2m} + c)(d x^{2k} + e) to
// be separable, via the valuation bounds n1..n5 and the mod-p condition on
// b^k e^m + (-1)^{m+k+1} c^k d^m.
SeparabilityResult separability_check(const SeparabilityInput& inp);

// Exact oracle: deg gcd(f, f') = 0.
bool separability_oracle(const Poly& f);

struct PlaceEntry {
  std::string place;    // "inf", a prime, or "generic"
  std::string status;   // "solvable" | "unsolvable" | "unknown"
  std::string witness;  // human-readable certificate description
  std::optional<HenselCertificate> certificate;
};

struct LocalReport {
  std::vector<PlaceEntry> entries;
  bool overall_solvable = false;
};

// For each place in {inf, 2, p} plus odd primes up to prime_bound: away from
// 2 and p the witness point is selected by which of p, 2, 2p is a local
// square; at p a Hensel certificate with delta = 3; at 2 with delta = 1
// (n odd) or delta = 2 (n = 2 mod 4); n = 0 mod 4 is reported unknown.
LocalReport local_solvability_report(const Sextuple& s, const Int& n, const Int& prime_bound);

struct CurvePoint {
  bool at_infinity = false;
  Rat x, y;
};

// All rational points (x, +-y) with x = r/s, |r|, s <= height_bound and
// gcd(r, s) = 1, plus the two points at infinity when the leading
// coefficient is a square. Sorted by x, then y.
std::vector<CurvePoint> search_rational_points(const CurveSpec& c, const Int& height_bound);

// 0 when (p, x + 4pb^2)_v = +1, 1/2 when -1.
Rat threefold_invariant(const Triple& t, const Rat& x, const Place& v);

struct ThreefoldWitness {
  Int a;                 // the gcd witness
  Int x;                 // 2a^2 or 2pb^2
  std::string selected;  // "2a^2" or "2pb^2"
  int symbol_first;      // (2x, p)_l
  int symbol_second;     // (2(x+4pb^2)(x+p^2c), p)_l
};

// Picks x per the coprimality split and certifies both norm conditions at l.
ThreefoldWitness threefold_local_witness(const Triple& t, const Place& l);

struct ObstructionScan {
  unsigned precision_exponent;
  unsigned long total_classes;
  unsigned long excluded;    // ruled out 2-adically for the threefold
  unsigned long admissible;  // surviving classes, all certified invariant 1/2
  bool all_admissible_half;
};

// Enumerates x mod 2^precision_exponent and certifies that every residue
// class not excluded by the norm conditions has v_2(x + 4pb^2) odd, i.e.
// invariant 1/2 at the place 2.
ObstructionScan threefold_2adic_obstruction_scan(const Triple& t, unsigned precision_exponent);

}  // namespace hct
