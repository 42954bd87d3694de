#pragma once

// Parameter machinery for the curve families: (p, b, d) triples, the gcd
// witness integer a, sextuples (p, b, d, alpha, beta, gamma) with their
// derived quantities, condition checkers, and the extension step producing
// new sextuples from a seed.

#include <vector>

#include "hct/arith.hpp"
#include "hct/conic.hpp"

namespace hct {

struct Triple {
  Int p, b, d;

  Int c() const { return d * d; }
  Int q() const { return abs(p * d * d - 4 * b * b); }
};

struct TripleReport {
  Int q;
  bool p_is_5_mod_8 = false;
  bool three_nonresidue = false;     // (3/p) = -1
  bool b_d_odd = false;
  bool b_coprime_3 = false;
  bool b_coprime_p = false;
  bool q_one_or_odd_prime = false;
  bool q_odd_prime_power = false;    // looser variant: q = 1 or l^e, e odd

  bool pass() const {
    return p_is_5_mod_8 && three_nonresidue && b_d_odd && b_coprime_3 && b_coprime_p &&
           q_one_or_odd_prime;
  }
};

TripleReport check_triple(const Triple& t);

// Enumerates d = 2x+1 (0 <= x <= x_max), b = 6·p·y + b0 (|y| <= y_max) and
// keeps the triples whose q is 1 or an odd prime. Output sorted by (x, y).
std::vector<Triple> search_triples(const Int& p, const Int& b0, long x_max, long y_max);

// An integer a with gcd((a^2 + 2pb^2)(2a^2 + p^2c), 3(2b^2 + pc)) = 1,
// built from the prime divisors of 2b^2 + pc (times 3 when neither b nor c
// is divisible by 3). The gcd identity is verified before returning.
Int find_gcd_witness_a(const Int& p, const Int& b, const Int& c);

struct Sextuple {
  Triple triple;
  Rat alpha, beta, gamma;
  ConicPoint witness;
};

struct SextupleDerived {
  Int c, q;
  Rat beta_bar;   // beta / p
  Rat P, Q;       // P = p a^2 + 2 b^2 - 2 p g^2 form, Q = 4bdp g - 4b^2 b - d^2 p b
  Rat P1, Q1;     // P / p, Q / p
};

// Throws when beta is not divisible by p (p-adically), or alpha beta gamma = 0.
SextupleDerived derive(const Sextuple& s);

// The conic p U^2 - V^2 - (beta P Q) T^2 = 0 the witness must lie on.
DiagonalConic sextuple_conic(const Sextuple& s);

struct ConditionReport {
  bool a3 = false;          // P, Q nonzero; witness on conic, primitive, coords nonzero
  bool a4 = false;          // alpha,beta,gamma 2-adic units; alpha,gamma,d p-adic units; beta p-integral
  bool a5 = false;          // gamma Q1 + b d P1 = 0 mod p^2
  bool b1 = false;          // b d - beta_bar gamma = 0 mod 4
  bool genus_gate = false;  // n odd >= 3 or n = 2 mod 4, and n != -2(gamma/alpha)^2 mod p
  Rat a5_value;             // gamma Q1 + b d P1
  Rat b1_value;             // b d - beta_bar gamma
  Int genus_residue;        // -2 (gamma/alpha)^2 mod p

  bool core_pass() const { return a3 && a4 && a5 && b1; }
  bool pass() const { return core_pass() && genus_gate; }
};

ConditionReport check_conditions(const Sextuple& s, const Int& n);

// C = (2p u0 A - 2 v0 B - 4 p^3 a0 b0 t0^2 Q0) / (B^2 - p A^2 + 4 p^5 b0 t0^2 Q0).
Rat extension_constant(const Sextuple& s0, const Rat& A, const Rat& B);

// New sextuple with alpha = alpha0 + 2 p^2 C and witness (u0+AC, v0+BC, t0),
// cleared to a primitive integer point. Requires (C1) A, B 2-adic integers
// with B^2 - pA^2 a 2-adic unit, (C2) A p-integral and B a p-adic unit,
// (C3) the new u, v nonzero. Verifies A3-A5 and B1 on the result.
Sextuple extend(const Sextuple& s0, const Rat& A, const Rat& B);

// Pairs (0, 2p x + B0) for x in [x_lo, x_hi] that survive C1-C3.
std::vector<std::pair<Rat, Rat>> enumerate_AB(const Sextuple& s0, const Int& B0, long x_lo,
                                              long x_hi);

}  // namespace hct
