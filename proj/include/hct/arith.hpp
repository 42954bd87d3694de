#pragma once

// Exact integer/rational arithmetic and the number-theoretic primitives the
// rest of the toolkit is built on. Integers and rationals are GMP values;
// rationals are always stored reduced with positive denominator (mpq
// canonical form), so equality and valuations are deterministic.

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hct {

using Int = mpz_class;
using Rat = mpq_class;

// p-adic valuation v_p(x) = v_p(num) - v_p(den). Throws on x = 0; callers
// that want +infinity must branch before calling.
long valuation(const Rat& x, const Int& p);
long valuation_int(const Int& x, const Int& p);

// Legendre symbol (a/p) in {-1, 0, +1}; p must be an odd prime.
int legendre_symbol(const Int& a, const Int& p);

// Deterministic primality test: trial division, then a strong-pseudoprime
// battery over the first 13 prime bases plus a strong Lucas test. The base
// battery is proven correct for n < 3317044064679887385961981 (~3.3e24);
// inputs beyond that bound are rejected rather than answered probabilistically.
bool is_prime(const Int& n);

// Square root mod an odd prime (Tonelli-Shanks). Returns the smaller of the
// two roots, normalized to [0, p); nullopt when a is a non-residue.
std::optional<Int> sqrt_mod(const Int& a, const Int& p);

Int mod_pow(Int base, Int exp, const Int& m);
Int inv_mod(const Int& a, const Int& m);

// x mod m for a p-integral rational whose denominator is invertible mod m.
Int residue_mod(const Rat& x, const Int& m);

// Trial-division factorization, smallest primes first, as (prime, exponent)
// pairs. Any cofactor left above bound^2 is checked with is_prime; a composite
// cofactor raises with the offending value in the message.
std::vector<std::pair<Int, unsigned>> factor(Int n, const Int& bound = Int(10000000));

inline Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Int& x) { return x.get_str(); }
std::string to_string(const Rat& x);  // "num" or "num/den"
Rat rat_from_string(const std::string& s);

}  // namespace hct
