#pragma once

// Local arithmetic over the completions of Q: Hilbert symbols at every place,
// local squareness/norm tests, and Hensel verification/lifting.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hct/arith.hpp"

namespace hct {

// A place of Q: a finite prime or the archimedean place.
class Place {
 public:
  static Place finite(const Int& p);
  static Place infinite() { return Place(); }

  bool is_infinite() const { return !p_.has_value(); }
  const Int& prime() const;

  bool operator==(const Place& o) const = default;
  std::string str() const { return is_infinite() ? "inf" : p_->get_str(); }

 private:
  Place() = default;
  std::optional<Int> p_;
};

// Hilbert symbol (a, b)_v in {+1, -1}: +1 iff z^2 = a x^2 + b y^2 has a
// nonzero solution over the completion at v. Classical closed form
// (Cohen, Thm 5.2.7 shape): at odd p with a = p^alpha u, b = p^beta w,
//   (-1)^{alpha beta (p-1)/2} (u/p)^beta (w/p)^alpha;
// at 2, (-1)^{eps(u)eps(w) + alpha omega(w) + beta omega(u)};
// at infinity, -1 iff a < 0 and b < 0.
int hilbert_symbol(const Rat& a, const Rat& b, const Place& v);

// Product-formula oracle: product of (a,b)_v over {inf, 2} and the odd primes
// in the support of a and b. Always true when the symbol is implemented
// correctly.
bool hilbert_product_check(const Rat& a, const Rat& b);

// The support set the product runs over (for reporting).
std::vector<Place> hilbert_support(const Rat& a, const Rat& b);

// a in (Q_v^x)^2?
bool is_local_square(const Rat& a, const Place& v);

// a a norm from Q_v(sqrt(p))? Equivalent to (a, p)_v = +1.
bool is_local_norm(const Rat& a, const Int& p, const Place& v);

// Sparse multivariate polynomial with rational coefficients, for the Hensel
// systems (two variables in practice).
struct MultiPoly {
  struct Term {
    Rat coeff;
    std::vector<unsigned> exps;  // one exponent per variable
  };
  unsigned nvars = 0;
  std::vector<Term> terms;

  Rat evaluate(const std::vector<Rat>& point) const;
  MultiPoly derivative(unsigned var) const;
};

// Hypotheses of Hensel's lemma at a point: F(a) = 0 mod p^{2 delta + 1},
// dF/dx_k(a) = 0 mod p^delta, dF/dx_k(a) != 0 mod p^{delta + 1}.
struct HenselSystem {
  MultiPoly F;
  std::vector<Rat> point;
  unsigned variable_index = 0;
  unsigned delta = 0;
  Int p;
};

// Checks the three congruences exactly. Throws if any coefficient or point
// coordinate is not p-integral.
bool hensel_verify(const HenselSystem& s);

struct HenselCertificate {
  Int prime;
  unsigned delta;
  std::vector<Rat> point;
  Int modulus;                  // p^{2 delta + 1}
  std::optional<long> F_value_valuation;  // nullopt = exact zero
  long derivative_valuation;
  bool verified;
};
HenselCertificate hensel_certificate(const HenselSystem& s);

// Newton lifting of a univariate approximate root. f is given by ascending
// coefficients (p-integral rationals). Detects the minimal admissible delta
// from v_p(f'(x0)); throws "not Hensel-liftable at given point" when
// v_p(f(x0)) < 2 delta + 1. Returns r mod p^precision with
// f(r) = 0 mod p^precision and r = x0 mod p^{delta+1}.
Int hensel_lift(const std::vector<Rat>& f, const Rat& x0, const Int& p, unsigned precision);

}  // namespace hct
