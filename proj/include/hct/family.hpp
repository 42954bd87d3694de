#pragma once

// The rational-function constructions behind the two algebraic curve
// families: avoidance functions F(t) that dodge the zeros/poles of a given
// G(t) while staying an l-adic unit on a prime set S, shifting functions
// Gamma(t) landing in t0 + q^2 Z_q, and the composed family functions
// D, D*, D* o Gamma together with their expected expanded forms.

#include <vector>

#include "hct/construct.hpp"
#include "hct/poly.hpp"

namespace hct {

// Builds F with: (1) F(t) an l-adic unit for every l in S and all rational t,
// (2) G(F(t)) finite and nonzero for all rational t. Requires every rational
// zero/pole z = a_z/b_z of G to have a_z coprime to each l in S. The two
// conclusions are spot-checked on a fixed sample of rational t.
RationalFunction build_avoidance_F(const std::vector<Int>& S, const RationalFunction& G);

// Gamma(t) = t0 + q^2 / (t^2 - q0^2 epsilon) with epsilon a quadratic
// non-residue mod q; Gamma(t) lies in t0 + q^2 Z_q for every rational t.
RationalFunction build_gamma(const Int& t0, const Int& q, const Int& q0, const Int& epsilon);

// For D = (a t^4 + b t^2 + c)/(d t^4 + e t^2 + f) with integer coefficients:
// true iff num(t0) = 0 mod q but not mod q^2, and den(t0) != 0 mod q.
// These guarantee v_q(D(Gamma(t))) = 1 for all rational t.
bool check_D_hypotheses(const RationalFunction& D, const Int& t0, const Int& q);

struct FamilyFunctions {
  int family_id;
  Sextuple seed;
  Int q;   // the odd prime carrying v_q = 1 (31 or 11)
  Int t0;  // the shift of Gamma
  RationalFunction C;        // extension constant as a function of B = T
  RationalFunction G;        // v0 + T C(T)
  RationalFunction F;        // avoidance function
  RationalFunction Gamma;
  RationalFunction D;        // C o F
  RationalFunction D_star;   // alpha0 + 2 p^2 D
  RationalFunction D_star_composed;  // D_star o Gamma
};

// Constructs everything from the family's seed sextuple and cross-checks
// each function against its expected expanded coefficients; throws on any
// coefficient mismatch.
FamilyFunctions build_family_functions(int family_id);

// The seed sextuples (29,1,3,7,261,15) and (29,1,3,133,29,27).
Sextuple family_seed(int family_id);

}  // namespace hct
