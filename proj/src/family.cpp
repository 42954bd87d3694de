#include "hct/family.hpp"

#include <stdexcept>

namespace hct {

namespace {

const std::vector<Rat> kSampleTs = {
    Rat(0),       Rat(1),        Rat(-1),      Rat(2),      Rat(-2),
    Rat(1, 2),    Rat(-1, 2),    Rat(3),       Rat(22, 7),  Rat(-5, 3),
};

bool is_unit_at(const Rat& x, const Int& l) { return x != 0 && valuation(x, l) == 0; }

// Smallest epsilon = 2 mod 4 that is a quadratic non-residue mod every odd
// prime in S.
Int pick_epsilon(const std::vector<Int>& S) {
  for (Int e = 2;; e += 4) {
    bool ok = true;
    for (const Int& l : S) {
      if (l == 2) continue;
      Int r = e % l;
      if (r == 0 || legendre_symbol(r, l) != -1) {
        ok = false;
        break;
      }
    }
    if (ok) return e;
    if (e > 100000) throw std::runtime_error("build_avoidance_F: no epsilon found");
  }
}

Int pick_p0(const std::vector<Int>& S, const std::vector<std::pair<Int, Int>>& Z) {
  for (Int p0 = 3;; p0 += 2) {
    if (!is_prime(p0)) continue;
    bool ok = true;
    for (const Int& l : S)
      if (l == p0) ok = false;
    for (auto& [az, bz] : Z) {
      if (bz % p0 == 0) ok = false;
      if (az != 0 && az % p0 == 0) ok = false;
    }
    if (ok) return p0;
    if (p0 > 100000) throw std::runtime_error("build_avoidance_F: no p0 found");
  }
}

}  // namespace

RationalFunction build_avoidance_F(const std::vector<Int>& S, const RationalFunction& G) {
  if (G.is_zero()) throw std::invalid_argument("build_avoidance_F: G is zero");

  // Z = rational zeros and poles of G, as coprime pairs (a_z, b_z), b_z > 0.
  std::vector<std::pair<Int, Int>> Z;
  for (const Poly* part : {&G.num(), &G.den()}) {
    if (part->degree() < 1) continue;
    for (const Rat& z : rational_roots(*part)) Z.emplace_back(z.get_num(), z.get_den());
  }
  for (auto& [az, bz] : Z)
    for (const Int& l : S)
      if (az != 0 && az % l == 0)
        throw std::domain_error("build_avoidance_F: zero/pole " + az.get_str() + "/" +
                                bz.get_str() + " has numerator divisible by " + l.get_str());

  Int eps = pick_epsilon(S);
  Int p0 = pick_p0(S, Z);
  Int M = 1;  // product of odd primes in S
  for (const Int& l : S)
    if (l != 2) M *= l;

  Poly t2{Rat(0), Rat(0), Rat(1)};
  RationalFunction F;
  if (Z.empty()) {
    // 1 + 4M / (t^2 - p0^2 eps)
    Poly den = t2 + Poly::constant(Rat(-p0 * p0 * eps));
    F = RationalFunction(den + Poly::constant(Rat(4 * M)), den);
  } else {
    Int prod_max = 1;
    for (auto& [az, bz] : Z) prod_max *= std::max(Int(1), Int(abs(az)));
    Int prodD = 1;
    for (auto& [az, bz] : Z) {
      Int sign = az >= 0 ? 1 : -1;
      Int Dz = p0 * bz * sign;
      for (auto& [aw, bw] : Z)
        if (!(aw == az && bw == bz)) Dz *= std::max(Int(1), Int(abs(aw)));
      prodD *= Dz - 1;
    }
    Poly den = t2 + Poly::constant(Rat(-p0 * p0 * eps));
    RationalFunction inner(den + Poly::constant(Rat(4 * M * prodD)), den);
    F = RationalFunction::constant(Rat(p0 * prod_max)) * inner;
  }

  // Spot-check both guarantees on the fixed sample.
  for (const Rat& t : kSampleTs) {
    auto ft = F.evaluate(t);
    if (!ft) throw std::logic_error("build_avoidance_F: F has a rational pole");
    for (const Int& l : S)
      if (!is_unit_at(*ft, l))
        throw std::logic_error("build_avoidance_F: F(t) not an l-adic unit at l = " + l.get_str());
    auto gft = G.evaluate(*ft);
    if (!gft || *gft == 0)
      throw std::logic_error("build_avoidance_F: G(F(t)) not finite and nonzero");
  }
  return F;
}

RationalFunction build_gamma(const Int& t0, const Int& q, const Int& q0, const Int& epsilon) {
  if (!is_prime(q) || q == 2) throw std::invalid_argument("build_gamma: q must be an odd prime");
  if (!is_prime(q0) || q0 == 2 || q0 == q)
    throw std::invalid_argument("build_gamma: q0 must be an odd prime distinct from q");
  Int er = residue_mod(Rat(epsilon), q);
  if (er == 0 || legendre_symbol(er, q) != -1)
    throw std::invalid_argument("build_gamma: epsilon is a square mod q");

  Poly den{Rat(-q0 * q0 * epsilon), Rat(0), Rat(1)};
  RationalFunction gamma =
      RationalFunction::constant(Rat(t0)) + RationalFunction(Poly::constant(Rat(q * q)), den);

  for (const Rat& t : kSampleTs) {
    auto g = gamma.evaluate(t);
    if (!g) throw std::logic_error("build_gamma: pole at a rational t");
    Rat diff = *g - Rat(t0);
    if (diff != 0 && valuation(diff, q) < 2)
      throw std::logic_error("build_gamma: Gamma(t) not in t0 + q^2 Z_q");
  }
  return gamma;
}

namespace {

// Coefficients (constant, t^2, t^4) of an even integer polynomial of degree
// at most 4; throws on any other shape.
std::array<Int, 3> even_quartic_coeffs(const Poly& f, const char* what) {
  if (f.degree() > 4) throw std::invalid_argument(std::string(what) + ": degree exceeds 4");
  std::array<Int, 3> out{Int(0), Int(0), Int(0)};
  for (long i = 0; i <= f.degree(); ++i) {
    Rat c = f.coeff(static_cast<unsigned>(i));
    if (c == 0) continue;
    if (i % 2 != 0) throw std::invalid_argument(std::string(what) + ": odd-degree term present");
    if (c.get_den() != 1)
      throw std::invalid_argument(std::string(what) + ": non-integer coefficient");
    out[i / 2] = c.get_num();
  }
  return out;
}

}  // namespace

bool check_D_hypotheses(const RationalFunction& D, const Int& t0, const Int& q) {
  auto nc = even_quartic_coeffs(D.num(), "check_D_hypotheses numerator");
  auto dc = even_quartic_coeffs(D.den(), "check_D_hypotheses denominator");
  Int t2 = t0 * t0, t4 = t2 * t2;
  Int nval = nc[2] * t4 + nc[1] * t2 + nc[0];
  Int dval = dc[2] * t4 + dc[1] * t2 + dc[0];
  return nval % q == 0 && nval % (q * q) != 0 && dval % q != 0;
}

Sextuple family_seed(int family_id) {
  if (family_id == 1)
    return Sextuple{Triple{29, 1, 3}, Rat(7), Rat(261), Rat(15),
                    ConicPoint{166257, 3020031, 2}};
  if (family_id == 2)
    return Sextuple{Triple{29, 1, 3}, Rat(133), Rat(29), Rat(27),
                    ConicPoint{728799, 3613777, 10}};
  throw std::invalid_argument("family_id must be 1 or 2");
}

namespace {

Poly int_poly(const std::vector<const char*>& ascending) {
  std::vector<Rat> cs;
  for (const char* s : ascending) cs.emplace_back(Rat(Int(s)));
  return Poly(std::move(cs));
}

void expect_equal(const char* name, const RationalFunction& got, const RationalFunction& want) {
  if (got == want) return;
  for (const auto& [g, w] : {std::pair{&got.num(), &want.num()}, {&got.den(), &want.den()}}) {
    long dmax = std::max(g->degree(), w->degree());
    for (long i = 0; i <= dmax; ++i)
      if (g->coeff(i) != w->coeff(i))
        throw std::logic_error(std::string(name) + ": coefficient of T^" + std::to_string(i) +
                               " is " + to_string(g->coeff(i)) + ", expected " +
                               to_string(w->coeff(i)));
  }
  throw std::logic_error(std::string(name) + ": mismatch");
}

}  // namespace

FamilyFunctions build_family_functions(int family_id) {
  FamilyFunctions ff;
  ff.family_id = family_id;
  ff.seed = family_seed(family_id);
  const Sextuple& s0 = ff.seed;
  SextupleDerived dv = derive(s0);
  const Int& p = s0.triple.p;

  // C(T): the extension constant with (A, B) = (0, T).
  Rat v0(s0.witness.v), t0w(s0.witness.t);
  Rat p3 = Rat(p) * Rat(p) * Rat(p), p5 = p3 * Rat(p) * Rat(p);
  Poly Cnum{-4 * p3 * s0.alpha * s0.beta * t0w * t0w * dv.Q, -2 * v0};
  Poly Cden{4 * p5 * s0.beta * t0w * t0w * dv.Q, Rat(0), Rat(1)};
  ff.C = RationalFunction(Cnum, Cden);

  Poly T{Rat(0), Rat(1)};
  ff.G = RationalFunction::constant(v0) + RationalFunction(T, Poly::constant(Rat(1))) * ff.C;

  ff.F = build_avoidance_F({Int(2), p}, ff.G);

  if (family_id == 1) {
    ff.q = 31;
    ff.t0 = 0;
    ff.Gamma = build_gamma(Int(0), Int(31), Int(5), Int(3));
  } else {
    ff.q = 11;
    ff.t0 = 0;
    ff.Gamma = build_gamma(Int(0), Int(11), Int(3), Int(7));
  }

  ff.D = ff.C.compose(ff.F);
  ff.D_star = RationalFunction::constant(s0.alpha) +
              RationalFunction::constant(2 * Rat(p) * Rat(p)) * ff.D;
  ff.D_star_composed = ff.D_star.compose(ff.Gamma);

  if (!check_D_hypotheses(ff.D_star, ff.t0, ff.q))
    throw std::logic_error("build_family_functions: D* fails the valuation hypotheses");

  // Cross-check every function against its expected expanded form.
  if (family_id == 1) {
    expect_equal("C1", ff.C,
                 RationalFunction(int_poly({"45588900213360", "-6040062"}),
                                  int_poly({"-5477180725633680", "0", "1"})));
    expect_equal("G1", ff.G,
                 RationalFunction(
                     int_poly({"-16541255584016208244080", "45588900213360", "-3020031"}),
                     int_poly({"-5477180725633680", "0", "1"})));
    expect_equal("F1", ff.F,
                 RationalFunction(int_poly({"98", "0", "1"}), int_poly({"-18", "0", "1"})));
    expect_equal("Gamma1", ff.Gamma,
                 RationalFunction(int_poly({"961"}), int_poly({"-75", "0", "1"})));
    expect_equal("D1", ff.D,
                 RationalFunction(int_poly({"14770814323798008", "0", "-1641200890885920", "0",
                                            "45588894173298"}),
                                  int_poly({"-1774606555105302716", "0", "197178506122812676",
                                            "0", "-5477180725633679"})));
    expect_equal("D1*", ff.D_star,
                 RationalFunction(int_poly({"-12422263806891130444", "0",
                                            "1380250355610428708", "0", "-38340254920051483"}),
                                  int_poly({"1774606555105302716", "0", "-197178506122812676",
                                            "0", "5477180725633679"})));
    expect_equal(
        "D1* o Gamma1", ff.D_star_composed,
        RationalFunction(
            int_poly({"-25922975674046723162225380003", "0", "-170240958125426027001880200",
                      "0", "855438785181123078355868", "0", "3726679142067339133200", "0",
                      "-12422263806891130444"}),
            int_poly({"3703283999134302153081910439", "0", "24320125111216714469579400", "0",
                      "-122205519918242118687196", "0", "-532381966531590814800", "0",
                      "1774606555105302716"})));
  } else {
    expect_equal("C2", ff.C,
                 RationalFunction(int_poly({"-64380394481200", "-7227554"}),
                                  int_poly({"407097080892400", "0", "1"})));
    expect_equal("G2", ff.G,
                 RationalFunction(
                     int_poly({"1471158067696094594800", "-64380394481200", "-3613777"}),
                     int_poly({"407097080892400", "0", "1"})));
    expect_equal("F2", ff.F,
                 RationalFunction(int_poly({"98", "0", "1"}), int_poly({"-18", "0", "1"})));
    expect_equal("Gamma2", ff.Gamma,
                 RationalFunction(int_poly({"121"}), int_poly({"-63", "0", "1"})));
    expect_equal("D2", ff.D,
                 RationalFunction(int_poly({"-20859235062503544", "0", "2317693623118880", "0",
                                            "-64380401708754"}),
                                  int_poly({"131899454209147204", "0", "-14655494912126204",
                                            "0", "407097080892401"})));
    expect_equal("D2*", ff.D_star,
                 RationalFunction(int_poly({"-17542605965314382876", "0",
                                            "1949179850773171028", "0", "-54143923915434895"}),
                                  int_poly({"131899454209147204", "0", "-14655494912126204",
                                            "0", "407097080892401"})));
    expect_equal(
        "D2* o Gamma2", ff.D_star_composed,
        RationalFunction(
            int_poly({"-174687125980796870729105719", "0", "13950123258644442355341240", "0",
                      "-389221676262826716788116", "0", "4420736703259224484752", "0",
                      "-17542605965314382876"}),
            int_poly({"1313439132893945928914009", "0", "-104888292579475114826088", "0",
                      "2926482501528191763292", "0", "-33238662460705095408", "0",
                      "131899454209147204"})));
  }
  return ff;
}

}  // namespace hct
