#include "hct/golden.hpp"

#include <functional>

#include "hct/arith.hpp"
#include "hct/conic.hpp"
#include "hct/construct.hpp"
#include "hct/curve.hpp"
#include "hct/family.hpp"
#include "hct/local.hpp"

namespace hct {

namespace {

class Suite {
 public:
  void check(const std::string& name, const std::function<bool()>& fn,
             const std::string& detail = "") {
    GoldenCheck c{name, false, detail};
    try {
      c.pass = fn();
    } catch (const std::exception& e) {
      c.pass = false;
      c.detail = e.what();
    }
    out_.push_back(std::move(c));
  }
  std::vector<GoldenCheck> take() { return std::move(out_); }

 private:
  std::vector<GoldenCheck> out_;
};

}  // namespace

std::vector<GoldenCheck> run_golden_suite() {
  Suite s;
  Triple t29{29, 1, 3}, t5{5, 1, 1};

  s.check("triple (29,1,3): q = 257, odd prime, all conditions pass", [&] {
    auto r = check_triple(t29);
    return r.q == 257 && is_prime(r.q) && r.pass();
  });
  s.check("triple (5,1,1): q = 1, all conditions pass", [&] {
    auto r = check_triple(t5);
    return r.q == 1 && r.pass();
  });
  s.check("triple (13,3,1) rejected: b divisible by 3",
          [&] { return !check_triple(Triple{13, 3, 1}).pass(); });

  Sextuple f1 = family_seed(1), f2 = family_seed(2);
  SextupleDerived d1 = derive(f1), d2 = derive(f2);

  s.check("family 1: beta_bar = 9, P = 124613, Q = -63945", [&] {
    return d1.beta_bar == 9 && d1.P == 124613 && d1.Q == -63945;
  });
  s.check("family 1: P1 = 4297, Q1 = -2205",
          [&] { return d1.P1 == 4297 && d1.Q1 == -2205; });
  s.check("family 2: beta_bar = 1, P = 472381, Q = 1711", [&] {
    return d2.beta_bar == 1 && d2.P == 472381 && d2.Q == 1711;
  });
  s.check("family 2: P1 = 16289, Q1 = 59", [&] { return d2.P1 == 16289 && d2.Q1 == 59; });

  s.check("family 1 conic 29U^2 - V^2 + 2079746732385T^2 contains (166257, 3020031, 2)", [&] {
    DiagonalConic c = sextuple_conic(f1);
    return c.c == Rat(Int("2079746732385")) && c.contains(f1.witness);
  });
  s.check("family 2 conic 29U^2 - V^2 - 23439072839T^2 contains (728799, 3613777, 10)", [&] {
    DiagonalConic c = sextuple_conic(f2);
    return c.c == Rat(Int("-23439072839")) && c.contains(f2.witness);
  });
  s.check("conic identity: 29*166257^2 - 3020031^2 + 2079746732385*4 = 0", [&] {
    Int u("166257"), v("3020031");
    return 29 * u * u - v * v + Int("2079746732385") * 4 == 0;
  });
  s.check("conic identity: 29*728799^2 - 3613777^2 - 23439072839*100 = 0", [&] {
    Int u("728799"), v("3613777");
    return 29 * u * u - v * v - Int("23439072839") * 100 == 0;
  });

  s.check("family 1: gamma Q1 + b d P1 = -20184 = -24 * 29^2; b d - beta_bar gamma = -132", [&] {
    auto r = check_conditions(f1, Int(7));
    return r.a5_value == -20184 && Rat(-24 * 841) == r.a5_value && r.b1_value == -132 &&
           r.core_pass();
  });
  s.check("family 2: gamma Q1 + b d P1 = 50460 = 60 * 29^2; b d - beta_bar gamma = -24", [&] {
    auto r = check_conditions(f2, Int(6));
    return r.a5_value == 50460 && Rat(60 * 841) == r.a5_value && r.b1_value == -24 &&
           r.core_pass();
  });
  s.check("family 1: -2 (gamma/alpha)^2 = 21 mod 29; n = 7 passes, n = 21 fails", [&] {
    auto r7 = check_conditions(f1, Int(7));
    auto r21 = check_conditions(f1, Int(21));
    return r7.genus_residue == 21 && r7.genus_gate && !r21.genus_gate;
  });
  s.check("family 2: -2 (gamma/alpha)^2 = 8 mod 29; n = 6 passes, n = 8 fails", [&] {
    auto r6 = check_conditions(f2, Int(6));
    auto r37 = check_conditions(f2, Int(37));  // 37 = 8 mod 29
    return r6.genus_residue == 8 && r6.genus_gate && !r37.genus_gate;
  });

  s.check("gcd witness a(29, 1, 9) = 263 with H1 = 263 prime",
          [&] { return find_gcd_witness_a(Int(29), Int(1), Int(9)) == 263; });
  s.check("gcd witness a(5, 1, 1) = 21",
          [&] { return find_gcd_witness_a(Int(5), Int(1), Int(1)) == 21; });

  s.check("triple search (29, 1, 5, 5) recovers (29, 1, 3)", [&] {
    for (auto& t : search_triples(Int(29), Int(1), 5, 5))
      if (t.p == 29 && t.b == 1 && t.d == 3) return true;
    return false;
  });
  s.check("triple search (5, 1, 5, 5) recovers (5, 1, 1)", [&] {
    for (auto& t : search_triples(Int(5), Int(1), 5, 5))
      if (t.p == 5 && t.b == 1 && t.d == 1) return true;
    return false;
  });
  s.check("triple search (29, 1, 0, 0) excludes d = 1: |29 - 4| = 25 is not prime", [&] {
    return search_triples(Int(29), Int(1), 0, 0).empty();
  });

  // Every expanded coefficient of C, G, F, Gamma, D, D*, D* o Gamma is
  // compared inside build_family_functions; a mismatch throws.
  s.check("family 1 functions match all expanded coefficient lists",
          [&] { return build_family_functions(1).family_id == 1; });
  s.check("family 2 functions match all expanded coefficient lists",
          [&] { return build_family_functions(2).family_id == 2; });

  s.check("family 1: D* o Gamma numerator has leading coefficient -12422263806891130444", [&] {
    auto ff = build_family_functions(1);
    return ff.D_star_composed.num().leading() == Rat(Int("-12422263806891130444"));
  });
  s.check("family 2: D* o Gamma denominator has constant term 1313439132893945928914009", [&] {
    auto ff = build_family_functions(2);
    return ff.D_star_composed.den().coeff(0) == Rat(Int("1313439132893945928914009"));
  });

  s.check("12422263806891130444 = 2^2 * 7^3 * 31 * 433 * 3299 * 10589 * 19309", [&] {
    Int n("12422263806891130444");
    return n == Int(4) * 343 * 31 * 433 * 3299 * 10589 * 19309 && is_prime(Int(433)) &&
           is_prime(Int(3299)) && is_prime(Int(10589)) && is_prime(Int(19309));
  });
  s.check("1774606555105302716 = 2^2 * 7^2 * 47 * 192640746320593 (last factor prime)", [&] {
    Int q("192640746320593");
    return Int("1774606555105302716") == Int(4) * 49 * 47 * q && is_prime(q);
  });
  s.check("17542605965314382876 = 2^2 * 7 * 11 * 56956512874397347 (last factor prime)", [&] {
    Int q("56956512874397347");
    return Int("17542605965314382876") == Int(4) * 7 * 11 * q && is_prime(q);
  });
  s.check("131899454209147204 = 8 mod 11",
          [&] { return Int("131899454209147204") % 11 == 8; });

  s.check("valuation gate at t = 0: v_31(D1* numerator constant) = 1, denominator unit", [&] {
    auto ff = build_family_functions(1);
    return check_D_hypotheses(ff.D_star, Int(0), Int(31));
  });
  s.check("valuation gate at t = 0: v_11(D2* numerator constant) = 1, denominator unit", [&] {
    auto ff = build_family_functions(2);
    return check_D_hypotheses(ff.D_star, Int(0), Int(11));
  });

  s.check("family 1 separability constants: n1..n5 = (5,4,4,3,3) at p = 31", [&] {
    auto ff = build_family_functions(1);
    auto w = ff.D_star_composed.evaluate(Rat(0));
    Rat w2 = *w * *w;
    SeparabilityInput inp{Rat(Int("118579927725")) * w2,
                          2 * (29 * w2 + 123192),
                          Rat(-16689645),
                          261 * (29 * w2 + 123192),
                          Rat(-33379290),
                          Int(7),
                          Int(1),
                          Int(1),
                          Int(31)};
    auto r = separability_check(inp);
    return r.n1 == 5 && r.n2 == 4 && r.n3 == 4 && r.n4 == 3 && r.n5 == 3 && r.separable();
  });
  s.check("family 2 separability constants: n1..n5 = (5,4,4,3,3) at p = 11", [&] {
    auto ff = build_family_functions(2);
    auto w = ff.D_star_composed.evaluate(Rat(0));
    Rat w2 = *w * *w;
    SeparabilityInput inp{Rat(Int("84898109")) * w2,
                          2 * (29 * w2 - 40600),
                          Rat(49619),
                          261 * (29 * w2 - 40600),
                          Rat(99238),
                          Int(6),
                          Int(1),
                          Int(1),
                          Int(11)};
    auto r = separability_check(inp);
    return r.n1 == 5 && r.n2 == 4 && r.n3 == 4 && r.n4 == 3 && r.n5 == 3 && r.separable();
  });
  s.check("separability residues: 118579927725 = 27, 123192 = 29 mod 31; ce = 25, be-cd = 12",
          [&] {
            Int p(31);
            bool a = Int("118579927725") % p == 27 && Int(123192) % p == 29;
            Int ce = residue_mod(Rat(Int("-16689645")) * Rat(Int("-33379290")), p);
            Int mix = residue_mod(Rat(2 * 123192) * Rat(-33379290) -
                                      Rat(-16689645) * Rat(261 * 123192),
                                  p);
            return a && ce == 25 && mix == 12;
          });
  s.check("separability residues: 84898109 = 10, 40600 = 10 mod 11; ce = 8, be-cd = 8", [&] {
    Int p(11);
    bool a = Int("84898109") % p == 10 && Int(40600) % p == 10;
    Int ce = residue_mod(Rat(49619) * Rat(99238), p);
    Int mix = residue_mod(Rat(2 * -40600) * Rat(99238) - Rat(49619) * Rat(261 * -40600), p);
    return a && ce == 8 && mix == 8;
  });

  s.check("(2, p)_p = -1 for p in {5, 13, 29, 37}", [&] {
    for (long p : {5L, 13L, 29L, 37L})
      if (hilbert_symbol(Rat(2), Rat(p), Place::finite(Int(p))) != -1) return false;
    return true;
  });
  s.check("(29, x + 116)_2 = -1 whenever v_2(x + 116) is odd", [&] {
    for (long x : {-114, -108, 12, 84, 396})
      if (hilbert_symbol(Rat(29), Rat(x + 116), Place::finite(Int(2))) != -1) return false;
    return true;
  });
  s.check("product formula on the family constants: (29, -63945) over the support", [&] {
    return hilbert_product_check(Rat(29), Rat(-63945));
  });

  s.check("family 1 curve at p = 29: F(1,0) = 2 * 29^3 * 20184^2 with v_29 = 7", [&] {
    Rat F10 = 2 * Rat(29 * 29 * 29) * Rat(Int("20184") * Int("20184"));
    Rat direct = Rat(29) * f1.alpha * f1.alpha * d1.Q * d1.Q +
                 (2 * d1.P + f1.beta * d1.Q) * (Rat(261) * d1.P + 2 * f1.beta * d1.Q);
    return direct == F10 && valuation(F10, Int(29)) == 7;
  });
  s.check("family 1 (n = 7): Hensel certificate at 29 with delta = 3 verifies", [&] {
    auto rep = local_solvability_report(f1, Int(7), Int(10));
    for (auto& e : rep.entries)
      if (e.place == "29")
        return e.status == "solvable" && e.certificate && e.certificate->delta == 3 &&
               e.certificate->verified && e.certificate->F_value_valuation &&
               *e.certificate->F_value_valuation >= 7;
    return false;
  });

  s.check("extension constant at (A, B) = (0, 0) equals -alpha0 / p^2", [&] {
    return extension_constant(f1, Rat(0), Rat(0)) == -f1.alpha / Rat(841) &&
           extension_constant(f2, Rat(0), Rat(0)) == -f2.alpha / Rat(841);
  });
  s.check("extension at (0, 1): new witness lies on the new conic", [&] {
    Sextuple e = extend(f1, Rat(0), Rat(1));
    return sextuple_conic(e).contains(e.witness) &&
           e.alpha == f1.alpha + Rat(1682) * extension_constant(f1, Rat(0), Rat(1));
  });
  s.check("extension at (0, 29) rejected: B is not a p-adic unit", [&] {
    try {
      extend(f2, Rat(0), Rat(29));
      return false;
    } catch (const std::domain_error&) {
      return true;
    }
  });

  return s.take();
}

}  // namespace hct
