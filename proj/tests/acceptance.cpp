// Acceptance gate: one line per criterion, nonzero exit if any fails.

#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "hct/arith.hpp"
#include "hct/conic.hpp"
#include "hct/construct.hpp"
#include "hct/curve.hpp"
#include "hct/family.hpp"
#include "hct/local.hpp"

using namespace hct;

namespace {

int failures = 0;

void criterion(int id, const std::string& label, const std::function<bool()>& body) {
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    ok = false;
    note = std::string(" (") + e.what() + ")";
  }
  if (!ok) ++failures;
  std::cout << "criterion " << id << " [" << label << "]: " << (ok ? "PASS" : "FAIL") << note
            << "\n";
}

Rat sample_rat(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-500, 500);
  std::uniform_int_distribution<long> den(1, 60);
  return make_rat(num(rng), den(rng));
}

// Brute-force solvability of z^2 = a x^2 + b y^2 over the p-adics, odd p:
// strip square powers of p from the coefficients and search the reduced
// equation mod p for a smooth point (every coefficient now has valuation
// 0 or 1, so a point in the right chart certifies a lift).
int conic_oracle(long a, long b, long p) {
  auto vp = [&](long x) {
    int v = 0;
    while (x % p == 0) x /= p, ++v;
    return v;
  };
  while (vp(a) >= 2) a /= p * p;
  while (vp(b) >= 2) b /= p * p;
  int alpha = vp(a), beta = vp(b);
  auto md = [&](long x) { return ((x % p) + p) % p; };
  std::vector<char> sq(p, 0);
  for (long z = 0; z < p; ++z) sq[md(z * z)] = 1;
  if (alpha == 0 && beta == 0) {
    for (long x = 0; x < p; ++x)
      for (long y = 0; y < p; ++y)
        if ((x || y) && sq[md(a * x * x + b * y * y)]) return 1;
    return -1;
  }
  if (alpha == 1 && beta == 0) {
    for (long y = 0; y < p; ++y)
      for (long z = 0; z < p; ++z)
        if ((y || z) && md(z * z - b * y * y) == 0) return 1;
    return -1;
  }
  if (alpha == 0 && beta == 1) return conic_oracle(b, a, p);
  long u = a / p, w = b / p;
  for (long x = 0; x < p; ++x)
    for (long y = 0; y < p; ++y)
      if ((x || y) && md(u * x * x + w * y * y) == 0) return 1;
  return -1;
}

}  // namespace

int main() {
  criterion(1, "golden constants", [] {
    bool ok = true;
    ok &= Triple{29, 1, 3}.q() == 257 && is_prime(Int(257));
    ok &= Triple{5, 1, 1}.q() == 1;
    auto d1 = derive(family_seed(1));
    ok &= d1.P == 124613 && d1.Q == -63945 && d1.beta_bar == 9;
    auto d2 = derive(family_seed(2));
    ok &= d2.P == 472381 && d2.Q == 1711 && d2.beta_bar == 1;
    return ok;
  });

  criterion(2, "conic witnesses", [] {
    Int c1 = Int("2079746732385"), c2 = Int("-23439072839");
    Int u1 = 166257, v1 = 3020031, u2 = 728799, v2 = 3613777;
    bool ok = 29 * u1 * u1 - v1 * v1 + c1 * 4 == 0;
    ok &= 29 * u2 * u2 - v2 * v2 + c2 * 100 == 0;
    auto s1 = family_seed(1);
    auto s2 = family_seed(2);
    auto d1 = derive(s1);
    auto d2 = derive(s2);
    ok &= s1.beta * d1.P * d1.Q == Rat(Int("-2079746732385"));
    ok &= s2.beta * d2.P * d2.Q == Rat(Int("23439072839"));
    ok &= sextuple_conic(s1).contains(s1.witness);
    ok &= sextuple_conic(s2).contains(s2.witness);
    return ok;
  });

  criterion(3, "condition residues", [] {
    auto r1 = check_conditions(family_seed(1), 7);
    auto r2 = check_conditions(family_seed(2), 6);
    bool ok = r1.a5_value == -20184 && r1.a5_value == Rat(-24) * 841;
    ok &= r2.a5_value == 50460 && r2.a5_value == Rat(60) * 841;
    ok &= r1.b1_value == -132 && r2.b1_value == -24;
    ok &= residue_mod(r1.b1_value, 4) == 0 && residue_mod(r2.b1_value, 4) == 0;
    ok &= r1.genus_residue == 21 && r2.genus_residue == 8;
    return ok;
  });

  criterion(4, "symbolic identities", [] {
    // build_family_functions cross-checks every printed coefficient and
    // throws on any mismatch
    auto ff1 = build_family_functions(1);
    auto ff2 = build_family_functions(2);
    bool ok = ff1.D == ff1.C.compose(ff1.F);
    ok &= ff1.D_star ==
          RationalFunction::constant(7) + RationalFunction::constant(1682) * ff1.D;
    ok &= ff2.D_star ==
          RationalFunction::constant(133) + RationalFunction::constant(1682) * ff2.D;
    ok &= ff1.D_star_composed.num().coeff(8) == Rat(Int("-12422263806891130444"));
    ok &= ff2.D_star_composed.den().coeff(0) == Rat(Int("1313439132893945928914009"));
    return ok;
  });

  criterion(5, "valuation law on 100 sampled T", [] {
    auto ff1 = build_family_functions(1);
    auto ff2 = build_family_functions(2);
    std::mt19937 rng(20240915);
    int done = 0;
    while (done < 100) {
      Rat t = sample_rat(rng);
      auto v1 = ff1.D_star_composed.evaluate(t);
      auto v2 = ff2.D_star_composed.evaluate(t);
      if (!v1 || !v2 || *v1 == 0 || *v2 == 0) continue;
      if (valuation(*v1, Int(31)) != 1) return false;
      if (valuation(*v2, Int(11)) != 1) return false;
      ++done;
    }
    return true;
  });

  criterion(6, "separability, 60 instances", [] {
    for (int fam : {1, 2}) {
      for (long n : {6, 7, 9, 10, 11, 13}) {
        for (Rat T : {Rat(0), Rat(1), Rat(-1), make_rat(1, 2), Rat(-3)}) {
          CurveSpec c = family_polynomial(fam, Int(n), T);
          auto s = c.source;
          auto der = derive(s);
          SeparabilityInput inp{Rat(s.triple.p) * s.alpha * s.alpha * der.Q * der.Q,
                                Rat(2) * s.triple.b * s.triple.b * der.P,
                                Rat(s.triple.b) * der.Q,
                                Rat(s.triple.d) * s.triple.d * s.triple.p * der.P,
                                Rat(2) * s.triple.b * der.Q,
                                Int(n),
                                Int(1),
                                Int(1),
                                Int(fam == 1 ? 31 : 11)};
          auto res = separability_check(inp);
          if (!(res.n1 == 5 && res.n2 == 4 && res.n3 == 4 && res.n4 == 3 && res.n5 == 3))
            return false;
          if (!res.separable()) return false;
          if (!separability_oracle(c.f)) return false;
        }
      }
    }
    return true;
  });

  criterion(7, "local solvability with Hensel certificates", [] {
    CurveSpec c1 = family_polynomial(1, Int(7), Rat(0));
    CurveSpec c2 = family_polynomial(2, Int(6), Rat(0));
    for (int fam : {1, 2}) {
      const CurveSpec& c = fam == 1 ? c1 : c2;
      auto rep = local_solvability_report(c.source, c.n, Int(100));
      if (!rep.overall_solvable) return false;
      bool saw_p = false, saw_2 = false;
      for (const auto& e : rep.entries) {
        if (e.status != "solvable") return false;
        if (e.place == "29") {
          saw_p = true;
          if (!e.certificate || e.certificate->delta != 3 || !e.certificate->verified)
            return false;
          Int p7 = 1;
          for (int i = 0; i < 7; ++i) p7 *= 29;
          if (e.certificate->modulus != p7) return false;
        }
        if (e.place == "2") {
          saw_2 = true;
          unsigned want = fam == 1 ? 1 : 2;
          if (!e.certificate || e.certificate->delta != want || !e.certificate->verified)
            return false;
        }
      }
      if (!saw_p || !saw_2) return false;
    }
    return true;
  });

  criterion(8, "point absence at height 1000 + control search", [] {
    CurveSpec c1 = family_polynomial(1, Int(7), Rat(0));
    if (!search_rational_points(c1, 1000).empty()) return false;
    CurveSpec c2 = family_polynomial(2, Int(6), Rat(0));
    if (!search_rational_points(c2, 1000).empty()) return false;
    CurveSpec control{Poly{Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)}, Int(2),
                      std::nullopt, std::nullopt, Sextuple{}};
    auto pts = search_rational_points(control, 10);
    int infinite = 0, finite = 0;
    for (const auto& pt : pts) {
      if (pt.at_infinity)
        ++infinite;
      else if (pt.x == 0)
        ++finite;
      else
        return false;
    }
    return infinite == 2 && finite == 2;
  });

  criterion(9, "hilbert symbol correctness", [] {
    std::mt19937 rng(20240915);
    std::uniform_int_distribution<long> d(-300, 300);
    int done = 0;
    while (done < 1000) {
      long a = d(rng), b = d(rng);
      if (a == 0 || b == 0) continue;
      if (!hilbert_product_check(Rat(a), Rat(b))) return false;
      ++done;
    }
    for (long p : {5, 13, 29, 37})
      if (hilbert_symbol(Rat(2), Rat(p), Place::finite(Int(p))) != -1) return false;
    for (long p : {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
      Place v = Place::finite(Int(p));
      for (long a = -50; a <= 50; ++a)
        for (long b = -50; b <= 50; ++b) {
          if (a == 0 || b == 0) continue;
          if (hilbert_symbol(Rat(a), Rat(b), v) != conic_oracle(a, b, p)) return false;
        }
    }
    return true;
  });

  criterion(10, "threefold invariant pattern", [] {
    for (auto tr : {Triple{29, 1, 3}, Triple{5, 1, 1}}) {
      auto winf = threefold_local_witness(tr, Place::infinite());
      if (winf.symbol_first != 1 || winf.symbol_second != 1) return false;
      for (long l = 2; l <= 50; ++l) {
        if (!is_prime(Int(l))) continue;
        auto w = threefold_local_witness(tr, Place::finite(l));
        if (w.symbol_first != 1 || w.symbol_second != 1) return false;
      }
      auto scan = threefold_2adic_obstruction_scan(tr, 9);
      if (!scan.all_admissible_half || scan.admissible == 0) return false;
    }
    return true;
  });

  criterion(11, "search recovery", [] {
    bool found29 = false, found5 = false;
    for (const auto& t : search_triples(29, 1, 5, 5))
      if (t.b == 1 && t.d == 3) found29 = true;
    for (const auto& t : search_triples(5, 1, 5, 5))
      if (t.b == 1 && t.d == 1) found5 = true;
    return found29 && found5;
  });

  std::cout << (failures == 0 ? "all criteria passed" : "failures: " + std::to_string(failures))
            << "\n";
  return failures == 0 ? 0 : 1;
}
