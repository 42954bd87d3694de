#include "hct/construct.hpp"

#include <stdexcept>

namespace hct {

TripleReport check_triple(const Triple& t) {
  TripleReport r;
  r.q = t.q();
  r.p_is_5_mod_8 = is_prime(t.p) && t.p % 8 == 5;
  r.three_nonresidue = r.p_is_5_mod_8 && legendre_symbol(Int(3), t.p) == -1;
  r.b_d_odd = (abs(t.b) % 2 == 1) && (abs(t.d) % 2 == 1);
  r.b_coprime_3 = t.b % 3 != 0;
  r.b_coprime_p = t.b % t.p != 0;
  r.q_one_or_odd_prime = (r.q == 1) || (r.q % 2 == 1 && is_prime(r.q));
  if (r.q == 1) {
    r.q_odd_prime_power = true;
  } else if (r.q % 2 == 1) {
    auto fs = factor(r.q);
    r.q_odd_prime_power = fs.size() == 1 && fs[0].second % 2 == 1;
  }
  return r;
}

std::vector<Triple> search_triples(const Int& p, const Int& b0, long x_max, long y_max) {
  if (!(is_prime(p) && p % 8 == 5 && legendre_symbol(Int(3), p) == -1))
    throw std::invalid_argument("search_triples: p must be a prime = 5 mod 8 with (3/p) = -1");
  if (abs(b0) % 2 != 1 || b0 % 3 == 0 || b0 % p == 0)
    throw std::invalid_argument("search_triples: b0 must be odd, coprime to 3 and to p");
  std::vector<Triple> out;
  for (long x = 0; x <= x_max; ++x) {
    for (long y = -y_max; y <= y_max; ++y) {
      Triple t{p, 6 * p * y + b0, Int(2 * x + 1)};
      Int q = t.q();
      if (q == 1 || (q % 2 == 1 && is_prime(q))) {
        if (check_triple(t).pass()) out.push_back(t);
      }
    }
  }
  return out;
}

Int find_gcd_witness_a(const Int& p, const Int& b, const Int& c) {
  Int H1 = 2 * b * b + p * c;
  auto fs = factor(abs(H1));
  Int a = 1;
  for (auto& [l, e] : fs) a *= l;
  if (b % 3 != 0 && c % 3 != 0) a *= 3;
  if (b % 3 == 0 && c % 3 == 0)
    throw std::invalid_argument("find_gcd_witness_a: b and c both divisible by 3");
  Int H2 = a * a + 2 * p * b * b;
  Int H3 = 2 * a * a + p * p * c;
  if (gcd(H2 * H3, 3 * H1) != 1)
    throw std::logic_error("find_gcd_witness_a: gcd identity failed for a = " + a.get_str());
  return a;
}

SextupleDerived derive(const Sextuple& s) {
  const Rat &al = s.alpha, &be = s.beta, &ga = s.gamma;
  if (al * be * ga == 0) throw std::invalid_argument("derive: alpha beta gamma = 0");
  const Int &p = s.triple.p, &b = s.triple.b, &d = s.triple.d;
  SextupleDerived r;
  r.c = s.triple.c();
  r.q = s.triple.q();
  if (valuation(be, p) < 1)
    throw std::domain_error("derive: beta is not divisible by p");
  r.beta_bar = be / Rat(p);
  r.P = Rat(p) * al * al + 2 * be * be - 2 * Rat(p) * ga * ga;
  r.Q = Rat(4 * b * d * p) * ga - Rat(4 * b * b) * be - Rat(d * d * p) * be;
  if (r.P == 0 || r.Q == 0) throw std::domain_error("derive: P or Q vanishes");
  r.P1 = r.P / Rat(p);
  r.Q1 = r.Q / Rat(p);
  if (r.P1 * Rat(p) != r.P || r.Q1 * Rat(p) != r.Q)
    throw std::logic_error("derive: division by p not exact");
  return r;
}

DiagonalConic sextuple_conic(const Sextuple& s) {
  SextupleDerived d = derive(s);
  return DiagonalConic{Rat(s.triple.p), Rat(-1), -s.beta * d.P * d.Q};
}

namespace {

bool is_unit_at(const Rat& x, const Int& p) { return x != 0 && valuation(x, p) == 0; }
bool is_integral_at(const Rat& x, const Int& p) { return x == 0 || valuation(x, p) >= 0; }

}  // namespace

ConditionReport check_conditions(const Sextuple& s, const Int& n) {
  SextupleDerived dv = derive(s);
  const Int &p = s.triple.p, &b = s.triple.b, &d = s.triple.d;
  ConditionReport r;

  DiagonalConic conic{Rat(p), Rat(-1), -s.beta * dv.P * dv.Q};
  const ConicPoint& w = s.witness;
  bool coords_nonzero = w.u != 0 && w.v != 0 && w.t != 0;
  bool primitive = coords_nonzero && gcd(gcd(w.u, w.v), w.t) == 1;
  r.a3 = dv.P != 0 && dv.Q != 0 && coords_nonzero && primitive && conic.contains(w);

  r.a4 = is_unit_at(s.alpha, Int(2)) && is_unit_at(s.beta, Int(2)) && is_unit_at(s.gamma, Int(2)) &&
         is_unit_at(s.alpha, p) && is_unit_at(s.gamma, p) && d % p != 0 &&
         is_integral_at(s.beta, p);

  r.a5_value = s.gamma * dv.Q1 + Rat(b * d) * dv.P1;
  r.a5 = r.a5_value == 0 || valuation(r.a5_value, p) >= 2;

  r.b1_value = Rat(b * d) - dv.beta_bar * s.gamma;
  r.b1 = r.b1_value == 0 || valuation(r.b1_value, Int(2)) >= 2;

  Rat ratio = s.gamma / s.alpha;
  r.genus_residue = residue_mod(Rat(-2) * ratio * ratio, p);
  bool shape_ok = (n % 2 == 1 && n >= 3) || (n % 4 == 2 && n >= 2);
  r.genus_gate = shape_ok && residue_mod(Rat(n), p) != r.genus_residue;
  return r;
}

Rat extension_constant(const Sextuple& s0, const Rat& A, const Rat& B) {
  SextupleDerived dv = derive(s0);
  const Int& p = s0.triple.p;
  Rat u0(s0.witness.u), v0(s0.witness.v), t0(s0.witness.t);
  Rat p2 = Rat(p) * Rat(p), p3 = p2 * Rat(p), p5 = p3 * p2;
  Rat num = 2 * Rat(p) * u0 * A - 2 * v0 * B - 4 * p3 * s0.alpha * s0.beta * t0 * t0 * dv.Q;
  Rat den = B * B - Rat(p) * A * A + 4 * p5 * s0.beta * t0 * t0 * dv.Q;
  if (den == 0) throw std::domain_error("extension_constant: zero denominator");
  return num / den;
}

Sextuple extend(const Sextuple& s0, const Rat& A, const Rat& B) {
  const Int& p = s0.triple.p;
  if (!is_integral_at(A, Int(2)) || !is_integral_at(B, Int(2)) ||
      !is_unit_at(B * B - Rat(p) * A * A, Int(2)))
    throw std::domain_error("extend: condition C1 fails (2-adic constraints on A, B)");
  if (!is_integral_at(A, p) || !is_unit_at(B, p))
    throw std::domain_error("extend: condition C2 fails (p-adic constraints on A, B)");

  Rat C = extension_constant(s0, A, B);
  Rat u = Rat(s0.witness.u) + A * C;
  Rat v = Rat(s0.witness.v) + B * C;
  Rat t(s0.witness.t);
  if (u == 0 || v == 0) throw std::domain_error("extend: condition C3 fails (zero coordinate)");

  Sextuple s = s0;
  s.alpha = s0.alpha + 2 * Rat(p) * Rat(p) * C;

  // Clear the rational witness to a primitive integer point with u > 0.
  Int den = lcm(lcm(u.get_den(), v.get_den()), t.get_den());
  Int ui = Int(u * Rat(den)), vi = Int(v * Rat(den)), ti = Int(t * Rat(den));
  Int g = gcd(gcd(ui, vi), ti);
  ui /= g;
  vi /= g;
  ti /= g;
  if (ui < 0) {
    ui = -ui;
    vi = -vi;
    ti = -ti;
  }
  s.witness = ConicPoint{ui, vi, ti};

  ConditionReport rep = check_conditions(s, Int(3));
  if (!rep.core_pass())
    throw std::logic_error("extend: postcondition failed (A3-A5/B1 do not hold on the result)");
  return s;
}

std::vector<std::pair<Rat, Rat>> enumerate_AB(const Sextuple& s0, const Int& B0, long x_lo,
                                              long x_hi) {
  const Int& p = s0.triple.p;
  if (gcd(B0, 2 * p) != 1) throw std::invalid_argument("enumerate_AB: gcd(B0, 2p) != 1");
  std::vector<std::pair<Rat, Rat>> out;
  for (long x = x_lo; x <= x_hi; ++x) {
    Rat B(2 * p * x + B0);
    try {
      extend(s0, Rat(0), B);
    } catch (const std::domain_error&) {
      continue;
    }
    out.emplace_back(Rat(0), B);
  }
  return out;
}

}  // namespace hct
