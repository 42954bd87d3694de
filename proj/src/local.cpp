#include "hct/local.hpp"

#include <set>
#include <stdexcept>

namespace hct {

Place Place::finite(const Int& p) {
  if (!is_prime(p)) throw std::invalid_argument("Place::finite: not a prime: " + p.get_str());
  Place v;
  v.p_ = p;
  return v;
}

const Int& Place::prime() const {
  if (!p_) throw std::logic_error("prime() on the infinite place");
  return *p_;
}

namespace {

// a = p^alpha u with u a p-adic unit; returns (alpha, u).
std::pair<long, Rat> split_unit(const Rat& a, const Int& p) {
  long alpha = valuation(a, p);
  Rat pr(p);
  Rat u = a;
  if (alpha > 0)
    for (long i = 0; i < alpha; ++i) u /= pr;
  else
    for (long i = 0; i < -alpha; ++i) u *= pr;
  return {alpha, u};
}

int eps2(const Int& u) {  // (u-1)/2 mod 2, u odd
  Int r = ((u - 1) / 2) % 2;
  return r < 0 ? static_cast<int>(Int(r + 2).get_si()) : static_cast<int>(r.get_si());
}

int omega2(const Int& u) {  // (u^2-1)/8 mod 2, u odd
  Int r = ((u * u - 1) / 8) % 2;
  return static_cast<int>(r.get_si());
}

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, const Place& v) {
  if (a == 0 || b == 0) throw std::invalid_argument("hilbert_symbol: zero argument");
  if (v.is_infinite()) return (a < 0 && b < 0) ? -1 : 1;
  const Int& p = v.prime();
  auto [alpha, u] = split_unit(a, p);
  auto [beta, w] = split_unit(b, p);
  if (p == 2) {
    Int uu = residue_mod(u, Int(16));
    Int ww = residue_mod(w, Int(16));
    int e = eps2(uu) * eps2(ww) + (alpha % 2) * omega2(ww) + (beta % 2) * omega2(uu);
    return (e % 2) ? -1 : 1;
  }
  Int ur = residue_mod(u, p);
  Int wr = residue_mod(w, p);
  int sign = 1;
  if ((alpha % 2) && (beta % 2) && ((p - 1) / 2) % 2 == 1) sign = -sign;
  if (beta % 2) sign *= legendre_symbol(ur, p);
  if (alpha % 2) sign *= legendre_symbol(wr, p);
  return sign;
}

std::vector<Place> hilbert_support(const Rat& a, const Rat& b) {
  std::set<Int> primes{Int(2)};
  for (const Rat* x : {&a, &b}) {
    for (const Int* part : {&x->get_num(), &x->get_den()}) {
      Int n = abs(*part);
      for (auto& [q, e] : factor(n))
        if (q != 2) primes.insert(q);
    }
  }
  std::vector<Place> out{Place::infinite()};
  for (const Int& q : primes) out.push_back(Place::finite(q));
  return out;
}

bool hilbert_product_check(const Rat& a, const Rat& b) {
  int prod = 1;
  for (const Place& v : hilbert_support(a, b)) prod *= hilbert_symbol(a, b, v);
  return prod == 1;
}

bool is_local_square(const Rat& a, const Place& v) {
  if (a == 0) throw std::invalid_argument("is_local_square: zero");
  if (v.is_infinite()) return a > 0;
  const Int& p = v.prime();
  auto [alpha, u] = split_unit(a, p);
  if (alpha % 2) return false;
  if (p == 2) return residue_mod(u, Int(8)) == 1;
  return legendre_symbol(residue_mod(u, p), p) == 1;
}

bool is_local_norm(const Rat& a, const Int& p, const Place& v) {
  return hilbert_symbol(a, Rat(p), v) == 1;
}

Rat MultiPoly::evaluate(const std::vector<Rat>& point) const {
  if (point.size() != nvars) throw std::invalid_argument("MultiPoly::evaluate: arity mismatch");
  Rat acc = 0;
  for (const Term& t : terms) {
    Rat m = t.coeff;
    for (unsigned i = 0; i < nvars; ++i)
      for (unsigned e = 0; e < t.exps[i]; ++e) m *= point[i];
    acc += m;
  }
  return acc;
}

MultiPoly MultiPoly::derivative(unsigned var) const {
  MultiPoly d;
  d.nvars = nvars;
  for (const Term& t : terms) {
    if (t.exps[var] == 0) continue;
    Term s = t;
    s.coeff *= static_cast<long>(t.exps[var]);
    s.exps[var] -= 1;
    d.terms.push_back(std::move(s));
  }
  return d;
}

namespace {

void require_integral(const Rat& x, const Int& p, const char* what) {
  if (x != 0 && valuation(x, p) < 0)
    throw std::invalid_argument(std::string("hensel: ") + what + " not p-integral");
}

// v_p(x), nullopt for x = 0.
std::optional<long> val_or_inf(const Rat& x, const Int& p) {
  if (x == 0) return std::nullopt;
  return valuation(x, p);
}

}  // namespace

HenselCertificate hensel_certificate(const HenselSystem& s) {
  for (const auto& t : s.F.terms) require_integral(t.coeff, s.p, "coefficient");
  for (const auto& c : s.point) require_integral(c, s.p, "point coordinate");
  if (s.variable_index >= s.F.nvars) throw std::invalid_argument("hensel: bad variable index");

  Rat fval = s.F.evaluate(s.point);
  Rat dval = s.F.derivative(s.variable_index).evaluate(s.point);

  HenselCertificate cert;
  cert.prime = s.p;
  cert.delta = s.delta;
  cert.point = s.point;
  Int mod;
  mpz_pow_ui(mod.get_mpz_t(), s.p.get_mpz_t(), 2 * s.delta + 1);
  cert.modulus = mod;
  cert.F_value_valuation = val_or_inf(fval, s.p);
  auto dv = val_or_inf(dval, s.p);
  cert.derivative_valuation = dv ? *dv : -1;
  bool f_ok = !cert.F_value_valuation || *cert.F_value_valuation >= 2 * (long)s.delta + 1;
  bool d_ok = dv && *dv == (long)s.delta;
  cert.verified = f_ok && d_ok;
  return cert;
}

bool hensel_verify(const HenselSystem& s) { return hensel_certificate(s).verified; }

namespace {

Rat poly_eval(const std::vector<Rat>& f, const Rat& x) {
  Rat acc = 0;
  for (auto it = f.rbegin(); it != f.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::vector<Rat> poly_deriv(const std::vector<Rat>& f) {
  std::vector<Rat> d;
  for (size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * static_cast<long>(i));
  return d;
}

}  // namespace

Int hensel_lift(const std::vector<Rat>& f, const Rat& x0, const Int& p, unsigned precision) {
  for (const Rat& c : f) require_integral(c, p, "coefficient");
  require_integral(x0, p, "point");
  if (precision == 0) throw std::invalid_argument("hensel_lift: precision must be positive");

  std::vector<Rat> df = poly_deriv(f);
  Rat dv = poly_eval(df, x0);
  if (dv == 0) throw std::domain_error("not Hensel-liftable at given point");
  long delta = valuation(dv, p);
  Rat fv = poly_eval(f, x0);
  if (fv != 0 && valuation(fv, p) < 2 * delta + 1)
    throw std::domain_error("not Hensel-liftable at given point");

  // Work mod p^M with enough headroom that the quadratic convergence of
  // Newton's iteration (gain of one p-adic digit per step past delta) reaches
  // the requested precision.
  unsigned M = precision + 2 * static_cast<unsigned>(delta) + 2;
  Int pM;
  mpz_pow_ui(pM.get_mpz_t(), p.get_mpz_t(), M);

  Int x = residue_mod(x0, pM);
  // Iterate until f(x) vanishes mod p^{precision + delta} (then x is a true
  // root mod p^precision of the lifted branch).
  for (unsigned iter = 0; iter < 4 * M + 8; ++iter) {
    Rat fx_r = poly_eval(f, Rat(x));
    Int fx = residue_mod(fx_r, pM);
    Int target;
    mpz_pow_ui(target.get_mpz_t(), p.get_mpz_t(), precision + static_cast<unsigned>(delta));
    if (fx % target == 0) break;
    Rat dfx_r = poly_eval(df, Rat(x));
    Int dfx = residue_mod(dfx_r, pM);
    // dfx = p^delta * unit; divide the update by p^delta exactly.
    Int pd;
    mpz_pow_ui(pd.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned>(delta));
    if (fx % (pd * pd) != 0)
      throw std::domain_error("hensel_lift: iteration left the convergence basin");
    Int unit = dfx / pd;
    Int step = (fx / pd) * inv_mod(unit, pM);
    x = residue_mod(Rat(x - step), pM);
  }
  Int pprec;
  mpz_pow_ui(pprec.get_mpz_t(), p.get_mpz_t(), precision);
  Rat check = poly_eval(f, Rat(x % pprec));
  if (check != 0 && valuation(check, p) < (long)precision)
    throw std::runtime_error("hensel_lift: lift failed to converge");
  return x % pprec;
}

}  // namespace hct
