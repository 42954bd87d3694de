#include "hct/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace hct {

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(const Rat& coeff, unsigned degree) {
  Poly p;
  if (coeff != 0) {
    p.c_.assign(degree + 1, Rat(0));
    p.c_[degree] = coeff;
  }
  return p;
}

Rat Poly::leading() const {
  if (c_.empty()) throw std::logic_error("leading() of zero polynomial");
  return c_.back();
}

Rat Poly::operator()(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::derivative() const {
  Poly d;
  for (size_t i = 1; i < c_.size(); ++i) d.c_.push_back(c_[i] * static_cast<long>(i));
  d.trim();
  return d;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.c_.resize(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r.c_[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
  r.trim();
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (Rat& x : r.c_) x = -x;
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (c_.empty() || o.c_.empty()) return Poly();
  Poly r;
  r.c_.assign(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  r.trim();
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw std::invalid_argument("polynomial division by zero");
  Poly q, r = *this;
  while (!r.is_zero() && r.degree() >= d.degree()) {
    unsigned k = static_cast<unsigned>(r.degree() - d.degree());
    Poly t = monomial(r.leading() / d.leading(), k);
    q = q + t;
    r = r - t * d;
  }
  return {q, r};
}

Poly Poly::compose(const Poly& g) const {
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + constant(*it);
  return acc;
}

std::string Poly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const Rat& a = c_[i];
    if (a == 0) continue;
    if (!first) os << (a > 0 ? " + " : " - ");
    else if (a < 0) os << "-";
    first = false;
    Rat mag = abs(a);
    bool unit = (mag == 1) && i > 0;
    if (!unit) os << to_string(mag);
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  // Normalize monic.
  Poly m;
  std::vector<Rat> cs = a.coeffs();
  Rat lead = cs.back();
  for (Rat& c : cs) c /= lead;
  return Poly(std::move(cs));
}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
  canonicalize();
}

RationalFunction RationalFunction::constant(const Rat& c) {
  return RationalFunction(Poly::constant(c), Poly::constant(1));
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(1);
    return;
  }
  Poly g = poly_gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  // Clear to integer coefficients with a single scaling of the pair, then
  // divide out the joint content and fix the denominator's leading sign.
  Int den_lcm(1);
  for (const Rat& c : num_.coeffs()) den_lcm = lcm(den_lcm, c.get_den());
  for (const Rat& c : den_.coeffs()) den_lcm = lcm(den_lcm, c.get_den());
  Int content(0);
  auto scan = [&](const Poly& p) {
    for (const Rat& c : p.coeffs()) content = gcd(content, Int(c * Rat(den_lcm)));
  };
  scan(num_);
  scan(den_);
  Rat scale = Rat(den_lcm) / Rat(content);
  if (den_.leading() * scale < 0) scale = -scale;
  num_ = num_ * Poly::constant(scale);
  den_ = den_ * Poly::constant(scale);
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const {
  if (o.is_zero()) throw std::invalid_argument("division by zero rational function");
  return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

std::optional<Rat> RationalFunction::evaluate(const Rat& x) const {
  Rat d = den_(x);
  if (d == 0) return std::nullopt;
  return num_(x) / d;
}

RationalFunction compose_poly(const Poly& f, const RationalFunction& g) {
  RationalFunction acc = RationalFunction::constant(0);
  const auto& cs = f.coeffs();
  for (auto it = cs.rbegin(); it != cs.rend(); ++it)
    acc = acc * g + RationalFunction::constant(*it);
  return acc;
}

RationalFunction RationalFunction::compose(const RationalFunction& g) const {
  RationalFunction n = compose_poly(num_, g);
  RationalFunction d = compose_poly(den_, g);
  return n / d;
}

std::string RationalFunction::str(const std::string& var) const {
  if (den_ == Poly::constant(1)) return num_.str(var);
  return "(" + num_.str(var) + ") / (" + den_.str(var) + ")";
}

std::vector<Rat> rational_roots(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("rational_roots of the zero polynomial");
  long d = f.degree();
  if (d == 0) return {};
  if (d == 1) return {-f.coeff(0) / f.coeff(1)};
  if (d == 2) {
    Rat a = f.coeff(2), b = f.coeff(1), c = f.coeff(0);
    Rat disc = b * b - 4 * a * c;
    if (disc < 0) return {};
    Int dn = disc.get_num(), dd = disc.get_den();
    if (mpz_perfect_square_p(dn.get_mpz_t()) == 0 || mpz_perfect_square_p(dd.get_mpz_t()) == 0)
      return {};
    Rat s(sqrt(dn), sqrt(dd));
    s.canonicalize();
    if (s == 0) return {-b / (2 * a)};
    Rat r1 = (-b - s) / (2 * a), r2 = (-b + s) / (2 * a);
    return r1 < r2 ? std::vector<Rat>{r1, r2} : std::vector<Rat>{r2, r1};
  }
  throw std::domain_error("rational_roots: degree > 2 not supported");
}

}  // namespace hct
