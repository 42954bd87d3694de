#pragma once

// Dense univariate polynomials over Q and rational functions in canonical
// form (coprime integer numerator/denominator, joint content 1, positive
// denominator leading coefficient).

#include <optional>
#include <string>
#include <vector>

#include "hct/arith.hpp"

namespace hct {

class Poly {
 public:
  Poly() = default;
  Poly(std::initializer_list<Rat> ascending) : c_(ascending) { trim(); }
  explicit Poly(std::vector<Rat> ascending) : c_(std::move(ascending)) { trim(); }
  static Poly monomial(const Rat& coeff, unsigned degree);
  static Poly constant(const Rat& c) { return monomial(c, 0); }

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for 0
  Rat coeff(unsigned i) const { return i < c_.size() ? c_[i] : Rat(0); }
  Rat leading() const;
  const std::vector<Rat>& coeffs() const { return c_; }

  Rat operator()(const Rat& x) const;
  Poly derivative() const;

  Poly operator+(const Poly&) const;
  Poly operator-(const Poly&) const;
  Poly operator*(const Poly&) const;
  Poly operator-() const;
  bool operator==(const Poly&) const = default;

  // Euclidean division: *this = q * d + r with deg r < deg d.
  std::pair<Poly, Poly> divmod(const Poly& d) const;

  // Substitute g for the variable.
  Poly compose(const Poly& g) const;

  std::string str(const std::string& var = "T") const;

 private:
  void trim();
  std::vector<Rat> c_;  // ascending, no trailing zeros
};

// Monic gcd over Q (1 for coprime inputs, 0 iff both zero).
Poly poly_gcd(Poly a, Poly b);

class RationalFunction {
 public:
  RationalFunction() : num_(Poly::constant(0)), den_(Poly::constant(1)) {}
  RationalFunction(Poly num, Poly den);
  static RationalFunction constant(const Rat& c);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction&) const;
  RationalFunction operator-(const RationalFunction&) const;
  RationalFunction operator*(const RationalFunction&) const;
  RationalFunction operator/(const RationalFunction&) const;
  RationalFunction operator-() const;
  bool operator==(const RationalFunction&) const = default;

  // nullopt when the denominator vanishes at x.
  std::optional<Rat> evaluate(const Rat& x) const;

  // (*this) o g, i.e. substitute g for the variable.
  RationalFunction compose(const RationalFunction& g) const;

  std::string str(const std::string& var = "T") const;

 private:
  void canonicalize();
  Poly num_, den_;
};

// Substitute an RF into a polynomial.
RationalFunction compose_poly(const Poly& f, const RationalFunction& g);

// All rational roots of f, exactly; currently supports deg f <= 2 (throws
// beyond, which none of the library's callers require).
std::vector<Rat> rational_roots(const Poly& f);

}  // namespace hct
