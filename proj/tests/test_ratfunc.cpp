#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hct/family.hpp"
#include "hct/poly.hpp"

using namespace hct;

namespace {

Poly int_poly(std::initializer_list<const char*> ascending) {
  std::vector<Rat> c;
  for (const char* s : ascending) c.emplace_back(Int(s));
  return Poly(std::move(c));
}

Rat sample_rat(std::mt19937& rng) {
  std::uniform_int_distribution<long> num(-500, 500);
  std::uniform_int_distribution<long> den(1, 60);
  return make_rat(num(rng), den(rng));
}

}  // namespace

TEST_CASE("evaluate") {
  RationalFunction gamma1 = build_gamma(0, 31, 5, 3);
  CHECK(gamma1.evaluate(0) == make_rat(-961, 75));

  RationalFunction f1(int_poly({"98", "0", "1"}), int_poly({"-18", "0", "1"}));
  CHECK(f1.evaluate(0) == make_rat(-49, 9));

  RationalFunction c = RationalFunction::constant(make_rat(5, 7));
  CHECK(c.evaluate(123) == make_rat(5, 7));
  CHECK(c.evaluate(make_rat(-2, 9)) == make_rat(5, 7));

  // pole
  CHECK(!RationalFunction(int_poly({"1"}), int_poly({"-1", "1"})).evaluate(1).has_value());
}

TEST_CASE("canonical form") {
  // common polynomial factor, content, and denominator sign all normalize
  RationalFunction a(int_poly({"-2", "0", "2"}), int_poly({"-2", "-2"}));
  CHECK(a.num() == int_poly({"1", "-1"}));
  CHECK(a.den() == int_poly({"1"}));

  RationalFunction b(Poly{make_rat(1, 2), make_rat(3, 4)}, Poly{make_rat(-5, 6)});
  CHECK(b.den().leading() > 0);
  RationalFunction again(b.num(), b.den());
  CHECK(again == b);  // idempotent
}

TEST_CASE("compose") {
  RationalFunction id(int_poly({"0", "1"}), int_poly({"1"}));
  auto ff1 = build_family_functions(1);
  CHECK(ff1.D.compose(id) == ff1.D);

  std::mt19937 rng(20240915);
  for (int i = 0; i < 30; ++i) {
    Rat t = sample_rat(rng);
    auto inner = ff1.Gamma.evaluate(t);
    if (!inner) continue;
    auto lhs = ff1.D_star_composed.evaluate(t);
    auto rhs = ff1.D_star.evaluate(*inner);
    REQUIRE(lhs.has_value());
    REQUIRE(rhs.has_value());
    CHECK(*lhs == *rhs);
  }
}

TEST_CASE("compose reproduces the printed quartic ratios") {
  auto ff1 = build_family_functions(1);
  RationalFunction d1_printed(
      int_poly({"14770814323798008", "0", "-1641200890885920", "0", "45588894173298"}),
      int_poly({"-1774606555105302716", "0", "197178506122812676", "0", "-5477180725633679"}));
  CHECK(ff1.D == d1_printed);
  CHECK(ff1.D == ff1.C.compose(ff1.F));
  CHECK(ff1.D_star == RationalFunction::constant(7) + RationalFunction::constant(1682) * ff1.D);

  auto ff2 = build_family_functions(2);
  RationalFunction d2_printed(
      int_poly({"-20859235062503544", "0", "2317693623118880", "0", "-64380401708754"}),
      int_poly({"131899454209147204", "0", "-14655494912126204", "0", "407097080892401"}));
  CHECK(ff2.D == d2_printed);
}

TEST_CASE("build_avoidance_F") {
  auto ff1 = build_family_functions(1);
  RationalFunction f_expected(int_poly({"98", "0", "1"}), int_poly({"-18", "0", "1"}));
  CHECK(ff1.F == f_expected);
  CHECK(build_family_functions(2).F == f_expected);

  // S = {3}, G with empty zero/pole set
  RationalFunction g(int_poly({"5"}), int_poly({"7"}));
  RationalFunction f = build_avoidance_F({Int(3)}, g);
  std::mt19937 rng(5);
  for (int i = 0; i < 100; ++i) {
    auto val = f.evaluate(sample_rat(rng));
    if (!val || *val == 0) continue;
    CHECK(valuation(*val, Int(3)) == 0);
  }
}

TEST_CASE("build_gamma") {
  CHECK(build_gamma(0, 31, 5, 3) ==
        RationalFunction(int_poly({"961"}), int_poly({"-75", "0", "1"})));
  CHECK(build_gamma(0, 11, 3, 7) ==
        RationalFunction(int_poly({"121"}), int_poly({"-63", "0", "1"})));
  CHECK(build_gamma(5, 7, 3, 3) ==
        RationalFunction(int_poly({"-86", "0", "5"}), int_poly({"-27", "0", "1"})));
  CHECK_THROWS(build_gamma(0, 31, 5, 2));  // 2 = 8^2 mod 31 is a residue

  // Gamma(t) lands in t0 + q^2 Z_q
  auto gamma = build_gamma(5, 7, 3, 3);
  std::mt19937 rng(9);
  for (int i = 0; i < 100; ++i) {
    auto val = gamma.evaluate(sample_rat(rng));
    if (!val) continue;
    CHECK(valuation(*val - 5, Int(7)) >= 2);
  }
}

TEST_CASE("check_D_hypotheses") {
  auto ff1 = build_family_functions(1);
  CHECK(check_D_hypotheses(ff1.D_star, 0, 31));
  auto ff2 = build_family_functions(2);
  CHECK(check_D_hypotheses(ff2.D_star, 0, 11));
  RationalFunction d(int_poly({"1", "0", "0", "0", "1"}), int_poly({"2", "0", "0", "0", "1"}));
  CHECK(!check_D_hypotheses(d, 0, 5));
}

TEST_CASE("valuation law of the composed functions") {
  auto ff1 = build_family_functions(1);
  auto ff2 = build_family_functions(2);
  std::mt19937 rng(20240915);
  int done = 0;
  while (done < 100) {
    Rat t = sample_rat(rng);
    auto v1 = ff1.D_star_composed.evaluate(t);
    auto v2 = ff2.D_star_composed.evaluate(t);
    if (!v1 || !v2 || *v1 == 0 || *v2 == 0) continue;
    CHECK(valuation(*v1, Int(31)) == 1);
    CHECK(valuation(*v2, Int(11)) == 1);
    // the avoidance functions stay unit at 2 and 29
    auto f1 = ff1.F.compose(ff1.Gamma).evaluate(t);
    REQUIRE(f1.has_value());
    CHECK(valuation(*f1, Int(2)) == 0);
    CHECK(valuation(*f1, Int(29)) == 0);
    ++done;
  }
}

TEST_CASE("sigma polynomials spot checks") {
  auto ff1 = build_family_functions(1);
  CHECK(ff1.D_star_composed.num().coeff(8) == Rat(Int("-12422263806891130444")));
  CHECK(ff1.D_star_composed.num().coeff(0) == Rat(Int("-25922975674046723162225380003")));
  CHECK(ff1.D_star_composed.den().coeff(8) == Rat(Int("1774606555105302716")));
  auto ff2 = build_family_functions(2);
  CHECK(ff2.D_star_composed.den().coeff(0) == Rat(Int("1313439132893945928914009")));
  CHECK(ff2.D_star_composed.num().coeff(8) == Rat(Int("-17542605965314382876")));
}

TEST_CASE("poly building blocks") {
  Poly f = int_poly({"-1", "0", "1"});
  Poly g = int_poly({"1", "1"});
  auto [q, r] = f.divmod(g);
  CHECK(q * g + r == f);
  CHECK(r.degree() < g.degree());
  CHECK(poly_gcd(f, g) == int_poly({"1", "1"}));
  CHECK(f.derivative() == int_poly({"0", "2"}));
  CHECK(f.compose(g) == int_poly({"0", "2", "1"}));

  auto roots = rational_roots(f);
  REQUIRE(roots.size() == 2);
  CHECK(f(roots[0]) == 0);
  CHECK(f(roots[1]) == 0);
  CHECK(rational_roots(int_poly({"2", "0", "1"})).empty());
}
