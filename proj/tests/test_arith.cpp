#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hct/arith.hpp"

using namespace hct;

TEST_CASE("valuation basics") {
  CHECK(valuation(Rat(29), Int(29)) == 1);
  CHECK(valuation(Rat(Int("-12422263806891130444")), Int(31)) == 1);
  CHECK(valuation(make_rat(9, 4), Int(2)) == -2);
  CHECK(valuation(Rat(1), Int(7)) == 0);
  CHECK_THROWS(valuation(Rat(0), Int(5)));
}

TEST_CASE("valuation is additive under multiplication") {
  std::mt19937 rng(20240915);
  std::uniform_int_distribution<long> num(-5000, 5000);
  std::uniform_int_distribution<long> den(1, 5000);
  const Int primes[] = {2, 3, 5, 29, 31};
  for (int i = 0; i < 200; ++i) {
    Rat x = make_rat(num(rng), den(rng));
    Rat y = make_rat(num(rng), den(rng));
    if (x == 0 || y == 0) continue;
    for (const Int& p : primes)
      CHECK(valuation(x * y, p) == valuation(x, p) + valuation(y, p));
  }
}

TEST_CASE("legendre symbol") {
  CHECK(legendre_symbol(2, 5) == -1);
  CHECK(legendre_symbol(3, 29) == -1);
  CHECK(legendre_symbol(1, 7) == 1);
  CHECK(legendre_symbol(1, 29) == 1);
  CHECK(legendre_symbol(29, 29) == 0);
  CHECK_THROWS(legendre_symbol(3, 4));

  // multiplicativity in the first argument
  std::mt19937 rng(1);
  std::uniform_int_distribution<long> d(-200, 200);
  for (int i = 0; i < 300; ++i) {
    Int a = d(rng), b = d(rng);
    CHECK(legendre_symbol(a * b, 29) == legendre_symbol(a, 29) * legendre_symbol(b, 29));
  }
}

TEST_CASE("is_prime matches trial division up to 20000") {
  auto trial = [](long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  };
  for (long n = 0; n < 20000; ++n) CHECK(is_prime(Int(n)) == trial(n));
}

TEST_CASE("is_prime on published constants") {
  CHECK(is_prime(Int(257)));
  CHECK(!is_prime(Int(1)));
  CHECK(is_prime(Int("56956512874397347")));
  CHECK(is_prime(Int("192640746320593")));
  CHECK(!is_prime(Int(25)));
}

TEST_CASE("sqrt_mod") {
  auto r = sqrt_mod(4, 29);
  REQUIRE(r.has_value());
  CHECK(*r == 2);
  CHECK(!sqrt_mod(3, 29).has_value());
  CHECK(sqrt_mod(0, 13) == Int(0));

  std::mt19937 rng(7);
  const Int primes[] = {3, 5, 13, 29, 101, 7919};
  std::uniform_int_distribution<long> d(0, 100000);
  for (int i = 0; i < 200; ++i) {
    for (const Int& p : primes) {
      Int a = Int(d(rng)) % p;
      auto root = sqrt_mod(a, p);
      if (root)
        CHECK((*root * *root) % p == a % p);
      else
        CHECK(legendre_symbol(a, p) == -1);
    }
  }
}

TEST_CASE("factor round-trips and sorts") {
  auto fs = factor(Int(2 * 2 * 3 * 29 * 29 * 257));
  Int back = 1;
  Int prev = 0;
  for (auto& [p, e] : fs) {
    CHECK(is_prime(p));
    CHECK(p > prev);
    prev = p;
    for (unsigned i = 0; i < e; ++i) back *= p;
  }
  CHECK(back == Int(2 * 2 * 3 * 29 * 29 * 257));

  auto big = factor(Int("12422263806891130444"));
  Int prod = 1;
  for (auto& [p, e] : big)
    for (unsigned i = 0; i < e; ++i) prod *= p;
  CHECK(prod == Int("12422263806891130444"));
}

TEST_CASE("modular helpers") {
  CHECK(mod_pow(2, 10, Int(1000)) == 24);
  CHECK(inv_mod(3, 7) == 5);
  CHECK(residue_mod(make_rat(1, 3), Int(7)) == 5);  // 3*5 = 15 = 1 mod 7
  CHECK_THROWS(inv_mod(2, 4));
}

TEST_CASE("rational string round trip") {
  CHECK(to_string(make_rat(-3, 6)) == "-1/2");
  CHECK(to_string(Rat(5)) == "5");
  CHECK(rat_from_string("22/7") == make_rat(22, 7));
  CHECK(rat_from_string("-9") == Rat(-9));
  CHECK(to_string(rat_from_string("45588900213360/1")) == "45588900213360");
}
