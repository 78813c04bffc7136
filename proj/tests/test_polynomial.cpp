#include <doctest.h>

#include <random>

#include "nbpoly/polynomial.hpp"
#include "nbpoly/random.hpp"

using nbpoly::Polynomial;
using Coeff = Polynomial::Coeff;

namespace {

Polynomial poly(std::initializer_list<long long> coeffs) {
  std::vector<Coeff> c;
  for (long long v : coeffs) c.emplace_back(v);
  return Polynomial(std::move(c));
}

Polynomial random_poly(std::mt19937_64& rng) {
  const int deg = nbpoly::uniform_int(rng, 0, 6);
  std::vector<Coeff> c;
  for (int i = 0; i <= deg; ++i) c.emplace_back(nbpoly::uniform_int(rng, -9, 9));
  return Polynomial(std::move(c));
}

}  // namespace

TEST_SUITE_BEGIN("polynomial");

TEST_CASE("addition and subtraction") {
  CHECK(poly({1, 2}) + poly({0, 0, 1}) == poly({1, 2, 1}));
  const Polynomial p = poly({3, 0, 7});
  CHECK(p + Polynomial{} == p);
  CHECK(poly({1, 1}) - poly({1, 1}) == Polynomial{});
  CHECK((poly({1, 1}) - poly({1, 1})).coefficients().empty());  // canonical zero
  CHECK((poly({1, 1}) - poly({1, 1})).degree() == -1);
}

TEST_CASE("multiplication") {
  CHECK(poly({1, 1}) * poly({1, 1}) == poly({1, 2, 1}));
  CHECK(poly({4, 5, 6}) * Polynomial{} == Polynomial{});
  CHECK(poly({1, 1}) * poly({1, 2}) == poly({1, 3, 2}));
}

TEST_CASE("binomial_power") {
  CHECK(Polynomial::binomial_power(0) == poly({1}));
  CHECK(Polynomial::binomial_power(3) == poly({1, 3, 3, 1}));

  SUBCASE("matches repeated multiplication") {
    Polynomial acc = Polynomial::one();
    const Polynomial base = poly({1, 1});
    for (int k = 1; k <= 30; ++k) {
      acc = acc * base;
      CHECK(Polynomial::binomial_power(k) == acc);
    }
  }

  SUBCASE("exact far beyond 64-bit coefficients") {
    Polynomial acc = Polynomial::one();
    const Polynomial base = poly({1, 1});
    for (int k = 0; k < 100; ++k) acc = acc * base;
    const Polynomial direct = Polynomial::binomial_power(100);
    CHECK(direct == acc);
    CHECK(direct.coefficient(50) > Coeff("18446744073709551615"));  // > 2^64 - 1
    CHECK(direct.coefficient(50) == Coeff("100891344545564193334812497256"));
  }

  SUBCASE("row sums are powers of two") {
    for (int k = 0; k <= 100; ++k) {
      Coeff expect = Coeff(1) << k;
      CHECK(Polynomial::binomial_power(k).evaluate(1) == expect);
    }
  }
}

TEST_CASE("evaluate") {
  CHECK(poly({1, 3, 1}).evaluate(1) == 5);
  CHECK(poly({42, 17, 3}).evaluate(0) == 42);
  CHECK(Polynomial{}.evaluate(12345) == 0);
  CHECK(poly({1, 2, 3}).evaluate(-2) == Coeff(1 - 4 + 12));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const Polynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Polynomial{});
  }
}

TEST_CASE("monomial and shift") {
  CHECK(Polynomial::monomial(0) == poly({1}));
  CHECK(Polynomial::monomial(2, 5) == poly({0, 0, 5}));
  CHECK(poly({1, 2}).shifted(2) == poly({0, 0, 1, 2}));
  CHECK(Polynomial{}.shifted(3) == Polynomial{});
}

TEST_CASE("text rendering") {
  CHECK(poly({1, 4, 2}).to_string() == "1 + 4*x + 2*x^2");
  CHECK(Polynomial{}.to_string() == "0");
  CHECK(poly({1}).to_string() == "1");
  CHECK(poly({0, 1}).to_string() == "x");
  CHECK(poly({1, 4, 3, 1}).to_string() == "1 + 4*x + 3*x^2 + x^3");
  CHECK(poly({0, -1, 2}).to_string() == "-x + 2*x^2");
  CHECK(poly({5, 0, -3}).to_string() == "5 - 3*x^2");
}

TEST_CASE("decimal strings index by degree") {
  auto strings = poly({1, 0, 12}).to_decimal_strings();
  REQUIRE(strings.size() == 3);
  CHECK(strings[0] == "1");
  CHECK(strings[1] == "0");
  CHECK(strings[2] == "12");
  CHECK(Polynomial{}.to_decimal_strings().empty());
}

TEST_SUITE_END();
