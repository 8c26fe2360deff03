#include "doctest.h"
#include "qecc/notation.hpp"
#include "qecc/poly.hpp"
#include "support.hpp"

#include <random>
#include <set>

using namespace qecc;

TEST_CASE("ring arithmetic basics") {
  Field f2 = Field::make(2, 1);
  Poly xp1 = parse_poly("11", f2);
  CHECK(xp1 * xp1 == parse_poly("101", f2)); // (x+1)^2 = x^2+1 in char 2

  Field f11 = Field::make(11, 1);
  Poly mod = Poly::x_pow_minus(f11, 19, 1);
  Poly cubic = parse_poly("19AA", f11); // x^3+9x^2+10x+10
  auto [quo, rem] = mod.divmod(cubic);
  CHECK(rem.is_zero());
  CHECK(quo * cubic == mod);

  Poly f = parse_poly("23", f11);
  CHECK(gcd(f, Poly::zero(f11)) == f.monic());
  CHECK_THROWS_AS(f.divmod(Poly::zero(f11)), std::invalid_argument);
}

TEST_CASE("derivative and evaluation") {
  Field f5 = Field::make(5, 1);
  Poly p = parse_poly("1231", f5); // x^3+2x^2+3x+1
  CHECK(p.derivative() == parse_poly("343", f5)); // 3x^2+4x+3
  CHECK(p.eval(1) == 2);
  CHECK(p.eval(0) == 1);
}

TEST_CASE("factorization of x^19-1 over GF(11)") {
  Field f11 = Field::make(11, 1);
  auto fact = factorize(Poly::x_pow_minus(f11, 19, 1), 42);
  REQUIRE(fact.factors.size() == 7);
  std::set<std::string> got;
  for (const auto& [p, e] : fact.factors) {
    CHECK(e == 1);
    got.insert(format_poly(p));
  }
  std::set<std::string> expected{"1A", "112A", "128A", "136A", "139A", "158A", "19AA"};
  CHECK(got == expected);
}

TEST_CASE("factorization edge cases") {
  Field f3 = Field::make(3, 1);
  // x^4-1 = (x+1)(x+2)(x^2+1): 0,1,2 exhaust the roots and leave the quadratic
  auto fact = factorize(Poly::x_pow_minus(f3, 4, 1), 0);
  REQUIRE(fact.factors.size() == 3);
  CHECK(format_poly(fact.factors[0].first) == "11");
  CHECK(format_poly(fact.factors[1].first) == "12");
  CHECK(format_poly(fact.factors[2].first) == "101");

  Poly irr = parse_poly("101", f3); // x^2+1, irreducible over GF(3)
  CHECK(is_irreducible(irr));
  auto f2 = factorize(irr, 9);
  REQUIRE(f2.factors.size() == 1);
  CHECK(f2.factors[0].first == irr);
  CHECK(f2.factors[0].second == 1);

  // repeated roots in characteristic p: x^24-1 = (x^8-1)^3 over GF(9)
  Field f9 = Field::make(3, 2);
  auto f3x = factorize(Poly::x_pow_minus(f9, 24, 1), 7);
  CHECK(f3x.factors.size() == 8);
  for (const auto& [p, e] : f3x.factors) {
    CHECK(p.degree() == 1);
    CHECK(e == 3);
  }
  CHECK(f3x.multiply_back() == Poly::x_pow_minus(f9, 24, 1));
}

TEST_CASE("factorize round-trips on random inputs") {
  std::mt19937_64 rng(2024);
  int runs = 0;
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 9u, 11u, 13u}) {
    Field F = Field::of_order(q);
    for (int i = 0; i < 63; ++i) {
      Poly p = testsupport::random_poly(F, 60, rng);
      if (p.degree() < 1) continue;
      auto fact = factorize(p, rng());
      CHECK(fact.multiply_back() == p);
      for (const auto& [f, e] : fact.factors) {
        CHECK(e >= 1);
        CHECK(f.is_monic());
        CHECK(is_irreducible(f));
        // f | x^(q^deg f) - x
        Poly frob = Poly::x(F) % f;
        for (int r = 0; r < f.degree(); ++r) frob = pow_mod(frob, q, f);
        CHECK((frob - (Poly::x(F) % f)).is_zero());
        // squarefree within its own part
        CHECK(gcd(f, f.derivative()).degree() == 0);
      }
      ++runs;
    }
  }
  CHECK(runs >= 500 - 24); // a few degree-0 draws get skipped
}

TEST_CASE("factor list does not depend on the seed") {
  Field f7 = Field::make(7, 1);
  Poly p = Poly::x_pow_minus(f7, 30, 1);
  auto a = factorize(p, 1);
  auto b = factorize(p, 99999);
  REQUIRE(a.factors.size() == b.factors.size());
  for (size_t i = 0; i < a.factors.size(); ++i) {
    CHECK(a.factors[i].first == b.factors[i].first);
    CHECK(a.factors[i].second == b.factors[i].second);
  }
}

TEST_CASE("divisor enumeration") {
  Field f3 = Field::make(3, 1);
  DivisorSeq divs(factorize(Poly::x_pow_minus(f3, 4, 1), 0));
  CHECK(divs.count() == 8);
  std::set<std::string> seen;
  Poly mod = Poly::x_pow_minus(f3, 4, 1);
  for (std::uint64_t i = 0; i < divs.count(); ++i) {
    Poly d = divs.at(i);
    CHECK(d.is_monic());
    CHECK((mod % d).is_zero());
    CHECK(seen.insert(format_poly(d)).second); // no duplicates
  }

  Field f11 = Field::make(11, 1);
  DivisorSeq d19(factorize(Poly::x_pow_minus(f11, 19, 1), 0));
  CHECK(d19.count() == 128);

  Field f2 = Field::make(2, 1);
  DivisorSeq irr(factorize(parse_poly("1011", f2), 0)); // x^3+x+1 irreducible
  CHECK(irr.count() == 2);
  CHECK(irr.at(0).degree() == 0);
  CHECK(irr.at(1).degree() == 3);
}

TEST_CASE("canonical order") {
  Field f11 = Field::make(11, 1);
  CHECK(canonical_less(parse_poly("1A", f11), parse_poly("112A", f11))); // degree first
  CHECK(canonical_less(parse_poly("112A", f11), parse_poly("128A", f11)));
  CHECK(!canonical_less(parse_poly("19AA", f11), parse_poly("136A", f11)));
}
