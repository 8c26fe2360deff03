#include "doctest.h"
#include "qecc/notation.hpp"
#include "support.hpp"

#include <random>

using namespace qecc;

TEST_CASE("parsing the printed coefficient strings") {
  Field f5 = Field::make(5, 1);
  Poly p = parse_poly("1231", f5);
  CHECK(p.degree() == 3);
  CHECK(p.coeffs() == std::vector<felem>{1, 3, 2, 1}); // x^3+2x^2+3x+1

  Field f17 = Field::make(17, 1);
  Poly q = parse_poly("164B", f17);
  CHECK(q.coeffs() == std::vector<felem>{11, 4, 6, 1}); // x^3+6x^2+4x+11

  CHECK(parse_poly("1", f5) == Poly::one(f5));
  CHECK(parse_poly("0", f5).is_zero());

  Field f9 = Field::make(3, 2);
  Poly r = parse_poly("1w22", f9);
  CHECK(r.degree() == 3);
  CHECK(r.coeffs() == std::vector<felem>{2, 2, f9.w_root(), 1});

  // spaced tokens, as printed in one of the tables
  Field f11 = Field::make(11, 1);
  Poly s = parse_poly("1 6 A15A", f11);
  CHECK(s.degree() == 5);
  CHECK(s.coeffs() == std::vector<felem>{10, 5, 1, 10, 6, 1});

  // w^k tokens, braces tolerated
  CHECK(parse_poly("1w^7", f9).coeff(0) == f9.pow(f9.w_root(), 7));
  CHECK(parse_poly("1w^{7}", f9) == parse_poly("1w^7", f9));
}

TEST_CASE("formatting") {
  Field f5 = Field::make(5, 1);
  CHECK(format_poly(parse_poly("1231", f5)) == "1231");
  CHECK(format_poly(Poly::zero(f5)) == "0");

  Field f13 = Field::make(13, 1);
  Poly p(f13, {11, 1}); // x + 11
  CHECK(format_poly(p) == "1B");

  Field f17 = Field::make(17, 1);
  Poly wide(f17, {12, 1}); // x + 12: no letter past B, so spaced numerals
  CHECK(format_poly(wide) == "1 12");
  CHECK(parse_poly("1 12", f17) == wide);
}

TEST_CASE("round trip on random polynomials") {
  std::mt19937_64 rng(5);
  for (std::uint32_t q : {2u, 3u, 5u, 7u, 9u, 11u, 13u, 17u, 25u}) {
    Field F = Field::of_order(q);
    for (int i = 0; i < 1000; ++i) {
      Poly p = testsupport::random_poly(F, 24, rng);
      CHECK(parse_poly(format_poly(p), F) == p);
    }
  }
}

TEST_CASE("structured errors name the offending token") {
  Field f5 = Field::make(5, 1);
  CHECK_THROWS_AS(parse_poly("1285", f5), NotationError);
  try {
    parse_poly("1285", f5);
  } catch (const NotationError& e) {
    CHECK(e.token() == "8");
  }
  CHECK_THROWS_AS(parse_poly("", f5), NotationError);
  CHECK_THROWS_AS(parse_poly("1w2", f5), NotationError); // w needs an extension field
  Field f9 = Field::make(3, 2);
  CHECK_THROWS_AS(parse_poly("1w^", f9), NotationError);
}
