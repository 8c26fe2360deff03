#include "doctest.h"
#include "qecc/notation.hpp"
#include "qecc/quantum.hpp"
#include "support.hpp"

using namespace qecc;

TEST_CASE("css construction") {
  Field f11 = Field::make(11, 1);
  LinearCode c = cyclic_code(19, parse_poly("19AA", f11));
  QuantumParams p = css(c, c);
  CHECK(p.n == 19);
  CHECK(p.k == 13);
  CHECK(p.d.value() == 3);
  CHECK(p.q == 11);
  CHECK(p.to_string() == "[[19,13,3]]_11");

  // full space: dual is the zero code, so any C1 works
  Field f5 = Field::make(5, 1);
  LinearCode full = LinearCode::full_space(f5, 8);
  QuantumParams pf = css(full, full);
  CHECK(pf.k == 8);
  CHECK(pf.d.value() == 1);

  // binary Hamming code: dual-containment checked by rank computation
  Field f2 = Field::make(2, 1);
  LinearCode ham = cyclic_code(7, parse_poly("1011", f2));
  LinearCode hd = dual(ham);
  CHECK(code_sum(ham, hd).dim() == ham.dim()); // rank argument: C + C^perp = C
  QuantumParams ph = css(ham, ham);
  CHECK(ph.k == 1);
  CHECK(ph.d.value() == 3);

  // violated containment is the defining precondition
  LinearCode rep = LinearCode::from_rows(f2, 7, {std::vector<felem>(7, 1)});
  CHECK_THROWS_AS(css(rep, rep), std::invalid_argument);
}

TEST_CASE("css from a dual-containing code") {
  Field f7 = Field::make(7, 1);
  QuantumParams p1 = css_dual_containing(cyclic_code(6, parse_poly("156", f7)));
  CHECK(p1.to_string() == "[[6,2,3]]_7");

  Field f17 = Field::make(17, 1);
  QuantumParams p2 = css_dual_containing(cyclic_code(16, parse_poly("164B", f17)));
  CHECK(p2.to_string() == "[[16,10,4]]_17");

  // self-dual ingredient: k = 0
  Field f2 = Field::make(2, 1);
  LinearCode sd = LinearCode::from_rows(f2, 2, {{1, 1}});
  QuantumParams p3 = css_dual_containing(sd);
  CHECK(p3.k == 0);
  CHECK(p3.d.value() == 2);

  CHECK_THROWS_AS(css_dual_containing(dual(cyclic_code(6, parse_poly("156", f7)))),
                  std::invalid_argument);
}

TEST_CASE("css_dual_containing agrees with css(C, C)") {
  Field f11 = Field::make(11, 1);
  for (const char* gs : {"19AA", "1A"}) {
    LinearCode c = cyclic_code(19, parse_poly(gs, f11));
    if (!code_contains(c, dual(c))) continue;
    QuantumParams a = css(c, c);
    QuantumParams b = css_dual_containing(c);
    CHECK(a.same_params(b));
  }
}

TEST_CASE("stabilizer extension on tiny codes, brute-forced") {
  Field f4 = Field::make(2, 2);
  // C = <(1,1)>: Hermitian self-orthogonal, so e = 0 and C^perpH = C (self-dual)
  LinearCode c = LinearCode::from_rows(f4, 2, {{1, 1}});
  QuantumParams p = lisonek_singh(c);
  CHECK(p.e.value() == 0);
  CHECK(p.n == 2);
  CHECK(p.k == 0);
  CHECK(p.d.value() == 2); // d(C^perpH) for the self-dual case
  CHECK(p.q == 4);

  // C = <(1,0)>: hull is trivial, e = 1
  LinearCode c2 = LinearCode::from_rows(f4, 2, {{1, 0}});
  LinearCode h2 = hull(c2, DualKind::hermitian);
  CHECK(h2.dim() == 0);
  QuantumParams p2 = lisonek_singh(c2);
  CHECK(p2.e.value() == 1);
  CHECK(p2.n == 3);
  CHECK(p2.k == 1);
  CHECK(p2.k == (long long)2 - 2 * 1 + 1);
  // wgt(C^perpH \ 0) = d([2,1] dual) computed by the excluded-weight path
  auto ch = dual(c2, DualKind::hermitian);
  auto w1 = min_weight_excluding(ch, LinearCode::zero_code(f4, 2));
  CHECK(w1.computed);
  CHECK(p2.d.hi == w1.weight);

  CHECK_THROWS_AS(lisonek_singh(LinearCode::zero_code(f4, 2)), std::invalid_argument);
  Field f3 = Field::make(3, 1);
  CHECK_THROWS_AS(lisonek_singh(LinearCode::full_space(f3, 2)), std::invalid_argument);
}

TEST_CASE("symplectic weight") {
  CHECK(symplectic_weight({1, 1, 0, 0, 1, 1}) == 3);
  CHECK(symplectic_weight({0, 0, 0, 0}) == 0);
  CHECK(symplectic_weight({1, 0, 1, 0}) == 1);
  CHECK_THROWS_AS(symplectic_weight({1, 0, 1}), std::invalid_argument);
}

TEST_CASE("better_than order") {
  auto qp = [](std::size_t n, long long k, int d, std::uint32_t q) {
    QuantumParams p;
    p.n = n;
    p.k = k;
    p.d = DistanceStatus::exact(d);
    p.q = q;
    return p;
  };
  CHECK(better_than(qp(12, 10, 2, 5), qp(12, 9, 2, 5)));
  CHECK(better_than(qp(60, 56, 2, 5), qp(60, 54, 2, 5)));
  CHECK(!better_than(qp(12, 10, 2, 5), qp(12, 10, 2, 5))); // irreflexive
  CHECK(!better_than(qp(12, 9, 2, 5), qp(12, 10, 2, 5)));  // asymmetric
  CHECK(!better_than(qp(12, 10, 2, 5), qp(12, 9, 2, 7)));  // alphabets differ
  CHECK(!better_than(qp(12, 10, 2, 5), qp(13, 9, 2, 5)));  // lengths differ
  CHECK(!better_than(qp(12, 10, 3, 5), qp(12, 9, 2, 5)));  // k and d both move

  QuantumParams loose = qp(10, 2, 2, 5);
  loose.d = DistanceStatus::bounds(2, 3);
  CHECK_THROWS_AS(better_than(loose, qp(10, 2, 2, 5)), std::invalid_argument);

  // asymmetry over a small sample
  std::vector<QuantumParams> sample{qp(12, 10, 2, 5), qp(12, 9, 2, 5), qp(12, 9, 3, 5),
                                    qp(12, 10, 2, 7), qp(14, 10, 2, 5)};
  for (const auto& a : sample)
    for (const auto& b : sample) {
      if (better_than(a, b)) CHECK(!better_than(b, a));
    }
}

TEST_CASE("quantum singleton holds on constructed outputs") {
  Field f7 = Field::make(7, 1);
  for (const char* gs : {"156", "15"}) {
    for (std::uint32_t n : {6u, 18u, 30u}) {
      Poly g = parse_poly(gs, f7);
      Poly mod = Poly::x_pow_minus(f7, n, 1);
      if (!(mod % g).is_zero()) continue;
      LinearCode c = cyclic_code(n, g);
      if (!code_contains(c, dual(c))) continue;
      QuantumParams p = css_dual_containing(c);
      CHECK(p.k <= (long long)p.n - 2 * p.d.value() + 2);
    }
  }
}
