#include "doctest.h"
#include "qecc/code.hpp"
#include "qecc/notation.hpp"
#include "support.hpp"

#include <functional>
#include <random>

using namespace qecc;
using testsupport::oracle_min_weight;

TEST_CASE("shift maps") {
  Field f5 = Field::make(5, 1);
  auto s = ShiftMap::cyclic(3);
  CHECK(s.apply(f5, {1, 2, 3}) == std::vector<felem>{3, 1, 2});

  auto cc = ShiftMap::constacyclic(3, 2);
  CHECK(cc.apply(f5, {0, 0, 1}) == std::vector<felem>{2, 0, 0});

  // polycyclic with associate vector (1,0,...,0) is exactly the cyclic shift
  std::mt19937_64 rng(3);
  auto pc = ShiftMap::polycyclic({1, 0, 0, 0, 0});
  auto cy = ShiftMap::cyclic(5);
  for (int i = 0; i < 50; ++i) {
    std::vector<felem> v(5);
    for (auto& x : v) x = felem(rng() % 5);
    CHECK(pc.apply(f5, v) == cy.apply(f5, v));
  }

  CHECK_THROWS_AS(ShiftMap::constacyclic(4, 0), std::invalid_argument);
  CHECK_THROWS_AS(ShiftMap::quasi_twisted(9, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(s.apply(f5, {1, 2}), std::invalid_argument);
}

TEST_CASE("shift closure") {
  Field f5 = Field::make(5, 1);
  std::vector<felem> ones(6, 1);
  LinearCode rep = shift_closure_code(f5, {ones}, ShiftMap::cyclic(6));
  CHECK(rep.dim() == 1);
  CHECK(min_distance(rep).value() == 6); // repetition code [n,1,n]

  LinearCode zero = shift_closure_code(f5, {std::vector<felem>(6, 0)}, ShiftMap::cyclic(6));
  CHECK(zero.dim() == 0);
  CHECK(min_distance(zero).is_infinite());
}

TEST_CASE("constacyclic construction") {
  Field f11 = Field::make(11, 1);
  LinearCode c = cyclic_code(19, parse_poly("19AA", f11));
  CHECK(c.dim() == 16);
  CHECK(min_distance(c).value() == 3);

  Field f7 = Field::make(7, 1);
  LinearCode c2 = cyclic_code(6, parse_poly("156", f7));
  CHECK(c2.dim() == 4);
  CHECK(min_distance(c2).value() == 3);

  LinearCode full = cyclic_code(5, Poly::one(f7));
  CHECK(full.dim() == 5);
  CHECK(min_distance(full).value() == 1);

  CHECK_THROWS_AS(cyclic_code(6, parse_poly("12", f7)), std::invalid_argument); // x+2 does not divide x^6-1

  // closure under the defining shift
  auto s = ShiftMap::cyclic(19);
  for (std::size_t r = 0; r < c.gen().rows(); ++r)
    CHECK(in_rowspace(c.gen_rref(), s.apply(f11, c.gen().row(r))));
}

TEST_CASE("polycyclic construction") {
  Field f5 = Field::make(5, 1);
  Poly f = parse_poly("1012432043044", f5);
  LinearCode c = polycyclic_code(f, parse_poly("12", f5));
  CHECK(c.length() == 12);
  CHECK(c.dim() == 11);
  CHECK(min_distance(c).value() == 2);

  // closure under the polycyclic shift with v = x^n - f
  Poly v = Poly::monomial(f5, 12) - f;
  auto s = ShiftMap::polycyclic(v.padded(12));
  for (std::size_t r = 0; r < c.gen().rows(); ++r)
    CHECK(in_rowspace(c.gen_rref(), s.apply(f5, c.gen().row(r))));

  LinearCode z = polycyclic_code(f, f);
  CHECK(z.dim() == 0);

  Field f7 = Field::make(7, 1);
  Poly f3 = parse_poly("1206440404343305511", f7);
  LinearCode c3 = polycyclic_code(f3, parse_poly("13", f7));
  CHECK(c3.length() == 18);
  CHECK(c3.dim() == 17);
  CHECK(min_distance(c3).value() == 2);

  CHECK_THROWS_AS(polycyclic_code(f3, parse_poly("12", f7)), std::invalid_argument);
}

TEST_CASE("generalized quasi-polycyclic span") {
  Field f7 = Field::make(7, 1);
  std::vector<Poly> fl{parse_poly("130521", f7), parse_poly("115", f7)};
  std::vector<Poly> al{parse_poly("14323", f7), parse_poly("12", f7)};
  Poly h = gqp_check_poly(fl, al);
  CHECK(h.degree() == 6);
  LinearCode span = gqp_code(fl, al);
  CHECK(span.length() == 7);
  CHECK(span.dim() == std::size_t(h.degree()));
  // h annihilates the generator tuple componentwise
  for (std::size_t i = 0; i < fl.size(); ++i) CHECK(((h * al[i]) % fl[i]).is_zero());

  // all-zero generators give the zero code
  std::vector<Poly> zeros{Poly::zero(f7), Poly::zero(f7)};
  CHECK(gqp_code(fl, zeros).dim() == 0);

  CHECK_THROWS_AS(gqp_code(fl, std::vector<Poly>{parse_poly("1305210", f7), parse_poly("12", f7)}),
                  std::invalid_argument); // generator degree not below modulus
}

TEST_CASE("one-block gqp span is the cyclic code of its generator") {
  // with f = x^n-1 and a = (x^n-1)/g, the span is the ideal <a>, whose
  // parameters match dual(<g>) (the reciprocal relation)
  for (std::uint32_t q : {2u, 3u, 5u}) {
    Field F = Field::of_order(q);
    for (std::uint32_t n = 4; n <= 10; n += 3) {
      Poly mod = Poly::x_pow_minus(F, n, 1);
      DivisorSeq divs(factorize(mod, 1));
      for (std::uint64_t i = 0; i < divs.count(); ++i) {
        Poly g = divs.at(i);
        if (g.degree() == 0 || g.degree() == int(n)) continue;
        Poly a = (mod / g).monic();
        LinearCode span = gqp_code({mod}, {a});
        LinearCode ideal = cyclic_code(n, a);
        CHECK(span == ideal);
        LinearCode dual_g = dual(cyclic_code(n, g));
        CHECK(span.dim() == dual_g.dim());
        CHECK(oracle_min_weight(span) == oracle_min_weight(dual_g));
      }
    }
  }
}

TEST_CASE("duals") {
  Field f11 = Field::make(11, 1);
  LinearCode c = cyclic_code(19, parse_poly("19AA", f11));
  LinearCode d = dual(c);
  CHECK(d.dim() == 3);
  CHECK(min_distance(d).value() == 16);
  CHECK(code_contains(c, d)); // dual-containing
  CHECK(code_contains(c, c));

  LinearCode z = LinearCode::zero_code(f11, 8);
  CHECK(dual(z).dim() == 8);

  CHECK_THROWS_AS(dual(c, DualKind::hermitian), std::invalid_argument); // odd degree field
}

TEST_CASE("dual duality and dimension identities on random codes") {
  std::mt19937_64 rng(11);
  int done = 0;
  while (done < 300) {
    std::uint32_t qs[] = {2, 3, 4, 5, 7, 8, 9};
    Field F = Field::of_order(qs[rng() % 7]);
    std::size_t n = 2 + rng() % 29;
    Mat m = testsupport::random_mat(F, 1 + rng() % n, n, rng);
    LinearCode c(F, n, m);
    for (DualKind kind : {DualKind::euclidean, DualKind::hermitian}) {
      if (kind == DualKind::hermitian && !F.has_conjugation()) continue;
      LinearCode d = dual(c, kind);
      CHECK(c.dim() + d.dim() == n);
      CHECK(dual(d, kind) == c);
    }
    ++done;
  }
}

TEST_CASE("hermitian hull with a brute-force cross-check") {
  Field f4 = Field::make(2, 2);
  LinearCode c = LinearCode::from_rows(f4, 2, {{1, 1}});
  LinearCode h = hull(c, DualKind::hermitian);
  CHECK(h.dim() == 1); // <(1,1)> is Hermitian self-orthogonal: 1*1^2 + 1*1^2 = 0

  // brute force over all 16 pairs of codewords
  auto herm = [&](const std::vector<felem>& a, const std::vector<felem>& b) {
    felem s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      s = f4.add(s, f4.mul(a[i], f4.conjugate(b[i])));
    return s;
  };
  std::vector<std::vector<felem>> words;
  for (felem x = 0; x < 4; ++x) words.push_back({x, x});
  int self_orth_dim_count = 0;
  for (const auto& a : words) {
    bool orth_to_all = true;
    for (const auto& b : words)
      if (herm(a, b) != 0) orth_to_all = false;
    if (orth_to_all && (a[0] || a[1])) ++self_orth_dim_count;
  }
  CHECK(self_orth_dim_count == 3); // the 3 nonzero multiples of (1,1) lie in the hull
}

TEST_CASE("minimum distance: both strategies against the oracle") {
  Field f2 = Field::make(2, 1);
  LinearCode hamming = cyclic_code(7, parse_poly("1011", f2)); // x^3+x+1
  CHECK(oracle_min_weight(hamming) == 3);
  DistanceBudget a;
  a.force_strategy = 1;
  DistanceBudget b;
  b.force_strategy = 2;
  CHECK(min_distance(hamming, a).value() == 3);
  LinearCode hamming2 = cyclic_code(7, parse_poly("1011", f2));
  CHECK(min_distance(hamming2, b).value() == 3);

  LinearCode c15 = cyclic_code(15, parse_poly("11001", f2));
  CHECK(c15.dim() == 11);
  CHECK(min_distance(c15).value() == 3);

  LinearCode full = LinearCode::full_space(f2, 9);
  CHECK(min_distance(full).value() == 1);

  // strategies agree on random codes
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    std::uint32_t qs[] = {2, 3, 4, 5};
    Field F = Field::of_order(qs[rng() % 4]);
    std::size_t n = 4 + rng() % 9;
    Mat m = testsupport::random_mat(F, 1 + rng() % (n - 1), n, rng);
    LinearCode c1(F, n, m), c2(F, n, m);
    if (c1.dim() == 0) continue;
    DistanceStatus da = min_distance(c1, a);
    DistanceStatus db = min_distance(c2, b);
    REQUIRE(da.is_exact());
    REQUIRE(db.is_exact());
    CHECK(da.value() == db.value());
    CHECK(da.value() == oracle_min_weight(c1));
  }
}

TEST_CASE("budget exhaustion reports bounds, not errors") {
  Field f2 = Field::make(2, 1);
  LinearCode c = cyclic_code(90, parse_poly("11111011111000000000000011111", f2));
  DistanceBudget tiny;
  tiny.force_strategy = 2;
  tiny.subset_budget = 50; // not even the singleton level fits twice
  DistanceStatus d = min_distance(c, tiny);
  CHECK(d.kind == DistanceStatus::Kind::bounds);
  CHECK(d.lo >= 1);
  CHECK(d.hi <= 90);
  CHECK(d.lo <= d.hi);

  // a bigger budget upgrades the cached bounds to the exact answer
  DistanceBudget full;
  full.force_strategy = 2;
  DistanceStatus d2 = min_distance(c, full);
  CHECK(d2.is_exact());
  CHECK(d2.value() == 5);
  CHECK(c.distance_status().is_exact());
}

TEST_CASE("distance cache") {
  Field f7 = Field::make(7, 1);
  LinearCode c = cyclic_code(6, parse_poly("156", f7));
  CHECK(c.distance_status().kind == DistanceStatus::Kind::unknown);
  min_distance(c);
  CHECK(c.distance_status().is_exact());
  CHECK(c.params_string() == "[6,4,3]");
}

TEST_CASE("min weight excluding a subcode") {
  Field f3 = Field::make(3, 1);
  std::mt19937_64 rng(23);
  for (int i = 0; i < 30; ++i) {
    std::size_t n = 4 + rng() % 5;
    Mat m = testsupport::random_mat(f3, 3, n, rng);
    LinearCode a(f3, n, m);
    if (a.dim() < 2) continue;
    LinearCode b = LinearCode::from_rows(f3, n, {a.gen().row(0)});
    auto got = min_weight_excluding(a, b);
    REQUIRE(got.computed);
    // reference: walk all of a, skip members of b
    int best = int(n) + 1;
    std::vector<felem> msg(a.dim(), 0);
    std::function<void(std::size_t)> walk = [&](std::size_t pos) {
      if (pos == a.dim()) {
        std::vector<felem> cw(n, 0);
        bool any = false;
        for (std::size_t r = 0; r < a.dim(); ++r) {
          if (!msg[r]) continue;
          any = true;
          for (std::size_t c = 0; c < n; ++c)
            cw[c] = f3.add(cw[c], f3.mul(msg[r], a.gen().at(r, c)));
        }
        if (!any) return;
        if (in_rowspace(b.gen_rref(), cw)) return;
        int w = 0;
        for (felem x : cw) w += x != 0;
        best = std::min(best, w);
        return;
      }
      for (felem v = 0; v < 3; ++v) {
        msg[pos] = v;
        walk(pos + 1);
      }
      msg[pos] = 0;
    };
    walk(0);
    CHECK(got.weight == best);
  }

  // empty difference
  Field f2 = Field::make(2, 1);
  LinearCode c = cyclic_code(7, parse_poly("1011", f2));
  auto e = min_weight_excluding(c, c);
  CHECK(e.empty);
  CHECK_THROWS_AS(min_weight_excluding(LinearCode::from_rows(f2, 7, {{1,0,0,0,0,0,0}}), c),
                  std::invalid_argument); // not a subcode
}
