#include "qecc/search.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

namespace qecc {

namespace {

bool rank_less(const QuantumParams& a, const QuantumParams& b) {
  if (a.k != b.k) return a.k > b.k;
  int da = a.d.is_exact() ? a.d.value() : a.d.lo;
  int db = b.d.is_exact() ? b.d.value() : b.d.lo;
  return da > db;
}

template <class Cand, class TieLess>
void finish(SearchResult<Cand>& out, TieLess tie_less) {
  auto cmp = [&](const Cand& a, const Cand& b) {
    if (a.params.k != b.params.k || !(a.params.d == b.params.d)) return rank_less(a.params, b.params);
    return tie_less(a, b);
  };
  std::sort(out.ranked.begin(), out.ranked.end(), cmp);
  std::sort(out.unresolved.begin(), out.unresolved.end(), cmp);
}

Poly random_monic(const Field& F, std::uint32_t deg, std::mt19937_64& rng) {
  std::vector<felem> c(deg + 1, 0);
  for (std::uint32_t i = 0; i < deg; ++i) c[i] = felem(rng() % F.order());
  c[deg] = 1;
  return Poly(F, std::move(c));
}

Poly random_below(const Field& F, std::uint32_t deg_bound, std::mt19937_64& rng) {
  std::vector<felem> c(deg_bound, 0);
  for (auto& x : c) x = felem(rng() % F.order());
  return Poly(F, std::move(c));
}

} // namespace

void css_divisor_pairs(const Poly& modulus, std::uint64_t seed, const DistanceBudget& budget,
                       SearchResult<CssCandidate>& out) {
  const Field& F = modulus.field();
  const std::size_t n = std::size_t(modulus.degree());
  DivisorSeq divisors(factorize(modulus, seed));
  const auto& factors = divisors.factorization().factors;
  const std::size_t nf = factors.size();

  struct Entry {
    Poly g;
    LinearCode code;      // <g>
    LinearCode dual_code; // dual(<g>)
  };
  std::map<std::vector<int>, Entry> by_exps;
  for (std::uint64_t i = 0; i < divisors.count(); ++i) {
    Poly g = divisors.at(i);
    std::size_t k = n - std::size_t(g.degree());
    std::vector<std::vector<felem>> rows;
    rows.reserve(k);
    for (std::size_t j = 0; j < k; ++j) rows.push_back(g.shift_up(std::uint32_t(j)).padded(n));
    LinearCode code = LinearCode::from_rows(F, n, rows);
    by_exps.emplace(divisors.exponents(i), Entry{g, code, dual(code)});
  }

  // ordered pairs g | gf: exponent vectors e_g <= e_gf componentwise
  for (auto& [eg, ent_g] : by_exps) {
    for (auto& [ef, ent_f] : by_exps) {
      bool leq = true;
      for (std::size_t i = 0; i < nf && leq; ++i) leq = eg[i] <= ef[i];
      if (!leq) continue;
      const LinearCode& c1 = ent_g.code;        // <g>
      const LinearCode& c2 = ent_f.dual_code;   // dual(<gf>), so dual(C2) = <gf> ⊆ <g>
      QuantumParams p;
      p.n = n;
      p.k = (long long)c1.dim() + (long long)c2.dim() - (long long)n;
      p.q = F.order();
      DistanceStatus d1 = c1.dim() ? min_distance(c1, budget) : DistanceStatus::infinite();
      DistanceStatus d2 = c2.dim() ? min_distance(c2, budget) : DistanceStatus::infinite();
      if (d1.is_infinite() && d2.is_infinite()) continue;
      if (d1.is_infinite()) p.d = d2;
      else if (d2.is_infinite()) p.d = d1;
      else if (d1.is_exact() && d2.is_exact())
        p.d = DistanceStatus::exact(std::min(d1.value(), d2.value()));
      else
        p.d = DistanceStatus::bounds(std::min(d1.lo, d2.lo), std::min(d1.hi, d2.hi));
      p.provenance = "css(<g>,dual(<gf>)) mod " + std::to_string(n);
      CssCandidate cand{p, ent_g.g, ent_f.g, modulus};
      if (p.k > 0 && p.d.is_exact())
        out.ranked.push_back(std::move(cand));
      else
        out.unresolved.push_back(std::move(cand));
    }
  }

  // dual-containing candidates: for constacyclic moduli the dual of an ideal
  // is again an ideal, so these already occur as pairs; for general
  // (polycyclic) moduli the dual need not be one and gets added explicitly,
  // marked with gf = modulus.
  for (auto& [eg, ent] : by_exps) {
    if (ent.code.dim() == 0) continue;
    if (!code_contains(ent.code, ent.dual_code)) continue;
    bool covered = false;
    for (const auto& [ef, other] : by_exps)
      if (other.code == ent.dual_code) { covered = true; break; }
    if (covered) continue;
    QuantumParams p;
    p.n = n;
    p.k = 2 * (long long)ent.code.dim() - (long long)n;
    p.q = F.order();
    p.d = min_distance(ent.code, budget);
    p.provenance = "css_dual_containing(<g>) mod " + std::to_string(n);
    CssCandidate cand{p, ent.g, modulus, modulus};
    if (p.k > 0 && p.d.is_exact())
      out.ranked.push_back(std::move(cand));
    else
      out.unresolved.push_back(std::move(cand));
  }
}

namespace {
bool css_tie_less(const CssCandidate& a, const CssCandidate& b) {
  if (a.g != b.g) return canonical_less(a.g, b.g);
  return canonical_less(a.gf, b.gf);
}
} // namespace

SearchResult<CssCandidate> css_constacyclic_search(const Field& f, std::uint32_t n, felem lambda,
                                                   const DistanceBudget& budget,
                                                   std::uint64_t seed) {
  if (lambda == 0) throw std::invalid_argument("shift constant must be nonzero");
  SearchResult<CssCandidate> out;
  css_divisor_pairs(Poly::x_pow_minus(f, n, lambda), seed, budget, out);
  finish(out, css_tie_less);
  return out;
}

SearchResult<CssCandidate> polycyclic_search(const Field& f, std::uint32_t n,
                                             std::uint32_t trials, std::uint64_t seed,
                                             const DistanceBudget& budget) {
  if (trials < 1) throw std::invalid_argument("need at least one trial");
  SearchResult<CssCandidate> out;
  std::mt19937_64 rng(seed);
  for (std::uint32_t t = 0; t < trials; ++t)
    css_divisor_pairs(random_monic(f, n, rng), seed + t, budget, out);
  finish(out, css_tie_less);
  return out;
}

void gqp_candidates(const std::vector<Poly>& f_list, const std::vector<Poly>& a_list,
                    const DistanceBudget& budget, SearchResult<GqpCandidate>& out) {
  bool all_zero = true;
  for (const auto& a : a_list) all_zero = all_zero && a.is_zero();
  if (all_zero) return;

  Poly h = gqp_check_poly(f_list, a_list);
  std::size_t n = 0;
  std::size_t min_cof = std::size_t(-1);
  for (std::size_t i = 0; i < f_list.size(); ++i) {
    n += std::size_t(f_list[i].degree());
    std::size_t cof = std::size_t(f_list[i].degree() - std::max(a_list[i].degree(), 0));
    min_cof = std::min(min_cof, cof);
  }

  auto consider = [&](std::size_t rows, const LinearCode& code) {
    if (code.dim() == 0) return;
    LinearCode du = dual(code);
    LinearCode ingredient(code);
    if (code_contains(code, du)) {
      ingredient = code;
    } else if (code_contains(du, code)) {
      ingredient = du;
    } else {
      return;
    }
    QuantumParams p;
    p.n = n;
    p.k = 2 * (long long)ingredient.dim() - (long long)n;
    p.q = code.field().order();
    p.d = min_distance(ingredient, budget);
    p.provenance = "css_dual_containing(gqp)";
    GqpCandidate cand{p, f_list, a_list, rows};
    if (p.k > 0 && p.d.is_exact())
      out.ranked.push_back(std::move(cand));
    else
      out.unresolved.push_back(std::move(cand));
  };

  consider(std::size_t(h.degree()), gqp_code(f_list, a_list));
  if (min_cof > 0 && min_cof != std::size_t(h.degree()))
    consider(min_cof, gqp_subcode(f_list, a_list, min_cof));
}

namespace {
bool gqp_tie_less(const GqpCandidate& a, const GqpCandidate& b) {
  for (std::size_t i = 0; i < std::min(a.a_list.size(), b.a_list.size()); ++i) {
    if (a.f_list[i] != b.f_list[i]) return canonical_less(a.f_list[i], b.f_list[i]);
    if (a.a_list[i] != b.a_list[i]) return canonical_less(a.a_list[i], b.a_list[i]);
  }
  return a.span_rows < b.span_rows;
}
} // namespace

SearchResult<GqpCandidate> gqp_search(const Field& f, const std::vector<std::uint32_t>& block_degrees,
                                      std::uint32_t trials, std::uint64_t seed,
                                      const DistanceBudget& budget) {
  std::uint32_t n = 0;
  for (auto d : block_degrees) n += d;
  if (block_degrees.empty() || n < 2) throw std::invalid_argument("need total degree >= 2");
  SearchResult<GqpCandidate> out;
  std::mt19937_64 rng(seed);
  for (std::uint32_t t = 0; t < trials; ++t) {
    std::vector<Poly> fl, al;
    for (auto deg : block_degrees) {
      fl.push_back(random_monic(f, deg, rng));
      al.push_back(random_below(f, deg, rng));
    }
    gqp_candidates(fl, al, budget, out);
  }
  finish(out, gqp_tie_less);
  return out;
}

SearchResult<LsCandidate> ls_search(const Field& f, std::uint32_t n, felem lambda, long long e_max,
                                    const DistanceBudget& budget, std::uint64_t seed) {
  if (!f.has_conjugation())
    throw std::invalid_argument("stabilizer-extension search needs an even extension degree");
  SearchResult<LsCandidate> out;
  DivisorSeq divisors(factorize(Poly::x_pow_minus(f, n, lambda), seed));
  for (std::uint64_t i = 0; i < divisors.count(); ++i) {
    Poly g = divisors.at(i);
    if (g.degree() == int(n)) continue; // zero code
    LinearCode c = constacyclic_code(n, FieldElement(f, lambda), g);
    LinearCode hu = hull(c, DualKind::hermitian);
    long long e = (long long)c.dim() - (long long)hu.dim();
    if (e > e_max) continue;
    QuantumParams p = lisonek_singh(c, budget);
    LsCandidate cand{p, g, (long long)hu.dim()};
    if (p.k >= 0 && p.d.known())
      out.ranked.push_back(std::move(cand));
    else
      out.unresolved.push_back(std::move(cand));
  }
  finish(out, [](const LsCandidate& a, const LsCandidate& b) {
    return canonical_less(a.g, b.g);
  });
  return out;
}

} // namespace qecc
