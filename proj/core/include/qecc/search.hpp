#ifndef QECC_SEARCH_HPP
#define QECC_SEARCH_HPP

#include <cstdint>
#include <vector>

#include "qecc/poly.hpp"
#include "qecc/quantum.hpp"

namespace qecc {

/// One CSS candidate: C1 = <g>, C2 = dual(<gf>) with g | gf | modulus, so
/// dual(C2) = <gf> is inside C1 by construction.
struct CssCandidate {
  QuantumParams params;
  Poly g;
  Poly gf;       // C2's dual generator; gf == modulus marks the trivial C2
  Poly modulus;  // x^n - lambda, or the sampled polycyclic modulus
};

/// Candidate from the stabilizer extension drivers.
struct LsCandidate {
  QuantumParams params;
  Poly g;
  long long hull_dim = 0;
};

/// Candidate from the generalized quasi-polycyclic driver.
struct GqpCandidate {
  QuantumParams params;
  std::vector<Poly> f_list;
  std::vector<Poly> a_list;
  std::size_t span_rows = 0; // generator shifts used (check-degree or truncated)
};

/// Ranked output: `ranked` is sorted by (k desc, d desc, canonical ingredient
/// order) and holds only candidates with positive k and exact d; everything
/// else lands in `unresolved` rather than being dropped.
template <class Cand>
struct SearchResult {
  std::vector<Cand> ranked;
  std::vector<Cand> unresolved;
};

/// Enumerates every ordered divisor pair g | gf of x^n - lambda and applies
/// the CSS construction with C1 = <g>, C2 = dual(<gf>). The dual-containing
/// pairs arise automatically from the enumeration.
SearchResult<CssCandidate> css_constacyclic_search(const Field& f, std::uint32_t n,
                                                   felem lambda,
                                                   const DistanceBudget& budget = {},
                                                   std::uint64_t seed = 0);

/// Samples `trials` random monic moduli of degree n (seeded), factorizes each
/// and enumerates divisor-pair CSS candidates as above; explicitly adds the
/// dual-containing candidate of each divisor, which for polycyclic codes need
/// not appear among ideal pairs.
SearchResult<CssCandidate> polycyclic_search(const Field& f, std::uint32_t n,
                                             std::uint32_t trials, std::uint64_t seed,
                                             const DistanceBudget& budget = {});

/// Evaluates one modulus (shared by both divisor-pair drivers).
void css_divisor_pairs(const Poly& modulus, std::uint64_t seed, const DistanceBudget& budget,
                       SearchResult<CssCandidate>& out);

/// Samples random block moduli f_i of the given degrees and random generators
/// a_i, builds generalized quasi-polycyclic codes, and keeps CSS candidates
/// from every self-orthogonal or dual-containing code found (the full module
/// span and its truncated-shift subcode are both tried).
SearchResult<GqpCandidate> gqp_search(const Field& f, const std::vector<std::uint32_t>& block_degrees,
                                      std::uint32_t trials, std::uint64_t seed,
                                      const DistanceBudget& budget = {});

/// Evaluates one explicit generalized quasi-polycyclic ingredient tuple.
void gqp_candidates(const std::vector<Poly>& f_list, const std::vector<Poly>& a_list,
                    const DistanceBudget& budget, SearchResult<GqpCandidate>& out);

/// Enumerates constacyclic codes over GF(q^2) of length n, keeps those whose
/// Hermitian hull defect e = k - dim(hull) is at most e_max, and applies the
/// stabilizer extension. Ranked by (k desc, lower distance bound desc).
SearchResult<LsCandidate> ls_search(const Field& f, std::uint32_t n, felem lambda,
                                    long long e_max, const DistanceBudget& budget = {},
                                    std::uint64_t seed = 0);

} // namespace qecc

#endif
