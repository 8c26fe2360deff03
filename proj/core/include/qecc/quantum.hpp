#ifndef QECC_QUANTUM_HPP
#define QECC_QUANTUM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qecc/code.hpp"

namespace qecc {

/// Parameter record [[n, k, d]]_q of a quantum stabilizer code, with the
/// construction it came from. d may be an interval when certification ran out
/// of budget; serialization then shows "lo..hi".
struct QuantumParams {
  std::size_t n = 0;
  long long k = 0;
  DistanceStatus d;
  std::uint32_t q = 0;
  std::string provenance;
  std::optional<long long> e; // hull defect, stabilizer extension only

  std::string to_string() const;
  bool same_params(const QuantumParams& o) const {
    return n == o.n && k == o.k && q == o.q && d == o.d;
  }
};

/// CSS construction: classical C1 = [n,k1,d1], C2 = [n,k2,d2] with
/// dual(C2) contained in C1 give a [[n, k1+k2-n, min(d1,d2)]]_q code.
/// Distances are certified on demand against `budget`; interval knowledge
/// propagates as interval min.
QuantumParams css(const LinearCode& c1, const LinearCode& c2,
                  const DistanceBudget& budget = {});

/// Dual-containing shortcut: C with dual(C) inside C gives [[n, 2k-n, d(C)]]_q.
QuantumParams css_dual_containing(const LinearCode& c, const DistanceBudget& budget = {});

/// Stabilizer extension from a nearly Hermitian self-orthogonal code C over
/// GF(q^2): with e = k - dim(C ∩ C⊥H) there is an [[n+e, n-2k+e, d]] code where
///   d >= min( wgt(C⊥H \ Hull), wgt((C+C⊥H) \ C) + 1 )
///      >= min( d(C⊥H), d(C+C⊥H) + 1 )
///   d <= wgt(C⊥H \ Hull).
/// Set-difference weights are enumerated exactly when the coset enumeration
/// fits the budget, otherwise the outer bound is reported; d is exact only
/// when the refined lower bound meets the upper bound.
QuantumParams lisonek_singh(const LinearCode& c, const DistanceBudget& budget = {});

/// Number of positions i with (a_i, b_i) != (0,0) for v = (a|b); v must have
/// even length.
int symplectic_weight(const std::vector<felem>& v);

/// Strict "better code" order: same n and q, and either equal k with larger d
/// or larger k with equal d. Both d must be exact; records that are not
/// comparable give false.
bool better_than(const QuantumParams& a, const QuantumParams& b);

} // namespace qecc

#endif
