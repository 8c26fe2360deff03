#ifndef QECC_CODE_HPP
#define QECC_CODE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qecc/field.hpp"
#include "qecc/mat.hpp"
#include "qecc/poly.hpp"

namespace qecc {

/// Certified knowledge about a code's minimum distance. The zero code gets the
/// distinguished `infinite` marker instead of a number.
struct DistanceStatus {
  enum class Kind { unknown, exact, bounds, infinite };
  Kind kind = Kind::unknown;
  int lo = 0, hi = 0; // exact stores the value in both

  static DistanceStatus unknown() { return {}; }
  static DistanceStatus exact(int d) { return {Kind::exact, d, d}; }
  static DistanceStatus bounds(int lo, int hi) { return {Kind::bounds, lo, hi}; }
  static DistanceStatus infinite() { return {Kind::infinite, 0, 0}; }

  bool is_exact() const { return kind == Kind::exact; }
  bool is_infinite() const { return kind == Kind::infinite; }
  bool known() const { return kind == Kind::exact || kind == Kind::bounds; }
  int value() const; // throws unless exact
  std::string to_string() const;
  bool operator==(const DistanceStatus& o) const {
    return kind == o.kind && lo == o.lo && hi == o.hi;
  }
};

/// Caps for the two distance strategies and the coset enumerations.
struct DistanceBudget {
  std::uint64_t enumeration_cap = 20'000'000;  // strategy A: scan all q^k codewords up to here
  std::uint64_t subset_budget = 100'000'000;   // strategy B: column-subset evaluations
  int force_strategy = 0;                      // 0 auto, 1 message enumeration, 2 parity search
  unsigned threads = 0;                        // 0 = hardware concurrency
};

/// The shift whose closure defines each code family.
struct ShiftMap {
  enum class Kind { cyclic, constacyclic, quasi_twisted, polycyclic };
  Kind kind = Kind::cyclic;
  std::size_t length = 0;
  felem lambda = 1;          // constacyclic / quasi_twisted
  std::size_t index = 1;     // ell, quasi_twisted
  std::vector<felem> assoc;  // polycyclic associate vector, length n

  static ShiftMap cyclic(std::size_t n) { return {Kind::cyclic, n, 1, 1, {}}; }
  static ShiftMap constacyclic(std::size_t n, felem lambda);
  static ShiftMap quasi_twisted(std::size_t n, std::size_t ell, felem lambda);
  static ShiftMap polycyclic(std::vector<felem> assoc);

  std::vector<felem> apply(const Field& f, const std::vector<felem>& v) const;
};

/// A linear code as a row space over GF(q). The generator matrix is kept in
/// RREF, so two codes are equal iff their generators are literally equal.
/// Everything is immutable except the lazily certified distance, which is
/// cached behind a mutex (single writer, any number of readers).
class LinearCode {
 public:
  LinearCode(Field f, std::size_t n, const Mat& generators);
  static LinearCode from_rows(const Field& f, std::size_t n,
                              const std::vector<std::vector<felem>>& rows);
  static LinearCode zero_code(const Field& f, std::size_t n);
  static LinearCode full_space(const Field& f, std::size_t n);

  const Field& field() const;
  std::size_t length() const;
  std::size_t dim() const;
  const Mat& gen() const;           // RREF, dim() rows
  const RrefResult& gen_rref() const;

  DistanceStatus distance_status() const; // cached knowledge, possibly unknown
  std::string params_string() const;      // "[n,k]" or "[n,k,d]" when known

  bool operator==(const LinearCode& o) const;

 private:
  friend DistanceStatus min_distance(const LinearCode&, const DistanceBudget&);
  struct Body;
  std::shared_ptr<Body> body_;
};

// --- constructors of the shift-structured families ---------------------------

/// Smallest linear code containing `generators` and closed under `s`.
LinearCode shift_closure_code(const Field& f, const std::vector<std::vector<felem>>& generators,
                              const ShiftMap& s);

/// Ideal <g> of F_q[x]/(x^n - lambda); g must be monic and divide x^n - lambda.
LinearCode constacyclic_code(std::uint32_t n, const FieldElement& lambda, const Poly& g);
LinearCode cyclic_code(std::uint32_t n, const Poly& g);

/// Ideal <g> of F_q[x]/(f); g monic dividing monic f, length n = deg f.
LinearCode polycyclic_code(const Poly& f, const Poly& g);

/// Minimal monic h with h*a == 0 componentwise in prod F_q[x]/(f_i):
/// h = lcm_i f_i / gcd(f_i, a_i).
Poly gqp_check_poly(const std::vector<Poly>& f_list, const std::vector<Poly>& a_list);

/// 1-generator module span { p(x)*(a_1,...,a_r) : p } inside prod F_q[x]/(f_i),
/// of dimension deg(check polynomial), generated by the rows x^j * a.
LinearCode gqp_code(const std::vector<Poly>& f_list, const std::vector<Poly>& a_list);

/// Subcode of the span generated by the first `rows` shifts x^j * a, j < rows.
/// The published generalized quasi-polycyclic tables list codes of this form
/// with rows = deg f_i - deg a_i (equal across blocks).
LinearCode gqp_subcode(const std::vector<Poly>& f_list, const std::vector<Poly>& a_list,
                       std::size_t rows);

// --- duality and relations ---------------------------------------------------

enum class DualKind { euclidean, hermitian };

LinearCode dual(const LinearCode& c, DualKind kind = DualKind::euclidean);
bool code_contains(const LinearCode& outer, const LinearCode& inner);
LinearCode hull(const LinearCode& c, DualKind kind);
LinearCode code_sum(const LinearCode& a, const LinearCode& b);
LinearCode code_intersection(const LinearCode& a, const LinearCode& b);

// --- minimum distance ---------------------------------------------------------

/// Certifies the minimum distance and caches the result on the code.
///
/// Strategy A (message enumeration) scans all q^k - 1 nonzero codewords when
/// q^k fits under the enumeration cap. Strategy B (parity-side search) looks
/// for the smallest w such that w columns of the parity-check matrix are
/// linearly dependent, exhausting subsets level by level; a level only starts
/// if its C(n,w) evaluations fit in the remaining subset budget, so results
/// do not depend on thread count. On budget exhaustion returns
/// bounds(first unexcluded weight, best witness weight seen).
DistanceStatus min_distance(const LinearCode& c, const DistanceBudget& budget = {});

/// Exact min weight over the set difference A \ B (B must be a subcode of A),
/// by enumerating the nonzero cosets of B in A. `computed` is false when the
/// enumeration does not fit under the budget's cap; `empty` when A == B.
struct ExcludedWeight {
  bool computed = false;
  bool empty = false;
  int weight = 0;
};
ExcludedWeight min_weight_excluding(const LinearCode& a, const LinearCode& b,
                                    const DistanceBudget& budget = {});

} // namespace qecc

#endif
