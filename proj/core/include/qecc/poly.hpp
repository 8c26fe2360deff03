#ifndef QECC_POLY_HPP
#define QECC_POLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "qecc/field.hpp"

namespace qecc {

/// Dense univariate polynomial over a Field. Coefficients are stored constant
/// term first with no trailing zeros, so degree() == coeffs().size() - 1 for
/// nonzero polynomials and -1 for the zero polynomial.
class Poly {
 public:
  explicit Poly(Field f) : field_(std::move(f)) {}
  Poly(Field f, std::vector<felem> coeffs);

  static Poly zero(const Field& f) { return Poly(f); }
  static Poly one(const Field& f) { return {f, {1}}; }
  static Poly x(const Field& f) { return {f, {0, 1}}; }
  static Poly monomial(const Field& f, std::uint32_t deg, felem c = 1);
  /// x^n - lambda, the modulus of constacyclic quotient rings.
  static Poly x_pow_minus(const Field& f, std::uint32_t n, felem lambda);

  const Field& field() const { return field_; }
  const std::vector<felem>& coeffs() const { return c_; }
  int degree() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  felem lead() const { return c_.back(); }
  felem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(felem s) const;
  bool operator==(const Poly& o) const { return field_ == o.field_ && c_ == o.c_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Quotient and remainder; throws on zero divisor.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly operator/(const Poly& d) const { return divmod(d).first; }
  Poly operator%(const Poly& d) const { return divmod(d).second; }
  bool divides(const Poly& multiple) const { return multiple.divmod(*this).second.is_zero(); }

  Poly monic() const;
  Poly derivative() const;
  felem eval(felem x) const;
  Poly shift_up(std::uint32_t k) const; // * x^k

  /// Coefficient vector padded with zeros to exactly n entries.
  std::vector<felem> padded(std::size_t n) const;

 private:
  void trim();
  Field field_;
  std::vector<felem> c_;
};

Poly gcd(const Poly& a, const Poly& b); // monic gcd, gcd(f, 0) = monic(f)
Poly lcm(const Poly& a, const Poly& b);
Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& mod);

/// Total order used everywhere downstream: by degree, then by coefficients
/// from the highest degree term down (the printed notation order), each
/// coefficient compared by its element index.
bool canonical_less(const Poly& a, const Poly& b);

/// Complete factorization into monic irreducibles: unit * prod f_i^e_i == input.
struct Factorization {
  Poly input;
  felem unit;
  std::vector<std::pair<Poly, int>> factors; // sorted canonically, pairwise coprime

  Poly multiply_back() const;
};

/// Squarefree decomposition, distinct-degree splitting, then seeded
/// Cantor-Zassenhaus equal-degree splitting. The factor set is unique, and the
/// canonical sort makes the output order independent of the seed.
Factorization factorize(const Poly& f, std::uint64_t seed = 0);

bool is_irreducible(const Poly& f);

/// Lazy, index-addressable enumeration of the monic divisors of the factored
/// polynomial: divisor i is the product over the mixed-radix digits of i in
/// the (multiplicity+1) exponent ranges. count() == prod (e_i + 1).
class DivisorSeq {
 public:
  explicit DivisorSeq(Factorization fact);
  std::uint64_t count() const { return count_; }
  Poly at(std::uint64_t index) const;
  /// Exponent vector of divisor `index`, aligned with factorization().factors.
  std::vector<int> exponents(std::uint64_t index) const;
  const Factorization& factorization() const { return fact_; }

 private:
  Factorization fact_;
  std::uint64_t count_;
};

} // namespace qecc

#endif
