#ifndef QECC_FIELD_HPP
#define QECC_FIELD_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace qecc {

/// Index of a field element: sum c_i * p^i with c_0 the constant digit of the
/// coefficient vector over GF(p). 0 is the additive, 1 the multiplicative unit.
using felem = std::uint32_t;

namespace detail {
struct FieldBody;
}

/// Exact arithmetic in GF(p^m), p prime, m >= 1, q = p^m <= 2^20.
///
/// A Field is an immutable value; copies share the same table set and are safe
/// to use from concurrent threads. Elements are passed around as plain felem
/// indices; all arithmetic goes through the Field they belong to.
class Field {
 public:
  /// Builds GF(p^m). When `defining` (coeffs constant-first, monic, degree m,
  /// irreducible over GF(p)) is absent and m > 1, a fixed default is used:
  /// GF(9) gets x^2+2x+2 and GF(25) gets x^2+2x+4, every other extension gets
  /// the lexicographically smallest monic irreducible of degree m whose root
  /// generates the multiplicative group. The chosen polynomial is recorded so
  /// runs are reproducible.
  static Field make(std::uint32_t p, std::uint32_t m,
                    std::optional<std::vector<std::uint32_t>> defining = std::nullopt);

  /// Builds the field of order q = p^m (q must be a prime power).
  static Field of_order(std::uint32_t q);

  /// Parses a descriptor produced by descriptor(): "p" or "p^m/poly".
  static Field from_descriptor(const std::string& s);

  std::uint32_t characteristic() const;
  std::uint32_t degree() const;
  std::uint32_t order() const;
  /// Defining polynomial over GF(p), constant digit first; empty when m == 1.
  const std::vector<std::uint32_t>& defining_poly() const;
  /// Serialized as "p" for prime fields, "p^m/coeffs" (highest degree first)
  /// for extensions, e.g. "3^2/122" for GF(9) with x^2+2x+2.
  std::string descriptor() const;

  felem add(felem a, felem b) const;
  felem sub(felem a, felem b) const;
  felem neg(felem a) const;
  felem mul(felem a, felem b) const;
  felem inv(felem a) const;          // throws on 0
  felem div(felem a, felem b) const; // throws on b == 0
  felem pow(felem a, long long e) const;

  /// Frobenius conjugate a -> a^(p^(m/2)); the field is viewed as GF(q0^2)
  /// with q0 = p^(m/2). Throws unless m is even.
  felem conjugate(felem a) const;
  bool has_conjugation() const; // m even

  /// Coefficient vector of a over GF(p), constant digit first, length m.
  std::vector<std::uint32_t> coeffs(felem a) const;
  felem from_coeffs(const std::vector<std::uint32_t>& c) const;

  /// The symbol w of extension fields: the residue of x, a root of the
  /// defining polynomial. Throws for prime fields.
  felem w_root() const;
  /// k such that a == w^k, when a lies in the cycle generated by w_root().
  std::optional<std::uint64_t> w_log(felem a) const;

  bool operator==(const Field& o) const;
  bool operator!=(const Field& o) const { return !(*this == o); }

  const detail::FieldBody* body() const { return body_.get(); }

 private:
  explicit Field(std::shared_ptr<const detail::FieldBody> b) : body_(std::move(b)) {}
  std::shared_ptr<const detail::FieldBody> body_;
};

/// A field element bundled with its field, for call sites that want operator
/// syntax instead of index arithmetic.
class FieldElement {
 public:
  FieldElement(Field f, felem v) : field_(std::move(f)), v_(v) {}
  const Field& field() const { return field_; }
  felem value() const { return v_; }

  FieldElement operator+(const FieldElement& o) const { return bin(o, &Field::add); }
  FieldElement operator-(const FieldElement& o) const { return bin(o, &Field::sub); }
  FieldElement operator*(const FieldElement& o) const { return bin(o, &Field::mul); }
  FieldElement operator/(const FieldElement& o) const { return bin(o, &Field::div); }
  FieldElement operator-() const { return {field_, field_.neg(v_)}; }
  FieldElement pow(long long e) const { return {field_, field_.pow(v_, e)}; }
  FieldElement conjugate() const { return {field_, field_.conjugate(v_)}; }
  bool operator==(const FieldElement& o) const { return field_ == o.field_ && v_ == o.v_; }

 private:
  FieldElement bin(const FieldElement& o, felem (Field::*op)(felem, felem) const) const;
  Field field_;
  felem v_;
};

namespace detail {

// Raw table set behind a Field. Immutable after construction.
struct FieldBody {
  std::uint32_t p = 0, m = 0, q = 0;
  std::vector<std::uint32_t> defining; // const-first, length m+1; empty for m==1
  // exp/log over a primitive element, built when q <= kTableLimit
  std::vector<felem> exp_tab;     // size 2(q-1)
  std::vector<std::uint32_t> log_tab; // size q, log_tab[0] unused
  std::vector<felem> add_tab;     // size q*q when q <= kAddTableLimit, else empty
  std::vector<felem> neg_tab;     // size q
  std::vector<felem> conj_tab;    // size q when m even
  std::vector<std::int64_t> wlog; // size q: k with w^k == e, -1 if outside <w>
  std::uint64_t w_order = 0;
  bool tables = false;

  static constexpr std::uint32_t kTableLimit = 4096;
  static constexpr std::uint32_t kAddTableLimit = 1024;

  felem add(felem a, felem b) const {
    if (m == 1) return (a + b) % p;
    if (!add_tab.empty()) return add_tab[a * q + b];
    return add_slow(a, b);
  }
  felem neg(felem a) const { return neg_tab[a]; }
  felem sub(felem a, felem b) const { return add(a, neg_tab[b]); }
  felem mul(felem a, felem b) const {
    if (m == 1) return felem((std::uint64_t(a) * b) % p);
    if (tables) {
      if (a == 0 || b == 0) return 0;
      return exp_tab[log_tab[a] + log_tab[b]];
    }
    return mul_slow(a, b);
  }
  felem add_slow(felem a, felem b) const;
  felem mul_slow(felem a, felem b) const;
};

bool is_prime_u32(std::uint32_t n);

} // namespace detail

} // namespace qecc

#endif
