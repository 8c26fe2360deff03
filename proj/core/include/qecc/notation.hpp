#ifndef QECC_NOTATION_HPP
#define QECC_NOTATION_HPP

#include <stdexcept>
#include <string>

#include "qecc/field.hpp"
#include "qecc/poly.hpp"

namespace qecc {

/// Raised by parse_poly with the offending token in the message.
class NotationError : public std::invalid_argument {
 public:
  NotationError(const std::string& msg, std::string token)
      : std::invalid_argument(msg), token_(std::move(token)) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

/// Parses the compact coefficient-list format used in the published tables:
/// one token per coefficient, highest degree term leftmost.
///
///   - digits 0-9 and the letters A (10) and B (11) are single-character
///     tokens naming the element with that index;
///   - `w`, optionally followed by `^k` (digits, braces tolerated), is the
///     designated root of an extension field's defining polynomial raised to
///     the k-th power;
///   - spaces separate tokens; a space-separated run of digits whose value is
///     a legal element index is one token, so spaced strings can carry
///     indices past B (formatter output only, the tables never need it).
Poly parse_poly(const std::string& s, const Field& field);

/// Inverse codec. parse_poly(format_poly(p), p.field()) == p. Single-character
/// tokens are emitted packed; if any token needs more than one character the
/// whole string is emitted space-separated.
std::string format_poly(const Poly& p);

/// Token for one field element (the codec format_poly is built from).
std::string format_element(const Field& f, felem v);

} // namespace qecc

#endif
