#include "qecc/notation.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace qecc {

namespace {

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(c); });
}

felem token_value(const std::string& tok, const Field& F) {
  if (tok == "A" || tok == "B") {
    felem v = tok == "A" ? 10 : 11;
    if (v >= F.order()) throw NotationError("token " + tok + " out of range for GF(" + std::to_string(F.order()) + ")", tok);
    return v;
  }
  if (all_digits(tok)) {
    unsigned long v = std::stoul(tok);
    if (v >= F.order())
      throw NotationError("token " + tok + " out of range for GF(" + std::to_string(F.order()) + ")", tok);
    return felem(v);
  }
  if (tok[0] == 'w') {
    if (F.degree() == 1)
      throw NotationError("token " + tok + " needs an extension field", tok);
    if (tok.size() == 1) return F.w_root();
    if (tok.size() >= 2 && tok[1] == '^' && all_digits(tok.substr(2)))
      return F.pow(F.w_root(), std::stoll(tok.substr(2)));
  }
  throw NotationError("unrecognized token " + tok, tok);
}

// Splits one unspaced blob into tokens: single characters, except that 'w'
// greedily absorbs a following ^exponent.
void split_blob(const std::string& blob, std::vector<std::string>& out) {
  size_t i = 0;
  while (i < blob.size()) {
    char c = blob[i];
    if (c == 'w') {
      size_t j = i + 1;
      if (j < blob.size() && blob[j] == '^') {
        ++j;
        size_t k = j;
        while (k < blob.size() && std::isdigit(blob[k])) ++k;
        if (k == j) throw NotationError("dangling exponent after w^", blob.substr(i));
        out.push_back(blob.substr(i, k - i));
        i = k;
      } else {
        out.push_back("w");
        ++i;
      }
    } else {
      out.push_back(std::string(1, c));
      ++i;
    }
  }
}

} // namespace

Poly parse_poly(const std::string& raw, const Field& field) {
  std::string s;
  s.reserve(raw.size());
  for (char c : raw)
    if (c != '{' && c != '}') s.push_back(c);

  std::vector<std::string> blobs;
  {
    std::istringstream is(s);
    std::string b;
    while (is >> b) blobs.push_back(b);
  }
  if (blobs.empty()) throw NotationError("empty polynomial string", "");

  std::vector<std::string> tokens;
  for (const auto& b : blobs) {
    // a spaced multi-digit number is one token when it names a legal index
    if (blobs.size() > 1 && b.size() > 1 && all_digits(b) && std::stoul(b) < field.order()) {
      tokens.push_back(b);
    } else {
      split_blob(b, tokens);
    }
  }

  std::vector<felem> coeffs(tokens.size());
  for (size_t i = 0; i < tokens.size(); ++i)
    coeffs[tokens.size() - 1 - i] = token_value(tokens[i], field); // leftmost = highest degree
  return Poly(field, std::move(coeffs));
}

std::string format_element(const Field& f, felem v) {
  if (v < 10) return std::string(1, char('0' + v));
  if (v == 10 && f.degree() == 1) return "A";
  if (v == 11 && f.degree() == 1) return "B";
  if (f.degree() > 1) {
    if (v == f.w_root()) return "w";
    if (auto k = f.w_log(v)) return "w^" + std::to_string(*k);
  }
  return std::to_string(v); // spaced-mode numeric index
}

std::string format_poly(const Poly& p) {
  if (p.is_zero()) return "0";
  const Field& F = p.field();
  std::vector<std::string> tokens;
  for (size_t i = p.coeffs().size(); i-- > 0;) tokens.push_back(format_element(F, p.coeffs()[i]));
  bool spaced = std::any_of(tokens.begin(), tokens.end(),
                            [](const std::string& t) { return t.size() > 1; });
  std::string out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (spaced && i) out += ' ';
    out += tokens[i];
  }
  return out;
}

} // namespace qecc
