#include "qecc/field.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qecc {
namespace detail {

bool is_prime_u32(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

felem FieldBody::add_slow(felem a, felem b) const {
  felem r = 0, mult = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    r += ((a % p + b % p) % p) * mult;
    a /= p; b /= p; mult *= p;
  }
  return r;
}

felem FieldBody::mul_slow(felem a, felem b) const {
  // schoolbook product of coefficient vectors, reduced mod the defining poly
  std::vector<std::uint32_t> ca(m), cb(m), prod(2 * m - 1, 0);
  for (std::uint32_t i = 0; i < m; ++i) { ca[i] = a % p; a /= p; }
  for (std::uint32_t i = 0; i < m; ++i) { cb[i] = b % p; b /= p; }
  for (std::uint32_t i = 0; i < m; ++i)
    if (ca[i])
      for (std::uint32_t j = 0; j < m; ++j)
        prod[i + j] = (prod[i + j] + std::uint64_t(ca[i]) * cb[j]) % p;
  for (std::uint32_t d = 2 * m - 2; d >= m && d < prod.size(); --d) {
    std::uint32_t c = prod[d];
    if (c) {
      prod[d] = 0;
      for (std::uint32_t i = 0; i < m; ++i) {
        std::uint32_t sub = (std::uint64_t(c) * defining[i]) % p;
        prod[d - m + i] = (prod[d - m + i] + p - sub) % p;
      }
    }
  }
  felem r = 0;
  for (std::uint32_t i = m; i-- > 0;) r = r * p + prod[i];
  return r;
}

namespace {

felem body_pow(const FieldBody& fb, felem a, std::uint64_t e) {
  felem r = 1;
  while (e) {
    if (e & 1) r = fb.mul(r, a);
    a = fb.mul(a, a);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
  std::vector<std::uint32_t> fs;
  for (std::uint32_t d = 2; std::uint64_t(d) * d <= n; ++d)
    if (n % d == 0) {
      fs.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) fs.push_back(n);
  return fs;
}

// Irreducibility of a monic poly over GF(p) (coeffs const-first, degree m >= 1)
// via the standard x^(p^m) == x test plus proper-subfield gcd checks.
// Self-contained little poly toolkit over GF(p); polyring proper builds on Field.
using PPoly = std::vector<std::uint32_t>;

PPoly ptrim(PPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}
PPoly pmul(const PPoly& a, const PPoly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i])
      for (size_t j = 0; j < b.size(); ++j)
        r[i + j] = (r[i + j] + std::uint64_t(a[i]) * b[j]) % p;
  return ptrim(std::move(r));
}
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint32_t r = 1, e = p - 2;
  std::uint64_t b = a;
  while (e) {
    if (e & 1) r = (r * b) % p;
    b = (b * b) % p;
    e >>= 1;
  }
  return r;
}
PPoly pmod(PPoly a, const PPoly& b, std::uint32_t p) {
  a = ptrim(std::move(a));
  std::uint32_t binv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    std::uint64_t c = (std::uint64_t(a.back()) * binv) % p;
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) {
      std::uint32_t sub = (c * b[i]) % p;
      a[off + i] = (a[off + i] + p - sub) % p;
    }
    a = ptrim(std::move(a));
    if (a.empty()) break;
  }
  return a;
}
PPoly pgcd(PPoly a, PPoly b, std::uint32_t p) {
  a = ptrim(std::move(a)); b = ptrim(std::move(b));
  while (!b.empty()) {
    PPoly r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}
PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& mod, std::uint32_t p) {
  return pmod(pmul(a, b, p), mod, p);
}
PPoly ppowmod(PPoly base, std::uint64_t e, const PPoly& mod, std::uint32_t p) {
  PPoly r{1};
  while (e) {
    if (e & 1) r = pmulmod(r, base, mod, p);
    base = pmulmod(base, base, mod, p);
    e >>= 1;
  }
  return r;
}
// x^(p^k) mod f by k repeated p-th powers
PPoly frobenius_power(const PPoly& f, std::uint32_t p, std::uint32_t k) {
  PPoly r{0, 1};
  for (std::uint32_t i = 0; i < k; ++i) r = ppowmod(r, p, f, p);
  return r;
}

bool prime_poly_irreducible(const PPoly& f, std::uint32_t p) {
  std::uint32_t m = std::uint32_t(f.size()) - 1;
  if (m == 0) return false;
  if (m == 1) return true;
  PPoly xq = frobenius_power(f, p, m); // x^(p^m) mod f
  PPoly x{0, 1};
  // x^(p^m) - x == 0 mod f
  PPoly diff = xq;
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = (diff[1] + p - 1) % p;
  if (!ptrim(diff).empty()) return false;
  for (std::uint32_t ell : prime_factors(m)) {
    PPoly xs = frobenius_power(f, p, m / ell);
    PPoly d = xs;
    if (d.size() < 2) d.resize(2, 0);
    d[1] = (d[1] + p - 1) % p;
    d = ptrim(std::move(d));
    if (pgcd(f, d, p).size() != 1) return false; // gcd must be a unit
  }
  return true;
}

std::shared_ptr<FieldBody> build_body(std::uint32_t p, std::uint32_t m,
                                      std::vector<std::uint32_t> defining) {
  auto b = std::make_shared<FieldBody>();
  b->p = p;
  b->m = m;
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) q *= p;
  if (q > (1u << 20))
    throw std::invalid_argument("field order " + std::to_string(q) + " exceeds 2^20");
  b->q = std::uint32_t(q);
  b->defining = std::move(defining);

  b->neg_tab.resize(b->q);
  for (felem a = 0; a < b->q; ++a) {
    if (m == 1) {
      b->neg_tab[a] = (p - a) % p;
    } else {
      felem r = 0, mult = 1, x = a;
      for (std::uint32_t i = 0; i < m; ++i) {
        r += ((p - x % p) % p) * mult;
        x /= p; mult *= p;
      }
      b->neg_tab[a] = r;
    }
  }

  if (m > 1 && b->q <= FieldBody::kTableLimit) {
    // find a primitive element with slow arithmetic, then build exp/log
    auto ell = prime_factors(b->q - 1);
    felem prim = 0;
    for (felem cand = 2; cand < b->q; ++cand) {
      bool ok = true;
      for (auto l : ell) {
        FieldBody tmp = *b; // slow ops only need p,m,defining
        if (body_pow(tmp, cand, (b->q - 1) / l) == 1) { ok = false; break; }
      }
      if (ok) { prim = cand; break; }
    }
    if (prim == 0) throw std::logic_error("no primitive element found");
    b->exp_tab.resize(2 * (b->q - 1));
    b->log_tab.assign(b->q, 0);
    felem cur = 1;
    for (std::uint32_t i = 0; i < b->q - 1; ++i) {
      b->exp_tab[i] = cur;
      b->log_tab[cur] = i;
      cur = b->mul_slow(cur, prim);
    }
    for (std::uint32_t i = 0; i < b->q - 1; ++i)
      b->exp_tab[b->q - 1 + i] = b->exp_tab[i];
    b->tables = true;
  }
  if (m > 1 && b->q <= FieldBody::kAddTableLimit) {
    b->add_tab.resize(std::size_t(b->q) * b->q);
    for (felem a = 0; a < b->q; ++a)
      for (felem c = 0; c < b->q; ++c)
        b->add_tab[std::size_t(a) * b->q + c] = b->add_slow(a, c);
  }
  if (m % 2 == 0) {
    std::uint64_t e = 1;
    for (std::uint32_t i = 0; i < m / 2; ++i) e *= p;
    b->conj_tab.resize(b->q);
    for (felem a = 0; a < b->q; ++a) b->conj_tab[a] = body_pow(*b, a, e);
  }
  if (m > 1) {
    b->wlog.assign(b->q, -1);
    felem w = p, cur = 1;
    std::uint64_t k = 0;
    do {
      b->wlog[cur] = std::int64_t(k);
      cur = b->mul(cur, w);
      ++k;
    } while (cur != 1 && k <= b->q);
    b->w_order = k;
  }
  return b;
}

// Compares monic polynomials of equal degree by coefficients from the highest
// degree term down, matching the printed notation order.
bool lex_less(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  for (size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

std::vector<std::uint32_t> default_defining(std::uint32_t p, std::uint32_t m) {
  if (p == 3 && m == 2) return {2, 2, 1}; // x^2+2x+2
  if (p == 5 && m == 2) return {4, 2, 1}; // x^2+2x+4
  // lexicographically smallest monic irreducible of degree m whose root x is
  // primitive in GF(p)[x]/(f)
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < m; ++i) count *= p;
  std::vector<std::uint32_t> best;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::vector<std::uint32_t> f(m + 1);
    std::uint64_t x = idx;
    for (std::uint32_t i = 0; i < m; ++i) { f[i] = x % p; x /= p; }
    f[m] = 1;
    if (f[0] == 0) continue; // x | f
    if (!prime_poly_irreducible(f, p)) continue;
    FieldBody tmp;
    tmp.p = p; tmp.m = m;
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) q *= p;
    tmp.q = std::uint32_t(q);
    tmp.defining = f;
    bool primitive = true;
    for (auto l : prime_factors(tmp.q - 1))
      if (body_pow(tmp, p /*the element x*/, (tmp.q - 1) / l) == 1) { primitive = false; break; }
    if (!primitive) continue;
    if (best.empty() || lex_less(f, best)) best = f;
  }
  if (best.empty()) throw std::logic_error("no primitive defining polynomial found");
  return best;
}

} // namespace
} // namespace detail

Field Field::make(std::uint32_t p, std::uint32_t m,
                  std::optional<std::vector<std::uint32_t>> defining) {
  if (!detail::is_prime_u32(p))
    throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
  std::vector<std::uint32_t> def;
  if (m == 1) {
    if (defining && !defining->empty())
      throw std::invalid_argument("prime fields take no defining polynomial");
  } else if (defining) {
    def = *defining;
    if (def.size() != m + 1 || def[m] != 1)
      throw std::invalid_argument("defining polynomial must be monic of degree m");
    for (auto c : def)
      if (c >= p) throw std::invalid_argument("defining polynomial coefficient out of range");
    if (!detail::prime_poly_irreducible(def, p))
      throw std::invalid_argument("defining polynomial is reducible over GF(p)");
  } else {
    def = detail::default_defining(p, m);
  }
  return Field(detail::build_body(p, m, std::move(def)));
}

Field Field::of_order(std::uint32_t q) {
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (!detail::is_prime_u32(p)) continue;
    if (q % p) continue;
    std::uint32_t m = 0, x = q;
    while (x % p == 0) { x /= p; ++m; }
    if (x != 1) break;
    return make(p, m);
  }
  throw std::invalid_argument(std::to_string(q) + " is not a prime power");
}

Field Field::from_descriptor(const std::string& s) {
  auto caret = s.find('^');
  if (caret == std::string::npos)
    return make(std::uint32_t(std::stoul(s)), 1);
  auto slash = s.find('/');
  std::uint32_t p = std::uint32_t(std::stoul(s.substr(0, caret)));
  std::uint32_t m = std::uint32_t(
      std::stoul(s.substr(caret + 1, slash == std::string::npos ? std::string::npos
                                                                : slash - caret - 1)));
  if (slash == std::string::npos) return make(p, m);
  std::string body = s.substr(slash + 1);
  // digits, highest degree first
  std::vector<std::uint32_t> def;
  for (auto it = body.rbegin(); it != body.rend(); ++it) {
    if (*it == ' ') continue;
    if (*it < '0' || *it > '9')
      throw std::invalid_argument("bad field descriptor: " + s);
    def.push_back(std::uint32_t(*it - '0'));
  }
  return make(p, m, def);
}

std::uint32_t Field::characteristic() const { return body_->p; }
std::uint32_t Field::degree() const { return body_->m; }
std::uint32_t Field::order() const { return body_->q; }
const std::vector<std::uint32_t>& Field::defining_poly() const { return body_->defining; }

std::string Field::descriptor() const {
  if (body_->m == 1) return std::to_string(body_->p);
  std::ostringstream os;
  os << body_->p << '^' << body_->m << '/';
  for (size_t i = body_->defining.size(); i-- > 0;) os << body_->defining[i];
  return os.str();
}

felem Field::add(felem a, felem b) const { return body_->add(a, b); }
felem Field::sub(felem a, felem b) const { return body_->sub(a, b); }
felem Field::neg(felem a) const { return body_->neg(a); }
felem Field::mul(felem a, felem b) const { return body_->mul(a, b); }

felem Field::inv(felem a) const {
  if (a == 0) throw std::invalid_argument("division by zero in " + descriptor());
  if (body_->tables) return body_->exp_tab[(body_->q - 1) - body_->log_tab[a]];
  return pow(a, std::int64_t(body_->q) - 2);
}

felem Field::div(felem a, felem b) const { return mul(a, inv(b)); }

felem Field::pow(felem a, long long e) const {
  const auto qm1 = std::int64_t(body_->q) - 1;
  if (a == 0) {
    if (e > 0) return 0;
    if (e == 0) return 1;
    throw std::invalid_argument("zero to a negative power");
  }
  std::int64_t r = e % qm1;
  if (r < 0) r += qm1;
  if (body_->tables) {
    std::uint64_t lg = (std::uint64_t(body_->log_tab[a]) * std::uint64_t(r)) % std::uint64_t(qm1);
    return body_->exp_tab[lg];
  }
  felem res = 1, base = a;
  std::uint64_t ee = std::uint64_t(r);
  while (ee) {
    if (ee & 1) res = mul(res, base);
    base = mul(base, base);
    ee >>= 1;
  }
  return res;
}

felem Field::conjugate(felem a) const {
  if (body_->m % 2 != 0)
    throw std::invalid_argument("conjugation needs even extension degree, field is " + descriptor());
  return body_->conj_tab[a];
}

bool Field::has_conjugation() const { return body_->m % 2 == 0; }

std::vector<std::uint32_t> Field::coeffs(felem a) const {
  std::vector<std::uint32_t> c(body_->m);
  for (std::uint32_t i = 0; i < body_->m; ++i) { c[i] = a % body_->p; a /= body_->p; }
  return c;
}

felem Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
  if (c.size() != body_->m) throw std::invalid_argument("coefficient vector has wrong length");
  felem r = 0;
  for (size_t i = c.size(); i-- > 0;) {
    if (c[i] >= body_->p) throw std::invalid_argument("residue out of range");
    r = r * body_->p + c[i];
  }
  return r;
}

felem Field::w_root() const {
  if (body_->m == 1) throw std::invalid_argument("prime fields have no designated root w");
  return body_->p;
}

std::optional<std::uint64_t> Field::w_log(felem a) const {
  if (body_->m == 1 || a >= body_->q || body_->wlog[a] < 0) return std::nullopt;
  return std::uint64_t(body_->wlog[a]);
}

bool Field::operator==(const Field& o) const {
  if (body_ == o.body_) return true;
  return body_->p == o.body_->p && body_->m == o.body_->m &&
         body_->defining == o.body_->defining;
}

FieldElement FieldElement::bin(const FieldElement& o,
                               felem (Field::*op)(felem, felem) const) const {
  if (field_ != o.field_)
    throw std::invalid_argument("field elements from different fields");
  return {field_, (field_.*op)(v_, o.v_)};
}

} // namespace qecc
