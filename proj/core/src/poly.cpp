#include "qecc/poly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace qecc {

Poly::Poly(Field f, std::vector<felem> coeffs) : field_(std::move(f)), c_(std::move(coeffs)) {
  for (felem c : c_)
    if (c >= field_.order()) throw std::invalid_argument("coefficient out of range for field");
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::monomial(const Field& f, std::uint32_t deg, felem c) {
  std::vector<felem> v(deg + 1, 0);
  v[deg] = c;
  return {f, std::move(v)};
}

Poly Poly::x_pow_minus(const Field& f, std::uint32_t n, felem lambda) {
  std::vector<felem> v(n + 1, 0);
  v[0] = f.neg(lambda);
  v[n] = 1;
  return {f, std::move(v)};
}

Poly Poly::operator+(const Poly& o) const {
  if (field_ != o.field_) throw std::invalid_argument("polynomials over different fields");
  std::vector<felem> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = field_.add(coeff(i), o.coeff(i));
  Poly out(field_);
  out.c_ = std::move(r);
  out.trim();
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  if (field_ != o.field_) throw std::invalid_argument("polynomials over different fields");
  std::vector<felem> r(std::max(c_.size(), o.c_.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) r[i] = field_.sub(coeff(i), o.coeff(i));
  Poly out(field_);
  out.c_ = std::move(r);
  out.trim();
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  if (field_ != o.field_) throw std::invalid_argument("polynomials over different fields");
  if (is_zero() || o.is_zero()) return Poly(field_);
  std::vector<felem> r(c_.size() + o.c_.size() - 1, 0);
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      if (o.c_[j]) r[i + j] = field_.add(r[i + j], field_.mul(c_[i], o.c_[j]));
  }
  Poly out(field_);
  out.c_ = std::move(r);
  out.trim();
  return out;
}

Poly Poly::operator*(felem s) const {
  Poly out(field_);
  if (s == 0) return out;
  out.c_ = c_;
  for (auto& c : out.c_) c = field_.mul(c, s);
  return out;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (field_ != d.field_) throw std::invalid_argument("polynomials over different fields");
  if (d.is_zero()) throw std::invalid_argument("polynomial division by zero");
  if (degree() < d.degree()) return {Poly(field_), *this};
  std::vector<felem> rem = c_;
  std::vector<felem> quo(c_.size() - d.c_.size() + 1, 0);
  const felem dinv = field_.inv(d.lead());
  for (size_t k = rem.size(); k-- >= d.c_.size() && k < rem.size();) {
    felem c = rem[k];
    if (c == 0) continue;
    felem q = field_.mul(c, dinv);
    size_t off = k - (d.c_.size() - 1);
    quo[off] = q;
    for (size_t i = 0; i < d.c_.size(); ++i)
      rem[off + i] = field_.sub(rem[off + i], field_.mul(q, d.c_[i]));
  }
  Poly pq(field_), pr(field_);
  pq.c_ = std::move(quo);
  pq.trim();
  pr.c_ = std::move(rem);
  pr.trim();
  return {pq, pr};
}

Poly Poly::monic() const {
  if (is_zero() || is_monic()) return *this;
  return *this * field_.inv(lead());
}

Poly Poly::derivative() const {
  if (degree() < 1) return Poly(field_);
  std::vector<felem> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) {
    felem scale = felem(i % field_.characteristic());
    r[i - 1] = field_.mul(c_[i], scale);
  }
  Poly out(field_);
  out.c_ = std::move(r);
  out.trim();
  return out;
}

felem Poly::eval(felem x) const {
  felem r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = field_.add(field_.mul(r, x), c_[i]);
  return r;
}

Poly Poly::shift_up(std::uint32_t k) const {
  if (is_zero()) return *this;
  std::vector<felem> r(c_.size() + k, 0);
  std::copy(c_.begin(), c_.end(), r.begin() + k);
  Poly out(field_);
  out.c_ = std::move(r);
  return out;
}

std::vector<felem> Poly::padded(std::size_t n) const {
  if (c_.size() > n) throw std::invalid_argument("polynomial does not fit in length");
  std::vector<felem> v(n, 0);
  std::copy(c_.begin(), c_.end(), v.begin());
  return v;
}

Poly gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly lcm(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly::zero(a.field());
  return ((a * b) / gcd(a, b)).monic();
}

Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& mod) {
  Poly r = Poly::one(base.field()) % mod;
  Poly b = base % mod;
  while (e) {
    if (e & 1) r = (r * b) % mod;
    b = (b * b) % mod;
    e >>= 1;
  }
  return r;
}

bool canonical_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto& ca = a.coeffs();
  const auto& cb = b.coeffs();
  for (size_t i = ca.size(); i-- > 0;)
    if (ca[i] != cb[i]) return ca[i] < cb[i];
  return false;
}

Poly Factorization::multiply_back() const {
  Poly r = Poly::one(input.field()) * unit;
  for (const auto& [f, e] : factors)
    for (int i = 0; i < e; ++i) r = r * f;
  return r;
}

namespace {

// x^(q^k) mod f via k rounds of q-th powers.
Poly frobenius(const Poly& f, std::uint32_t k) {
  const auto q = f.field().order();
  Poly r = Poly::x(f.field()) % f;
  for (std::uint32_t i = 0; i < k; ++i) r = pow_mod(r, q, f);
  return r;
}

// p-th root of f = g(x^p): coefficient c of x^(p*i) maps to c^(q/p) at x^i.
Poly pth_root(const Poly& f) {
  const auto& F = f.field();
  const auto p = F.characteristic();
  std::vector<felem> r(f.coeffs().size() / p + 1, 0);
  const long long e = F.order() / p; // inverse of Frobenius: c -> c^(p^(m-1))
  for (size_t i = 0; i < f.coeffs().size(); i += p)
    r[i / p] = F.pow(f.coeffs()[i], e);
  return Poly(F, std::move(r));
}

// Squarefree decomposition in characteristic p (Yun's algorithm with the
// p-th-power branch). Returns pairwise coprime squarefree parts with their
// multiplicities; input must be monic.
void squarefree(const Poly& f, int outer_mult, std::vector<std::pair<Poly, int>>& out) {
  if (f.degree() < 1) return;
  Poly fp = f.derivative();
  if (fp.is_zero()) {
    squarefree(pth_root(f), outer_mult * int(f.field().characteristic()), out);
    return;
  }
  Poly c = gcd(f, fp);
  Poly w = (f / c).monic();
  int i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly z = (w / y).monic();
    if (z.degree() > 0) out.emplace_back(z, i * outer_mult);
    ++i;
    w = std::move(y);
    c = (c / w).monic();
  }
  if (c.degree() > 0)
    squarefree(pth_root(c), outer_mult * int(f.field().characteristic()), out);
}

// Equal-degree splitting (Cantor-Zassenhaus) of a product of distinct monic
// irreducibles all of degree d.
void equal_degree(const Poly& f, std::uint32_t d, std::mt19937_64& rng,
                  std::vector<Poly>& out) {
  const auto& F = f.field();
  if (std::uint32_t(f.degree()) == d) {
    out.push_back(f.monic());
    return;
  }
  const auto q = F.order();
  Poly splitter(F);
  while (true) {
    std::vector<felem> rc(std::size_t(f.degree()), 0);
    for (auto& c : rc) c = felem(rng() % q);
    Poly a(F, std::move(rc));
    if (a.degree() < 1) continue;
    Poly t(F);
    if (q % 2 == 0) {
      // char 2: additive trace sum_{j<log2(q)*d} a^(2^j)
      std::uint32_t rounds = d;
      std::uint32_t m2 = 0;
      for (std::uint32_t x = q; x > 1; x >>= 1) ++m2;
      rounds = m2 * d;
      Poly acc = a % f, term = a % f;
      for (std::uint32_t j = 1; j < rounds; ++j) {
        term = (term * term) % f;
        acc = acc + term;
      }
      t = acc;
    } else {
      // odd q: a^((q^d-1)/2) = norm(a)^((q-1)/2), norm = prod a^(q^i)
      Poly norm = a % f, frob = a % f;
      for (std::uint32_t i = 1; i < d; ++i) {
        frob = pow_mod(frob, q, f);
        norm = (norm * frob) % f;
      }
      t = pow_mod(norm, (q - 1) / 2, f) - Poly::one(F);
    }
    Poly g = gcd(t, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      splitter = g;
      break;
    }
  }
  equal_degree(splitter, d, rng, out);
  equal_degree((f / splitter).monic(), d, rng, out);
}

} // namespace

Factorization factorize(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  Factorization out{f, f.lead(), {}};
  Poly g = f.monic();
  if (g.degree() < 1) return out;

  std::vector<std::pair<Poly, int>> parts;
  squarefree(g, 1, parts);

  std::mt19937_64 rng(seed);
  for (const auto& [part, mult] : parts) {
    // distinct-degree: peel off products of irreducibles of degree d
    Poly rest = part;
    Poly h = Poly::x(rest.field()) % rest;
    for (std::uint32_t d = 1; rest.degree() > 0 && 2 * int(d) <= rest.degree(); ++d) {
      h = pow_mod(h, rest.field().order(), rest);
      Poly dd = gcd(h - (Poly::x(rest.field()) % rest), rest);
      if (dd.degree() > 0) {
        std::vector<Poly> irr;
        equal_degree(dd, d, rng, irr);
        for (auto& p : irr) out.factors.emplace_back(std::move(p), mult);
        rest = (rest / dd).monic();
        h = h % rest;
      }
    }
    if (rest.degree() > 0) out.factors.emplace_back(rest, mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  return out;
}

bool is_irreducible(const Poly& f) {
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  const auto& F = f.field();
  Poly x = Poly::x(F) % f;
  if (!(frobenius(f, std::uint32_t(n)) - x).is_zero()) return false;
  for (int ell = 2; ell <= n; ++ell) {
    if (n % ell) continue;
    bool prime = true;
    for (int d = 2; d * d <= ell; ++d)
      if (ell % d == 0) { prime = false; break; }
    if (!prime) continue;
    Poly diff = frobenius(f, std::uint32_t(n / ell)) - x;
    if (gcd(diff, f).degree() != 0) return false;
  }
  return true;
}

DivisorSeq::DivisorSeq(Factorization fact) : fact_(std::move(fact)), count_(1) {
  for (const auto& [p, e] : fact_.factors) {
    (void)p;
    count_ *= std::uint64_t(e) + 1;
  }
}

std::vector<int> DivisorSeq::exponents(std::uint64_t index) const {
  if (index >= count_) throw std::out_of_range("divisor index out of range");
  std::vector<int> exps(fact_.factors.size());
  for (size_t i = 0; i < fact_.factors.size(); ++i) {
    std::uint64_t radix = std::uint64_t(fact_.factors[i].second) + 1;
    exps[i] = int(index % radix);
    index /= radix;
  }
  return exps;
}

Poly DivisorSeq::at(std::uint64_t index) const {
  auto exps = exponents(index);
  Poly d = Poly::one(fact_.input.field());
  for (size_t i = 0; i < exps.size(); ++i)
    for (int j = 0; j < exps[i]; ++j) d = d * fact_.factors[i].first;
  return d;
}

} // namespace qecc
