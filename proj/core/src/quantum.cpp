#include "qecc/quantum.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qecc {

std::string QuantumParams::to_string() const {
  std::ostringstream os;
  os << "[[" << n << "," << k << "," << d.to_string() << "]]_" << q;
  return os.str();
}

namespace {

void check_quantum_singleton(const QuantumParams& p) {
  if (p.d.is_exact() && p.k > (long long)p.n - 2 * p.d.value() + 2)
    throw std::logic_error("quantum Singleton bound violated by " + p.to_string());
}

DistanceStatus interval_min(const DistanceStatus& a, const DistanceStatus& b) {
  if (a.is_infinite()) return b;
  if (b.is_infinite()) return a;
  int lo = std::min(a.lo, b.lo);
  int hi = std::min(a.hi, b.hi);
  if (a.is_exact() && b.is_exact()) return DistanceStatus::exact(std::min(a.value(), b.value()));
  return DistanceStatus::bounds(lo, hi);
}

} // namespace

QuantumParams css(const LinearCode& c1, const LinearCode& c2, const DistanceBudget& budget) {
  if (c1.field() != c2.field() || c1.length() != c2.length())
    throw std::invalid_argument("css needs codes of equal length over the same field");
  if (!code_contains(c1, dual(c2)))
    throw std::invalid_argument("css precondition violated: dual(C2) is not inside C1");
  const std::size_t n = c1.length();
  DistanceStatus d1 = min_distance(c1, budget);
  DistanceStatus d2 = min_distance(c2, budget);
  QuantumParams p;
  p.n = n;
  p.k = (long long)c1.dim() + (long long)c2.dim() - (long long)n;
  p.d = interval_min(d1, d2);
  p.q = c1.field().order();
  p.provenance = "css(" + c1.params_string() + "," + c2.params_string() + ")";
  check_quantum_singleton(p);
  return p;
}

QuantumParams css_dual_containing(const LinearCode& c, const DistanceBudget& budget) {
  if (!code_contains(c, dual(c)))
    throw std::invalid_argument("code is not dual-containing");
  DistanceStatus d = min_distance(c, budget);
  QuantumParams p;
  p.n = c.length();
  p.k = 2 * (long long)c.dim() - (long long)c.length();
  p.d = d;
  p.q = c.field().order();
  p.provenance = "css_dual_containing(" + c.params_string() + ")";
  check_quantum_singleton(p);
  return p;
}

QuantumParams lisonek_singh(const LinearCode& c, const DistanceBudget& budget) {
  const Field& F = c.field();
  if (!F.has_conjugation())
    throw std::invalid_argument("stabilizer extension needs a field of even extension degree");
  if (c.dim() == 0) throw std::invalid_argument("stabilizer extension needs dimension >= 1");
  const std::size_t n = c.length();
  const long long k = (long long)c.dim();

  LinearCode ch = dual(c, DualKind::hermitian);
  LinearCode hull_code = code_intersection(c, ch);
  LinearCode sum_code = code_sum(c, ch);
  const long long e = k - (long long)hull_code.dim();

  QuantumParams p;
  p.n = n + std::size_t(e);
  p.k = (long long)n - 2 * k + e;
  p.q = F.order();
  p.e = e;

  ExcludedWeight w1 = min_weight_excluding(ch, hull_code, budget);
  ExcludedWeight w2 = min_weight_excluding(sum_code, c, budget);

  if (w1.empty && w2.empty) {
    // C is Hermitian self-dual; report the stabilizer weight d(C^perpH)
    p.d = min_distance(ch, budget);
  } else {
    const int kInf = int(p.n) + 1;
    int lo1 = kInf, lo2 = kInf;
    if (!w1.empty) {
      if (w1.computed) lo1 = w1.weight;
      else {
        auto dch = min_distance(ch, budget);
        lo1 = dch.known() ? dch.lo : 1;
      }
    }
    if (!w2.empty) {
      if (w2.computed) lo2 = w2.weight + 1;
      else {
        auto dsum = min_distance(sum_code, budget);
        lo2 = (dsum.known() ? dsum.lo : 1) + 1;
      }
    }
    int lower = std::min(lo1, lo2);
    int upper;
    bool upper_tight = false;
    if (w1.empty) {
      upper = int(p.n);
    } else if (w1.computed) {
      upper = w1.weight;
      upper_tight = true;
    } else if (hull_code.dim() == 0) {
      auto dch = min_distance(ch, budget);
      upper = dch.known() ? dch.hi : int(p.n);
    } else {
      upper = int(p.n);
    }
    lower = std::min(lower, upper);
    p.d = (upper_tight && lower == upper) ? DistanceStatus::exact(lower)
                                          : DistanceStatus::bounds(lower, upper);
  }

  std::ostringstream prov;
  prov << "lisonek_singh(" << c.params_string() << ", e=" << e << ")";
  p.provenance = prov.str();
  if (p.k < 0) throw std::logic_error("negative logical dimension in stabilizer extension");
  check_quantum_singleton(p);
  return p;
}

int symplectic_weight(const std::vector<felem>& v) {
  if (v.size() % 2) throw std::invalid_argument("symplectic weight needs even length");
  const std::size_t n = v.size() / 2;
  int w = 0;
  for (std::size_t i = 0; i < n; ++i) w += (v[i] != 0 || v[n + i] != 0);
  return w;
}

bool better_than(const QuantumParams& a, const QuantumParams& b) {
  if (!a.d.is_exact() || !b.d.is_exact())
    throw std::invalid_argument("better_than needs exact distances");
  if (a.n != b.n || a.q != b.q) return false;
  if (a.k == b.k && a.d.value() > b.d.value()) return true;
  if (a.k > b.k && a.d.value() == b.d.value()) return true;
  return false;
}

} // namespace qecc
