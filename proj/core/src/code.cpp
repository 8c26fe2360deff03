#include "qecc/code.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace qecc {

int DistanceStatus::value() const {
  if (kind != Kind::exact) throw std::logic_error("distance is not exact");
  return lo;
}

std::string DistanceStatus::to_string() const {
  switch (kind) {
    case Kind::unknown: return "?";
    case Kind::exact: return std::to_string(lo);
    case Kind::bounds: return std::to_string(lo) + ".." + std::to_string(hi);
    case Kind::infinite: return "inf";
  }
  return "?";
}

ShiftMap ShiftMap::constacyclic(std::size_t n, felem lambda) {
  if (lambda == 0) throw std::invalid_argument("shift constant must be nonzero");
  return {Kind::constacyclic, n, lambda, 1, {}};
}

ShiftMap ShiftMap::quasi_twisted(std::size_t n, std::size_t ell, felem lambda) {
  if (lambda == 0) throw std::invalid_argument("shift constant must be nonzero");
  if (ell == 0 || n % ell) throw std::invalid_argument("index must divide the length");
  return {Kind::quasi_twisted, n, lambda, ell, {}};
}

ShiftMap ShiftMap::polycyclic(std::vector<felem> assoc) {
  ShiftMap s{Kind::polycyclic, assoc.size(), 1, 1, std::move(assoc)};
  return s;
}

std::vector<felem> ShiftMap::apply(const Field& f, const std::vector<felem>& v) const {
  const std::size_t n = length;
  if (v.size() != n) throw std::invalid_argument("vector length does not match shift map");
  std::vector<felem> out(n, 0);
  switch (kind) {
    case Kind::cyclic:
    case Kind::constacyclic: {
      out[0] = kind == Kind::cyclic ? v[n - 1] : f.mul(lambda, v[n - 1]);
      for (std::size_t i = 1; i < n; ++i) out[i] = v[i - 1];
      break;
    }
    case Kind::quasi_twisted: {
      for (std::size_t i = 0; i < index; ++i) out[i] = f.mul(lambda, v[n - index + i]);
      for (std::size_t i = index; i < n; ++i) out[i] = v[i - index];
      break;
    }
    case Kind::polycyclic: {
      for (std::size_t i = 1; i < n; ++i) out[i] = v[i - 1];
      felem c = v[n - 1];
      if (c)
        for (std::size_t i = 0; i < n; ++i)
          if (assoc[i]) out[i] = f.add(out[i], f.mul(c, assoc[i]));
      break;
    }
  }
  return out;
}

struct LinearCode::Body {
  Field field;
  std::size_t n;
  RrefResult gen;
  mutable std::mutex mu;
  mutable DistanceStatus dist;
  mutable std::uint64_t dist_effort = 0; // subset budget that produced `dist`

  Body(Field f, std::size_t len, RrefResult g)
      : field(std::move(f)), n(len), gen(std::move(g)) {}
};

LinearCode::LinearCode(Field f, std::size_t n, const Mat& generators) {
  if (generators.cols() != n && generators.rows() != 0)
    throw std::invalid_argument("generator matrix width differs from code length");
  Mat g = generators.rows() ? generators : Mat(f, 0, n);
  body_ = std::make_shared<Body>(std::move(f), n, rref(g));
  if (body_->gen.rank == 0) body_->dist = DistanceStatus::infinite();
}

LinearCode LinearCode::from_rows(const Field& f, std::size_t n,
                                 const std::vector<std::vector<felem>>& rows) {
  if (rows.empty()) return zero_code(f, n);
  return LinearCode(f, n, Mat::from_rows(f, rows));
}

LinearCode LinearCode::zero_code(const Field& f, std::size_t n) {
  return LinearCode(f, n, Mat(f, 0, n));
}

LinearCode LinearCode::full_space(const Field& f, std::size_t n) {
  return LinearCode(f, n, Mat::identity(f, n));
}

const Field& LinearCode::field() const { return body_->field; }
std::size_t LinearCode::length() const { return body_->n; }
std::size_t LinearCode::dim() const { return body_->gen.rank; }
const Mat& LinearCode::gen() const { return body_->gen.mat; }
const RrefResult& LinearCode::gen_rref() const { return body_->gen; }

DistanceStatus LinearCode::distance_status() const {
  std::lock_guard<std::mutex> lk(body_->mu);
  return body_->dist;
}

std::string LinearCode::params_string() const {
  auto d = distance_status();
  std::string s = "[" + std::to_string(length()) + "," + std::to_string(dim());
  if (d.kind != DistanceStatus::Kind::unknown) s += "," + d.to_string();
  return s + "]";
}

bool LinearCode::operator==(const LinearCode& o) const {
  return body_->field == o.body_->field && body_->n == o.body_->n &&
         body_->gen.mat == o.body_->gen.mat;
}

LinearCode shift_closure_code(const Field& f, const std::vector<std::vector<felem>>& generators,
                              const ShiftMap& s) {
  const std::size_t n = s.length;
  std::vector<std::vector<felem>> basis;
  auto span = rref(Mat(f, 0, n));
  auto try_add = [&](const std::vector<felem>& v) {
    if (in_rowspace(span, v)) return false;
    basis.push_back(v);
    span = rref(Mat::from_rows(f, basis));
    return true;
  };
  std::vector<std::vector<felem>> work;
  for (const auto& g : generators) {
    if (g.size() != n) throw std::invalid_argument("generator length differs from shift length");
    if (try_add(g)) work.push_back(g);
  }
  // the orbit of any vector closes after at most n * #generators shifts
  std::size_t steps = 0;
  const std::size_t step_limit = (n + 1) * (generators.size() + 1);
  while (!work.empty()) {
    auto v = std::move(work.back());
    work.pop_back();
    auto sh = s.apply(f, v);
    if (try_add(sh)) work.push_back(std::move(sh));
    if (++steps > step_limit * (n + 1)) break;
  }
  LinearCode c = LinearCode::from_rows(f, n, basis);
  // closure sanity: every basis row's shift stays inside
  for (std::size_t r = 0; r < c.gen().rows(); ++r)
    if (!in_rowspace(c.gen_rref(), s.apply(f, c.gen().row(r))))
      throw std::logic_error("shift closure failed to stabilize");
  return c;
}

LinearCode constacyclic_code(std::uint32_t n, const FieldElement& lambda, const Poly& g) {
  const Field& F = lambda.field();
  if (g.field() != F) throw std::invalid_argument("generator over the wrong field");
  if (!g.is_monic()) throw std::invalid_argument("generator polynomial must be monic");
  Poly mod = Poly::x_pow_minus(F, n, lambda.value());
  if (!(mod % g).is_zero())
    throw std::invalid_argument("generator does not divide x^n - lambda (malformed row?)");
  std::size_t k = n - std::size_t(g.degree());
  std::vector<std::vector<felem>> rows;
  rows.reserve(k);
  for (std::size_t j = 0; j < k; ++j) rows.push_back(g.shift_up(std::uint32_t(j)).padded(n));
  return LinearCode::from_rows(F, n, rows);
}

LinearCode cyclic_code(std::uint32_t n, const Poly& g) {
  return constacyclic_code(n, FieldElement(g.field(), 1), g);
}

LinearCode polycyclic_code(const Poly& f, const Poly& g) {
  const Field& F = f.field();
  if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("modulus must be monic");
  if (!g.is_monic()) throw std::invalid_argument("generator polynomial must be monic");
  if (!(f % g).is_zero()) throw std::invalid_argument("generator does not divide the modulus");
  std::size_t n = std::size_t(f.degree());
  std::size_t k = n - std::size_t(g.degree());
  std::vector<std::vector<felem>> rows;
  rows.reserve(k);
  for (std::size_t j = 0; j < k; ++j) rows.push_back(g.shift_up(std::uint32_t(j)).padded(n));
  return LinearCode::from_rows(F, n, rows);
}

Poly gqp_check_poly(const std::vector<Poly>& f_list, const std::vector<Poly>& a_list) {
  if (f_list.empty() || f_list.size() != a_list.size())
    throw std::invalid_argument("need matching nonempty f and a lists");
  const Field& F = f_list[0].field();
  Poly h = Poly::one(F);
  for (std::size_t i = 0; i < f_list.size(); ++i) {
    const Poly& f = f_list[i];
    if (!f.is_monic() || f.degree() < 1) throw std::invalid_argument("block modulus must be monic");
    if (a_list[i].degree() >= f.degree())
      throw std::invalid_argument("block generator degree must stay below the modulus degree");
    h = lcm(h, (f / gcd(f, a_list[i])).monic());
  }
  return h;
}

namespace {

std::vector<felem> gqp_tuple_vector(const std::vector<Poly>& f_list,
                                    const std::vector<Poly>& cur) {
  std::vector<felem> v;
  for (std::size_t i = 0; i < f_list.size(); ++i) {
    auto blk = cur[i].padded(std::size_t(f_list[i].degree()));
    v.insert(v.end(), blk.begin(), blk.end());
  }
  return v;
}

LinearCode gqp_span_rows(const std::vector<Poly>& f_list, const std::vector<Poly>& a_list,
                         std::size_t count) {
  const Field& F = f_list[0].field();
  std::size_t n = 0;
  for (const auto& f : f_list) n += std::size_t(f.degree());
  std::vector<Poly> cur = a_list;
  std::vector<std::vector<felem>> rows;
  Poly x = Poly::x(F);
  for (std::size_t j = 0; j < count; ++j) {
    rows.push_back(gqp_tuple_vector(f_list, cur));
    for (std::size_t i = 0; i < cur.size(); ++i) cur[i] = (cur[i] * x) % f_list[i];
  }
  return LinearCode::from_rows(F, n, rows);
}

} // namespace

LinearCode gqp_code(const std::vector<Poly>& f_list, const std::vector<Poly>& a_list) {
  Poly h = gqp_check_poly(f_list, a_list);
  return gqp_span_rows(f_list, a_list, std::size_t(h.degree()));
}

LinearCode gqp_subcode(const std::vector<Poly>& f_list, const std::vector<Poly>& a_list,
                       std::size_t rows) {
  gqp_check_poly(f_list, a_list); // degree preconditions
  return gqp_span_rows(f_list, a_list, rows);
}

LinearCode dual(const LinearCode& c, DualKind kind) {
  const Field& F = c.field();
  if (kind == DualKind::hermitian && !F.has_conjugation())
    throw std::invalid_argument("hermitian dual needs an even extension degree");
  if (c.dim() == 0) return LinearCode::full_space(F, c.length());
  Mat g = kind == DualKind::hermitian ? c.gen().conjugated() : c.gen();
  Mat ns = nullspace(g);
  if (ns.rows() == 0) return LinearCode::zero_code(F, c.length());
  return LinearCode(F, c.length(), ns);
}

bool code_contains(const LinearCode& outer, const LinearCode& inner) {
  if (outer.field() != inner.field() || outer.length() != inner.length())
    throw std::invalid_argument("codes live in different ambient spaces");
  for (std::size_t r = 0; r < inner.gen().rows(); ++r)
    if (!in_rowspace(outer.gen_rref(), inner.gen().row(r))) return false;
  return true;
}

LinearCode hull(const LinearCode& c, DualKind kind) {
  return code_intersection(c, dual(c, kind));
}

LinearCode code_sum(const LinearCode& a, const LinearCode& b) {
  Mat s = rowspace_combine(a.gen(), b.gen(), Combine::sum);
  if (s.rows() == 0) return LinearCode::zero_code(a.field(), a.length());
  return LinearCode(a.field(), a.length(), s);
}

LinearCode code_intersection(const LinearCode& a, const LinearCode& b) {
  Mat s = rowspace_combine(a.gen(), b.gen(), Combine::intersection);
  if (s.rows() == 0) return LinearCode::zero_code(a.field(), a.length());
  return LinearCode(a.field(), a.length(), s);
}

// --- minimum distance engine --------------------------------------------------

namespace {

std::uint64_t pow_capped(std::uint64_t base, std::uint64_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

std::uint64_t binom_capped(std::uint64_t n, std::uint64_t w, std::uint64_t cap) {
  // exact stepwise binomial with clamping
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= w; ++i) {
    std::uint64_t num = n - w + i;
    // r * num may overflow: clamp conservatively
    if (r > cap / num * 2 + 1) return cap + 1;
    r = r * num / i;
    if (r > cap) return cap + 1;
  }
  return r;
}

// Strategy A: odometer over all messages, incremental codeword updates.
int enumerate_min_weight(const Field& F, const Mat& gen) {
  const std::size_t k = gen.rows(), n = gen.cols();
  const std::uint32_t q = F.order();
  std::vector<felem> msg(k, 0), cw(n, 0);
  int best = int(n) + 1;
  int weight = 0;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= q;
  for (std::uint64_t step = 1; step < total; ++step) {
    std::size_t i = 0;
    while (true) {
      felem oldv = msg[i];
      felem newv = oldv + 1 == q ? 0 : oldv + 1;
      msg[i] = newv;
      felem delta = F.sub(newv, oldv);
      for (std::size_t c = 0; c < n; ++c) {
        felem g = gen.at(i, c);
        if (!g) continue;
        felem before = cw[c];
        felem after = F.add(before, F.mul(delta, g));
        cw[c] = after;
        weight += int(after != 0) - int(before != 0);
      }
      if (newv != 0) break;
      ++i;
    }
    if (weight < best && weight > 0) best = weight;
  }
  return best;
}

struct ParitySearch {
  const Field& F;
  std::vector<std::vector<felem>> cols; // column-major parity check
  std::size_t rows, n;
  unsigned threads;

  ParitySearch(const Field& f, const Mat& h, unsigned th)
      : F(f), rows(h.rows()), n(h.cols()), threads(th ? th : std::thread::hardware_concurrency()) {
    if (threads == 0) threads = 1;
    cols.resize(n);
    for (std::size_t c = 0; c < n; ++c) {
      cols[c].resize(rows);
      for (std::size_t r = 0; r < rows; ++r) cols[c][r] = h.at(r, c);
    }
  }

  // true iff some w columns are linearly dependent (all subsets of size < w
  // are known independent when levels are visited in ascending order)
  bool level_has_dependence(std::size_t w) const {
    std::atomic<bool> found{false};
    auto run = [&](std::size_t first_lo, std::size_t first_hi) {
      std::vector<std::vector<felem>> basis; // normalized reduced columns
      std::vector<std::size_t> piv;
      basis.reserve(w);
      piv.reserve(w);
      std::vector<felem> red(rows);
      auto dfs = [&](auto&& self, std::size_t start, std::size_t depth) -> bool {
        for (std::size_t c = start; c + (w - 1 - depth) < n; ++c) {
          if (found.load(std::memory_order_relaxed)) return false;
          red = cols[c];
          for (std::size_t b = 0; b < basis.size(); ++b) {
            felem f0 = red[piv[b]];
            if (!f0) continue;
            const auto& bc = basis[b];
            for (std::size_t r = 0; r < rows; ++r)
              if (bc[r]) red[r] = F.sub(red[r], F.mul(f0, bc[r]));
          }
          std::size_t pr = rows;
          for (std::size_t r = 0; r < rows; ++r)
            if (red[r]) { pr = r; break; }
          if (pr == rows) {
            if (depth + 1 == w) return true;
            continue; // dependent below level w: cannot happen with ascending levels
          }
          if (depth + 1 == w) continue;
          felem inv = F.inv(red[pr]);
          auto norm = red;
          if (inv != 1)
            for (auto& x : norm) x = F.mul(x, inv);
          basis.push_back(std::move(norm));
          piv.push_back(pr);
          bool hit = self(self, c + 1, depth + 1);
          basis.pop_back();
          piv.pop_back();
          if (hit) return true;
        }
        return false;
      };
      for (std::size_t c0 = first_lo; c0 < first_hi && !found.load(); ++c0) {
        basis.clear();
        piv.clear();
        red = cols[c0];
        std::size_t pr = rows;
        for (std::size_t r = 0; r < rows; ++r)
          if (red[r]) { pr = r; break; }
        if (pr == rows) {
          if (w == 1) { found = true; return; }
          continue;
        }
        if (w == 1) continue;
        felem inv = F.inv(red[pr]);
        auto norm = red;
        if (inv != 1)
          for (auto& x : norm) x = F.mul(x, inv);
        basis.push_back(std::move(norm));
        piv.push_back(pr);
        if (dfs(dfs, c0 + 1, 1)) found = true;
      }
    };
    if (threads <= 1 || n < 2 * threads) {
      run(0, n);
    } else {
      std::vector<std::thread> pool;
      std::size_t chunk = (n + threads - 1) / threads;
      for (unsigned t = 0; t < threads; ++t) {
        std::size_t lo = t * chunk, hi = std::min(n, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back(run, lo, hi);
      }
      for (auto& th : pool) th.join();
    }
    return found.load();
  }
};

} // namespace

DistanceStatus min_distance(const LinearCode& c, const DistanceBudget& budget) {
  const Field& F = c.field();
  const std::size_t k = c.dim(), n = c.length();
  if (k == 0) return DistanceStatus::infinite();

  {
    auto cached = c.distance_status();
    if (cached.is_exact() || cached.is_infinite()) return cached;
  }

  const std::uint64_t qk = pow_capped(F.order(), k, budget.enumeration_cap);
  const bool use_a =
      budget.force_strategy == 1 ||
      (budget.force_strategy == 0 && qk <= budget.enumeration_cap);

  DistanceStatus result;
  if (use_a) {
    if (qk > budget.enumeration_cap)
      throw std::invalid_argument("message enumeration forced beyond its cap");
    result = DistanceStatus::exact(enumerate_min_weight(F, c.gen()));
  } else {
    // witness upper bound: lightest generator row
    int hi = int(n);
    for (std::size_t r = 0; r < c.gen().rows(); ++r) {
      int wgt = 0;
      for (std::size_t col = 0; col < n; ++col) wgt += c.gen().at(r, col) != 0;
      hi = std::min(hi, wgt);
    }
    Mat h = nullspace(c.gen());
    if (h.rows() == 0) {
      result = DistanceStatus::exact(1);
    } else {
      ParitySearch search(F, h, budget.threads);
      std::uint64_t used = 0;
      result = DistanceStatus::bounds(1, hi);
      for (std::size_t w = 1; w <= std::size_t(hi); ++w) {
        std::uint64_t level = binom_capped(n, w, budget.subset_budget);
        if (used + level > budget.subset_budget) {
          result = DistanceStatus::bounds(int(w), hi);
          break;
        }
        used += level;
        if (search.level_has_dependence(w)) {
          result = DistanceStatus::exact(int(w));
          break;
        }
        result = DistanceStatus::bounds(int(w) + 1, hi);
      }
    }
  }

  // merge into the cache: exact always wins, otherwise keep the tighter bounds
  auto& bodyref = *c.body_;
  std::lock_guard<std::mutex> lk(bodyref.mu);
  if (!bodyref.dist.is_exact()) {
    if (result.is_exact() || bodyref.dist.kind == DistanceStatus::Kind::unknown ||
        result.lo > bodyref.dist.lo || result.hi < bodyref.dist.hi)
      bodyref.dist = result;
  }
  return bodyref.dist;
}

ExcludedWeight min_weight_excluding(const LinearCode& a, const LinearCode& b,
                                    const DistanceBudget& budget) {
  if (a.field() != b.field() || a.length() != b.length())
    throw std::invalid_argument("codes live in different ambient spaces");
  if (!code_contains(a, b)) throw std::invalid_argument("excluded set must be a subcode");
  const Field& F = a.field();
  const std::size_t n = a.length();
  if (a.dim() == b.dim()) return {true, true, 0};
  if (b.dim() == 0) {
    auto d = min_distance(a, budget);
    if (d.is_exact()) return {true, false, d.value()};
    return {false, false, 0};
  }
  const std::uint64_t total = pow_capped(F.order(), a.dim(), budget.enumeration_cap);
  if (total > budget.enumeration_cap) return {false, false, 0};

  // extend b's basis to a basis of a; difference = (nonzero span of E) + span(B)
  std::vector<std::vector<felem>> ext;
  auto span = b.gen_rref();
  std::vector<std::vector<felem>> all_rows;
  for (std::size_t r = 0; r < b.gen().rows(); ++r) all_rows.push_back(b.gen().row(r));
  for (std::size_t r = 0; r < a.gen().rows(); ++r) {
    auto row = a.gen().row(r);
    if (in_rowspace(span, row)) continue;
    all_rows.push_back(row);
    ext.push_back(row);
    span = rref(Mat::from_rows(F, all_rows));
  }

  const std::uint32_t q = F.order();
  const std::size_t ke = ext.size(), kb = b.dim();
  std::vector<felem> outer_msg(ke, 0), outer_vec(n, 0);
  int best = int(n) + 1;
  std::uint64_t outer_total = 1;
  for (std::size_t i = 0; i < ke; ++i) outer_total *= q;
  std::uint64_t inner_total = 1;
  for (std::size_t i = 0; i < kb; ++i) inner_total *= q;

  for (std::uint64_t outer = 1; outer < outer_total; ++outer) {
    std::size_t i = 0;
    while (true) {
      felem oldv = outer_msg[i];
      felem newv = oldv + 1 == q ? 0 : oldv + 1;
      outer_msg[i] = newv;
      felem delta = F.sub(newv, oldv);
      for (std::size_t c0 = 0; c0 < n; ++c0)
        if (ext[i][c0]) outer_vec[c0] = F.add(outer_vec[c0], F.mul(delta, ext[i][c0]));
      if (newv != 0) break;
      ++i;
    }
    // inner odometer over span(B), starting at outer_vec
    std::vector<felem> msg(kb, 0), cw = outer_vec;
    int weight = 0;
    for (felem x : cw) weight += x != 0;
    if (weight < best) best = weight;
    for (std::uint64_t inner = 1; inner < inner_total; ++inner) {
      std::size_t j = 0;
      while (true) {
        felem oldv = msg[j];
        felem newv = oldv + 1 == q ? 0 : oldv + 1;
        msg[j] = newv;
        felem delta = F.sub(newv, oldv);
        for (std::size_t c0 = 0; c0 < n; ++c0) {
          felem g = b.gen().at(j, c0);
          if (!g) continue;
          felem before = cw[c0];
          felem after = F.add(before, F.mul(delta, g));
          cw[c0] = after;
          weight += int(after != 0) - int(before != 0);
        }
        if (newv != 0) break;
        ++j;
      }
      if (weight < best) best = weight;
    }
  }
  return {true, false, best};
}

} // namespace qecc
