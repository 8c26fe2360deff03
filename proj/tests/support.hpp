#ifndef QECC_TESTS_SUPPORT_HPP
#define QECC_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "qecc/code.hpp"
#include "qecc/field.hpp"
#include "qecc/mat.hpp"
#include "qecc/poly.hpp"

namespace testsupport {

using namespace qecc;

// Deliberately plain reference implementation: walk every message vector
// recursively and combine generator rows term by term. Independent of the
// library's enumeration and parity-search paths.
inline void oracle_walk(const Field& F, const Mat& gen, std::vector<felem>& msg,
                        std::size_t pos, int& best) {
  if (pos == gen.rows()) {
    std::vector<felem> cw(gen.cols(), 0);
    bool nonzero_msg = false;
    for (std::size_t i = 0; i < gen.rows(); ++i) {
      if (!msg[i]) continue;
      nonzero_msg = true;
      for (std::size_t c = 0; c < gen.cols(); ++c)
        cw[c] = F.add(cw[c], F.mul(msg[i], gen.at(i, c)));
    }
    if (!nonzero_msg) return;
    int w = 0;
    for (felem x : cw) w += x != 0;
    if (w < best) best = w;
    return;
  }
  for (felem v = 0; v < F.order(); ++v) {
    msg[pos] = v;
    oracle_walk(F, gen, msg, pos + 1, best);
  }
  msg[pos] = 0;
}

inline int oracle_min_weight(const LinearCode& c) {
  std::vector<felem> msg(c.dim(), 0);
  int best = int(c.length()) + 1;
  oracle_walk(c.field(), c.gen(), msg, 0, best);
  return best;
}

inline Poly random_poly(const Field& F, std::uint32_t max_deg, std::mt19937_64& rng,
                        bool monic = false) {
  std::uint32_t deg = std::uint32_t(rng() % (max_deg + 1));
  std::vector<felem> c(deg + 1, 0);
  for (auto& x : c) x = felem(rng() % F.order());
  if (monic || c.back() == 0) c.back() = monic ? 1 : felem(1 + rng() % (F.order() - 1));
  return Poly(F, std::move(c));
}

inline Mat random_mat(const Field& F, std::size_t rows, std::size_t cols,
                      std::mt19937_64& rng) {
  Mat m(F, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = felem(rng() % F.order());
  return m;
}

} // namespace testsupport

#endif
