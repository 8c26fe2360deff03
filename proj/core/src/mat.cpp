#include "qecc/mat.hpp"

#include <stdexcept>

namespace qecc {

Mat Mat::from_rows(const Field& f, const std::vector<std::vector<felem>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  Mat m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Mat Mat::identity(const Field& f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<felem> Mat::row(std::size_t r) const {
  return {a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_};
}

Mat Mat::transposed() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

Mat Mat::conjugated() const {
  Mat t(field_, rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.at(r, c) = field_.conjugate(at(r, c));
  return t;
}

std::vector<felem> Mat::mul_vec(const std::vector<felem>& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  std::vector<felem> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    felem s = 0;
    for (std::size_t c = 0; c < cols_; ++c)
      if (at(r, c) && v[c]) s = field_.add(s, field_.mul(at(r, c), v[c]));
    out[r] = s;
  }
  return out;
}

RrefResult rref(const Mat& m) {
  const Field& F = m.field();
  Mat w = m;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < w.cols() && r < w.rows(); ++c) {
    std::size_t piv = r;
    while (piv < w.rows() && w.at(piv, c) == 0) ++piv;
    if (piv == w.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < w.cols(); ++j) std::swap(w.at(piv, j), w.at(r, j));
    felem inv = F.inv(w.at(r, c));
    if (inv != 1)
      for (std::size_t j = c; j < w.cols(); ++j) w.at(r, j) = F.mul(w.at(r, j), inv);
    for (std::size_t i = 0; i < w.rows(); ++i) {
      if (i == r) continue;
      felem f0 = w.at(i, c);
      if (f0 == 0) continue;
      for (std::size_t j = c; j < w.cols(); ++j)
        w.at(i, j) = F.sub(w.at(i, j), F.mul(f0, w.at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  Mat out(F, r, w.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < w.cols(); ++j) out.at(i, j) = w.at(i, j);
  return {out, r, pivots};
}

Mat nullspace(const Mat& m) {
  const Field& F = m.field();
  RrefResult R = rref(m);
  std::vector<std::size_t> free_cols;
  {
    std::size_t pi = 0;
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (pi < R.pivots.size() && R.pivots[pi] == c) { ++pi; continue; }
      free_cols.push_back(c);
    }
  }
  Mat basis(F, free_cols.size(), m.cols());
  for (std::size_t i = 0; i < free_cols.size(); ++i) {
    std::size_t fc = free_cols[i];
    basis.at(i, fc) = 1;
    for (std::size_t pi = 0; pi < R.pivots.size(); ++pi)
      basis.at(i, R.pivots[pi]) = F.neg(R.mat.at(pi, fc));
  }
  return rref(basis).mat;
}

Mat rowspace_combine(const Mat& a, const Mat& b, Combine kind) {
  if (a.field() != b.field() || a.cols() != b.cols())
    throw std::invalid_argument("row spaces live in different ambient spaces");
  const Field& F = a.field();
  const std::size_t n = a.cols();
  // Zassenhaus: rref of [A|A; B|0]; rows with a zero left half carry an
  // intersection basis on the right, the others a sum basis on the left.
  Mat big(F, a.rows() + b.rows(), 2 * n);
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) {
      big.at(r, c) = a.at(r, c);
      big.at(r, n + c) = a.at(r, c);
    }
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < n; ++c) big.at(a.rows() + r, c) = b.at(r, c);
  RrefResult R = rref(big);
  std::vector<std::vector<felem>> picked;
  for (std::size_t r = 0; r < R.mat.rows(); ++r) {
    bool left_zero = true;
    for (std::size_t c = 0; c < n && left_zero; ++c) left_zero = R.mat.at(r, c) == 0;
    if (kind == Combine::intersection && left_zero) {
      std::vector<felem> v(n);
      for (std::size_t c = 0; c < n; ++c) v[c] = R.mat.at(r, n + c);
      picked.push_back(std::move(v));
    } else if (kind == Combine::sum && !left_zero) {
      std::vector<felem> v(n);
      for (std::size_t c = 0; c < n; ++c) v[c] = R.mat.at(r, c);
      picked.push_back(std::move(v));
    }
  }
  if (picked.empty()) return Mat(F, 0, n);
  Mat sel = Mat::from_rows(F, picked);
  return rref(sel).mat;
}

bool in_rowspace(const RrefResult& basis, const std::vector<felem>& v) {
  const Field& F = basis.mat.field();
  std::vector<felem> w = v;
  for (std::size_t i = 0; i < basis.pivots.size(); ++i) {
    felem f0 = w[basis.pivots[i]];
    if (f0 == 0) continue;
    for (std::size_t c = 0; c < w.size(); ++c)
      w[c] = F.sub(w[c], F.mul(f0, basis.mat.at(i, c)));
  }
  for (felem x : w)
    if (x) return false;
  return true;
}

} // namespace qecc
