#ifndef QECC_MAT_HPP
#define QECC_MAT_HPP

#include <cstddef>
#include <vector>

#include "qecc/field.hpp"

namespace qecc {

/// Row-major matrix over a Field. Immutable in spirit: the linear-algebra
/// entry points below all return fresh matrices.
class Mat {
 public:
  Mat(Field f, std::size_t rows, std::size_t cols)
      : field_(std::move(f)), rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  static Mat from_rows(const Field& f, const std::vector<std::vector<felem>>& rows);
  static Mat identity(const Field& f, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  felem at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  felem& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  std::vector<felem> row(std::size_t r) const;
  bool operator==(const Mat& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

  Mat transposed() const;
  Mat conjugated() const; // entrywise a -> a^q over GF(q^2)
  std::vector<felem> mul_vec(const std::vector<felem>& v) const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<felem> a_;
};

struct RrefResult {
  Mat mat;                        // reduced row echelon form, zero rows dropped
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Mat& m);

/// Basis (in RREF) of { v : M v^T = 0 }; rows() == cols - rank(M).
Mat nullspace(const Mat& m);

enum class Combine { sum, intersection };

/// Basis (in RREF) of span(A)+span(B) or span(A) cap span(B), via the
/// Zassenhaus stacked-matrix method. A and B must agree on field and cols.
Mat rowspace_combine(const Mat& a, const Mat& b, Combine kind);

/// True iff v lies in the row space described by an RREF basis.
bool in_rowspace(const RrefResult& basis, const std::vector<felem>& v);

} // namespace qecc

#endif
