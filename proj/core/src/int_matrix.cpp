#include "gramclass/int_matrix.hpp"

#include <sstream>
#include <utility>

#include "gramclass/error.hpp"

namespace gramclass {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
  rows_ = int(rows.size());
  cols_ = rows_ == 0 ? 0 : int(rows.begin()->size());
  e_.reserve(size_t(rows_) * size_t(cols_));
  for (const auto& row : rows) {
    check(int(row.size()) == cols_, Errc::ShapeMismatch, "ragged matrix initializer");
    for (long long v : row) e_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(int rows, const std::vector<IntVector>& cols) {
  IntMatrix m(rows, int(cols.size()));
  for (int j = 0; j < int(cols.size()); ++j) {
    check(int(cols[size_t(j)].size()) == rows, Errc::ShapeMismatch, "column length mismatch");
    for (int i = 0; i < rows; ++i) m.at(i, j) = cols[size_t(j)][size_t(i)];
  }
  return m;
}

IntMatrix IntMatrix::column(const IntVector& v) {
  return from_columns(int(v.size()), {v});
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  check(cols_ == rhs.rows_, Errc::ShapeMismatch, "matrix product dimension mismatch");
  IntMatrix p(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) p.at(i, j) += a * rhs.at(k, j);
    }
  return p;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  check(rows_ == rhs.rows_ && cols_ == rhs.cols_, Errc::ShapeMismatch, "matrix sum dimension mismatch");
  IntMatrix s(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] + rhs.e_[i];
  return s;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  check(rows_ == rhs.rows_ && cols_ == rhs.cols_, Errc::ShapeMismatch, "matrix difference dimension mismatch");
  IntMatrix s(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) s.e_[i] = e_[i] - rhs.e_[i];
  return s;
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix s(rows_, cols_);
  for (size_t i = 0; i < e_.size(); ++i) s.e_[i] = -e_[i];
  return s;
}

IntVector IntMatrix::col(int j) const {
  IntVector v(size_t(rows_), Int(0));
  for (int i = 0; i < rows_; ++i) v[size_t(i)] = at(i, j);
  return v;
}

IntVector IntMatrix::row_vec(int i) const {
  IntVector v(size_t(cols_), Int(0));
  for (int j = 0; j < cols_; ++j) v[size_t(j)] = at(i, j);
  return v;
}

void IntMatrix::set_col(int j, const IntVector& v) {
  check(int(v.size()) == rows_, Errc::ShapeMismatch, "column length mismatch");
  for (int i = 0; i < rows_; ++i) at(i, j) = v[size_t(i)];
}

IntMatrix IntMatrix::block(int r0, int c0, int height, int width) const {
  check(r0 >= 0 && c0 >= 0 && height >= 0 && width >= 0 && r0 + height <= rows_ && c0 + width <= cols_,
        Errc::ShapeMismatch, "block out of range");
  IntMatrix b(height, width);
  for (int i = 0; i < height; ++i)
    for (int j = 0; j < width; ++j) b.at(i, j) = at(r0 + i, c0 + j);
  return b;
}

void IntMatrix::set_block(int r0, int c0, const IntMatrix& sub) {
  check(r0 >= 0 && c0 >= 0 && r0 + sub.rows_ <= rows_ && c0 + sub.cols_ <= cols_,
        Errc::ShapeMismatch, "block out of range");
  for (int i = 0; i < sub.rows_; ++i)
    for (int j = 0; j < sub.cols_; ++j) at(r0 + i, c0 + j) = sub.at(i, j);
}

IntMatrix IntMatrix::hcat(const IntMatrix& a, const IntMatrix& b) {
  check(a.rows_ == b.rows_, Errc::ShapeMismatch, "hcat row mismatch");
  IntMatrix m(a.rows_, a.cols_ + b.cols_);
  m.set_block(0, 0, a);
  m.set_block(0, a.cols_, b);
  return m;
}

void IntMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
}

void IntMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
}

void IntMatrix::add_col(int b, int a, const Int& factor) {
  for (int i = 0; i < rows_; ++i) at(i, b) += factor * at(i, a);
}

void IntMatrix::add_row(int b, int a, const Int& factor) {
  for (int j = 0; j < cols_; ++j) at(b, j) += factor * at(a, j);
}

void IntMatrix::negate_col(int j) {
  for (int i = 0; i < rows_; ++i) at(i, j) = -at(i, j);
}

bool IntMatrix::is_zero() const {
  for (const Int& v : e_)
    if (v != 0) return false;
  return true;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

bool IntMatrix::is_skew_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i) {
    if (at(i, i) != 0) return false;
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != -at(j, i)) return false;
  }
  return true;
}

bool IntMatrix::is_upper_unitriangular() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i) {
    if (at(i, i) != 1) return false;
    for (int j = 0; j < i; ++j)
      if (at(i, j) != 0) return false;
  }
  return true;
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < rows_; ++i) {
    if (i) os << ", ";
    os << '[';
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j);
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

IntVector mul(const IntMatrix& m, const IntVector& v) {
  check(int(v.size()) == m.cols(), Errc::ShapeMismatch, "matrix-vector dimension mismatch");
  IntVector out(size_t(m.rows()), Int(0));
  for (int i = 0; i < m.rows(); ++i) {
    Int acc = 0;
    for (int j = 0; j < m.cols(); ++j) acc += m.at(i, j) * v[size_t(j)];
    out[size_t(i)] = acc;
  }
  return out;
}

Int dot(const IntVector& a, const IntVector& b) {
  check(a.size() == b.size(), Errc::ShapeMismatch, "dot product length mismatch");
  Int acc = 0;
  for (size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

}  // namespace gramclass
