#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "gramclass/numbers.hpp"

namespace gramclass {

using IntVector = std::vector<Int>;

// Dense row-major matrix of arbitrary-precision integers. Dimensions may be
// zero in either direction; products with an inner dimension of zero yield
// zero matrices of the outer shape.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * size_t(cols)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows);

  static IntMatrix identity(int n);
  static IntMatrix zero(int rows, int cols) { return IntMatrix(rows, cols); }
  static IntMatrix from_columns(int rows, const std::vector<IntVector>& cols);
  static IntMatrix column(const IntVector& v);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Int& at(int r, int c) { return e_[size_t(r) * cols_ + c]; }
  const Int& at(int r, int c) const { return e_[size_t(r) * cols_ + c]; }

  bool operator==(const IntMatrix&) const = default;

  IntMatrix transposed() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  IntMatrix operator+(const IntMatrix& rhs) const;
  IntMatrix operator-(const IntMatrix& rhs) const;
  IntMatrix operator-() const;

  IntVector col(int j) const;
  IntVector row_vec(int i) const;
  void set_col(int j, const IntVector& v);

  IntMatrix block(int r0, int c0, int height, int width) const;
  void set_block(int r0, int c0, const IntMatrix& sub);
  static IntMatrix hcat(const IntMatrix& a, const IntMatrix& b);

  void swap_cols(int a, int b);
  void swap_rows(int a, int b);
  // column b += factor * column a (and the row variant).
  void add_col(int b, int a, const Int& factor);
  void add_row(int b, int a, const Int& factor);
  void negate_col(int j);

  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }
  bool is_symmetric() const;
  bool is_skew_symmetric() const;
  bool is_upper_unitriangular() const;

  std::string str() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> e_;
};

IntVector mul(const IntMatrix& m, const IntVector& v);
Int dot(const IntVector& a, const IntVector& b);

}  // namespace gramclass
