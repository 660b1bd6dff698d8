#pragma once

#include <cstddef>
#include <vector>

#include "salab/field.hpp"

namespace salab {

/// Dense row-major matrix over a FieldSpec.
class DenseMatrix {
 public:
  DenseMatrix(FieldSpec field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Coeff(0)) {}

  static DenseMatrix identity(FieldSpec field, std::size_t n);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Coeff& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Coeff& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_symmetric() const;
  bool is_zero() const;

  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  DenseMatrix scaled(const Coeff& c) const;
  DenseMatrix transposed() const;
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  FieldSpec field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Coeff> data_;
};

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> row_reduce(DenseMatrix& m);

std::size_t rank(DenseMatrix m);
Coeff determinant(DenseMatrix m);

/// Basis of the right null space {v : m v = 0}, one vector per free column.
std::vector<std::vector<Coeff>> null_space(DenseMatrix m);

}  // namespace salab
