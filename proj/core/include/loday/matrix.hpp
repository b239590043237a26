#pragma once

#include <cstddef>
#include <vector>

#include "loday/field.hpp"

namespace loday {

using Vec = std::vector<Scalar>;

/// Dense matrix over an exact field. Row-major storage; dimensions may be
/// zero (empty matrices occur naturally as quotient maps and unit objects).
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(Field field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

  static Matrix identity(Field field, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  void set_row(std::size_t r, const Vec& v);
  void set_col(std::size_t c, const Vec& v);

  bool is_zero() const;

  bool operator==(const Matrix&) const = default;

 private:
  Field field_;
  std::size_t rows_, cols_;
  Vec data_;
};

Matrix mul(const Matrix& a, const Matrix& b);
Matrix add(const Matrix& a, const Matrix& b);
Matrix sub(const Matrix& a, const Matrix& b);
Matrix neg(const Matrix& a);
Matrix scale(const Scalar& c, const Matrix& a);
Matrix transpose(const Matrix& a);

/// Kronecker product; index pairs are flattened row-major, so
/// (A (x) B)((i1,i2),(j1,j2)) = A(i1,j1) B(i2,j2) with (i1,i2) -> i1*rowsB+i2.
Matrix kron(const Matrix& a, const Matrix& b);

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix from_rows(Field field, std::size_t cols, const std::vector<Vec>& rows);

Vec mul_vec(const Matrix& a, const Vec& x);

Vec zero_vec(const Field& f, std::size_t n);
Vec unit_vec(const Field& f, std::size_t n, std::size_t i);
Vec add_vec(const Field& f, const Vec& a, const Vec& b);
Vec sub_vec(const Field& f, const Vec& a, const Vec& b);
Vec neg_vec(const Field& f, const Vec& a);
Vec scale_vec(const Field& f, const Scalar& c, const Vec& a);
/// y += c * x
void axpy(const Field& f, Vec& y, const Scalar& c, const Vec& x);
bool is_zero_vec(const Field& f, const Vec& a);

/// Flattens a matrix row-major; inverse of reshape.
Vec flatten(const Matrix& a);
Matrix reshape(Field field, std::size_t rows, std::size_t cols, const Vec& data);

}  // namespace loday
