#include "loday/matrix.hpp"

#include "loday/errors.hpp"

namespace loday {

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
  return m;
}

Vec Matrix::row(std::size_t r) const {
  Vec v(cols_);
  for (std::size_t c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

Vec Matrix::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

void Matrix::set_row(std::size_t r, const Vec& v) {
  for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
}

void Matrix::set_col(std::size_t c, const Vec& v) {
  for (std::size_t r = 0; r < rows_; ++r) at(r, c) = v[r];
}

bool Matrix::is_zero() const {
  for (const Scalar& s : data_)
    if (sgn(s) != 0) return false;
  return true;
}

Matrix mul(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows() || a.field() != b.field())
    throw structural_error("matrix product shape mismatch");
  const Field& f = a.field();
  Matrix out(f, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a.at(i, k);
      if (f.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        out.at(i, j) = f.add(out.at(i, j), f.mul(aik, b.at(k, j)));
    }
  return out;
}

Matrix add(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.field() != b.field())
    throw structural_error("matrix sum shape mismatch");
  const Field& f = a.field();
  Matrix out(f, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = f.add(a.at(i, j), b.at(i, j));
  return out;
}

Matrix sub(const Matrix& a, const Matrix& b) { return add(a, neg(b)); }

Matrix neg(const Matrix& a) {
  const Field& f = a.field();
  Matrix out(f, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = f.neg(a.at(i, j));
  return out;
}

Matrix scale(const Scalar& c, const Matrix& a) {
  const Field& f = a.field();
  Matrix out(f, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = f.mul(c, a.at(i, j));
  return out;
}

Matrix transpose(const Matrix& a) {
  Matrix out(a.field(), a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(j, i) = a.at(i, j);
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw structural_error("kron field mismatch");
  const Field& f = a.field();
  Matrix out(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Scalar& aij = a.at(i1, j1);
      if (f.is_zero(aij)) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2)
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2)
          out.at(i1 * b.rows() + i2, j1 * b.cols() + j2) = f.mul(aij, b.at(i2, j2));
    }
  return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.field() != b.field())
    throw structural_error("hstack shape mismatch");
  Matrix out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) out.at(i, a.cols() + j) = b.at(i, j);
  }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols() || a.field() != b.field())
    throw structural_error("vstack shape mismatch");
  Matrix out(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out.at(a.rows() + i, j) = b.at(i, j);
  return out;
}

Matrix from_rows(Field field, std::size_t cols, const std::vector<Vec>& rows) {
  Matrix out(field, rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw structural_error("row length mismatch");
    out.set_row(i, rows[i]);
  }
  return out;
}

Vec mul_vec(const Matrix& a, const Vec& x) {
  if (x.size() != a.cols()) throw structural_error("matrix-vector shape mismatch");
  const Field& f = a.field();
  Vec out(a.rows(), f.zero());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (f.is_zero(x[j])) continue;
    for (std::size_t i = 0; i < a.rows(); ++i)
      out[i] = f.add(out[i], f.mul(a.at(i, j), x[j]));
  }
  return out;
}

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, f.zero()); }

Vec unit_vec(const Field& f, std::size_t n, std::size_t i) {
  Vec v(n, f.zero());
  v[i] = f.one();
  return v;
}

Vec add_vec(const Field& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw structural_error("vector sum shape mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

Vec sub_vec(const Field& f, const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw structural_error("vector difference shape mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.sub(a[i], b[i]);
  return out;
}

Vec neg_vec(const Field& f, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.neg(a[i]);
  return out;
}

Vec scale_vec(const Field& f, const Scalar& c, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.mul(c, a[i]);
  return out;
}

void axpy(const Field& f, Vec& y, const Scalar& c, const Vec& x) {
  if (f.is_zero(c)) return;
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = f.add(y[i], f.mul(c, x[i]));
}

bool is_zero_vec(const Field& f, const Vec& a) {
  for (const Scalar& s : a)
    if (!f.is_zero(s)) return false;
  return true;
}

Vec flatten(const Matrix& a) {
  Vec out;
  out.reserve(a.rows() * a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out.push_back(a.at(i, j));
  return out;
}

Matrix reshape(Field field, std::size_t rows, std::size_t cols, const Vec& data) {
  if (data.size() != rows * cols) throw structural_error("reshape size mismatch");
  Matrix out(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = data[i * cols + j];
  return out;
}

}  // namespace loday
