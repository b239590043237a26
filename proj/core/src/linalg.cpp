#include "loday/linalg.hpp"

#include <algorithm>

#include "loday/errors.hpp"

namespace loday {

EchelonResult echelonize(const Matrix& m) {
  const Field& f = m.field();
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t pivot = a.rows();
    for (std::size_t r = row; r < a.rows(); ++r)
      if (!f.is_zero(a.at(r, col))) {
        pivot = r;
        break;
      }
    if (pivot == a.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a.at(pivot, c), a.at(row, c));
    Scalar s = f.inv(a.at(row, col));
    for (std::size_t c = col; c < a.cols(); ++c) a.at(row, c) = f.mul(s, a.at(row, c));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row) continue;
      Scalar factor = a.at(r, col);
      if (f.is_zero(factor)) continue;
      for (std::size_t c = col; c < a.cols(); ++c)
        a.at(r, c) = f.sub(a.at(r, c), f.mul(factor, a.at(row, c)));
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), pivots.size(), std::move(pivots)};
}

Subspace nullspace(const Matrix& m) {
  const Field& f = m.field();
  EchelonResult e = echelonize(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    Vec v = zero_vec(f, m.cols());
    v[j] = f.one();
    for (std::size_t r = 0; r < e.rank; ++r) v[e.pivots[r]] = f.neg(e.rref.at(r, j));
    basis.push_back(std::move(v));
  }
  return subspace_from_rows(f, m.cols(), basis);
}

std::optional<Vec> solve(const Matrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw structural_error("solve: rhs length mismatch");
  const Field& f = m.field();
  Matrix aug(f, m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  EchelonResult e = echelonize(aug);
  for (std::size_t p : e.pivots)
    if (p == m.cols()) return std::nullopt;
  Vec x = zero_vec(f, m.cols());
  for (std::size_t r = 0; r < e.rank; ++r) x[e.pivots[r]] = e.rref.at(r, m.cols());
  return x;
}

std::optional<Matrix> invert(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const Field& f = m.field();
  EchelonResult e = echelonize(hstack(m, Matrix::identity(f, m.rows())));
  if (e.rank != m.rows()) return std::nullopt;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (e.pivots[r] != r) return std::nullopt;
  Matrix out(f, m.rows(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.rows(); ++j) out.at(i, j) = e.rref.at(i, m.cols() + j);
  return out;
}

QuotientMaps quotient_basis(std::size_t ambient_dim, const Subspace& sub) {
  if (sub.ambient_dim != ambient_dim)
    throw structural_error("quotient_basis: ambient dimension mismatch");
  const Field& f = sub.field;
  std::size_t k = sub.dim();
  std::size_t q = ambient_dim - k;

  EchelonResult e = echelonize(sub.basis);
  std::vector<bool> is_pivot(ambient_dim, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;

  // Change-of-basis matrix whose columns are the sub basis followed by the
  // complementary unit vectors; invertible by the pivot structure.
  Matrix t(f, ambient_dim, ambient_dim);
  for (std::size_t i = 0; i < k; ++i) t.set_col(i, sub.basis.row(i));
  std::size_t c = k;
  for (std::size_t j = 0; j < ambient_dim; ++j)
    if (!is_pivot[j]) t.at(j, c++) = f.one();

  std::optional<Matrix> tinv = invert(t);
  if (!tinv) throw structural_error("quotient_basis: degenerate subspace basis");

  Matrix projection(f, q, ambient_dim);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < ambient_dim; ++j) projection.at(i, j) = tinv->at(k + i, j);
  Matrix section(f, ambient_dim, q);
  for (std::size_t i = 0; i < ambient_dim; ++i)
    for (std::size_t j = 0; j < q; ++j) section.at(i, j) = t.at(i, k + j);
  return {std::move(projection), std::move(section)};
}

Subspace subspace_from_rows(Field field, std::size_t ambient_dim, const std::vector<Vec>& rows) {
  RowSpan span(field, ambient_dim);
  for (const Vec& r : rows) span.add(r);
  return span.snapshot();
}

Subspace zero_subspace(Field field, std::size_t ambient_dim) {
  return {field, ambient_dim, Matrix(field, 0, ambient_dim)};
}

bool subspace_contains(const Subspace& s, const Vec& v) {
  if (v.size() != s.ambient_dim) throw structural_error("subspace_contains: length mismatch");
  const Field& f = s.field;
  Vec w = v;
  for (std::size_t r = 0; r < s.basis.rows(); ++r) {
    std::size_t p = 0;
    while (p < s.ambient_dim && f.is_zero(s.basis.at(r, p))) ++p;
    if (p == s.ambient_dim) continue;
    Scalar c = w[p];
    if (f.is_zero(c)) continue;
    for (std::size_t j = 0; j < s.ambient_dim; ++j)
      w[j] = f.sub(w[j], f.mul(c, s.basis.at(r, j)));
  }
  return is_zero_vec(f, w);
}

bool RowSpan::add(Vec v) {
  if (v.size() != ambient_) throw structural_error("RowSpan::add: length mismatch");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = v[pivots_[r]];
    if (field_.is_zero(c)) continue;
    Scalar factor = c;
    for (std::size_t j = 0; j < ambient_; ++j)
      v[j] = field_.sub(v[j], field_.mul(factor, rows_[r][j]));
  }
  std::size_t lead = 0;
  while (lead < ambient_ && field_.is_zero(v[lead])) ++lead;
  if (lead == ambient_) return false;
  Scalar s = field_.inv(v[lead]);
  for (std::size_t j = lead; j < ambient_; ++j) v[j] = field_.mul(s, v[j]);
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Scalar factor = rows_[r][lead];
    if (field_.is_zero(factor)) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      rows_[r][j] = field_.sub(rows_[r][j], field_.mul(factor, v[j]));
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead);
  std::size_t idx = pos - pivots_.begin();
  pivots_.insert(pos, lead);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

bool RowSpan::contains(const Vec& v) const {
  Vec w = v;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Scalar& c = w[pivots_[r]];
    if (field_.is_zero(c)) continue;
    Scalar factor = c;
    for (std::size_t j = 0; j < ambient_; ++j)
      w[j] = field_.sub(w[j], field_.mul(factor, rows_[r][j]));
  }
  return is_zero_vec(field_, w);
}

Subspace RowSpan::snapshot() const {
  return {field_, ambient_, from_rows(field_, ambient_, rows_)};
}

std::optional<Vec> coordinates_in_span(const Field& f, const std::vector<Vec>& basis_vectors,
                                       const Vec& target) {
  std::size_t n = target.size();
  Matrix b(f, n, basis_vectors.size());
  for (std::size_t j = 0; j < basis_vectors.size(); ++j) {
    if (basis_vectors[j].size() != n)
      throw structural_error("coordinates_in_span: length mismatch");
    b.set_col(j, basis_vectors[j]);
  }
  return solve(b, target);
}

}  // namespace loday
