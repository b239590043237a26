#pragma once

#include <optional>
#include <vector>

#include "loday/matrix.hpp"

namespace loday {

/// A linear subspace of F^n, stored as its reduced-row-echelon basis.
/// The RREF basis is unique, so subspace equality is entrywise comparison.
struct Subspace {
  Field field;
  std::size_t ambient_dim;
  Matrix basis;  // dim() x ambient_dim, reduced echelon form, no zero rows

  std::size_t dim() const { return basis.rows(); }
  bool operator==(const Subspace&) const = default;
};

struct EchelonResult {
  Matrix rref;
  std::size_t rank;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form, exact Gauss-Jordan. Idempotent.
EchelonResult echelonize(const Matrix& m);

/// Basis of the right kernel {v : m v = 0}, echelon-normalized.
Subspace nullspace(const Matrix& m);

/// Some solution of m x = b, or nullopt when the system is inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

std::optional<Matrix> invert(const Matrix& m);

struct QuotientMaps {
  Matrix projection;  // ambient -> ambient - dim(sub); kernel is exactly sub
  Matrix section;     // quotient -> ambient; projection * section = identity
};

/// Splits F^ambient as sub (+) complement and returns the induced
/// projection/section pair for the quotient by sub. The complement is the
/// span of the unit vectors at the non-pivot columns of sub's RREF basis,
/// so the result is deterministic.
QuotientMaps quotient_basis(std::size_t ambient_dim, const Subspace& sub);

Subspace subspace_from_rows(Field field, std::size_t ambient_dim, const std::vector<Vec>& rows);
Subspace zero_subspace(Field field, std::size_t ambient_dim);
bool subspace_contains(const Subspace& s, const Vec& v);

/// Incrementally maintained reduced-echelon spanning set; used for relator
/// spans and ideal closures.
class RowSpan {
 public:
  RowSpan(Field field, std::size_t ambient_dim) : field_(field), ambient_(ambient_dim) {}

  /// Adds v to the span; returns true when the span grew.
  bool add(Vec v);

  bool contains(const Vec& v) const;
  std::size_t dim() const { return rows_.size(); }
  const std::vector<Vec>& rows() const { return rows_; }
  Subspace snapshot() const;

 private:
  Field field_;
  std::size_t ambient_;
  std::vector<Vec> rows_;            // reduced echelon, sorted by pivot
  std::vector<std::size_t> pivots_;  // pivot column of rows_[i]
};

/// Coordinates of `target` in the span of `basis_vectors` (each of length n),
/// or nullopt when target is outside the span.
std::optional<Vec> coordinates_in_span(const Field& f, const std::vector<Vec>& basis_vectors,
                                       const Vec& target);

}  // namespace loday
