#include <doctest.h>

#include "loday/errors.hpp"
#include "loday/linalg.hpp"

using namespace loday;

namespace {

Matrix mat(Field f, std::size_t rows, std::size_t cols, const std::vector<long>& entries) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = f.from_long(entries[i * cols + j]);
  return m;
}

Vec vec(Field f, const std::vector<long>& entries) {
  Vec v;
  for (long e : entries) v.push_back(f.from_long(e));
  return v;
}

}  // namespace

TEST_CASE("field arithmetic is exact") {
  Field q = Field::rationals();
  Scalar a = *q.parse("2/4");
  CHECK(q.to_string(a) == "1/2");
  CHECK(q.to_string(q.add(a, *q.parse("1/3"))) == "5/6");
  CHECK(q.to_string(q.inv(*q.parse("-3/7"))) == "-7/3");
  CHECK(!q.parse("1/0"));
  CHECK(!q.parse("a"));
  CHECK(!q.parse(""));
  CHECK(!q.parse("1/"));
  CHECK(!q.parse("--1"));

  Field f7 = Field::prime_field(7);
  CHECK(f7.to_string(f7.from_long(-1)) == "6");
  CHECK(f7.to_string(f7.inv(f7.from_long(3))) == "5");
  CHECK(f7.to_string(f7.mul(f7.from_long(3), f7.from_long(5))) == "1");
  CHECK(!f7.parse("1/2"));
  CHECK(f7.to_string(*f7.parse("-9")) == "5");
  CHECK_THROWS_AS(Field::prime_field(6), structural_error);
  CHECK_THROWS_AS(f7.inv(f7.zero()), structural_error);

  // Serialization round-trips bit for bit.
  for (const char* s : {"0", "1", "-1", "22/7", "-1000000000000000001/3"}) {
    Scalar x = *q.parse(s);
    CHECK(*q.parse(q.to_string(x)) == x);
  }
}

TEST_CASE("echelonize: identity, rank-1, zero") {
  Field q = Field::rationals();
  // 2x2 identity is its own reduced form.
  EchelonResult e1 = echelonize(Matrix::identity(q, 2));
  CHECK(e1.rank == 2);
  CHECK(e1.rref == Matrix::identity(q, 2));

  // [[1,2],[2,4]] reduces to [[1,2],[0,0]] by hand elimination.
  EchelonResult e2 = echelonize(mat(q, 2, 2, {1, 2, 2, 4}));
  CHECK(e2.rank == 1);
  CHECK(e2.rref == mat(q, 2, 2, {1, 2, 0, 0}));

  Field f5 = Field::prime_field(5);
  EchelonResult e3 = echelonize(Matrix(f5, 3, 3));
  CHECK(e3.rank == 0);
  CHECK(e3.rref.is_zero());
}

TEST_CASE("echelonize is idempotent and rank is transpose-invariant") {
  Field f7 = Field::prime_field(7);
  std::vector<long> entries;
  long seed = 1;
  for (int n = 0; n < 5 * 4; ++n) {
    seed = (seed * 1103515245 + 12345) % 97;
    entries.push_back(seed % 7);
  }
  Matrix m = mat(f7, 5, 4, entries);
  EchelonResult e = echelonize(m);
  CHECK(echelonize(e.rref).rref == e.rref);
  CHECK(echelonize(transpose(m)).rank == e.rank);
}

TEST_CASE("nullspace") {
  Field q = Field::rationals();
  CHECK(nullspace(Matrix::identity(q, 2)).dim() == 0);

  Subspace s = nullspace(mat(q, 2, 2, {1, 2, 2, 4}));
  CHECK(s.dim() == 1);
  // Spanned by (-2, 1); stored echelon-normalized.
  CHECK(subspace_contains(s, vec(q, {-2, 1})));
  Vec v = s.basis.row(0);
  CHECK(is_zero_vec(q, mul_vec(mat(q, 2, 2, {1, 2, 2, 4}), v)));

  // A 1x2 zero matrix has full 2-dimensional kernel.
  CHECK(nullspace(Matrix(q, 1, 2)).dim() == 2);

  // rank + nullity = cols
  Matrix m = mat(q, 3, 4, {1, 2, 3, 4, 2, 4, 6, 8, 0, 1, 0, 1});
  CHECK(echelonize(m).rank + nullspace(m).dim() == 4);
}

TEST_CASE("solve") {
  Field q = Field::rationals();
  CHECK(*solve(Matrix::identity(q, 2), vec(q, {3, 4})) == vec(q, {3, 4}));

  // Second row forces 2*1 != 3: inconsistent.
  CHECK(!solve(mat(q, 2, 2, {1, 2, 2, 4}), vec(q, {1, 3})));

  // Consistent underdetermined system: verify by substitution.
  Matrix m = mat(q, 2, 2, {1, 2, 2, 4});
  Vec b = vec(q, {1, 2});
  std::optional<Vec> x = solve(m, b);
  REQUIRE(x.has_value());
  CHECK(mul_vec(m, *x) == b);
}

TEST_CASE("quotient_basis") {
  Field q = Field::rationals();
  // Quotient of F^2 by span{(1,0)}: projection (0,1), section e2.
  Subspace sub = subspace_from_rows(q, 2, {vec(q, {1, 0})});
  QuotientMaps qm = quotient_basis(2, sub);
  CHECK(qm.projection == mat(q, 1, 2, {0, 1}));
  CHECK(qm.section == mat(q, 2, 1, {0, 1}));

  // Zero subspace: both maps are the identity.
  QuotientMaps qz = quotient_basis(3, zero_subspace(q, 3));
  CHECK(qz.projection == Matrix::identity(q, 3));
  CHECK(qz.section == Matrix::identity(q, 3));

  // Full subspace: empty quotient.
  Subspace full = subspace_from_rows(q, 2, {vec(q, {1, 0}), vec(q, {0, 1})});
  QuotientMaps qf = quotient_basis(2, full);
  CHECK(qf.projection.rows() == 0);
  CHECK(qf.section.cols() == 0);

  // projection o section = id and projection kills the subspace, on a
  // non-coordinate subspace.
  Subspace s = subspace_from_rows(q, 4, {vec(q, {1, 2, 3, 4}), vec(q, {0, 1, 1, 1})});
  QuotientMaps qs = quotient_basis(4, s);
  CHECK(mul(qs.projection, qs.section) == Matrix::identity(q, 2));
  for (std::size_t r = 0; r < s.dim(); ++r)
    CHECK(is_zero_vec(q, mul_vec(qs.projection, s.basis.row(r))));
}

TEST_CASE("row span maintains reduced echelon form") {
  Field q = Field::rationals();
  RowSpan span(q, 3);
  CHECK(span.add(vec(q, {2, 4, 6})));
  CHECK(!span.add(vec(q, {1, 2, 3})));
  CHECK(span.add(vec(q, {0, 0, 5})));
  CHECK(span.dim() == 2);
  CHECK(span.contains(vec(q, {3, 6, 14})));
  CHECK(!span.contains(vec(q, {0, 1, 0})));
  Subspace snap = span.snapshot();
  CHECK(snap.basis == mat(q, 2, 3, {1, 2, 0, 0, 0, 1}));
}

TEST_CASE("coordinates_in_span") {
  Field q = Field::rationals();
  std::vector<Vec> basis = {vec(q, {1, 0, 1}), vec(q, {0, 1, 1})};
  std::optional<Vec> c = coordinates_in_span(q, basis, vec(q, {2, 3, 5}));
  REQUIRE(c.has_value());
  CHECK(*c == vec(q, {2, 3}));
  CHECK(!coordinates_in_span(q, basis, vec(q, {0, 0, 1})));
}
