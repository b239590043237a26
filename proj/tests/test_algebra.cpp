#include <doctest.h>

#include "corpus.hpp"
#include "loday/errors.hpp"

using namespace loday;

namespace {

StructureTensor trunc2_mult(Field f) {
  StructureTensor t(f, 2, 2, 2);
  t.at(0, 0, 0) = f.one();
  t.at(0, 1, 1) = f.one();
  t.at(1, 0, 1) = f.one();
  return t;
}

}  // namespace

TEST_CASE("check_comm_algebra accepts the base examples") {
  Field q = Field::rationals();
  CHECK(check_comm_algebra(corpus::truncated_poly(q, 1)).pass());
  // Q[x]/(x^2) with basis {1, x}.
  CommAlgebra dual{q, 2, trunc2_mult(q), unit_vec(q, 2, 0)};
  CHECK(check_comm_algebra(dual).pass());
}

TEST_CASE("corrupted unit vector is rejected with the unit witness") {
  Field q = Field::rationals();
  // x.x = 1 (so A = Q[x]/(x^2-1)) but with unit wrongly declared as x:
  // (0,1).1 evaluates to x != 1, so the first unit witness is basis index 0.
  CommAlgebra bad = corpus::quadratic(q, 1);
  bad.unit = unit_vec(q, 2, 1);
  CheckReport r = check_comm_algebra(bad);
  REQUIRE(!r.pass());
  CHECK(r.violations[0].axiom == "unit");
  CHECK(r.violations[0].witness == std::vector<long>{0});
}

TEST_CASE("structural errors are thrown, not reported") {
  Field q = Field::rationals();
  CommAlgebra bad = corpus::truncated_poly(q, 2);
  bad.unit = unit_vec(q, 3, 0);
  CHECK_THROWS_AS(check_comm_algebra(bad), structural_error);

  AModule wrong_field{Field::prime_field(5), 1, StructureTensor(Field::prime_field(5), 2, 1, 1)};
  CHECK_THROWS_AS(check_a_module(corpus::truncated_poly(q, 2), wrong_field), structural_error);
}

TEST_CASE("check_a_module") {
  Field q = Field::rationals();
  CommAlgebra a = corpus::truncated_poly(q, 2);

  // A acting on itself.
  CHECK(check_a_module(a, regular_module(a)).pass());

  // Rank-one module with x acting by zero.
  StructureTensor act(q, 2, 1, 1);
  act.at(0, 0, 0) = q.one();
  CHECK(check_a_module(a, {q, 1, act}).pass());

  // x acting as the identity: (x.x).m = 0 but x.(x.m) = m.
  StructureTensor bad(q, 2, 1, 1);
  bad.at(0, 0, 0) = q.one();
  bad.at(1, 0, 0) = q.one();
  CheckReport r = check_a_module(a, {q, 1, bad});
  REQUIRE(!r.pass());
  CHECK(r.violations[0].axiom == "module-assoc");
  CHECK(r.violations[0].witness == std::vector<long>{1, 1, 0});
}

TEST_CASE("tensor_over_A") {
  Field q = Field::rationals();

  // Over the base field the relators vanish.
  CommAlgebra base = corpus::truncated_poly(q, 1);
  StructureTensor act(q, 1, 2, 2);
  act.at(0, 0, 0) = q.one();
  act.at(0, 1, 1) = q.one();
  AModule m2{q, 2, act};
  TensorOverA t = tensor_over_A(base, m2, m2);
  CHECK(t.relators.dim() == 0);
  CHECK(t.quotient_dim == 4);

  // A (x)_A A = A: relator rank 2 inside the 4-dimensional ambient space.
  CommAlgebra dual = corpus::truncated_poly(q, 2);
  TensorOverA taa = tensor_over_A(dual, regular_module(dual), regular_module(dual));
  CHECK(taa.ambient_dim == 4);
  CHECK(taa.relators.dim() == 2);
  CHECK(taa.quotient_dim == 2);

  // A (x)_A (rank-one with x |-> 0) collapses x (x) w ~ 1 (x) (x.w) = 0.
  StructureTensor zero_x(q, 2, 1, 1);
  zero_x.at(0, 0, 0) = q.one();
  TensorOverA tz = tensor_over_A(dual, regular_module(dual), {q, 1, zero_x});
  CHECK(tz.quotient_dim == 1);

  // The projection annihilates every relator exactly.
  for (std::size_t r = 0; r < taa.relators.dim(); ++r)
    CHECK(is_zero_vec(q, mul_vec(taa.projection, taa.relators.basis.row(r))));
  CHECK(mul(taa.projection, taa.section) == Matrix::identity(q, 2));
}

TEST_CASE("square_zero_extension") {
  Field q = Field::rationals();

  // F (+) F with the trivial rank-one module is the dual numbers.
  CommAlgebra base = corpus::truncated_poly(q, 1);
  StructureTensor act(q, 1, 1, 1);
  act.at(0, 0, 0) = q.one();
  CommAlgebra dual = square_zero_extension(base, {q, 1, act});
  CHECK(dual.dim == 2);
  CHECK(check_comm_algebra(dual).pass());
  CHECK(dual.mult == trunc2_mult(q));

  // M = 0 reproduces A's table.
  CommAlgebra a = corpus::truncated_poly(q, 3);
  CommAlgebra same = square_zero_extension(a, {q, 0, StructureTensor(q, 3, 0, 0)});
  CHECK(same.dim == 3);
  CHECK(same.mult == a.mult);

  // The M-block squares to zero, for every corpus input.
  for (const auto& [name, alg] : corpus::algebra_corpus(q)) {
    CommAlgebra ext = square_zero_extension(alg, regular_module(alg));
    CHECK(check_comm_algebra(ext).pass());
    for (std::size_t i = 0; i < alg.dim; ++i)
      for (std::size_t j = 0; j < alg.dim; ++j)
        CHECK(is_zero_vec(q, ext.mult.eval_basis(alg.dim + i, alg.dim + j)));
  }
}

TEST_CASE("checker verdicts are invariant under change of basis") {
  Field q = Field::rationals();
  CommAlgebra a = corpus::group_algebra_c3(q);
  Matrix t(q, 3, 3);
  // An arbitrary invertible matrix.
  long entries[9] = {1, 1, 0, 0, 1, 1, 1, 0, -1};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t.at(i, j) = q.from_long(entries[i * 3 + j]);
  REQUIRE(invert(t).has_value());
  CHECK(check_comm_algebra(change_basis(a, t)).pass());

  CommAlgebra bad = a;
  bad.mult.at(1, 2, 0) = q.from_long(7);
  CHECK(!check_comm_algebra(bad).pass());
  CHECK(!check_comm_algebra(change_basis(bad, t)).pass());
}
