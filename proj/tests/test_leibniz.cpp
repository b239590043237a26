#include <doctest.h>

#include "corpus.hpp"
#include "loday/errors.hpp"

using namespace loday;

TEST_CASE("check_leibniz on the stated examples") {
  Field q = Field::rationals();
  CHECK(check_leibniz({q, 3, StructureTensor(q, 3, 3, 3)}).pass());

  // [e2,e2] = e1 is Leibniz: every bracket lands in a square-zero line.
  CHECK(check_leibniz(corpus::dim2_square(q)).pass());

  // [e1,e2] = e1 = [e2,e1] fails; the brute-force sweep finds witnesses.
  StructureTensor b(q, 2, 2, 2);
  b.at(0, 1, 0) = q.one();
  b.at(1, 0, 0) = q.one();
  CheckReport r = check_leibniz({q, 2, b});
  CHECK(!r.pass());
  CHECK(r.violations[0].axiom == "RLJ");
}

TEST_CASE("check_lie on the stated examples") {
  Field q = Field::rationals();
  CHECK(check_lie(corpus::sl2(q)).pass());
  CHECK(check_lie(corpus::nonabelian2(q, 1)).pass());

  CheckReport r = check_lie({q, 2, corpus::dim2_square(q).bracket});
  REQUIRE(!r.pass());
  CHECK(r.violations[0].axiom == "antisym");
  CHECK(r.violations[0].witness == std::vector<long>{1, 1});
}

TEST_CASE("every corpus instance passes its checker") {
  for (Field f : {Field::rationals(), Field::prime_field(7)}) {
    for (const auto& [name, l] : corpus::lie_corpus(f)) {
      INFO(name);
      CHECK(check_lie(l).pass());
    }
    for (const auto& [name, g] : corpus::leibniz_corpus(f)) {
      INFO(name);
      CHECK(check_leibniz(g).pass());
    }
  }
}

TEST_CASE("squares_ideal") {
  Field q = Field::rationals();

  // Lie algebras have zero squares ideal.
  SquaresIdeal sq = squares_ideal(as_leibniz(corpus::sl2(q)));
  CHECK(sq.ideal.dim() == 0);
  CHECK(sq.closure_iterations == 0);

  SquaresIdeal s2 = squares_ideal(corpus::dim2_square(q));
  CHECK(s2.ideal.dim() == 1);
  CHECK(subspace_contains(s2.ideal, unit_vec(q, 2, 0)));
  CHECK(s2.closure_iterations == 0);

  // L (x) L of the nonabelian 2-dim algebra contains y (x) y: with basis
  // x = e0, y = e1 the square of x (x) y is y (x) y.
  LeibnizAlgebra ll = tensor_square(corpus::nonabelian2(q, 1));
  SquaresIdeal sll = squares_ideal(ll);
  CHECK(subspace_contains(sll.ideal, unit_vec(q, 4, 1 * 2 + 1)));
  CHECK(sll.closure_iterations == 0);
}

TEST_CASE("squares ideal is right-inert: [x, s] = 0 for s in the span") {
  Field q = Field::rationals();
  for (const auto& [name, g] : corpus::leibniz_corpus(q)) {
    INFO(name);
    SquaresIdeal sq = squares_ideal(g);
    for (std::size_t r = 0; r < sq.ideal.dim(); ++r)
      for (std::size_t i = 0; i < g.dim; ++i)
        CHECK(is_zero_vec(q, g.br(unit_vec(q, g.dim, i), sq.ideal.basis.row(r))));
  }
}

TEST_CASE("reduced_lie") {
  Field q = Field::rationals();

  // A Lie algebra is its own reduction.
  ReducedLie rl = reduced_lie(as_leibniz(corpus::sl2(q)));
  CHECK(rl.lie.dim == 3);
  CHECK(rl.pi == Matrix::identity(q, 3));

  // dim-2 with [e2,e2] = e1: one-dimensional abelian quotient.
  ReducedLie r2 = reduced_lie(corpus::dim2_square(q));
  CHECK(r2.lie.dim == 1);
  CHECK(r2.lie.bracket == StructureTensor(q, 1, 1, 1));
  CHECK(check_lie(r2.lie).pass());

  // For every corpus Leibniz algebra the quotient is Lie and pi is a
  // Leibniz morphism.
  for (const auto& [name, g] : corpus::leibniz_corpus(q)) {
    INFO(name);
    ReducedLie red = reduced_lie(g);
    CHECK(check_lie(red.lie).pass());
    CHECK(check_leibniz_morphism(red.pi, g, as_leibniz(red.lie)).pass());
    CHECK(echelonize(red.pi).rank == red.lie.dim);  // surjective
    CHECK(red.squares.closure_iterations == 0);
  }
}

TEST_CASE("hemi_semi_product") {
  Field q = Field::rationals();

  // 1-dim abelian acting on F by the identity: [v,x] = v, all else 0.
  StructureTensor act(q, 1, 1, 1);
  act.at(0, 0, 0) = q.one();
  LeibnizAlgebra h = hemi_semi_product(corpus::abelian_lie(q, 1), act);
  CHECK(h.dim == 2);
  CHECK(h.bracket.eval_basis(0, 1) == unit_vec(q, 2, 0));
  CHECK(is_zero_vec(q, h.bracket.eval_basis(1, 0)));
  CHECK(is_zero_vec(q, h.bracket.eval_basis(1, 1)));
  CHECK(check_leibniz(h).pass());

  // Trivial action: V abelian, L-block carries the negated bracket.
  LieAlgebra sl = corpus::sl2(q);
  LeibnizAlgebra triv = hemi_semi_product(sl, StructureTensor(q, 3, 2, 2));
  CHECK(check_leibniz(triv).pass());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      Vec got = triv.bracket.eval_basis(2 + i, 2 + j);
      Vec want = neg_vec(q, sl.bracket.eval_basis(i, j));
      Vec embedded = zero_vec(q, 5);
      for (std::size_t k = 0; k < 3; ++k) embedded[2 + k] = want[k];
      CHECK(got == embedded);
    }

  // sl2 on its natural module: 5-dimensional Leibniz algebra.
  LeibnizAlgebra nat = hemi_semi_product(sl, corpus::sl2_natural_action(q));
  CHECK(nat.dim == 5);
  CHECK(check_leibniz(nat).pass());
  // V x V brackets vanish.
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) CHECK(is_zero_vec(q, nat.bracket.eval_basis(i, j)));

  // A non-action is refused with a witness.
  StructureTensor bad(q, 3, 2, 2);
  bad.at(0, 0, 0) = q.one();  // h acts by a projection: not a Lie action for sl2
  CHECK_THROWS_AS(hemi_semi_product(sl, bad), precondition_error);
}

TEST_CASE("hemi_semi_over_reduced") {
  Field q = Field::rationals();

  // Over a Lie algebra this is the negative hemi-semi-direct product with
  // pi the identity.
  LieAlgebra l = corpus::nonabelian2(q, 1);
  StructureTensor act(q, 2, 1, 1);
  act.at(0, 0, 0) = q.one();  // x acts by 1, y by 0: a module since [x,y]=y acts by 0... check
  // [x,y] = y must act as x.y - y.x = 0; y acts by 0 so the action holds.
  CHECK(check_lie_module(l, act).pass());
  LeibnizAlgebra viag = hemi_semi_over_reduced(as_leibniz(l), act);
  CHECK(check_leibniz(viag).pass());

  // g = dim2_square, M = F with the 1-dim reduced algebra acting by 1.
  StructureTensor a1(q, 1, 1, 1);
  a1.at(0, 0, 0) = q.one();
  LeibnizAlgebra h = hemi_semi_over_reduced(corpus::dim2_square(q), a1);
  CHECK(h.dim == 3);
  CHECK(check_leibniz(h).pass());

  // M = 0 returns g itself.
  LeibnizAlgebra same =
      hemi_semi_over_reduced(corpus::dim2_square(q), StructureTensor(q, 1, 0, 0));
  CHECK(same.dim == 2);
  CHECK(same.bracket == corpus::dim2_square(q).bracket);
}

TEST_CASE("tensor_square") {
  Field q = Field::rationals();

  // Abelian: zero bracket.
  CHECK(tensor_square(corpus::abelian_lie(q, 2)).bracket == StructureTensor(q, 4, 4, 4));

  // [x(x)y, x(x)y] = y(x)y for the nonabelian 2-dim algebra.
  LeibnizAlgebra ll = tensor_square(corpus::nonabelian2(q, 1));
  Vec xy = unit_vec(q, 4, 0 * 2 + 1);
  CHECK(ll.br(xy, xy) == unit_vec(q, 4, 1 * 2 + 1));
  CHECK(check_leibniz(ll).pass());

  // sl2: 9-dimensional Leibniz algebra with nonzero squares ideal.
  LeibnizAlgebra sq = tensor_square(corpus::sl2(q));
  CHECK(sq.dim == 9);
  CHECK(check_leibniz(sq).pass());
  CHECK(squares_ideal(sq).ideal.dim() > 0);
}

TEST_CASE("check_leibniz_morphism") {
  Field q = Field::rationals();
  LeibnizAlgebra g = corpus::dim2_square(q);
  CHECK(check_leibniz_morphism(Matrix::identity(q, 2), g, g).pass());

  // The zero map to the zero algebra.
  LeibnizAlgebra zero{q, 0, StructureTensor(q, 0, 0, 0)};
  CHECK(check_leibniz_morphism(Matrix(q, 0, 2), g, zero).pass());

  // A non-morphism: scaling one basis vector of sl2.
  LieAlgebra sl = corpus::sl2(q);
  Matrix t = Matrix::identity(q, 3);
  t.at(1, 1) = q.from_long(2);
  CHECK(!check_leibniz_morphism(t, as_leibniz(sl), as_leibniz(sl)).pass());
}

TEST_CASE("verdicts are invariant under change of basis") {
  Field q = Field::rationals();
  Matrix t(q, 2, 2);
  t.at(0, 0) = q.one();
  t.at(0, 1) = q.from_long(2);
  t.at(1, 0) = q.from_long(1);
  t.at(1, 1) = q.from_long(3);
  REQUIRE(invert(t).has_value());

  CHECK(check_leibniz(change_basis(corpus::dim2_square(q), t)).pass());
  LeibnizAlgebra bad = corpus::dim2_square(q);
  bad.bracket.at(0, 1, 0) = q.one();
  CHECK(check_leibniz(bad).pass() == check_leibniz(change_basis(bad, t)).pass());
}
