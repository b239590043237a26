#include <doctest.h>

#include "corpus.hpp"
#include "loday/errors.hpp"

using namespace loday;

TEST_CASE("derivation_space dimensions") {
  Field q = Field::rationals();

  // No derivations of the base field.
  CHECK(derivation_space(corpus::truncated_poly(q, 1)).dim() == 0);

  // dim Der(F[x]/(x^n)) = n - 1; x^k d/dx for k = 1..n-1.
  for (std::size_t n = 2; n <= 6; ++n) {
    DerivationSpace der = derivation_space(corpus::truncated_poly(q, n));
    CHECK(der.dim() == n - 1);
    // Every basis element satisfies the Leibniz rule exactly.
    for (const Matrix& d : der.basis)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          Vec lhs = mul_vec(d, der.a.mult.eval_basis(i, j));
          Vec rhs = add_vec(q, der.a.mult.eval(unit_vec(q, n, i), mul_vec(d, unit_vec(q, n, j))),
                            der.a.mult.eval(unit_vec(q, n, j), mul_vec(d, unit_vec(q, n, i))));
          CHECK(lhs == rhs);
        }
  }

  // Q[x]/(x^3) explicitly: spanned by x d/dx and x^2 d/dx.
  DerivationSpace d3 = derivation_space(corpus::truncated_poly(q, 3));
  std::vector<Vec> flat;
  for (const Matrix& m : d3.basis) flat.push_back(flatten(m));
  Matrix xddx(q, 3, 3), x2ddx(q, 3, 3);
  xddx.at(1, 1) = q.one();
  xddx.at(2, 2) = q.from_long(2);  // x d/dx: x |-> x, x^2 |-> 2x^2
  x2ddx.at(2, 1) = q.one();        // x^2 d/dx: x |-> x^2
  CHECK(coordinates_in_span(q, flat, flatten(xddx)).has_value());
  CHECK(coordinates_in_span(q, flat, flatten(x2ddx)).has_value());

  // Values in a module: A = F[x]/(x^2), M rank one with x acting by zero.
  StructureTensor act(q, 2, 1, 1);
  act.at(0, 0, 0) = q.one();
  DerivationSpace dm = derivation_space(corpus::truncated_poly(q, 2), {q, 1, act});
  CHECK(dm.dim() == 1);
}

TEST_CASE("endo_lie") {
  Field q = Field::rationals();
  CHECK(endo_lie(q, 1).bracket == StructureTensor(q, 1, 1, 1));

  LieAlgebra gl = endo_lie(q, 2);
  CHECK(gl.dim == 4);
  CHECK(check_lie(gl).pass());
  // [id, beta] = 0 for every beta.
  Vec id = zero_vec(q, 4);
  id[0] = q.one();
  id[3] = q.one();
  for (std::size_t j = 0; j < 4; ++j)
    CHECK(is_zero_vec(q, gl.br(id, unit_vec(q, 4, j))));
  // It matches the corpus commutator table.
  CHECK(gl.bracket == corpus::gl2(q).bracket);
}

TEST_CASE("universal_derivations assembles a Lie object") {
  Field q = Field::rationals();
  for (const auto& [name, x] : corpus::algebra_object_corpus(q)) {
    INFO(name);
    DerivationsLMObject u = universal_derivations(x);
    CHECK(check_lie_object(u.lie_object()).pass());
    // Members of the bottom are genuine derivation pairs.
    for (const auto& [alpha, beta] : u.bottom_pairs) {
      for (std::size_t a = 0; a < x.a.dim; ++a)
        for (std::size_t m = 0; m < x.m.dim; ++m) {
          Vec lhs = mul_vec(beta, x.m.action.eval_basis(a, m));
          Vec rhs = add_vec(
              q, x.m.action.eval(unit_vec(q, x.a.dim, a), beta.col(m)),
              x.m.action.eval(alpha.col(a), unit_vec(q, x.m.dim, m)));
          CHECK(lhs == rhs);
        }
      CHECK(mul(x.g, beta) == mul(alpha, x.g));
    }
  }
}

TEST_CASE("universal_derivations of (A -id-> A) corestricts to Der(A)") {
  Field q = Field::rationals();
  // With g the identity the pair condition pins beta = alpha, so the bottom
  // is Der(A) embedded diagonally.
  for (std::size_t n = 2; n <= 3; ++n) {
    DerivationsLMObject u = universal_derivations(
        corpus::alg_object_identity(corpus::truncated_poly(q, n)));
    CHECK(u.top.dim() == n - 1);
    CHECK(u.bottom.dim == n - 1);
    for (const auto& [alpha, beta] : u.bottom_pairs) CHECK(alpha == beta);
  }
}

TEST_CASE("the right-module identity for the derivations action") {
  Field q = Field::rationals();
  DerivationsLMObject u =
      universal_derivations(corpus::alg_object_identity(corpus::truncated_poly(q, 3)));
  // [d, [p, p']] = [[d, p], p'] - [[d, p'], p] evaluated in Hom(A, M).
  auto act = [&](const Matrix& d, std::size_t pair_idx) {
    return sub(mul(d, u.bottom_pairs[pair_idx].first),
               mul(u.bottom_pairs[pair_idx].second, d));
  };
  for (std::size_t t = 0; t < u.top.dim(); ++t)
    for (std::size_t i = 0; i < u.bottom.dim; ++i)
      for (std::size_t j = 0; j < u.bottom.dim; ++j) {
        // Bracket of pairs, computed in coordinates then re-expanded.
        Vec coords = u.bottom.bracket.eval_basis(i, j);
        Matrix lhs(q, u.top.m.dim, u.top.a.dim);
        {
          // d composed with the bracket pair.
          Matrix alpha(q, u.top.a.dim, u.top.a.dim);
          Matrix beta(q, u.top.m.dim, u.top.m.dim);
          for (std::size_t k = 0; k < u.bottom.dim; ++k) {
            alpha = add(alpha, scale(coords[k], u.bottom_pairs[k].first));
            beta = add(beta, scale(coords[k], u.bottom_pairs[k].second));
          }
          lhs = sub(mul(u.top.basis[t], alpha), mul(beta, u.top.basis[t]));
        }
        Matrix rhs = sub(act(act(u.top.basis[t], i), j), act(act(u.top.basis[t], j), i));
        CHECK(lhs == rhs);
      }
}

TEST_CASE("unbalanced structure maps are refused") {
  Field q = Field::rationals();
  // A = F, M = F^2, g = (1, 0): g(m0).m1 = m1 but g(m1).m0 = 0.
  LMAlgebraObject x = corpus::alg_object_zero_map(q, 2);
  x.g.at(0, 0) = q.one();
  REQUIRE(check_algebra_object(x).pass());
  CHECK_THROWS_AS(universal_derivations(x), precondition_error);
}

TEST_CASE("check_action_by_derivations") {
  Field q = Field::rationals();

  // The tautological action of the universal object on its base.
  LMAlgebraObject x = corpus::alg_object_identity(corpus::truncated_poly(q, 3));
  DerivationsLMObject u = universal_derivations(x);
  std::size_t da = x.a.dim, dm = x.m.dim, dl = u.bottom.dim, dn = u.top.dim();
  StructureTensor rho0(q, dl, da, da), rho2(q, dl, dm, dm), rho1(q, dn, da, dm);
  for (std::size_t t = 0; t < dl; ++t)
    for (std::size_t c = 0; c < da; ++c) {
      for (std::size_t k = 0; k < da; ++k) rho0.at(t, c, k) = u.bottom_pairs[t].first.at(k, c);
    }
  for (std::size_t t = 0; t < dl; ++t)
    for (std::size_t c = 0; c < dm; ++c)
      for (std::size_t k = 0; k < dm; ++k) rho2.at(t, c, k) = u.bottom_pairs[t].second.at(k, c);
  for (std::size_t t = 0; t < dn; ++t)
    for (std::size_t c = 0; c < da; ++c)
      for (std::size_t k = 0; k < dm; ++k) rho1.at(t, c, k) = u.top.basis[t].at(k, c);
  CHECK(check_action_by_derivations(x, u.lie_object(), rho0, rho1, rho2).pass());

  // The all-zero action is always valid.
  LieAlgebra sl = corpus::sl2(q);
  LMLieObject lie{sl, sl.dim, sl.bracket, Matrix::identity(q, sl.dim)};
  CHECK(check_action_by_derivations(x, lie, StructureTensor(q, 3, 3, 3),
                                    StructureTensor(q, 3, 3, 1), StructureTensor(q, 3, 1, 1))
            .pass());

  // Corrupt compDer1-b: rho2 obeys the module law but g o rho2 != rho0 o g.
  DerivationsLMObject u2 = universal_derivations(x);
  StructureTensor bad_rho0(q, dl, da, da);  // zero, while rho2 is nonzero
  CheckReport r = check_action_by_derivations(x, u2.lie_object(), bad_rho0, rho1, rho2);
  REQUIRE(!r.pass());
  bool saw = false;
  for (const Violation& v : r.violations) saw |= v.axiom == "compDer1-b";
  CHECK(saw);
}
