#include <doctest.h>

#include <random>

#include "corpus.hpp"
#include "loday/errors.hpp"

using namespace loday;

namespace {

Matrix mat(Field f, std::size_t rows, std::size_t cols, const std::vector<long>& entries) {
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = f.from_long(entries[i * cols + j]);
  return m;
}

// Random valid morphism out of a given object: pick h1, then solve for a
// particular h0 on the column space and extend by a free part. Objects are
// built with injective u so the solve always succeeds.
LMObject random_injective_object(Field f, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dim(0, 2), entry(-2, 2);
  std::size_t dv = dim(rng);
  std::size_t dw = dv + dim(rng);
  while (true) {
    Matrix u(f, dw, dv);
    for (std::size_t i = 0; i < dw; ++i)
      for (std::size_t j = 0; j < dv; ++j) u.at(i, j) = f.from_long(entry(rng));
    if (echelonize(u).rank == dv) return {u};
  }
}

LMMorphism random_morphism(const LMObject& src, const LMObject& dst, std::mt19937_64& rng) {
  const Field& f = src.u.field();
  std::uniform_int_distribution<int> entry(-2, 2);
  while (true) {
    Matrix h1(f, dst.dim_v(), src.dim_v());
    for (std::size_t i = 0; i < h1.rows(); ++i)
      for (std::size_t j = 0; j < h1.cols(); ++j) h1.at(i, j) = f.from_long(entry(rng));
    // Solve h0 u = u' h1 columnwise; u injective makes this consistent.
    Matrix rhs = mul(dst.u, h1);
    // Solve h0 u = u' h1 one h0-row at a time: u^T h0^T = rhs^T.
    Matrix ut = transpose(src.u);
    Matrix h0t(f, src.dim_w(), dst.dim_w());
    bool ok = true;
    for (std::size_t r = 0; r < dst.dim_w(); ++r) {
      std::optional<Vec> sol = solve(ut, transpose(rhs).col(r));
      if (!sol) {
        ok = false;
        break;
      }
      h0t.set_col(r, *sol);
    }
    if (!ok) continue;
    LMMorphism m{src, dst, h1, transpose(h0t)};
    if (check_lm_morphism(m).pass()) return m;
  }
}

}  // namespace

TEST_CASE("compose and identities") {
  Field q = Field::rationals();
  LMObject a{mat(q, 2, 1, {1, 0})};
  LMMorphism id = lm_identity(a);
  LMMorphism c = compose(id, id);
  CHECK(c.h1 == id.h1);
  CHECK(c.h0 == id.h0);

  LMObject b{mat(q, 2, 2, {1, 0, 0, 1})};
  LMMorphism z = lm_zero_morphism(a, b);
  LMMorphism zc = compose(z, lm_identity(a));
  CHECK(zc.h1.is_zero());
  CHECK(zc.h0.is_zero());
}

TEST_CASE("tensor_objects dims and vertical map") {
  Field q = Field::rationals();

  // Unit (x) b and b (x) unit are literally b under the block layout.
  LMObject b{mat(q, 2, 1, {3, 4})};
  LMObject unit = lm_unit(q);
  CHECK(tensor_objects(unit, b).u == b.u);
  CHECK(tensor_objects(b, unit).u == b.u);

  // (1,2) (x) (1,1): top 1*1 + 2*1 = 3, bottom 2.
  LMObject x{mat(q, 2, 1, {1, 0})};
  LMObject y{mat(q, 1, 1, {1})};
  LMObject t = tensor_objects(x, y);
  CHECK(t.dim_v() == 3);
  CHECK(t.dim_w() == 2);

  // (A -id-> A) with dim 2, squared: top 8, bottom 4, and the vertical map
  // has full rank because the identity is injective.
  LMObject ida{Matrix::identity(q, 2)};
  LMObject sq = tensor_objects(ida, ida);
  CHECK(sq.dim_v() == 8);
  CHECK(sq.dim_w() == 4);
  CHECK(echelonize(sq.u).rank == 4);
}

TEST_CASE("tensor_morphisms on 1-dim squares") {
  Field q = Field::rationals();
  // Two everywhere-scalar squares: g1 = 2, h1 = 3, identities elsewhere.
  LMObject one{Matrix::identity(q, 1)};
  LMMorphism g{one, one, mat(q, 1, 1, {2}), mat(q, 1, 1, {2})};
  LMMorphism h{one, one, mat(q, 1, 1, {3}), mat(q, 1, 1, {3})};
  REQUIRE(check_lm_morphism(g).pass());
  REQUIRE(check_lm_morphism(h).pass());
  LMMorphism gh = tensor_morphisms(g, h);
  CHECK(gh.h0 == mat(q, 1, 1, {6}));
  // Top blocks: g1 (x) h0 = 6 on V(x)W', g0 (x) h1 = 6 on W(x)V'.
  CHECK(gh.h1 == mat(q, 2, 2, {6, 0, 0, 6}));
}

TEST_CASE("braiding is an involution and matches the index bookkeeping") {
  Field q = Field::rationals();
  LMObject a{mat(q, 1, 1, {2})};
  LMObject b{mat(q, 2, 1, {1, 1})};

  LMMorphism tau = braiding(a, b);
  LMMorphism tau_back = braiding(b, a);
  LMMorphism round = compose(tau_back, tau);
  CHECK(round.h1 == Matrix::identity(q, tensor_objects(a, b).dim_v()));
  CHECK(round.h0 == Matrix::identity(q, tensor_objects(a, b).dim_w()));

  // a = b: an involution on a (x) a.
  LMMorphism tt = braiding(a, a);
  LMMorphism sq = compose(tt, tt);
  CHECK(sq.h1 == Matrix::identity(q, tensor_objects(a, a).dim_v()));
  CHECK(sq.h0 == Matrix::identity(q, tensor_objects(a, a).dim_w()));
}

TEST_CASE("LM category laws on random morphisms") {
  Field q = Field::rationals();
  std::mt19937_64 rng(20240811);
  for (int trial = 0; trial < 25; ++trial) {
    LMObject a = random_injective_object(q, rng);
    LMObject b = random_injective_object(q, rng);
    LMObject c = random_injective_object(q, rng);
    LMObject d = random_injective_object(q, rng);
    LMMorphism f1 = random_morphism(a, b, rng);
    LMMorphism f2 = random_morphism(b, c, rng);
    LMMorphism f3 = random_morphism(c, d, rng);

    LMMorphism assoc_l = compose(f3, compose(f2, f1));
    LMMorphism assoc_r = compose(compose(f3, f2), f1);
    CHECK(assoc_l.h1 == assoc_r.h1);
    CHECK(assoc_l.h0 == assoc_r.h0);

    LMMorphism unit_l = compose(lm_identity(b), f1);
    LMMorphism unit_r = compose(f1, lm_identity(a));
    CHECK(unit_l.h1 == f1.h1);
    CHECK(unit_r.h1 == f1.h1);
    CHECK(unit_l.h0 == f1.h0);
    CHECK(unit_r.h0 == f1.h0);

    LMMorphism tau = braiding(a, b);
    LMMorphism back = braiding(b, a);
    LMMorphism round = compose(back, tau);
    CHECK(round.h1 == Matrix::identity(q, tensor_objects(a, b).dim_v()));
    CHECK(round.h0 == Matrix::identity(q, tensor_objects(a, b).dim_w()));
  }
}

TEST_CASE("check_algebra_object") {
  Field q = Field::rationals();
  for (const auto& [name, x] : corpus::algebra_object_corpus(q)) {
    INFO(name);
    CHECK(check_algebra_object(x).pass());
  }

  // g not A-linear: M = (x) in Q[x]/(x^2) with g(x) = 1.
  LMAlgebraObject bad = corpus::alg_object_ideal_x(q, 2);
  bad.g = mat(q, 2, 1, {1, 0});
  CheckReport r = check_algebra_object(bad);
  REQUIRE(!r.pass());
  CHECK(r.violations[0].axiom == "g-a-linear");
  CHECK(r.violations[0].witness == std::vector<long>{1, 0});
}

TEST_CASE("check_lie_object") {
  Field q = Field::rationals();

  // (L -id-> L) with the adjoint right action.
  LieAlgebra sl = corpus::sl2(q);
  LMLieObject self{sl, sl.dim, sl.bracket, Matrix::identity(q, sl.dim)};
  CHECK(check_lie_object(self).pass());

  // pi: g -> g_Lie with N = g and the action through any lift of pi.
  LeibnizAlgebra g = corpus::dim2_square(q);
  ReducedLie red = reduced_lie(g);
  StructureTensor act(q, g.dim, red.lie.dim, g.dim);
  for (std::size_t n = 0; n < g.dim; ++n)
    for (std::size_t i = 0; i < red.lie.dim; ++i) {
      Vec v = g.br(unit_vec(q, g.dim, n), red.section.col(i));
      for (std::size_t k = 0; k < g.dim; ++k) act.at(n, i, k) = v[k];
    }
  LMLieObject pi_obj{red.lie, g.dim, act, red.pi};
  CHECK(check_lie_object(pi_obj).pass());

  // Break equivariance: f = 0 with a nontrivial action.
  LMLieObject broken{sl, sl.dim, sl.bracket, Matrix(q, sl.dim, sl.dim)};
  CheckReport r = check_lie_object(broken);
  REQUIRE(!r.pass());
  CHECK(r.violations[0].axiom == "f-equivariant");
}

TEST_CASE("module over an algebra object") {
  Field q = Field::rationals();
  CommAlgebra a = corpus::truncated_poly(q, 2);
  LMAlgebraObject x = corpus::alg_object_identity(a);

  // x as a module over itself: mu1(m (x) w) = m.w.
  std::size_t dm = a.dim, dw = a.dim;
  Matrix mu1(q, a.dim, dm * dw);
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t j = 0; j < dw; ++j) mu1.set_col(i * dw + j, a.mult.eval_basis(i, j));
  LMModuleOverAlgebra self{x.object(), a.mult, a.mult, mu1};
  CHECK(check_module_over_algebra_object(x, self).pass());

  // Perturb mu1 so it no longer kills the relators.
  LMModuleOverAlgebra bad = self;
  bad.mu1.at(0, 1 * dw + 1) = q.one();  // mu1(x (x) x) = 1 + old value
  CheckReport r = check_module_over_algebra_object(x, bad);
  REQUIRE(!r.pass());
  bool saw_descent = false;
  for (const Violation& v : r.violations) saw_descent |= v.axiom == "alpha-ell-descent";
  CHECK(saw_descent);
}

TEST_CASE("module over a Lie object: the self action") {
  Field q = Field::rationals();
  std::vector<std::pair<std::string, LieAlgebra>> cases = {{"sl2", corpus::sl2(q)},
                                                           {"heis", corpus::heisenberg(q)}};
  for (const auto& [name, l] : cases) {
    INFO(name);
    LMLieObject x{l, l.dim, l.bracket, Matrix::identity(q, l.dim)};
    REQUIRE(check_lie_object(x).pass());
    CHECK(check_module_over_lie_object(x, self_action(x)).pass());
  }

  // Trivial actions on any object are a module.
  LieAlgebra sl = corpus::sl2(q);
  LMLieObject x{sl, sl.dim, sl.bracket, Matrix::identity(q, sl.dim)};
  LMObject v{Matrix(q, 1, 1)};
  LMModuleOverLie trivial{v, StructureTensor(q, 3, 1, 1), StructureTensor(q, 3, 1, 1),
                          Matrix(q, 1, 3)};
  CHECK(check_module_over_lie_object(x, trivial).pass());

  // Perturbing alpha1 breaks the compatibility law.
  LMModuleOverLie bad = self_action(x);
  bad.alpha1.at(0, 0) = q.add(bad.alpha1.at(0, 0), q.one());
  CHECK(!check_module_over_lie_object(x, bad).pass());
}

TEST_CASE("squares annihilation") {
  Field q = Field::rationals();

  // Injective f on a Lie algebra: squares vanish identically.
  LieAlgebra sl = corpus::sl2(q);
  LMLieObject x{sl, sl.dim, sl.bracket, Matrix::identity(q, sl.dim)};
  CommAlgebra a = corpus::truncated_poly(q, 1);
  StructureTensor a_on_n(q, 1, 3, 3);
  for (std::size_t i = 0; i < 3; ++i) a_on_n.at(0, i, i) = q.one();
  CHECK(check_squares_annihilation(x, a, a_on_n).pass());
}

TEST_CASE("structure morphisms") {
  Field q = Field::rationals();
  LMAlgebraObject x = corpus::alg_object_identity(corpus::truncated_poly(q, 2));
  CHECK(check_algebra_morphism(x, x, Matrix::identity(q, 2), Matrix::identity(q, 2)).pass());

  // phi0 multiplicative but phi1 unbalanced.
  Matrix phi1 = Matrix::identity(q, 2);
  phi1.at(0, 1) = q.one();
  CheckReport r = check_algebra_morphism(x, x, phi1, Matrix::identity(q, 2));
  CHECK(!r.pass());

  // The pi-morphism of a reduced Lie algebra, as a morphism of Lie objects
  // (g -pi-> g_Lie) => (g_Lie -id-> g_Lie).
  LeibnizAlgebra g = corpus::dim2_square(q);
  ReducedLie red = reduced_lie(g);
  StructureTensor act(q, g.dim, red.lie.dim, g.dim);
  for (std::size_t n = 0; n < g.dim; ++n)
    for (std::size_t i = 0; i < red.lie.dim; ++i) {
      Vec v = g.br(unit_vec(q, g.dim, n), red.section.col(i));
      for (std::size_t k = 0; k < g.dim; ++k) act.at(n, i, k) = v[k];
    }
  LMLieObject src{red.lie, g.dim, act, red.pi};
  LMLieObject dst{red.lie, red.lie.dim, red.lie.bracket, Matrix::identity(q, red.lie.dim)};
  CHECK(check_lie_object_morphism(src, dst, red.pi, Matrix::identity(q, red.lie.dim)).pass());
}
