#include "loday/lm.hpp"

#include "loday/errors.hpp"

namespace loday {

namespace {

void assert_square(const LMMorphism& m, const std::string& axiom_id) {
  CheckReport r = check_lm_morphism(m, axiom_id);
  if (!r.pass())
    throw precondition_error("constructed morphism fails its commuting square (" + axiom_id + ")",
                             r);
}

}  // namespace

CheckReport check_lm_morphism(const LMMorphism& m, const std::string& axiom_id) {
  const Field& f = m.h1.field();
  if (m.h1.cols() != m.source.dim_v() || m.h1.rows() != m.target.dim_v() ||
      m.h0.cols() != m.source.dim_w() || m.h0.rows() != m.target.dim_w())
    throw structural_error("check_lm_morphism: component shape mismatch");
  Matrix lhs = mul(m.target.u, m.h1);
  Matrix rhs = mul(m.h0, m.source.u);
  AxiomRecorder rec;
  for (long j = 0; j < static_cast<long>(lhs.cols()); ++j)
    rec.residual(f, axiom_id, {j}, sub_vec(f, lhs.col(j), rhs.col(j)));
  return rec.finish("", "lm-morphism", f);
}

LMMorphism lm_identity(const LMObject& a) {
  const Field& f = a.u.field();
  return {a, a, Matrix::identity(f, a.dim_v()), Matrix::identity(f, a.dim_w())};
}

LMMorphism lm_zero_morphism(const LMObject& a, const LMObject& b) {
  const Field& f = a.u.field();
  return {a, b, Matrix(f, b.dim_v(), a.dim_v()), Matrix(f, b.dim_w(), a.dim_w())};
}

LMMorphism compose(const LMMorphism& h, const LMMorphism& g) {
  if (!(g.target == h.source)) throw structural_error("compose: target/source mismatch");
  LMMorphism out{g.source, h.target, mul(h.h1, g.h1), mul(h.h0, g.h0)};
  assert_square(out, "hgcomp-square");
  return out;
}

LMObject lm_unit(Field f) { return {Matrix(f, 1, 0)}; }

LMObject tensor_objects(const LMObject& a, const LMObject& b) {
  const Field& f = a.u.field();
  if (f != b.u.field()) throw structural_error("tensor_objects: field mismatch");
  Matrix left = kron(a.u, Matrix::identity(f, b.dim_w()));   // V(x)W' -> W(x)W'
  Matrix right = kron(Matrix::identity(f, a.dim_w()), b.u);  // W(x)V' -> W(x)W'
  return {hstack(left, right)};
}

LMMorphism tensor_morphisms(const LMMorphism& g, const LMMorphism& h) {
  const Field& f = g.h1.field();
  LMObject src = tensor_objects(g.source, h.source);
  LMObject dst = tensor_objects(g.target, h.target);
  // Top map: g1(x)h0 on the V(x)W' block, g0(x)h1 on the W(x)V' block.
  Matrix top_a = kron(g.h1, h.h0);
  Matrix top_b = kron(g.h0, h.h1);
  Matrix top(f, dst.dim_v(), src.dim_v());
  std::size_t dst_split = g.target.dim_v() * h.target.dim_w();
  std::size_t src_split = g.source.dim_v() * h.source.dim_w();
  for (std::size_t i = 0; i < top_a.rows(); ++i)
    for (std::size_t j = 0; j < top_a.cols(); ++j) top.at(i, j) = top_a.at(i, j);
  for (std::size_t i = 0; i < top_b.rows(); ++i)
    for (std::size_t j = 0; j < top_b.cols(); ++j)
      top.at(dst_split + i, src_split + j) = top_b.at(i, j);
  LMMorphism out{src, dst, std::move(top), kron(g.h0, h.h0)};
  assert_square(out, "hgtensor-square");
  return out;
}

LMMorphism braiding(const LMObject& a, const LMObject& b) {
  const Field& f = a.u.field();
  LMObject src = tensor_objects(a, b);
  LMObject dst = tensor_objects(b, a);
  std::size_t va = a.dim_v(), wa = a.dim_w(), vb = b.dim_v(), wb = b.dim_w();

  Matrix tau0(f, wb * wa, wa * wb);
  for (std::size_t i = 0; i < wa; ++i)
    for (std::size_t j = 0; j < wb; ++j) tau0.at(j * wa + i, i * wb + j) = f.one();

  Matrix tau1(f, vb * wa + wb * va, va * wb + wa * vb);
  // v (x) w'  |->  w' (x) v, the second block of b(x)a.
  for (std::size_t i = 0; i < va; ++i)
    for (std::size_t j = 0; j < wb; ++j)
      tau1.at(vb * wa + j * va + i, i * wb + j) = f.one();
  // w (x) v'  |->  v' (x) w, the first block of b(x)a.
  for (std::size_t i = 0; i < wa; ++i)
    for (std::size_t j = 0; j < vb; ++j)
      tau1.at(j * wa + i, va * wb + i * vb + j) = f.one();

  LMMorphism out{src, dst, std::move(tau1), std::move(tau0)};
  assert_square(out, "square");
  return out;
}

CheckReport check_algebra_object(const LMAlgebraObject& x) {
  if (x.g.rows() != x.a.dim || x.g.cols() != x.m.dim)
    throw structural_error("check_algebra_object: g shape mismatch");
  const Field& f = x.a.field;
  AxiomRecorder rec;
  rec.merge(check_comm_algebra(x.a));
  rec.merge(check_a_module(x.a, x.m));
  for (long i = 0; i < static_cast<long>(x.a.dim); ++i)
    for (long j = 0; j < static_cast<long>(x.m.dim); ++j) {
      Vec lhs = mul_vec(x.g, x.m.action.eval_basis(i, j));
      Vec rhs = x.a.mult.eval(unit_vec(f, x.a.dim, i), x.g.col(j));
      rec.residual(f, "g-a-linear", {i, j}, sub_vec(f, lhs, rhs));
    }
  return rec.finish("", "lm-algebra-object", f);
}

CheckReport check_lie_object(const LMLieObject& x) {
  if (x.f.rows() != x.l.dim || x.f.cols() != x.n_dim)
    throw structural_error("check_lie_object: f shape mismatch");
  if (x.n_action.d1() != x.n_dim || x.n_action.d2() != x.l.dim || x.n_action.d3() != x.n_dim)
    throw structural_error("check_lie_object: action tensor shape mismatch");
  const Field& f = x.l.field;
  AxiomRecorder rec;
  rec.merge(check_lie(x.l));
  // Right module: [n, [xi, zeta]] = [[n, xi], zeta] - [[n, zeta], xi].
  for (long n = 0; n < static_cast<long>(x.n_dim); ++n)
    for (long i = 0; i < static_cast<long>(x.l.dim); ++i)
      for (long j = 0; j < static_cast<long>(x.l.dim); ++j) {
        Vec lhs = x.n_action.eval(unit_vec(f, x.n_dim, n), x.l.bracket.eval_basis(i, j));
        Vec rhs = sub_vec(f, x.act(x.n_action.eval_basis(n, i), unit_vec(f, x.l.dim, j)),
                          x.act(x.n_action.eval_basis(n, j), unit_vec(f, x.l.dim, i)));
        rec.residual(f, "right-module", {n, i, j}, sub_vec(f, lhs, rhs));
      }
  for (long n = 0; n < static_cast<long>(x.n_dim); ++n)
    for (long i = 0; i < static_cast<long>(x.l.dim); ++i) {
      Vec lhs = mul_vec(x.f, x.n_action.eval_basis(n, i));
      Vec rhs = x.l.br(x.f.col(n), unit_vec(f, x.l.dim, i));
      rec.residual(f, "f-equivariant", {n, i}, sub_vec(f, lhs, rhs));
    }
  return rec.finish("", "lm-lie-object", f);
}

CheckReport check_module_over_algebra_object(const LMAlgebraObject& x,
                                             const LMModuleOverAlgebra& mod) {
  const Field& f = x.a.field;
  std::size_t dv = mod.v.dim_v(), dw = mod.v.dim_w();
  if (mod.act_w.d1() != x.a.dim || mod.act_w.d2() != dw || mod.act_w.d3() != dw ||
      mod.act_v.d1() != x.a.dim || mod.act_v.d2() != dv || mod.act_v.d3() != dv)
    throw structural_error("check_module_over_algebra_object: action shape mismatch");
  if (mod.mu1.rows() != dv || mod.mu1.cols() != x.m.dim * dw)
    throw structural_error("check_module_over_algebra_object: mu1 shape mismatch");
  AxiomRecorder rec;
  rec.merge(check_a_module(x.a, {f, dw, mod.act_w}), "w-");
  rec.merge(check_a_module(x.a, {f, dv, mod.act_v}), "v-");

  for (long i = 0; i < static_cast<long>(x.a.dim); ++i)
    for (long j = 0; j < static_cast<long>(dv); ++j) {
      Vec lhs = mul_vec(mod.v.u, mod.act_v.eval_basis(i, j));
      Vec rhs = mod.act_w.eval(unit_vec(f, x.a.dim, i), mul_vec(mod.v.u, unit_vec(f, dv, j)));
      rec.residual(f, "u-a-linear", {i, j}, sub_vec(f, lhs, rhs));
    }

  // mu1 must kill every relator of M (x)_A W and must be balanced over A;
  // together these say it descends to the structure map on M (x)_A W.
  for (long t = 0; t < static_cast<long>(x.a.dim); ++t)
    for (long i = 0; i < static_cast<long>(x.m.dim); ++i)
      for (long j = 0; j < static_cast<long>(dw); ++j) {
        Vec am = x.m.action.eval_basis(t, i);
        Vec aw = mod.act_w.eval_basis(t, j);
        Vec rel = zero_vec(f, x.m.dim * dw);
        for (std::size_t k = 0; k < x.m.dim; ++k) rel[k * dw + j] = am[k];
        for (std::size_t k = 0; k < dw; ++k)
          rel[i * dw + k] = f.sub(rel[i * dw + k], aw[k]);
        rec.residual(f, "alpha-ell-descent", {t, i, j}, mul_vec(mod.mu1, rel));

        Vec lhs = zero_vec(f, dv);
        for (std::size_t k = 0; k < x.m.dim; ++k)
          axpy(f, lhs, am[k], mod.mu1.col(k * dw + j));
        Vec rhs = mod.act_v.eval(unit_vec(f, x.a.dim, t), mod.mu1.col(i * dw + j));
        rec.residual(f, "alpha-ell-a-linear", {t, i, j}, sub_vec(f, lhs, rhs));
      }

  // u(alpha_ell(m (x) w)) = g(m).w on basis pairs.
  for (long i = 0; i < static_cast<long>(x.m.dim); ++i)
    for (long j = 0; j < static_cast<long>(dw); ++j) {
      Vec lhs = mul_vec(mod.v.u, mod.mu1.col(i * dw + j));
      Vec rhs = mod.act_w.eval(x.g.col(i), unit_vec(f, dw, j));
      rec.residual(f, "alpha-ell", {i, j}, sub_vec(f, lhs, rhs));
    }

  return rec.finish("", "lm-module-algebra", f);
}

CheckReport check_module_over_lie_object(const LMLieObject& x, const LMModuleOverLie& mod) {
  const Field& f = x.l.field;
  std::size_t dv = mod.v.dim_v(), dw = mod.v.dim_w();
  if (mod.alpha0.d1() != x.l.dim || mod.alpha0.d2() != dw || mod.alpha0.d3() != dw ||
      mod.alpha2.d1() != x.l.dim || mod.alpha2.d2() != dv || mod.alpha2.d3() != dv)
    throw structural_error("check_module_over_lie_object: action shape mismatch");
  if (mod.alpha1.rows() != dv || mod.alpha1.cols() != x.n_dim * dw)
    throw structural_error("check_module_over_lie_object: alpha1 shape mismatch");
  AxiomRecorder rec;

  auto left_action_law = [&](const StructureTensor& act, std::size_t dim, const char* id) {
    for (long i = 0; i < static_cast<long>(x.l.dim); ++i)
      for (long j = 0; j < static_cast<long>(x.l.dim); ++j)
        for (long k = 0; k < static_cast<long>(dim); ++k) {
          Vec lhs = act.eval(x.l.bracket.eval_basis(i, j), unit_vec(f, dim, k));
          Vec rhs = sub_vec(f, act.eval(unit_vec(f, x.l.dim, i), act.eval_basis(j, k)),
                            act.eval(unit_vec(f, x.l.dim, j), act.eval_basis(i, k)));
          rec.residual(f, id, {i, j, k}, sub_vec(f, lhs, rhs));
        }
  };
  left_action_law(mod.alpha0, dw, "alpha0-action");
  left_action_law(mod.alpha2, dv, "alpha2-action");

  // alpha1([n,xi] (x) w) = alpha1(n (x) alpha0(xi (x) w)) - alpha2(xi (x) alpha1(n (x) w)).
  for (long n = 0; n < static_cast<long>(x.n_dim); ++n)
    for (long i = 0; i < static_cast<long>(x.l.dim); ++i)
      for (long w = 0; w < static_cast<long>(dw); ++w) {
        Vec nxi = x.n_action.eval_basis(n, i);
        Vec lhs = zero_vec(f, dv);
        for (std::size_t k = 0; k < x.n_dim; ++k)
          axpy(f, lhs, nxi[k], mod.alpha1.col(k * dw + w));
        Vec a0 = mod.alpha0.eval_basis(i, w);
        Vec term1 = zero_vec(f, dv);
        for (std::size_t k = 0; k < dw; ++k)
          axpy(f, term1, a0[k], mod.alpha1.col(n * dw + k));
        Vec term2 =
            mod.alpha2.eval(unit_vec(f, x.l.dim, i), mod.alpha1.col(n * dw + w));
        rec.residual(f, "compat3", {n, i, w}, sub_vec(f, lhs, sub_vec(f, term1, term2)));
      }

  // u alpha1 = alpha0 (f (x) 1_W)
  for (long n = 0; n < static_cast<long>(x.n_dim); ++n)
    for (long w = 0; w < static_cast<long>(dw); ++w) {
      Vec lhs = mul_vec(mod.v.u, mod.alpha1.col(n * dw + w));
      Vec rhs = mod.alpha0.eval(x.f.col(n), unit_vec(f, dw, w));
      rec.residual(f, "u-alpha1", {n, w}, sub_vec(f, lhs, rhs));
    }
  // u alpha2 = alpha0 (1_L (x) u)
  for (long i = 0; i < static_cast<long>(x.l.dim); ++i)
    for (long v = 0; v < static_cast<long>(dv); ++v) {
      Vec lhs = mul_vec(mod.v.u, mod.alpha2.eval_basis(i, v));
      Vec rhs = mod.alpha0.eval(unit_vec(f, x.l.dim, i), mul_vec(mod.v.u, unit_vec(f, dv, v)));
      rec.residual(f, "u-alpha2", {i, v}, sub_vec(f, lhs, rhs));
    }

  return rec.finish("", "lm-module-lie", f);
}

LMModuleOverLie self_action(const LMLieObject& x) {
  const Field& f = x.l.field;
  StructureTensor alpha0 = x.l.bracket;
  StructureTensor alpha2(f, x.l.dim, x.n_dim, x.n_dim);
  for (std::size_t i = 0; i < x.l.dim; ++i)
    for (std::size_t n = 0; n < x.n_dim; ++n)
      for (std::size_t k = 0; k < x.n_dim; ++k)
        alpha2.at(i, n, k) = f.neg(x.n_action.at(n, i, k));
  Matrix alpha1(f, x.n_dim, x.n_dim * x.l.dim);
  for (std::size_t n = 0; n < x.n_dim; ++n)
    for (std::size_t i = 0; i < x.l.dim; ++i)
      alpha1.set_col(n * x.l.dim + i, x.n_action.eval_basis(n, i));
  return {x.object(), std::move(alpha0), std::move(alpha2), std::move(alpha1)};
}

CheckReport check_squares_annihilation(const LMLieObject& x, const CommAlgebra& a,
                                       const StructureTensor& a_on_n) {
  if (a_on_n.d1() != a.dim || a_on_n.d2() != x.n_dim || a_on_n.d3() != x.n_dim)
    throw structural_error("check_squares_annihilation: action shape mismatch");
  const Field& f = x.l.field;
  AxiomRecorder rec;
  for (long n1 = 0; n1 < static_cast<long>(x.n_dim); ++n1)
    for (long t = 0; t < static_cast<long>(a.dim); ++t)
      for (long n2 = 0; n2 < static_cast<long>(x.n_dim); ++n2) {
        Vec sq = x.act(unit_vec(f, x.n_dim, n2), x.f.col(n2));  // [n2, n2]_N
        Vec scaled = a_on_n.eval(unit_vec(f, a.dim, t), sq);
        Vec lhs = x.act(unit_vec(f, x.n_dim, n1), mul_vec(x.f, scaled));
        rec.residual(f, "extra", {n1, t, n2}, lhs);
      }
  return rec.finish("", "squares-annihilation", f);
}

CheckReport check_algebra_morphism(const LMAlgebraObject& src, const LMAlgebraObject& dst,
                                   const Matrix& phi1, const Matrix& phi0) {
  const Field& f = src.a.field;
  if (phi0.cols() != src.a.dim || phi0.rows() != dst.a.dim || phi1.cols() != src.m.dim ||
      phi1.rows() != dst.m.dim)
    throw structural_error("check_algebra_morphism: component shape mismatch");
  AxiomRecorder rec;
  for (long i = 0; i < static_cast<long>(src.a.dim); ++i)
    for (long j = 0; j < static_cast<long>(src.a.dim); ++j) {
      Vec lhs = mul_vec(phi0, src.a.mult.eval_basis(i, j));
      Vec rhs = dst.a.mult.eval(phi0.col(i), phi0.col(j));
      rec.residual(f, "algebra-map-0", {i, j}, sub_vec(f, lhs, rhs));
    }
  for (long i = 0; i < static_cast<long>(src.a.dim); ++i)
    for (long j = 0; j < static_cast<long>(src.m.dim); ++j) {
      Vec lhs = mul_vec(phi1, src.m.action.eval_basis(i, j));
      Vec rhs = dst.m.action.eval(phi0.col(i), phi1.col(j));
      rec.residual(f, "algebra-map-1", {i, j}, sub_vec(f, lhs, rhs));
    }
  LMMorphism square{src.object(), dst.object(), phi1, phi0};
  rec.merge(check_lm_morphism(square));
  return rec.finish("", "algebra-morphism", f);
}

CheckReport check_lie_object_morphism(const LMLieObject& src, const LMLieObject& dst,
                                      const Matrix& phi1, const Matrix& phi0) {
  const Field& f = src.l.field;
  if (phi0.cols() != src.l.dim || phi0.rows() != dst.l.dim || phi1.cols() != src.n_dim ||
      phi1.rows() != dst.n_dim)
    throw structural_error("check_lie_object_morphism: component shape mismatch");
  AxiomRecorder rec;
  for (long i = 0; i < static_cast<long>(src.l.dim); ++i)
    for (long j = 0; j < static_cast<long>(src.l.dim); ++j) {
      Vec lhs = mul_vec(phi0, src.l.bracket.eval_basis(i, j));
      Vec rhs = dst.l.br(phi0.col(i), phi0.col(j));
      rec.residual(f, "lie-map-0", {i, j}, sub_vec(f, lhs, rhs));
    }
  for (long n = 0; n < static_cast<long>(src.n_dim); ++n)
    for (long i = 0; i < static_cast<long>(src.l.dim); ++i) {
      Vec lhs = mul_vec(phi1, src.n_action.eval_basis(n, i));
      Vec rhs = dst.n_action.eval(phi1.col(n), phi0.col(i));
      rec.residual(f, "lie-map-1", {n, i}, sub_vec(f, lhs, rhs));
    }
  LMMorphism square{src.object(), dst.object(), phi1, phi0};
  rec.merge(check_lm_morphism(square));
  return rec.finish("", "lie-morphism", f);
}

LMAlgebraObject change_basis(const LMAlgebraObject& x, const Matrix& t_a, const Matrix& t_m) {
  std::optional<Matrix> ta_inv = invert(t_a);
  if (!ta_inv) throw structural_error("change_basis: singular basis matrix");
  return {change_basis(x.a, t_a), change_basis_module(x.m, t_a, t_m),
          mul(*ta_inv, mul(x.g, t_m))};
}

LMLieObject change_basis(const LMLieObject& x, const Matrix& t_l, const Matrix& t_n) {
  std::optional<Matrix> tl_inv = invert(t_l);
  if (!tl_inv) throw structural_error("change_basis: singular basis matrix");
  return {change_basis(x.l, t_l), x.n_dim, change_basis_tensor(x.n_action, t_n, t_l, t_n),
          mul(*tl_inv, mul(x.f, t_n))};
}

}  // namespace loday
