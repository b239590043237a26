#include "loday/algebroid.hpp"

#include "loday/errors.hpp"

namespace loday {

CheckReport check_leibniz_algebroid(const LeibnizAlgebroid& x) {
  const Field& f = x.a.field;
  std::size_t da = x.a.dim, de = x.e.dim;
  if (x.a_on_e.d1() != da || x.a_on_e.d2() != de || x.a_on_e.d3() != de)
    throw structural_error("check_leibniz_algebroid: action shape mismatch");
  if (x.anchor.d1() != de || x.anchor.d2() != da || x.anchor.d3() != da)
    throw structural_error("check_leibniz_algebroid: anchor shape mismatch");
  AxiomRecorder rec;

  rec.merge(check_leibniz(x.e));
  rec.merge(check_a_module(x.a, {f, de, x.a_on_e}), "e-");

  for (long i = 0; i < static_cast<long>(de); ++i)
    for (long a = 0; a < static_cast<long>(da); ++a)
      for (long b = 0; b < static_cast<long>(da); ++b) {
        Vec lhs = x.anchor.eval(unit_vec(f, de, i), x.a.mult.eval_basis(a, b));
        Vec rhs = add_vec(f, x.a.mult.eval(x.anchor.eval_basis(i, a), unit_vec(f, da, b)),
                          x.a.mult.eval(x.anchor.eval_basis(i, b), unit_vec(f, da, a)));
        rec.residual(f, "anchor-in-der", {i, a, b}, sub_vec(f, lhs, rhs));
      }

  for (long a = 0; a < static_cast<long>(da); ++a)
    for (long i = 0; i < static_cast<long>(de); ++i) {
      Matrix lhs = x.anchor.left_action(x.a_on_e.eval_basis(a, i));
      Matrix rho_i = x.anchor.left_action(unit_vec(f, de, i));
      Matrix rhs(f, da, da);
      for (std::size_t c = 0; c < da; ++c)
        rhs.set_col(c, x.a.mult.eval(unit_vec(f, da, a), rho_i.col(c)));
      rec.residual(f, "anchor-a-linear", {a, i}, flatten(sub(lhs, rhs)));
    }

  // rho([e1,e2]) = [rho(e2), rho(e1)] as commutators in Hom(A,A).
  for (long i = 0; i < static_cast<long>(de); ++i)
    for (long j = 0; j < static_cast<long>(de); ++j) {
      Matrix mi = x.anchor.left_action(unit_vec(f, de, i));
      Matrix mj = x.anchor.left_action(unit_vec(f, de, j));
      Matrix lhs = x.anchor.left_action(x.e.bracket.eval_basis(i, j));
      Matrix rhs = sub(mul(mj, mi), mul(mi, mj));
      rec.residual(f, "LBanchor-antihom", {i, j}, flatten(sub(lhs, rhs)));
    }

  // [a.e1, e2] = a.[e1,e2] + rho(e2)(a).e1
  for (long a = 0; a < static_cast<long>(da); ++a)
    for (long i = 0; i < static_cast<long>(de); ++i)
      for (long j = 0; j < static_cast<long>(de); ++j) {
        Vec lhs = x.e.br(x.a_on_e.eval_basis(a, i), unit_vec(f, de, j));
        Vec rhs = add_vec(
            f, x.a_on_e.eval(unit_vec(f, da, a), x.e.bracket.eval_basis(i, j)),
            x.a_on_e.eval(x.anchor.eval_basis(j, a), unit_vec(f, de, i)));
        rec.residual(f, "LBrule", {a, i, j}, sub_vec(f, lhs, rhs));
      }

  return rec.finish("", "leibniz-algebroid", f);
}

namespace {

void local_residuals(AxiomRecorder& rec, const LeibnizAlgebroid& x,
                     const std::vector<Vec>& slot_vectors) {
  const Field& f = x.a.field;
  std::size_t da = x.a.dim, de = x.e.dim;
  for (long i = 0; i < static_cast<long>(de); ++i)
    for (long a = 0; a < static_cast<long>(da); ++a)
      for (long s = 0; s < static_cast<long>(slot_vectors.size()); ++s) {
        const Vec& e2 = slot_vectors[s];
        Vec lhs = x.e.br(unit_vec(f, de, i), x.a_on_e.eval(unit_vec(f, da, a), e2));
        Vec rhs = sub_vec(
            f, x.a_on_e.eval(unit_vec(f, da, a), x.e.br(unit_vec(f, de, i), e2)),
            x.a_on_e.eval(x.anchor.eval(unit_vec(f, de, i), unit_vec(f, da, a)), e2));
        rec.residual(f, "local", {i, a, s}, sub_vec(f, lhs, rhs));
      }
}

}  // namespace

CheckReport check_local(const LeibnizAlgebroid& x) {
  const Field& f = x.a.field;
  std::vector<Vec> slots;
  for (std::size_t j = 0; j < x.e.dim; ++j) slots.push_back(unit_vec(f, x.e.dim, j));
  AxiomRecorder rec;
  local_residuals(rec, x, slots);
  return rec.finish("", "local", f);
}

CheckReport check_local(const LeibnizAlgebroid& x, const Subspace& second_slot) {
  if (second_slot.ambient_dim != x.e.dim)
    throw structural_error("check_local: subspace ambient mismatch");
  std::vector<Vec> slots;
  for (std::size_t r = 0; r < second_slot.dim(); ++r) slots.push_back(second_slot.basis.row(r));
  AxiomRecorder rec;
  local_residuals(rec, x, slots);
  return rec.finish("", "local", x.a.field);
}

Subspace Theorem2Result::n_part() const {
  const Field& f = algebroid.a.field;
  std::vector<Vec> rows;
  for (std::size_t j = 0; j < n_dim; ++j) rows.push_back(unit_vec(f, m_dim + n_dim, m_dim + j));
  return subspace_from_rows(f, m_dim + n_dim, rows);
}

Theorem2Result theorem2_functor(const TheoremOneData& d) {
  CheckReport valid = check_theorem1_object(d);
  if (!valid.pass())
    throw precondition_error("theorem2_functor: input fails check_theorem1_object", valid);
  const Field& f = d.alg.a.field;
  std::size_t da = d.alg.a.dim, dm = d.alg.m.dim, dn = d.lie.n_dim;
  std::size_t de = dm + dn;

  // Bracket: [m1+n1, m2+n2] = -rho2(f(n2))(m1) + [n1, f(n2)].
  StructureTensor bracket(f, de, de, de);
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t j = 0; j < dn; ++j) {
      Vec val = d.rho2.eval(d.lie.f.col(j), unit_vec(f, dm, i));
      for (std::size_t k = 0; k < dm; ++k) bracket.at(i, dm + j, k) = f.neg(val[k]);
    }
  for (std::size_t i = 0; i < dn; ++i)
    for (std::size_t j = 0; j < dn; ++j) {
      Vec val = d.lie.act(unit_vec(f, dn, i), d.lie.f.col(j));
      for (std::size_t k = 0; k < dn; ++k) bracket.at(dm + i, dm + j, dm + k) = val[k];
    }

  StructureTensor action(f, da, de, de);
  for (std::size_t a = 0; a < da; ++a) {
    for (std::size_t i = 0; i < dm; ++i)
      for (std::size_t k = 0; k < dm; ++k) action.at(a, i, k) = d.alg.m.action.at(a, i, k);
    for (std::size_t i = 0; i < dn; ++i)
      for (std::size_t k = 0; k < dn; ++k)
        action.at(a, dm + i, dm + k) = d.a_on_n.at(a, i, k);
  }

  // Anchor -rho0 o f on the N block, zero on M.
  StructureTensor anchor(f, de, da, da);
  for (std::size_t j = 0; j < dn; ++j) {
    Matrix rho = d.rho0.left_action(d.lie.f.col(j));  // da x da
    for (std::size_t a = 0; a < da; ++a)
      for (std::size_t k = 0; k < da; ++k) anchor.at(dm + j, a, k) = f.neg(rho.at(k, a));
  }

  return {{d.alg.a, {f, de, std::move(bracket)}, std::move(action), std::move(anchor)}, dm, dn};
}

LeibnizAlgebroid hemi_semi_algebroid(const LieRinehartPair& p, const AModule& m,
                                     const StructureTensor& nabla) {
  CheckReport pair_ok = check_lie_rinehart_pair(p);
  if (!pair_ok.pass())
    throw precondition_error("hemi_semi_algebroid: pair fails check_lie_rinehart_pair", pair_ok);
  CheckReport module_ok = check_lr_module(p, m, nabla);
  if (!module_ok.pass())
    throw precondition_error("hemi_semi_algebroid: module fails check_lr_module", module_ok);

  const Field& f = p.a.field;
  std::size_t da = p.a.dim, dm = m.dim, dl = p.l.dim, de = dm + dl;

  StructureTensor bracket(f, de, de, de);
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t j = 0; j < dl; ++j)
      for (std::size_t k = 0; k < dm; ++k)
        bracket.at(i, dm + j, k) = f.neg(nabla.at(j, i, k));
  for (std::size_t i = 0; i < dl; ++i)
    for (std::size_t j = 0; j < dl; ++j)
      for (std::size_t k = 0; k < dl; ++k)
        bracket.at(dm + i, dm + j, dm + k) = p.l.bracket.at(i, j, k);

  StructureTensor action(f, da, de, de);
  for (std::size_t a = 0; a < da; ++a) {
    for (std::size_t i = 0; i < dm; ++i)
      for (std::size_t k = 0; k < dm; ++k) action.at(a, i, k) = m.action.at(a, i, k);
    for (std::size_t i = 0; i < dl; ++i)
      for (std::size_t k = 0; k < dl; ++k) action.at(a, dm + i, dm + k) = p.a_on_l.at(a, i, k);
  }

  StructureTensor anchor(f, de, da, da);
  for (std::size_t j = 0; j < dl; ++j)
    for (std::size_t a = 0; a < da; ++a)
      for (std::size_t k = 0; k < da; ++k)
        anchor.at(dm + j, a, k) = f.neg(p.anchor.at(j, a, k));

  return {p.a, {f, de, std::move(bracket)}, std::move(action), std::move(anchor)};
}

LeibnizAlgebroid algebroid_from_pair(const LieRinehartPair& p) {
  const Field& f = p.a.field;
  StructureTensor anchor(f, p.l.dim, p.a.dim, p.a.dim);
  for (std::size_t i = 0; i < p.l.dim; ++i)
    for (std::size_t a = 0; a < p.a.dim; ++a)
      for (std::size_t k = 0; k < p.a.dim; ++k) anchor.at(i, a, k) = f.neg(p.anchor.at(i, a, k));
  return {p.a, {f, p.l.dim, p.l.bracket}, p.a_on_l, std::move(anchor)};
}

ReduceResult reduce_algebroid(const LeibnizAlgebroid& x) {
  const Field& f = x.a.field;
  SquaresIdeal sq = squares_ideal(x.e);

  AxiomRecorder obstruction;
  for (long a = 0; a < static_cast<long>(x.a.dim); ++a)
    for (long r = 0; r < static_cast<long>(sq.ideal.dim()); ++r) {
      Vec scaled = x.a_on_e.eval(unit_vec(f, x.a.dim, a), sq.ideal.basis.row(r));
      if (!subspace_contains(sq.ideal, scaled)) {
        QuotientMaps q = quotient_basis(x.e.dim, sq.ideal);
        obstruction.fail("a-stable", {a, r}, mul_vec(q.projection, scaled));
      }
    }
  if (!obstruction.clean()) {
    ReduceResult out{std::nullopt, Matrix(f, 0, x.e.dim), std::move(sq),
                     obstruction.finish("", "reduce-algebroid", f), CheckReport{}};
    return out;
  }

  ReducedLie red = reduced_lie(x.e);
  std::size_t q = red.lie.dim;

  StructureTensor action(f, x.a.dim, q, q);
  for (std::size_t a = 0; a < x.a.dim; ++a)
    for (std::size_t i = 0; i < q; ++i) {
      Vec val = mul_vec(red.pi, x.a_on_e.eval(unit_vec(f, x.a.dim, a), red.section.col(i)));
      for (std::size_t k = 0; k < q; ++k) action.at(a, i, k) = val[k];
    }

  // Anchor -rho_E descended along the section; well defined because the
  // anchor kills the squares ideal.
  StructureTensor anchor(f, q, x.a.dim, x.a.dim);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t a = 0; a < x.a.dim; ++a) {
      Vec val = x.anchor.eval(red.section.col(i), unit_vec(f, x.a.dim, a));
      for (std::size_t k = 0; k < x.a.dim; ++k) anchor.at(i, a, k) = f.neg(val[k]);
    }

  LieRinehartPair pair{x.a, red.lie, std::move(action), std::move(anchor)};
  CheckReport verification = check_lie_rinehart_pair(pair);
  return {std::move(pair), red.pi, std::move(red.squares), CheckReport{}, std::move(verification)};
}

CheckReport attempt_tensor_square_anchor(const LieRinehartPair& p) {
  const Field& f = p.a.field;
  std::size_t da = p.a.dim, dl = p.l.dim;
  AxiomRecorder rec;
  // gamma(x (x) y) = rho([x,y]); A acts through the first tensor factor.
  for (long a = 0; a < static_cast<long>(da); ++a)
    for (long i = 0; i < static_cast<long>(dl); ++i)
      for (long j = 0; j < static_cast<long>(dl); ++j) {
        Vec ax = p.a_on_l.eval_basis(a, i);
        Matrix lhs = p.anchor.left_action(p.l.br(ax, unit_vec(f, dl, j)));
        Matrix gamma = p.anchor.left_action(p.l.bracket.eval_basis(i, j));
        Matrix rhs(f, da, da);
        for (std::size_t c = 0; c < da; ++c)
          rhs.set_col(c, p.a.mult.eval(unit_vec(f, da, a), gamma.col(c)));
        rec.residual(f, "tensor-anchor-a-linear", {a, i, j}, flatten(sub(lhs, rhs)));
      }
  return rec.finish("", "tensor-square-anchor", f);
}

LeibnizAlgebroid change_basis(const LeibnizAlgebroid& x, const Matrix& t_a, const Matrix& t_e) {
  return {change_basis(x.a, t_a), change_basis(x.e, t_e),
          change_basis_tensor(x.a_on_e, t_a, t_e, t_e),
          change_basis_tensor(x.anchor, t_e, t_a, t_a)};
}

}  // namespace loday
