#include "loday/lie_rinehart.hpp"

#include "loday/errors.hpp"

namespace loday {

namespace {

// The Lie-Rinehart pair laws, shared between the standalone checker and the
// Theorem-1 recognizer (which namespaces the ids with a prefix).
void lr_pair_laws(AxiomRecorder& rec, const LieRinehartPair& p, const std::string& prefix) {
  const Field& f = p.a.field;
  std::size_t da = p.a.dim, dl = p.l.dim;

  rec.merge(check_lie(p.l), prefix);
  rec.merge(check_a_module(p.a, {f, dl, p.a_on_l}), prefix + "l-");

  for (long i = 0; i < static_cast<long>(dl); ++i)
    for (long a = 0; a < static_cast<long>(da); ++a)
      for (long b = 0; b < static_cast<long>(da); ++b) {
        Vec lhs = p.anchor.eval(unit_vec(f, dl, i), p.a.mult.eval_basis(a, b));
        Vec rhs = add_vec(f, p.a.mult.eval(p.anchor.eval_basis(i, a), unit_vec(f, da, b)),
                          p.a.mult.eval(p.anchor.eval_basis(i, b), unit_vec(f, da, a)));
        rec.residual(f, prefix + "anchor-in-der", {i, a, b}, sub_vec(f, lhs, rhs));
      }

  // rho(a.xi) = a.rho(xi), both sides as maps A -> A.
  for (long a = 0; a < static_cast<long>(da); ++a)
    for (long i = 0; i < static_cast<long>(dl); ++i) {
      Matrix lhs = p.anchor.left_action(p.a_on_l.eval_basis(a, i));
      Matrix rho_i = p.anchor.left_action(unit_vec(f, dl, i));
      Matrix rhs(f, da, da);
      for (std::size_t c = 0; c < da; ++c)
        rhs.set_col(c, p.a.mult.eval(unit_vec(f, da, a), rho_i.col(c)));
      rec.residual(f, prefix + "anchor-a-linear", {a, i}, flatten(sub(lhs, rhs)));
    }

  for (long i = 0; i < static_cast<long>(dl); ++i)
    for (long j = 0; j < static_cast<long>(dl); ++j) {
      Matrix mi = p.anchor.left_action(unit_vec(f, dl, i));
      Matrix mj = p.anchor.left_action(unit_vec(f, dl, j));
      Matrix lhs = p.anchor.left_action(p.l.bracket.eval_basis(i, j));
      Matrix rhs = sub(mul(mi, mj), mul(mj, mi));
      rec.residual(f, prefix + "anchor-lie-hom", {i, j}, flatten(sub(lhs, rhs)));
    }

  // [xi, a.zeta] = a.[xi,zeta] + rho(xi)(a).zeta
  for (long i = 0; i < static_cast<long>(dl); ++i)
    for (long a = 0; a < static_cast<long>(da); ++a)
      for (long j = 0; j < static_cast<long>(dl); ++j) {
        Vec lhs = p.l.br(unit_vec(f, dl, i), p.a_on_l.eval_basis(a, j));
        Vec rhs = add_vec(
            f, p.a_on_l.eval(unit_vec(f, da, a), p.l.bracket.eval_basis(i, j)),
            p.a_on_l.eval(p.anchor.eval_basis(i, a), unit_vec(f, dl, j)));
        rec.residual(f, prefix + "LR-leibniz", {i, a, j}, sub_vec(f, lhs, rhs));
      }
}

void lr_module_laws(AxiomRecorder& rec, const LieRinehartPair& p, const AModule& m,
                    const StructureTensor& rho2, const std::string& prefix) {
  const Field& f = p.a.field;
  std::size_t da = p.a.dim, dl = p.l.dim, dm = m.dim;

  rec.merge(check_a_module(p.a, m), prefix + "m-");

  for (long i = 0; i < static_cast<long>(dl); ++i)
    for (long j = 0; j < static_cast<long>(dl); ++j) {
      Matrix mi = rho2.left_action(unit_vec(f, dl, i));
      Matrix mj = rho2.left_action(unit_vec(f, dl, j));
      Matrix lhs = rho2.left_action(p.l.bracket.eval_basis(i, j));
      Matrix rhs = sub(mul(mi, mj), mul(mj, mi));
      rec.residual(f, prefix + "rho2-lie-hom", {i, j}, flatten(sub(lhs, rhs)));
    }

  for (long a = 0; a < static_cast<long>(da); ++a)
    for (long i = 0; i < static_cast<long>(dl); ++i) {
      Matrix lhs = rho2.left_action(p.a_on_l.eval_basis(a, i));
      Matrix rho2_i = rho2.left_action(unit_vec(f, dl, i));
      Matrix rhs(f, dm, dm);
      for (std::size_t c = 0; c < dm; ++c)
        rhs.set_col(c, m.action.eval(unit_vec(f, da, a), rho2_i.col(c)));
      rec.residual(f, prefix + "rho2-a-linear", {a, i}, flatten(sub(lhs, rhs)));
    }

  for (long i = 0; i < static_cast<long>(dl); ++i)
    for (long a = 0; a < static_cast<long>(da); ++a)
      for (long j = 0; j < static_cast<long>(dm); ++j) {
        Vec lhs = rho2.eval(unit_vec(f, dl, i), m.action.eval_basis(a, j));
        Vec rhs = add_vec(
            f, m.action.eval(unit_vec(f, da, a), rho2.eval_basis(i, j)),
            m.action.eval(p.anchor.eval_basis(i, a), unit_vec(f, dm, j)));
        rec.residual(f, prefix + "compDer1-a", {i, a, j}, sub_vec(f, lhs, rhs));
      }
}

void validate_shapes(const TheoremOneData& d) {
  std::size_t da = d.alg.a.dim, dm = d.alg.m.dim, dl = d.lie.l.dim, dn = d.lie.n_dim;
  auto shape = [](const StructureTensor& t, std::size_t a, std::size_t b, std::size_t c) {
    return t.d1() == a && t.d2() == b && t.d3() == c;
  };
  if (!shape(d.a_on_n, da, dn, dn)) throw structural_error("theorem1: a_on_n shape mismatch");
  if (!shape(d.a_on_l, da, dl, dl)) throw structural_error("theorem1: a_on_l shape mismatch");
  if (!shape(d.rho0, dl, da, da)) throw structural_error("theorem1: rho0 shape mismatch");
  if (!shape(d.rho1, dn, da, dm)) throw structural_error("theorem1: rho1 shape mismatch");
  if (!shape(d.rho2, dl, dm, dm)) throw structural_error("theorem1: rho2 shape mismatch");
  if (!shape(d.lambda, dm, dl, dn)) throw structural_error("theorem1: lambda shape mismatch");
  if (d.alg.a.field != d.lie.l.field) throw structural_error("theorem1: field mismatch");
}

}  // namespace

CheckReport check_lie_rinehart_pair(const LieRinehartPair& p) {
  AxiomRecorder rec;
  lr_pair_laws(rec, p, "");
  return rec.finish("", "lie-rinehart", p.a.field);
}

CheckReport check_lr_module(const LieRinehartPair& p, const AModule& m,
                            const StructureTensor& rho2) {
  if (rho2.d1() != p.l.dim || rho2.d2() != m.dim || rho2.d3() != m.dim)
    throw structural_error("check_lr_module: rho2 shape mismatch");
  AxiomRecorder rec;
  lr_module_laws(rec, p, m, rho2, "");
  return rec.finish("", "lr-module", p.a.field);
}

CheckReport check_theorem1_object(const TheoremOneData& d) {
  validate_shapes(d);
  const Field& f = d.alg.a.field;
  std::size_t da = d.alg.a.dim, dm = d.alg.m.dim, dl = d.lie.l.dim, dn = d.lie.n_dim;
  AxiomRecorder rec;

  // T1-1: the object recognizers.
  rec.merge(check_algebra_object(d.alg), "T1-1:alg:");
  rec.merge(check_lie_object(d.lie), "T1-1:lie:");

  // T1-2: (A, L) Lie-Rinehart with anchor rho0. The Lie axioms were already
  // reported under T1-1, so only the pair-specific laws are added here.
  {
    AxiomRecorder pair_rec;
    lr_pair_laws(pair_rec, d.pair(), "");
    CheckReport pr = pair_rec.finish("", "", f);
    for (const Violation& v : pr.violations)
      if (v.axiom != "antisym" && v.axiom != "jacobi")
        rec.fail("T1-2:" + v.axiom, v.witness, v.residual);
  }

  // T1-3: M a left (A,L)-module via rho2. The module axioms of M are part
  // of T1-1's algebra-object check; only the rho2 laws are added.
  {
    AxiomRecorder mod_rec;
    lr_module_laws(mod_rec, d.pair(), d.alg.m, d.rho2, "");
    CheckReport mr = mod_rec.finish("", "", f);
    for (const Violation& v : mr.violations)
      if (v.axiom.rfind("m-", 0) != 0)
        rec.fail("T1-3:" + v.axiom, v.witness, v.residual);
  }

  // T1-4: N is an A-module and [a.n, xi] = a.[n,xi] - rho0(xi)(a).n.
  rec.merge(check_a_module(d.alg.a, {f, dn, d.a_on_n}), "T1-4:n-");
  for (long a = 0; a < static_cast<long>(da); ++a)
    for (long n = 0; n < static_cast<long>(dn); ++n)
      for (long i = 0; i < static_cast<long>(dl); ++i) {
        Vec lhs = d.lie.n_action.eval(d.a_on_n.eval_basis(a, n), unit_vec(f, dl, i));
        Vec rhs = sub_vec(
            f, d.a_on_n.eval(unit_vec(f, da, a), d.lie.n_action.eval_basis(n, i)),
            d.a_on_n.eval(d.rho0.eval_basis(i, a), unit_vec(f, dn, n)));
        rec.residual(f, "T1-4:mixed-rule", {a, n, i}, sub_vec(f, lhs, rhs));
      }

  // T1-5: f and g are A-linear and L-equivariant. f-equivariance is the
  // T1-1 Lie-object law; g-equivariance is compDer1-b.
  for (long a = 0; a < static_cast<long>(da); ++a)
    for (long n = 0; n < static_cast<long>(dn); ++n) {
      Vec lhs = mul_vec(d.lie.f, d.a_on_n.eval_basis(a, n));
      Vec rhs = d.a_on_l.eval(unit_vec(f, da, a), d.lie.f.col(n));
      rec.residual(f, "T1-5:f-a-linear", {a, n}, sub_vec(f, lhs, rhs));
    }
  for (long a = 0; a < static_cast<long>(da); ++a)
    for (long m = 0; m < static_cast<long>(dm); ++m) {
      Vec lhs = mul_vec(d.alg.g, d.alg.m.action.eval_basis(a, m));
      Vec rhs = d.alg.a.mult.eval(unit_vec(f, da, a), d.alg.g.col(m));
      rec.residual(f, "T1-5:g-a-linear", {a, m}, sub_vec(f, lhs, rhs));
    }
  for (long i = 0; i < static_cast<long>(dl); ++i)
    for (long m = 0; m < static_cast<long>(dm); ++m) {
      Vec lhs = mul_vec(d.alg.g, d.rho2.eval_basis(i, m));
      Vec rhs = d.rho0.eval(unit_vec(f, dl, i), d.alg.g.col(m));
      rec.residual(f, "T1-5:compDer1-b", {i, m}, sub_vec(f, lhs, rhs));
    }

  // T1-6: lambda kills the relators of M (x)_A L and is A-linear.
  for (long a = 0; a < static_cast<long>(da); ++a)
    for (long m = 0; m < static_cast<long>(dm); ++m)
      for (long i = 0; i < static_cast<long>(dl); ++i) {
        Vec am = d.alg.m.action.eval_basis(a, m);
        Vec al = d.a_on_l.eval_basis(a, i);
        Vec lhs = d.lambda.eval(am, unit_vec(f, dl, i));
        Vec rhs = d.lambda.eval(unit_vec(f, dm, m), al);
        rec.residual(f, "T1-6:lambda-descent", {a, m, i}, sub_vec(f, lhs, rhs));
        Vec lin = sub_vec(
            f, d.lambda.eval(am, unit_vec(f, dl, i)),
            d.a_on_n.eval(unit_vec(f, da, a), d.lambda.eval_basis(m, i)));
        rec.residual(f, "T1-6:lambda-a-linear", {a, m, i}, lin);
      }

  // T1-7: rho1 maps into Der(A,M), is A-linear, and satisfies compDer3.
  for (long n = 0; n < static_cast<long>(dn); ++n)
    for (long a = 0; a < static_cast<long>(da); ++a)
      for (long b = 0; b < static_cast<long>(da); ++b) {
        Vec lhs = d.rho1.eval(unit_vec(f, dn, n), d.alg.a.mult.eval_basis(a, b));
        Vec rhs = add_vec(
            f, d.alg.m.action.eval(unit_vec(f, da, a), d.rho1.eval_basis(n, b)),
            d.alg.m.action.eval(unit_vec(f, da, b), d.rho1.eval_basis(n, a)));
        rec.residual(f, "T1-7:rho1-in-der", {n, a, b}, sub_vec(f, lhs, rhs));
      }
  for (long a = 0; a < static_cast<long>(da); ++a)
    for (long n = 0; n < static_cast<long>(dn); ++n) {
      Matrix lhs = d.rho1.left_action(d.a_on_n.eval_basis(a, n));
      Matrix rho1_n = d.rho1.left_action(unit_vec(f, dn, n));
      Matrix rhs(f, dm, da);
      for (std::size_t c = 0; c < da; ++c)
        rhs.set_col(c, d.alg.m.action.eval(unit_vec(f, da, a), rho1_n.col(c)));
      rec.residual(f, "T1-7:rho1-a-linear", {a, n}, flatten(sub(lhs, rhs)));
    }
  for (long n = 0; n < static_cast<long>(dn); ++n) {
    Matrix rho1_n = d.rho1.left_action(unit_vec(f, dn, n));
    for (long i = 0; i < static_cast<long>(dl); ++i) {
      Matrix lhs = d.rho1.left_action(d.lie.n_action.eval_basis(n, i));
      Matrix rhs = sub(mul(rho1_n, d.rho0.left_action(unit_vec(f, dl, i))),
                       mul(d.rho2.left_action(unit_vec(f, dl, i)), rho1_n));
      rec.residual(f, "T1-7:compDer3-a", {n, i}, flatten(sub(lhs, rhs)));
    }
    for (long a = 0; a < static_cast<long>(da); ++a) {
      Vec lhs = mul_vec(d.alg.g, d.rho1.eval_basis(n, a));
      Vec rhs = d.rho0.eval(d.lie.f.col(n), unit_vec(f, da, a));
      rec.residual(f, "T1-7:compDer3-b", {n, a}, sub_vec(f, lhs, rhs));
    }
  }

  // T1-8: squares annihilation through the A-action on N.
  rec.merge(check_squares_annihilation(d.lie, d.alg.a, d.a_on_n), "T1-8:");

  return rec.finish("", "theorem1", f);
}

TheoremOneData build_tautological(const LieRinehartPair& p) {
  CheckReport valid = check_lie_rinehart_pair(p);
  if (!valid.pass())
    throw precondition_error("build_tautological: input fails check_lie_rinehart_pair", valid);
  const Field& f = p.a.field;
  LMAlgebraObject alg{p.a, regular_module(p.a), Matrix::identity(f, p.a.dim)};
  LMLieObject lie{p.l, p.l.dim, p.l.bracket, Matrix::identity(f, p.l.dim)};
  // lambda(m (x) xi) = m.xi, the A-action on L read as M x L -> N.
  StructureTensor lambda(f, p.a.dim, p.l.dim, p.l.dim);
  for (std::size_t m = 0; m < p.a.dim; ++m)
    for (std::size_t i = 0; i < p.l.dim; ++i) {
      Vec v = p.a_on_l.eval_basis(m, i);
      for (std::size_t k = 0; k < p.l.dim; ++k) lambda.at(m, i, k) = v[k];
    }
  return {std::move(alg), std::move(lie), p.a_on_l, p.a_on_l, p.anchor, p.anchor, p.anchor,
          std::move(lambda)};
}

TheoremOneData build_universal_package(const DerivationsLMObject& u) {
  const Field& f = u.base.a.field;
  std::size_t da = u.base.a.dim, dm = u.base.m.dim;
  std::size_t dn = u.top.dim(), dl = u.bottom.dim;

  // A acts pointwise on both derivation spaces; coordinates are solved in
  // the stored bases.
  std::vector<Vec> top_flat;
  for (const Matrix& m : u.top.basis) top_flat.push_back(flatten(m));
  std::vector<Vec> pair_flat;
  for (const auto& pr : u.bottom_pairs) {
    Vec v = flatten(pr.first);
    Vec w = flatten(pr.second);
    v.insert(v.end(), w.begin(), w.end());
    pair_flat.push_back(std::move(v));
  }

  auto scale_map = [&](const Matrix& map, std::size_t a_idx, bool module_side) {
    // (a . phi)(x) = a . phi(x), columnwise.
    Matrix out(f, map.rows(), map.cols());
    for (std::size_t c = 0; c < map.cols(); ++c) {
      Vec col = map.col(c);
      Vec scaled = module_side
                       ? u.base.m.action.eval(unit_vec(f, da, a_idx), col)
                       : u.base.a.mult.eval(unit_vec(f, da, a_idx), col);
      out.set_col(c, scaled);
    }
    return out;
  };

  StructureTensor a_on_n(f, da, dn, dn);
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t t = 0; t < dn; ++t) {
      std::optional<Vec> coords =
          coordinates_in_span(f, top_flat, flatten(scale_map(u.top.basis[t], a, true)));
      if (!coords)
        throw structural_error("build_universal_package: A-action left Der(A,M)");
      for (std::size_t k = 0; k < dn; ++k) a_on_n.at(a, t, k) = (*coords)[k];
    }

  StructureTensor a_on_l(f, da, dl, dl);
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t t = 0; t < dl; ++t) {
      Vec target = flatten(scale_map(u.bottom_pairs[t].first, a, false));
      Vec beta = flatten(scale_map(u.bottom_pairs[t].second, a, true));
      target.insert(target.end(), beta.begin(), beta.end());
      std::optional<Vec> coords = coordinates_in_span(f, pair_flat, target);
      if (!coords)
        throw structural_error("build_universal_package: A-action left the pair algebra");
      for (std::size_t k = 0; k < dl; ++k) a_on_l.at(a, t, k) = (*coords)[k];
    }

  StructureTensor rho0(f, dl, da, da);
  StructureTensor rho2(f, dl, dm, dm);
  for (std::size_t t = 0; t < dl; ++t) {
    for (std::size_t a = 0; a < da; ++a)
      for (std::size_t k = 0; k < da; ++k) rho0.at(t, a, k) = u.bottom_pairs[t].first.at(k, a);
    for (std::size_t m = 0; m < dm; ++m)
      for (std::size_t k = 0; k < dm; ++k) rho2.at(t, m, k) = u.bottom_pairs[t].second.at(k, m);
  }
  StructureTensor rho1(f, dn, da, dm);
  for (std::size_t t = 0; t < dn; ++t)
    for (std::size_t a = 0; a < da; ++a)
      for (std::size_t k = 0; k < dm; ++k) rho1.at(t, a, k) = u.top.basis[t].at(k, a);

  StructureTensor lambda(f, dm, dl, dn);  // no printed coupling: zero map

  return {u.base, u.lie_object(), std::move(a_on_n), std::move(a_on_l), std::move(rho0),
          std::move(rho1), std::move(rho2), std::move(lambda)};
}

LieRinehartPair change_basis(const LieRinehartPair& p, const Matrix& t_a, const Matrix& t_l) {
  return {change_basis(p.a, t_a), change_basis(p.l, t_l),
          change_basis_tensor(p.a_on_l, t_a, t_l, t_l),
          change_basis_tensor(p.anchor, t_l, t_a, t_a)};
}

TheoremOneData change_basis(const TheoremOneData& d, const Matrix& t_a, const Matrix& t_m,
                            const Matrix& t_l, const Matrix& t_n) {
  return {change_basis(d.alg, t_a, t_m),
          change_basis(d.lie, t_l, t_n),
          change_basis_tensor(d.a_on_n, t_a, t_n, t_n),
          change_basis_tensor(d.a_on_l, t_a, t_l, t_l),
          change_basis_tensor(d.rho0, t_l, t_a, t_a),
          change_basis_tensor(d.rho1, t_n, t_a, t_m),
          change_basis_tensor(d.rho2, t_l, t_m, t_m),
          change_basis_tensor(d.lambda, t_m, t_l, t_n)};
}

}  // namespace loday
