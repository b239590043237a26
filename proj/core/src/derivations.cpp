#include "loday/derivations.hpp"

#include "loday/errors.hpp"

namespace loday {

namespace {

// Unknowns of a map A -> M are its matrix entries flattened row-major:
// entry (r, c) of the dim(M) x dim(A) matrix sits at r*dim(A) + c.
std::size_t hom_unknowns(std::size_t dim_a, std::size_t dim_m) { return dim_a * dim_m; }

// Adds to `row` the coefficients of the M-coordinate `out_k` of d(v) where
// v is a fixed A-vector: d(v)_k = sum_c v_c D(k, c).
void add_d_of_vector(const Field& f, Vec& row, const Vec& v, std::size_t dim_a, std::size_t k,
                     const Scalar& coeff) {
  for (std::size_t c = 0; c < dim_a; ++c)
    if (!f.is_zero(v[c])) row[k * dim_a + c] = f.add(row[k * dim_a + c], f.mul(coeff, v[c]));
}

}  // namespace

DerivationSpace derivation_space(const CommAlgebra& a) {
  return derivation_space(a, regular_module(a));
}

DerivationSpace derivation_space(const CommAlgebra& a, const AModule& m) {
  if (a.field != m.field) throw structural_error("derivation_space: field mismatch");
  const Field& f = a.field;
  std::size_t unknowns = hom_unknowns(a.dim, m.dim);
  // One block of dim(M) equations per basis pair (i,j):
  //   d(a_i a_j) - a_i . d(a_j) - a_j . d(a_i) = 0.
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) {
      Vec prod = a.mult.eval_basis(i, j);
      Matrix act_i = m.action.left_action(unit_vec(f, a.dim, i));  // dimM x dimM
      Matrix act_j = m.action.left_action(unit_vec(f, a.dim, j));
      for (std::size_t k = 0; k < m.dim; ++k) {
        Vec row = zero_vec(f, unknowns);
        add_d_of_vector(f, row, prod, a.dim, k, f.one());
        // -(a_i . d(a_j))_k = -sum_r act_i(k,r) D(r, j)
        for (std::size_t r = 0; r < m.dim; ++r) {
          if (!f.is_zero(act_i.at(k, r)))
            row[r * a.dim + j] = f.sub(row[r * a.dim + j], act_i.at(k, r));
          if (!f.is_zero(act_j.at(k, r)))
            row[r * a.dim + i] = f.sub(row[r * a.dim + i], act_j.at(k, r));
        }
        rows.push_back(std::move(row));
      }
    }
  Subspace ker = nullspace(from_rows(f, unknowns, rows));
  DerivationSpace out{a, m, {}};
  for (std::size_t r = 0; r < ker.dim(); ++r)
    out.basis.push_back(reshape(f, m.dim, a.dim, ker.basis.row(r)));
  return out;
}

LieAlgebra endo_lie(Field f, std::size_t dim_m) {
  std::size_t d = dim_m * dim_m;
  StructureTensor b(f, d, d, d);
  // [E_ab, E_cd] = delta_bc E_ad - delta_da E_cb
  for (std::size_t a = 0; a < dim_m; ++a)
    for (std::size_t bb = 0; bb < dim_m; ++bb)
      for (std::size_t c = 0; c < dim_m; ++c)
        for (std::size_t dd = 0; dd < dim_m; ++dd) {
          std::size_t i = a * dim_m + bb, j = c * dim_m + dd;
          if (bb == c) {
            std::size_t k = a * dim_m + dd;
            b.at(i, j, k) = f.add(b.at(i, j, k), f.one());
          }
          if (dd == a) {
            std::size_t k = c * dim_m + bb;
            b.at(i, j, k) = f.sub(b.at(i, j, k), f.one());
          }
        }
  return {f, d, std::move(b)};
}

LieAlgebra der_lie_algebra(const DerivationSpace& der) {
  const Field& f = der.a.field;
  std::size_t d = der.dim();
  std::vector<Vec> flat;
  for (const Matrix& m : der.basis) flat.push_back(flatten(m));
  StructureTensor b(f, d, d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Matrix comm = sub(mul(der.basis[i], der.basis[j]), mul(der.basis[j], der.basis[i]));
      std::optional<Vec> coords = coordinates_in_span(f, flat, flatten(comm));
      if (!coords)
        throw structural_error("der_lie_algebra: commutator left the derivation space");
      for (std::size_t k = 0; k < d; ++k) b.at(i, j, k) = (*coords)[k];
    }
  return {f, d, std::move(b)};
}

DerivationsLMObject universal_derivations(const LMAlgebraObject& x) {
  CheckReport valid = check_algebra_object(x);
  if (!valid.pass())
    throw precondition_error("universal_derivations: input fails check_algebra_object", valid);
  const Field& f = x.a.field;
  std::size_t da = x.a.dim, dm = x.m.dim;

  // Balanced condition g(m).m' = g(m').m; this is what places pi1+pi2 inside
  // the pair algebra below.
  {
    AxiomRecorder rec;
    for (long i = 0; i < static_cast<long>(dm); ++i)
      for (long j = i + 1; j < static_cast<long>(dm); ++j) {
        Vec lhs = x.m.action.eval(x.g.col(i), unit_vec(f, dm, j));
        Vec rhs = x.m.action.eval(x.g.col(j), unit_vec(f, dm, i));
        rec.residual(f, "balanced", {i, j}, sub_vec(f, lhs, rhs));
      }
    if (!rec.clean())
      throw precondition_error("universal_derivations: structure map is not balanced",
                               rec.finish("", "universal-derivations", f));
  }

  DerivationSpace top = derivation_space(x.a, x.m);

  // Bottom: pairs (alpha, beta) with alpha a derivation of A, beta compatible
  // with alpha over the module action, and g o beta = alpha o g. Unknowns:
  // alpha entries (da x da) first, then beta entries (dm x dm).
  std::size_t n_alpha = da * da, unknowns = n_alpha + dm * dm;
  std::vector<Vec> rows;
  auto alpha_at = [&](std::size_t r, std::size_t c) { return r * da + c; };
  auto beta_at = [&](std::size_t r, std::size_t c) { return n_alpha + r * dm + c; };

  // alpha(a_i a_j) = a_i alpha(a_j) + alpha(a_i) a_j
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j) {
      Vec prod = x.a.mult.eval_basis(i, j);
      Matrix mult_i = x.a.mult.left_action(unit_vec(f, da, i));
      Matrix mult_j = x.a.mult.left_action(unit_vec(f, da, j));
      for (std::size_t k = 0; k < da; ++k) {
        Vec row = zero_vec(f, unknowns);
        for (std::size_t c = 0; c < da; ++c)
          if (!f.is_zero(prod[c])) row[alpha_at(k, c)] = f.add(row[alpha_at(k, c)], prod[c]);
        for (std::size_t r = 0; r < da; ++r) {
          if (!f.is_zero(mult_i.at(k, r)))
            row[alpha_at(r, j)] = f.sub(row[alpha_at(r, j)], mult_i.at(k, r));
          if (!f.is_zero(mult_j.at(k, r)))
            row[alpha_at(r, i)] = f.sub(row[alpha_at(r, i)], mult_j.at(k, r));
        }
        rows.push_back(std::move(row));
      }
    }
  // beta(a_i . m_j) = a_i . beta(m_j) + alpha(a_i) . m_j
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < dm; ++j) {
      Vec am = x.m.action.eval_basis(i, j);
      Matrix act_i = x.m.action.left_action(unit_vec(f, da, i));
      for (std::size_t k = 0; k < dm; ++k) {
        Vec row = zero_vec(f, unknowns);
        for (std::size_t c = 0; c < dm; ++c)
          if (!f.is_zero(am[c])) row[beta_at(k, c)] = f.add(row[beta_at(k, c)], am[c]);
        for (std::size_t r = 0; r < dm; ++r)
          if (!f.is_zero(act_i.at(k, r)))
            row[beta_at(r, j)] = f.sub(row[beta_at(r, j)], act_i.at(k, r));
        // -(alpha(a_i) . m_j)_k = -sum_r alpha(r, i) (a_r . m_j)_k
        for (std::size_t r = 0; r < da; ++r) {
          const Scalar& coeff = x.m.action.at(r, j, k);
          if (!f.is_zero(coeff)) row[alpha_at(r, i)] = f.sub(row[alpha_at(r, i)], coeff);
        }
        rows.push_back(std::move(row));
      }
    }
  // g(beta(m_j)) = alpha(g(m_j))
  for (std::size_t j = 0; j < dm; ++j) {
    Vec gm = x.g.col(j);
    for (std::size_t k = 0; k < da; ++k) {
      Vec row = zero_vec(f, unknowns);
      for (std::size_t r = 0; r < dm; ++r)
        if (!f.is_zero(x.g.at(k, r))) row[beta_at(r, j)] = f.add(row[beta_at(r, j)], x.g.at(k, r));
      for (std::size_t c = 0; c < da; ++c)
        if (!f.is_zero(gm[c])) row[alpha_at(k, c)] = f.sub(row[alpha_at(k, c)], gm[c]);
      rows.push_back(std::move(row));
    }
  }

  Subspace ker = nullspace(from_rows(f, unknowns, rows));
  std::vector<std::pair<Matrix, Matrix>> pairs;
  std::vector<Vec> pair_flat;
  for (std::size_t r = 0; r < ker.dim(); ++r) {
    Vec v = ker.basis.row(r);
    Vec va(v.begin(), v.begin() + n_alpha);
    Vec vb(v.begin() + n_alpha, v.end());
    pairs.emplace_back(reshape(f, da, da, va), reshape(f, dm, dm, vb));
    pair_flat.push_back(std::move(v));
  }
  std::size_t dl = pairs.size();

  // Componentwise commutator bracket on the pair algebra.
  StructureTensor bottom_bracket(f, dl, dl, dl);
  for (std::size_t i = 0; i < dl; ++i)
    for (std::size_t j = 0; j < dl; ++j) {
      Matrix ca = sub(mul(pairs[i].first, pairs[j].first), mul(pairs[j].first, pairs[i].first));
      Matrix cb = sub(mul(pairs[i].second, pairs[j].second), mul(pairs[j].second, pairs[i].second));
      Vec target = flatten(ca);
      Vec cb_flat = flatten(cb);
      target.insert(target.end(), cb_flat.begin(), cb_flat.end());
      std::optional<Vec> coords = coordinates_in_span(f, pair_flat, target);
      if (!coords)
        throw structural_error("universal_derivations: pair bracket left the pair algebra");
      for (std::size_t k = 0; k < dl; ++k) bottom_bracket.at(i, j, k) = (*coords)[k];
    }
  LieAlgebra bottom{f, dl, std::move(bottom_bracket)};

  std::vector<Vec> top_flat;
  for (const Matrix& m : top.basis) top_flat.push_back(flatten(m));

  // Right action [d, (alpha, beta)] = d o alpha - beta o d.
  StructureTensor n_action(f, top.dim(), dl, top.dim());
  for (std::size_t t = 0; t < top.dim(); ++t)
    for (std::size_t u = 0; u < dl; ++u) {
      Matrix acted = sub(mul(top.basis[t], pairs[u].first), mul(pairs[u].second, top.basis[t]));
      std::optional<Vec> coords = coordinates_in_span(f, top_flat, flatten(acted));
      if (!coords)
        throw structural_error("universal_derivations: action left the derivation space");
      for (std::size_t k = 0; k < top.dim(); ++k) n_action.at(t, u, k) = (*coords)[k];
    }

  // f = pi1 + pi2: d |-> (g o d, d o g).
  Matrix fmat(f, dl, top.dim());
  for (std::size_t t = 0; t < top.dim(); ++t) {
    Vec target = flatten(mul(x.g, top.basis[t]));
    Vec beta_flat = flatten(mul(top.basis[t], x.g));
    target.insert(target.end(), beta_flat.begin(), beta_flat.end());
    std::optional<Vec> coords = coordinates_in_span(f, pair_flat, target);
    if (!coords)
      throw structural_error("universal_derivations: pi1 + pi2 left the pair algebra");
    fmat.set_col(t, *coords);
  }

  return {x, std::move(top), std::move(pairs), std::move(bottom), std::move(n_action),
          std::move(fmat)};
}

CheckReport check_action_by_derivations(const LMAlgebraObject& x_alg, const LMLieObject& x_lie,
                                        const StructureTensor& rho0, const StructureTensor& rho1,
                                        const StructureTensor& rho2) {
  const Field& f = x_alg.a.field;
  std::size_t da = x_alg.a.dim, dm = x_alg.m.dim;
  std::size_t dl = x_lie.l.dim, dn = x_lie.n_dim;
  if (rho0.d1() != dl || rho0.d2() != da || rho0.d3() != da)
    throw structural_error("check_action_by_derivations: rho0 shape mismatch");
  if (rho1.d1() != dn || rho1.d2() != da || rho1.d3() != dm)
    throw structural_error("check_action_by_derivations: rho1 shape mismatch");
  if (rho2.d1() != dl || rho2.d2() != dm || rho2.d3() != dm)
    throw structural_error("check_action_by_derivations: rho2 shape mismatch");
  AxiomRecorder rec;

  // rho0 lands in Der(A).
  for (long i = 0; i < static_cast<long>(dl); ++i)
    for (long a = 0; a < static_cast<long>(da); ++a)
      for (long b = 0; b < static_cast<long>(da); ++b) {
        Vec ei = unit_vec(f, dl, i);
        Vec lhs = rho0.eval(ei, x_alg.a.mult.eval_basis(a, b));
        Vec rhs = add_vec(f, x_alg.a.mult.eval(rho0.eval_basis(i, a), unit_vec(f, da, b)),
                          x_alg.a.mult.eval(rho0.eval_basis(i, b), unit_vec(f, da, a)));
        rec.residual(f, "rho0-in-der", {i, a, b}, sub_vec(f, lhs, rhs));
      }

  // rho0 and rho2 are Lie algebra maps (commutator codomains).
  for (long i = 0; i < static_cast<long>(dl); ++i)
    for (long j = 0; j < static_cast<long>(dl); ++j) {
      Matrix mi = rho0.left_action(unit_vec(f, dl, i));
      Matrix mj = rho0.left_action(unit_vec(f, dl, j));
      Matrix lhs = rho0.left_action(x_lie.l.bracket.eval_basis(i, j));
      Matrix rhs = sub(mul(mi, mj), mul(mj, mi));
      rec.residual(f, "rho0-lie-hom", {i, j}, flatten(sub(lhs, rhs)));

      Matrix ni = rho2.left_action(unit_vec(f, dl, i));
      Matrix nj = rho2.left_action(unit_vec(f, dl, j));
      Matrix lhs2 = rho2.left_action(x_lie.l.bracket.eval_basis(i, j));
      Matrix rhs2 = sub(mul(ni, nj), mul(nj, ni));
      rec.residual(f, "rho2-lie-hom", {i, j}, flatten(sub(lhs2, rhs2)));
    }

  // rho1 lands in Der(A, M).
  for (long n = 0; n < static_cast<long>(dn); ++n)
    for (long a = 0; a < static_cast<long>(da); ++a)
      for (long b = 0; b < static_cast<long>(da); ++b) {
        Vec en = unit_vec(f, dn, n);
        Vec lhs = rho1.eval(en, x_alg.a.mult.eval_basis(a, b));
        Vec rhs = add_vec(
            f, x_alg.m.action.eval(unit_vec(f, da, a), rho1.eval_basis(n, b)),
            x_alg.m.action.eval(unit_vec(f, da, b), rho1.eval_basis(n, a)));
        rec.residual(f, "rho1-in-der", {n, a, b}, sub_vec(f, lhs, rhs));
      }

  // compDer1: rho2(xi)(a.m) = a.rho2(xi)(m) + rho0(xi)(a).m and
  //           g(rho2(xi)(m)) = rho0(xi)(g(m)).
  for (long i = 0; i < static_cast<long>(dl); ++i) {
    for (long a = 0; a < static_cast<long>(da); ++a)
      for (long m = 0; m < static_cast<long>(dm); ++m) {
        Vec lhs = rho2.eval(unit_vec(f, dl, i), x_alg.m.action.eval_basis(a, m));
        Vec rhs = add_vec(
            f, x_alg.m.action.eval(unit_vec(f, da, a), rho2.eval_basis(i, m)),
            x_alg.m.action.eval(rho0.eval_basis(i, a), unit_vec(f, dm, m)));
        rec.residual(f, "compDer1-a", {i, a, m}, sub_vec(f, lhs, rhs));
      }
    for (long m = 0; m < static_cast<long>(dm); ++m) {
      Vec lhs = mul_vec(x_alg.g, rho2.eval_basis(i, m));
      Vec rhs = rho0.eval(unit_vec(f, dl, i), x_alg.g.col(m));
      rec.residual(f, "compDer1-b", {i, m}, sub_vec(f, lhs, rhs));
    }
  }

  // compDer3: rho1([n,xi]) = rho1(n) o rho0(xi) - rho2(xi) o rho1(n) and
  //           g(rho1(n)(a)) = rho0(f(n))(a).
  for (long n = 0; n < static_cast<long>(dn); ++n) {
    Matrix rho1_n = rho1.left_action(unit_vec(f, dn, n));  // dm x da
    for (long i = 0; i < static_cast<long>(dl); ++i) {
      Matrix lhs = rho1.left_action(x_lie.n_action.eval_basis(n, i));
      Matrix rhs = sub(mul(rho1_n, rho0.left_action(unit_vec(f, dl, i))),
                       mul(rho2.left_action(unit_vec(f, dl, i)), rho1_n));
      rec.residual(f, "compDer3-a", {n, i}, flatten(sub(lhs, rhs)));
    }
    for (long a = 0; a < static_cast<long>(da); ++a) {
      Vec lhs = mul_vec(x_alg.g, rho1.eval_basis(n, a));
      Vec rhs = rho0.eval(x_lie.f.col(n), unit_vec(f, da, a));
      rec.residual(f, "compDer3-b", {n, a}, sub_vec(f, lhs, rhs));
    }
  }

  return rec.finish("", "derivation-action", f);
}

}  // namespace loday
