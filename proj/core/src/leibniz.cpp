#include "loday/leibniz.hpp"

#include "loday/errors.hpp"

namespace loday {

namespace {

void validate_bracket(const StructureTensor& b, std::size_t dim, const char* who) {
  if (b.d1() != dim || b.d2() != dim || b.d3() != dim)
    throw structural_error(std::string(who) + ": bracket tensor shape mismatch");
}

}  // namespace

CheckReport check_leibniz(const LeibnizAlgebra& g) {
  validate_bracket(g.bracket, g.dim, "check_leibniz");
  const Field& f = g.field;
  AxiomRecorder rec;
  long d = static_cast<long>(g.dim);
  for (long i = 0; i < d; ++i) {
    Vec ei = unit_vec(f, g.dim, i);
    for (long j = 0; j < d; ++j)
      for (long k = 0; k < d; ++k) {
        Vec t1 = g.br(ei, g.bracket.eval_basis(j, k));
        Vec t2 = g.br(g.bracket.eval_basis(i, j), unit_vec(f, g.dim, k));
        Vec t3 = g.br(g.bracket.eval_basis(i, k), unit_vec(f, g.dim, j));
        rec.residual(f, "RLJ", {i, j, k}, add_vec(f, sub_vec(f, t1, t2), t3));
      }
  }
  return rec.finish("", "leibniz", f);
}

CheckReport check_lie(const LieAlgebra& l) {
  validate_bracket(l.bracket, l.dim, "check_lie");
  const Field& f = l.field;
  AxiomRecorder rec;
  long d = static_cast<long>(l.dim);
  for (long i = 0; i < d; ++i)
    for (long j = i; j < d; ++j) {
      if (i == j) {
        rec.residual(f, "antisym", {i, i}, l.bracket.eval_basis(i, i));
      } else {
        rec.residual(f, "antisym", {i, j},
                     add_vec(f, l.bracket.eval_basis(i, j), l.bracket.eval_basis(j, i)));
      }
    }
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j)
      for (long k = 0; k < d; ++k) {
        Vec t1 = l.br(l.bracket.eval_basis(i, j), unit_vec(f, l.dim, k));
        Vec t2 = l.br(l.bracket.eval_basis(j, k), unit_vec(f, l.dim, i));
        Vec t3 = l.br(l.bracket.eval_basis(k, i), unit_vec(f, l.dim, j));
        rec.residual(f, "jacobi", {i, j, k}, add_vec(f, add_vec(f, t1, t2), t3));
      }
  return rec.finish("", "lie", f);
}

CheckReport check_leibniz_morphism(const Matrix& phi, const LeibnizAlgebra& src,
                                   const LeibnizAlgebra& dst) {
  if (phi.cols() != src.dim || phi.rows() != dst.dim)
    throw structural_error("check_leibniz_morphism: map shape mismatch");
  if (src.field != dst.field || phi.field() != src.field)
    throw structural_error("check_leibniz_morphism: field mismatch");
  const Field& f = src.field;
  AxiomRecorder rec;
  for (long i = 0; i < static_cast<long>(src.dim); ++i)
    for (long j = 0; j < static_cast<long>(src.dim); ++j) {
      Vec lhs = mul_vec(phi, src.bracket.eval_basis(i, j));
      Vec rhs = dst.br(phi.col(i), phi.col(j));
      rec.residual(f, "morphism", {i, j}, sub_vec(f, lhs, rhs));
    }
  return rec.finish("", "leibniz-morphism", f);
}

CheckReport check_lie_module(const LieAlgebra& l, const StructureTensor& action) {
  if (action.d1() != l.dim || action.d2() != action.d3())
    throw structural_error("check_lie_module: action tensor shape mismatch");
  const Field& f = l.field;
  std::size_t dv = action.d2();
  AxiomRecorder rec;
  for (long i = 0; i < static_cast<long>(l.dim); ++i)
    for (long j = 0; j < static_cast<long>(l.dim); ++j)
      for (long k = 0; k < static_cast<long>(dv); ++k) {
        Vec lhs = action.eval(l.bracket.eval_basis(i, j), unit_vec(f, dv, k));
        Vec rhs = sub_vec(f, action.eval(unit_vec(f, l.dim, i), action.eval_basis(j, k)),
                          action.eval(unit_vec(f, l.dim, j), action.eval_basis(i, k)));
        rec.residual(f, "lie-module-action", {i, j, k}, sub_vec(f, lhs, rhs));
      }
  return rec.finish("", "lie-module", f);
}

SquaresIdeal squares_ideal(const LeibnizAlgebra& g) {
  const Field& f = g.field;
  RowSpan span(f, g.dim);
  for (std::size_t i = 0; i < g.dim; ++i) span.add(g.bracket.eval_basis(i, i));
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t j = i + 1; j < g.dim; ++j)
      span.add(add_vec(f, g.bracket.eval_basis(i, j), g.bracket.eval_basis(j, i)));

  // Theory says the span of squares is already two-sided; the fixpoint loop
  // stays as a guard and reports how many passes actually grew the span.
  std::size_t iterations = 0;
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Vec> current = span.rows();
    for (const Vec& s : current)
      for (std::size_t i = 0; i < g.dim; ++i) {
        Vec ei = unit_vec(f, g.dim, i);
        if (span.add(g.br(ei, s))) grew = true;
        if (span.add(g.br(s, ei))) grew = true;
      }
    if (grew) ++iterations;
    if (iterations > g.dim + 1)
      throw structural_error("squares_ideal: closure failed to stabilize");
  }
  return {span.snapshot(), iterations};
}

ReducedLie reduced_lie(const LeibnizAlgebra& g) {
  const Field& f = g.field;
  SquaresIdeal sq = squares_ideal(g);
  QuotientMaps q = quotient_basis(g.dim, sq.ideal);
  std::size_t qdim = g.dim - sq.ideal.dim();

  // Well-definedness of the induced bracket: the ideal must be killed on
  // both sides after projecting.
  AxiomRecorder rec;
  for (long r = 0; r < static_cast<long>(sq.ideal.dim()); ++r) {
    Vec s = sq.ideal.basis.row(r);
    for (long i = 0; i < static_cast<long>(g.dim); ++i) {
      Vec ei = unit_vec(f, g.dim, i);
      rec.residual(f, "reduced-lie-well-defined", {r, i, 0}, mul_vec(q.projection, g.br(s, ei)));
      rec.residual(f, "reduced-lie-well-defined", {r, i, 1}, mul_vec(q.projection, g.br(ei, s)));
    }
  }
  if (!rec.clean())
    throw precondition_error("reduced_lie: induced bracket is not well defined",
                             rec.finish("", "reduced-lie", f));

  StructureTensor qb(f, qdim, qdim, qdim);
  for (std::size_t a = 0; a < qdim; ++a)
    for (std::size_t b = 0; b < qdim; ++b) {
      Vec val = mul_vec(q.projection, g.br(q.section.col(a), q.section.col(b)));
      for (std::size_t k = 0; k < qdim; ++k) qb.at(a, b, k) = val[k];
    }
  return {{f, qdim, std::move(qb)}, std::move(q.projection), std::move(q.section), std::move(sq)};
}

LeibnizAlgebra hemi_semi_product(const LieAlgebra& l, const StructureTensor& action) {
  CheckReport module_check = check_lie_module(l, action);
  if (!module_check.pass())
    throw precondition_error("hemi_semi_product: action is not a Lie-module action",
                             module_check);
  const Field& f = l.field;
  std::size_t dv = action.d2();
  std::size_t d = dv + l.dim;
  StructureTensor b(f, d, d, d);
  // [v_i, l_j] = l_j(v_i); [l_i, l_j] = -[l_i, l_j]_L; the rest vanish.
  for (std::size_t i = 0; i < dv; ++i)
    for (std::size_t j = 0; j < l.dim; ++j)
      for (std::size_t k = 0; k < dv; ++k) b.at(i, dv + j, k) = action.at(j, i, k);
  for (std::size_t i = 0; i < l.dim; ++i)
    for (std::size_t j = 0; j < l.dim; ++j)
      for (std::size_t k = 0; k < l.dim; ++k)
        b.at(dv + i, dv + j, dv + k) = f.neg(l.bracket.at(i, j, k));
  return {f, d, std::move(b)};
}

LeibnizAlgebra hemi_semi_over_reduced(const LeibnizAlgebra& g, const StructureTensor& action) {
  ReducedLie red = reduced_lie(g);
  CheckReport module_check = check_lie_module(red.lie, action);
  if (!module_check.pass())
    throw precondition_error(
        "hemi_semi_over_reduced: action is not a module over the reduced Lie algebra",
        module_check);
  const Field& f = g.field;
  std::size_t dm = action.d2();
  std::size_t d = dm + g.dim;
  StructureTensor b(f, d, d, d);
  // [m_i, g_j] = -pi(g_j)(m_i); [g_i, g_j] = [g_i, g_j]_g.
  for (std::size_t i = 0; i < dm; ++i)
    for (std::size_t j = 0; j < g.dim; ++j) {
      Vec val = action.eval(red.pi.col(j), unit_vec(f, dm, i));
      for (std::size_t k = 0; k < dm; ++k) b.at(i, dm + j, k) = f.neg(val[k]);
    }
  for (std::size_t i = 0; i < g.dim; ++i)
    for (std::size_t j = 0; j < g.dim; ++j)
      for (std::size_t k = 0; k < g.dim; ++k)
        b.at(dm + i, dm + j, dm + k) = g.bracket.at(i, j, k);
  return {f, d, std::move(b)};
}

LeibnizAlgebra tensor_square(const LieAlgebra& l) {
  const Field& f = l.field;
  std::size_t n = l.dim;
  std::size_t d = n * n;
  StructureTensor b(f, d, d, d);
  for (std::size_t i2 = 0; i2 < n; ++i2)
    for (std::size_t j2 = 0; j2 < n; ++j2) {
      Vec w = l.bracket.eval_basis(i2, j2);  // [x2, y2]
      if (is_zero_vec(f, w)) continue;
      for (std::size_t i1 = 0; i1 < n; ++i1)
        for (std::size_t j1 = 0; j1 < n; ++j1) {
          Vec left = l.br(unit_vec(f, n, i1), w);   // [x1, [x2,y2]]
          Vec right = l.br(unit_vec(f, n, j1), w);  // [y1, [x2,y2]]
          std::size_t src1 = i1 * n + j1, src2 = i2 * n + j2;
          for (std::size_t k = 0; k < n; ++k) {
            if (!f.is_zero(left[k]))
              b.at(src1, src2, k * n + j1) = f.add(b.at(src1, src2, k * n + j1), left[k]);
            if (!f.is_zero(right[k]))
              b.at(src1, src2, i1 * n + k) = f.add(b.at(src1, src2, i1 * n + k), right[k]);
          }
        }
    }
  return {f, d, std::move(b)};
}

LeibnizAlgebra change_basis(const LeibnizAlgebra& g, const Matrix& t) {
  return {g.field, g.dim, change_basis_tensor(g.bracket, t, t, t)};
}

LieAlgebra change_basis(const LieAlgebra& l, const Matrix& t) {
  return {l.field, l.dim, change_basis_tensor(l.bracket, t, t, t)};
}

}  // namespace loday
