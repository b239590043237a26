#include "loday/algebra.hpp"

#include "loday/errors.hpp"

namespace loday {

CheckReport check_comm_algebra(const CommAlgebra& a) {
  if (a.unit.size() != a.dim)
    throw structural_error("check_comm_algebra: unit vector length != dim");
  if (a.mult.d1() != a.dim || a.mult.d2() != a.dim || a.mult.d3() != a.dim)
    throw structural_error("check_comm_algebra: multiplication tensor shape mismatch");
  const Field& f = a.field;
  AxiomRecorder rec;

  for (long i = 0; i < static_cast<long>(a.dim); ++i)
    for (long j = i + 1; j < static_cast<long>(a.dim); ++j)
      rec.residual(f, "comm", {i, j},
                   sub_vec(f, a.mult.eval_basis(i, j), a.mult.eval_basis(j, i)));

  for (long i = 0; i < static_cast<long>(a.dim); ++i)
    for (long j = 0; j < static_cast<long>(a.dim); ++j)
      for (long k = 0; k < static_cast<long>(a.dim); ++k) {
        Vec lhs = a.mult.eval(a.mult.eval_basis(i, j), unit_vec(f, a.dim, k));
        Vec rhs = a.mult.eval(unit_vec(f, a.dim, i), a.mult.eval_basis(j, k));
        rec.residual(f, "assoc", {i, j, k}, sub_vec(f, lhs, rhs));
      }

  for (long i = 0; i < static_cast<long>(a.dim); ++i) {
    Vec lhs = a.mult.eval(a.unit, unit_vec(f, a.dim, i));
    rec.residual(f, "unit", {i}, sub_vec(f, lhs, unit_vec(f, a.dim, i)));
  }

  return rec.finish("", "comm-algebra", f);
}

CheckReport check_a_module(const CommAlgebra& a, const AModule& m) {
  if (a.field != m.field) throw structural_error("check_a_module: field mismatch");
  if (m.action.d1() != a.dim || m.action.d2() != m.dim || m.action.d3() != m.dim)
    throw structural_error("check_a_module: action tensor shape mismatch");
  const Field& f = a.field;
  AxiomRecorder rec;

  for (long j = 0; j < static_cast<long>(m.dim); ++j) {
    Vec lhs = m.action.eval(a.unit, unit_vec(f, m.dim, j));
    rec.residual(f, "module-unit", {j}, sub_vec(f, lhs, unit_vec(f, m.dim, j)));
  }

  for (long i = 0; i < static_cast<long>(a.dim); ++i)
    for (long j = 0; j < static_cast<long>(a.dim); ++j)
      for (long k = 0; k < static_cast<long>(m.dim); ++k) {
        Vec lhs = m.action.eval(a.mult.eval_basis(i, j), unit_vec(f, m.dim, k));
        Vec rhs = m.action.eval(unit_vec(f, a.dim, i), m.action.eval_basis(j, k));
        rec.residual(f, "module-assoc", {i, j, k}, sub_vec(f, lhs, rhs));
      }

  return rec.finish("", "a-module", f);
}

AModule regular_module(const CommAlgebra& a) { return {a.field, a.dim, a.mult}; }

TensorOverA tensor_over_A(const CommAlgebra& a, const AModule& m, const AModule& w) {
  if (a.field != m.field || a.field != w.field)
    throw structural_error("tensor_over_A: field mismatch");
  const Field& f = a.field;
  std::size_t ambient = m.dim * w.dim;
  RowSpan span(f, ambient);
  // Relators (a.m) (x) w - m (x) (a.w) over basis triples; bilinearity makes
  // basis triples sufficient.
  for (std::size_t t = 0; t < a.dim; ++t)
    for (std::size_t i = 0; i < m.dim; ++i)
      for (std::size_t j = 0; j < w.dim; ++j) {
        Vec am = m.action.eval_basis(t, i);
        Vec aw = w.action.eval_basis(t, j);
        Vec rel = zero_vec(f, ambient);
        for (std::size_t k = 0; k < m.dim; ++k) rel[k * w.dim + j] = am[k];
        for (std::size_t k = 0; k < w.dim; ++k)
          rel[i * w.dim + k] = f.sub(rel[i * w.dim + k], aw[k]);
        span.add(std::move(rel));
      }
  Subspace relators = span.snapshot();
  QuotientMaps q = quotient_basis(ambient, relators);
  std::size_t qdim = ambient - relators.dim();
  return {ambient, std::move(relators), std::move(q.projection), std::move(q.section), qdim};
}

CommAlgebra square_zero_extension(const CommAlgebra& a, const AModule& m) {
  if (a.field != m.field) throw structural_error("square_zero_extension: field mismatch");
  const Field& f = a.field;
  std::size_t d = a.dim + m.dim;
  StructureTensor mult(f, d, d, d);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j)
      for (std::size_t k = 0; k < a.dim; ++k) mult.at(i, j, k) = a.mult.at(i, j, k);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < m.dim; ++j)
      for (std::size_t k = 0; k < m.dim; ++k) {
        mult.at(i, a.dim + j, a.dim + k) = m.action.at(i, j, k);
        mult.at(a.dim + j, i, a.dim + k) = m.action.at(i, j, k);
      }
  Vec unit = zero_vec(f, d);
  for (std::size_t i = 0; i < a.dim; ++i) unit[i] = a.unit[i];
  return {f, d, std::move(mult), std::move(unit)};
}

StructureTensor change_basis_tensor(const StructureTensor& t, const Matrix& t1, const Matrix& t2,
                                    const Matrix& t3) {
  const Field& f = t.field();
  std::optional<Matrix> t3inv = invert(t3);
  if (!t3inv) throw structural_error("change_basis: singular basis matrix");
  std::size_t d1 = t1.cols(), d2 = t2.cols(), d3 = t3.cols();
  StructureTensor out(f, d1, d2, d3);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d2; ++j) {
      Vec val = mul_vec(*t3inv, t.eval(t1.col(i), t2.col(j)));
      for (std::size_t k = 0; k < d3; ++k) out.at(i, j, k) = val[k];
    }
  return out;
}

CommAlgebra change_basis(const CommAlgebra& a, const Matrix& t) {
  std::optional<Matrix> tinv = invert(t);
  if (!tinv) throw structural_error("change_basis: singular basis matrix");
  return {a.field, a.dim, change_basis_tensor(a.mult, t, t, t), mul_vec(*tinv, a.unit)};
}

AModule change_basis_module(const AModule& m, const Matrix& t_algebra, const Matrix& t_module) {
  return {m.field, m.dim, change_basis_tensor(m.action, t_algebra, t_module, t_module)};
}

}  // namespace loday
