#pragma once

#include "loday/algebra.hpp"
#include "loday/linalg.hpp"
#include "loday/report.hpp"
#include "loday/tensor.hpp"

namespace loday {

/// Right Leibniz algebra by structure constants. The defining identity is
/// [x,[y,z]] - [[x,y],z] + [[x,z],y] = 0; brackets need not be antisymmetric.
struct LeibnizAlgebra {
  Field field;
  std::size_t dim;
  StructureTensor bracket;  // dim x dim x dim

  Vec br(const Vec& x, const Vec& y) const { return bracket.eval(x, y); }
  bool operator==(const LeibnizAlgebra&) const = default;
};

struct LieAlgebra {
  Field field;
  std::size_t dim;
  StructureTensor bracket;

  Vec br(const Vec& x, const Vec& y) const { return bracket.eval(x, y); }
  bool operator==(const LieAlgebra&) const = default;
};

/// Right Leibniz identity on all dim^3 basis triples. Axiom id "RLJ",
/// witness (i,j,k).
CheckReport check_leibniz(const LeibnizAlgebra& g);

/// Alternating brackets plus Jacobi. Witness (i,i) carries the residual
/// [e_i,e_i], so characteristic 2 is handled correctly; ids "antisym"
/// (i<=j) and "jacobi" (i,j,k).
CheckReport check_lie(const LieAlgebra& l);

/// phi([x,y]) = [phi x, phi y] on all basis pairs; id "morphism".
CheckReport check_leibniz_morphism(const Matrix& phi, const LeibnizAlgebra& src,
                                   const LeibnizAlgebra& dst);

/// Left Lie-module law act([x,y], v) = act(x, act(y,v)) - act(y, act(x,v));
/// id "lie-module-action", witness (i,j,k). Used as the precondition of the
/// hemi-semi-direct products.
CheckReport check_lie_module(const LieAlgebra& l, const StructureTensor& action);

struct SquaresIdeal {
  Subspace ideal;
  std::size_t closure_iterations;  // passes that added new vectors; 0 for valid inputs
};

/// Two-sided ideal generated by squares [x,x]: the span of [e_i,e_i] and
/// [e_i,e_j]+[e_j,e_i], closed under bracketing with basis elements until a
/// fixpoint. The symmetrized generators keep the set correct over every
/// field, including characteristic 2.
SquaresIdeal squares_ideal(const LeibnizAlgebra& g);

struct ReducedLie {
  LieAlgebra lie;
  Matrix pi;       // quotient projection, a Leibniz morphism g -> g_Lie
  Matrix section;  // g_Lie -> g with pi * section = id
  SquaresIdeal squares;
};

/// Quotient by the squares ideal. Throws precondition_error when the induced
/// bracket fails to be well defined, which cannot happen for a bracket
/// passing check_leibniz.
ReducedLie reduced_lie(const LeibnizAlgebra& g);

/// Hemi-semi-direct product on V (+) L: [a+xi, b+zeta] = zeta(a) - [xi,zeta].
/// V-block first. `action` is L x V -> V and must be a Lie-module action;
/// violations raise precondition_error.
LeibnizAlgebra hemi_semi_product(const LieAlgebra& l, const StructureTensor& action);

/// M (+) g with [m1+g1, m2+g2] = -pi(g2)(m1) + [g1,g2], where M is a module
/// over the reduced Lie algebra of g. `action` is g_Lie x M -> M in the
/// basis produced by reduced_lie(g).
LeibnizAlgebra hemi_semi_over_reduced(const LeibnizAlgebra& g, const StructureTensor& action);

/// Second tensor power with [x1(x)y1, x2(x)y2] = [x1,[x2,y2]](x)y1 +
/// x1(x)[y1,[x2,y2]]; index (i,j) flattens to i*dim+j.
LeibnizAlgebra tensor_square(const LieAlgebra& l);

LeibnizAlgebra change_basis(const LeibnizAlgebra& g, const Matrix& t);
LieAlgebra change_basis(const LieAlgebra& l, const Matrix& t);

inline LeibnizAlgebra as_leibniz(const LieAlgebra& l) { return {l.field, l.dim, l.bracket}; }

}  // namespace loday
