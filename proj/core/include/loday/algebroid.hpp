#pragma once

#include "loday/lie_rinehart.hpp"

namespace loday {

/// Leibniz algebroid (A, E): a Leibniz algebra and A-module E with an
/// A-linear anchor into Der(A) that is a Leibniz antihomomorphism
/// (rho[e1,e2] = [rho e2, rho e1] as commutators) and satisfies
/// [a.e1, e2] = a.[e1,e2] + rho(e2)(a).e1.
struct LeibnizAlgebroid {
  CommAlgebra a;
  LeibnizAlgebra e;
  StructureTensor a_on_e;  // A x E -> E
  StructureTensor anchor;  // E x A -> A
};

/// Ids: "e-module-unit/assoc", "RLJ", "anchor-in-der" (i,a,b),
/// "anchor-a-linear" (a,i), "LBanchor-antihom" (i,j), "LBrule" (a,i,j).
CheckReport check_leibniz_algebroid(const LeibnizAlgebroid& x);

/// Second-slot rule [e1, a.e2] = a.[e1,e2] - rho(e1)(a).e2, on all basis
/// triples (e1, a, e2). Informative: not an algebroid axiom. Id "local".
CheckReport check_local(const LeibnizAlgebroid& x);

/// Same rule with the second slot restricted to a subspace (checked on its
/// basis vectors). Hemi-semi-direct algebroids satisfy the rule exactly for
/// second arguments in the acting summand, which is what this overload
/// pins down; witness (e1, a, row-of-subspace).
CheckReport check_local(const LeibnizAlgebroid& x, const Subspace& second_slot);

struct Theorem2Result {
  LeibnizAlgebroid algebroid;
  std::size_t m_dim;  // E = M (+) N with the M block first
  std::size_t n_dim;

  Subspace n_part() const;
};

/// The Leibniz algebroid (A, M (+) N) of a Lie-Rinehart object in the
/// linear-maps category: anchor -rho0 o f (zero on M) and bracket
/// [m1+n1, m2+n2] = -rho2(f(n2))(m1) + [n1, f(n2)]. The input is validated
/// with check_theorem1_object; failures raise precondition_error carrying
/// that report.
Theorem2Result theorem2_functor(const TheoremOneData& d);

/// Prop-style hemi-semi-direct algebroid (A, M (+) L) of a Lie-Rinehart
/// pair and an (A,L)-module: anchor -rho_L on the L block, bracket
/// -nabla_zeta(m1) + [xi, zeta]. Validates the pair and the module action.
LeibnizAlgebroid hemi_semi_algebroid(const LieRinehartPair& p, const AModule& m,
                                     const StructureTensor& nabla);

/// A Lie-Rinehart pair viewed as a Leibniz algebroid with anchor -rho_L.
LeibnizAlgebroid algebroid_from_pair(const LieRinehartPair& p);

struct ReduceResult {
  /// Present when the squares ideal is an A-submodule.
  std::optional<LieRinehartPair> pair;
  Matrix pi;                // quotient projection E -> E_Lie (empty on obstruction)
  SquaresIdeal squares;
  CheckReport obstruction;  // "a-stable" witnesses when the ideal is not A-stable
  CheckReport verification; // check_lie_rinehart_pair of the quotient pair
};

/// Quotient construction: computes the squares ideal of E, tests that the
/// A-action preserves it, and on success builds (A, E_Lie) with anchor
/// -rho_E descended, re-verified. An obstruction is a value, not an error.
ReduceResult reduce_algebroid(const LeibnizAlgebroid& x);

/// Tests A-linearity of gamma(x (x) y) = rho_L([x,y]) on L (x) L, where A
/// acts through the first factor. Failure is the expected outcome for pairs
/// whose bracket is not A-bilinear; id "tensor-anchor-a-linear" (a,x,y).
CheckReport attempt_tensor_square_anchor(const LieRinehartPair& p);

LeibnizAlgebroid change_basis(const LeibnizAlgebroid& x, const Matrix& t_a, const Matrix& t_e);

}  // namespace loday
