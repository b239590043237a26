#pragma once

#include "loday/lm.hpp"

namespace loday {

/// Der(A, M): all R-linear maps d: A -> M with d(ab) = a.d(b) + d(a).b,
/// computed as the nullspace of that linear system. Basis order follows the
/// echelon normalization, so it is deterministic.
struct DerivationSpace {
  CommAlgebra a;
  AModule m;
  std::vector<Matrix> basis;  // each dim(M) x dim(A)

  std::size_t dim() const { return basis.size(); }
};

DerivationSpace derivation_space(const CommAlgebra& a);
DerivationSpace derivation_space(const CommAlgebra& a, const AModule& m);

/// gl(M): the commutator Lie algebra on Hom(M, M), matrix units flattened
/// row-major.
LieAlgebra endo_lie(Field f, std::size_t dim_m);

/// Lie algebra of derivations of A: Der(A) with commutator brackets,
/// expressed in the derivation_space basis.
LieAlgebra der_lie_algebra(const DerivationSpace& der);

/// The universal Lie algebra of derivations of an algebra object (M -g-> A):
///
///   ( Der(A,M) --pi1+pi2--> L ),  pi1(d) = g o d,  pi2(d) = d o g,
///
/// with the right action [d, (alpha,beta)] = d o alpha - beta o d. The
/// bottom L is the Lie algebra of derivation pairs
///
///   { (alpha, beta) in Der(A) x Hom(M,M) :
///       beta(a.m) = a.beta(m) + alpha(a).m  and  g o beta = alpha o g }
///
/// under the componentwise commutator bracket. The pair conditions are
/// exactly what keeps the action inside Der(A,M) and makes pi1+pi2
/// equivariant; on (A -id-> A) the bottom is Der(A) embedded diagonally.
/// The H-component of the bracket carries no sign twist: the right-module
/// identity for the action forces + [beta, beta'].
struct DerivationsLMObject {
  LMAlgebraObject base;
  DerivationSpace top;                                  // Der(A, M)
  std::vector<std::pair<Matrix, Matrix>> bottom_pairs;  // (alpha: A->A, beta: M->M)
  LieAlgebra bottom;
  StructureTensor n_action;  // top x bottom -> top, Eq-style [d,(alpha,beta)]
  Matrix f;                  // top -> bottom, pi1 + pi2 in pair coordinates

  LMLieObject lie_object() const { return {bottom, top.dim(), n_action, f}; }
};

/// Assembles the universal derivations object. Requires x to pass
/// check_algebra_object and to be balanced (g(m).m' = g(m').m on basis
/// pairs); both failures raise precondition_error with witnesses. The
/// balanced condition is what puts (g o d, d o g) inside the bottom.
DerivationsLMObject universal_derivations(const LMAlgebraObject& x);

/// A Lie object acting on an algebra object by derivations: rho0: L x A -> A,
/// rho1: N x A -> M, rho2: L x M -> M as structure tensors.
/// Ids: "rho0-in-der" (i,a,b), "rho0-lie-hom" (i,j), "rho2-lie-hom" (i,j),
/// "rho1-in-der" (n,a,b), "compDer1-a" (i,a,m), "compDer1-b" (i,m),
/// "compDer3-a" (n,i), "compDer3-b" (n,a).
CheckReport check_action_by_derivations(const LMAlgebraObject& x_alg, const LMLieObject& x_lie,
                                        const StructureTensor& rho0, const StructureTensor& rho1,
                                        const StructureTensor& rho2);

}  // namespace loday
