#pragma once

#include "loday/derivations.hpp"

namespace loday {

/// Lie-Rinehart pair (A, L): L is a Lie algebra and an A-module, A an
/// L-module through the anchor rho: L -> Der(A), with rho A-linear, a Lie
/// map, and [xi, a.zeta] = a.[xi,zeta] + rho(xi)(a).zeta.
struct LieRinehartPair {
  CommAlgebra a;
  LieAlgebra l;
  StructureTensor a_on_l;  // A x L -> L
  StructureTensor anchor;  // L x A -> A
};

/// Ids: "l-module-unit/assoc", "anchor-in-der" (i,a,b), "anchor-a-linear"
/// (a,i), "anchor-lie-hom" (i,j), "LR-leibniz" (i,a,j), plus the Lie axioms.
CheckReport check_lie_rinehart_pair(const LieRinehartPair& p);

/// M a left (A,L)-module through rho2: L x M -> M: rho2 an A-linear Lie
/// map satisfying the mixed law rho2(xi)(a.m) = a.rho2(xi)(m) +
/// rho(xi)(a).m. Ids: "rho2-lie-hom", "rho2-a-linear", "compDer1-a",
/// plus the module axioms of m.
CheckReport check_lr_module(const LieRinehartPair& p, const AModule& m,
                            const StructureTensor& rho2);

/// The full Lie-Rinehart-in-LM package: an algebra object (M -g-> A), a Lie
/// object (N -f-> L), A-module structures on N and L, the three derivation
/// actions, and lambda: M (x) L -> N given on the plain tensor square.
struct TheoremOneData {
  LMAlgebraObject alg;     // (M -g-> A)
  LMLieObject lie;         // (N -f-> L)
  StructureTensor a_on_n;  // A x N -> N
  StructureTensor a_on_l;  // A x L -> L
  StructureTensor rho0;    // L x A -> A
  StructureTensor rho1;    // N x A -> M
  StructureTensor rho2;    // L x M -> M
  StructureTensor lambda;  // M x L -> N

  LieRinehartPair pair() const { return {alg.a, lie.l, a_on_l, rho0}; }
};

/// Every condition of the recognizer, grouped T1-1 .. T1-8:
///  T1-1 the two object recognizers; T1-2 (A,L) is a Lie-Rinehart pair with
///  anchor rho0; T1-3 M is a left (A,L)-module via rho2; T1-4 N is an
///  A-module and [a.n, xi] = a.[n,xi] - rho0(xi)(a).n; T1-5 f, g A-linear
///  and L-equivariant; T1-6 lambda kills the tensor relators and is
///  A-linear; T1-7 rho1 maps into Der(A,M), is A-linear and satisfies the
///  two derivation-action compatibilities; T1-8 squares annihilation.
/// Overlapping laws are evaluated once and reported under a single id.
/// Structural shape mismatches throw before any axiom runs.
CheckReport check_theorem1_object(const TheoremOneData& d);

/// The package ((A -id-> A), (L -id-> L)) of a Lie-Rinehart pair: all three
/// rho maps equal the anchor and lambda is the module action. Validates p.
TheoremOneData build_tautological(const LieRinehartPair& p);

/// Packages a universal derivations object with the projection actions
/// (rho0, rho2) = the two pair components, rho1 = identity, lambda = 0.
TheoremOneData build_universal_package(const DerivationsLMObject& u);

/// Conjugates the whole package by independent basis changes on A, M, L, N.
TheoremOneData change_basis(const TheoremOneData& d, const Matrix& t_a, const Matrix& t_m,
                            const Matrix& t_l, const Matrix& t_n);
LieRinehartPair change_basis(const LieRinehartPair& p, const Matrix& t_a, const Matrix& t_l);

}  // namespace loday
