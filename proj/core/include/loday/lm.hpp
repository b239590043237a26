#pragma once

#include "loday/algebra.hpp"
#include "loday/leibniz.hpp"

namespace loday {

/// Object of the category of linear maps: a vertical map u: V -> W.
/// dim V = u.cols(), dim W = u.rows().
struct LMObject {
  Matrix u;

  std::size_t dim_v() const { return u.cols(); }
  std::size_t dim_w() const { return u.rows(); }
  bool operator==(const LMObject&) const = default;
};

/// Morphism (h1, h0): (V -> W) => (V' -> W') with u' h1 = h0 u.
struct LMMorphism {
  LMObject source, target;
  Matrix h1;  // V -> V'
  Matrix h0;  // W -> W'
};

/// The commuting square u' h1 - h0 u, checked exactly. The axiom id names
/// the context: "square" for standalone checks, "hgcomp-square" /
/// "hgtensor-square" when re-verifying after compose / tensor.
CheckReport check_lm_morphism(const LMMorphism& m, const std::string& axiom_id = "square");

LMMorphism lm_identity(const LMObject& a);
LMMorphism lm_zero_morphism(const LMObject& a, const LMObject& b);

/// Componentwise composition (h1 g1, h0 g0); the resulting square is
/// re-verified, never assumed.
LMMorphism compose(const LMMorphism& h, const LMMorphism& g);

/// The unit object ({0} -> R).
LMObject lm_unit(Field f);

/// Monoidal product. Top space is V(x)W' (+) W(x)V' with the V(x)W' block
/// first and row-major flattening inside blocks; bottom is W(x)W'; the
/// vertical map is u(x)1 + 1(x)u'. This block layout is part of the
/// serialization contract.
LMObject tensor_objects(const LMObject& a, const LMObject& b);

/// (g1(x)h0 + g0(x)h1, g0(x)h0) on the block layout above.
LMMorphism tensor_morphisms(const LMMorphism& g, const LMMorphism& h);

/// Symmetry a(x)b -> b(x)a: the bottom swaps tensor factors, the top swaps
/// the two summands and the factors inside each. An involution.
LMMorphism braiding(const LMObject& a, const LMObject& b);

/// Commutative algebra object (M -g-> A): algebra, symmetric module, and an
/// A-linear structure map g.
struct LMAlgebraObject {
  CommAlgebra a;
  AModule m;
  Matrix g;  // M -> A

  LMObject object() const { return {g}; }
};

/// Ids: the CommAlgebra/AModule families plus "g-a-linear" (i,j).
CheckReport check_algebra_object(const LMAlgebraObject& x);

/// Lie algebra object (N -f-> L): Lie algebra, right L-module N with action
/// n (x) xi -> [n, xi], and an equivariant f.
struct LMLieObject {
  LieAlgebra l;
  std::size_t n_dim;
  StructureTensor n_action;  // N x L -> N, right action
  Matrix f;                  // N -> L

  LMObject object() const { return {f}; }
  Vec act(const Vec& n, const Vec& xi) const { return n_action.eval(n, xi); }
};

/// Ids: the Lie families plus "right-module" (n,i,j) and "f-equivariant" (n,i).
CheckReport check_lie_object(const LMLieObject& x);

/// Left module over an algebra object: an object (V -u-> W) of A-modules
/// plus mu1: M (x) W -> V. The structure map alpha_ell is the descent of
/// mu1 through M (x)_A W; descent is a checked condition, so mu1 is given
/// on the plain tensor square.
struct LMModuleOverAlgebra {
  LMObject v;
  StructureTensor act_w;  // A x W -> W
  StructureTensor act_v;  // A x V -> V
  Matrix mu1;             // M (x) W -> V, columns indexed by i*dimW + j
};

/// Ids: "w-module-*", "v-module-*", "u-a-linear" (i,j), "alpha-ell-descent"
/// (a,i,j), "alpha-ell-a-linear" (a,i,j), "alpha-ell" (i,j).
CheckReport check_module_over_algebra_object(const LMAlgebraObject& x,
                                             const LMModuleOverAlgebra& mod);

/// Left module over a Lie object: left L-actions on W and V plus
/// alpha1: N (x) W -> V.
struct LMModuleOverLie {
  LMObject v;
  StructureTensor alpha0;  // L x W -> W
  StructureTensor alpha2;  // L x V -> V
  Matrix alpha1;           // N (x) W -> V
};

/// Ids: "alpha0-action", "alpha2-action", "compat3" (n,xi,w), "u-alpha1"
/// (n,w), "u-alpha2" (xi,v). The second vertical compatibility reads the
/// bare alpha of the source material as alpha0.
CheckReport check_module_over_lie_object(const LMLieObject& x, const LMModuleOverLie& mod);

/// The canonical action of a Lie object on itself: alpha0 = adjoint,
/// alpha2(xi (x) n) = -[n, xi], alpha1(n (x) zeta) = [n, zeta].
LMModuleOverLie self_action(const LMLieObject& x);

/// Checks [n1, a.[n2,n2]_N]_N = 0 where [n1,n2]_N := [n1, f(n2)] and a_on_n
/// is the A-module structure on N. Id "extra", witness (n1, a, n2).
CheckReport check_squares_annihilation(const LMLieObject& x, const CommAlgebra& a,
                                       const StructureTensor& a_on_n);

/// Morphism of algebra objects: phi1(a.m) = phi0(a).phi1(m), phi0
/// multiplicative, plus the commuting square.
/// Ids: "algebra-map-1" (i,j), "algebra-map-0" (i,j), "square" (j).
CheckReport check_algebra_morphism(const LMAlgebraObject& src, const LMAlgebraObject& dst,
                                   const Matrix& phi1, const Matrix& phi0);

/// Morphism of Lie objects: a1([n,xi]) = [a1 n, a0 xi], a0 a Lie map, plus
/// the square. Ids: "lie-map-1", "lie-map-0", "square".
CheckReport check_lie_object_morphism(const LMLieObject& src, const LMLieObject& dst,
                                      const Matrix& phi1, const Matrix& phi0);

LMAlgebraObject change_basis(const LMAlgebraObject& x, const Matrix& t_a, const Matrix& t_m);
LMLieObject change_basis(const LMLieObject& x, const Matrix& t_l, const Matrix& t_n);

}  // namespace loday
