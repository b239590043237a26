#pragma once

#include "loday/linalg.hpp"
#include "loday/report.hpp"
#include "loday/tensor.hpp"

namespace loday {

/// Finite-dimensional commutative unital algebra by structure constants:
/// a_i a_j = sum_k mult(i,j,k) a_k.
struct CommAlgebra {
  Field field;
  std::size_t dim;
  StructureTensor mult;  // dim x dim x dim
  Vec unit;

  /// Multiplication by an arbitrary element, a * e_j convention.
  Vec multiply(const Vec& a, const Vec& b) const { return mult.eval(a, b); }

  bool operator==(const CommAlgebra&) const = default;
};

/// Left module over a CommAlgebra: a_i . m_j = sum_k action(i,j,k) m_k.
/// The commutative setting forces the symmetric bimodule structure, so a
/// single left action is stored.
struct AModule {
  Field field;
  std::size_t dim;
  StructureTensor action;  // dimA x dim x dim

  Vec act(const Vec& a, const Vec& m) const { return action.eval(a, m); }

  bool operator==(const AModule&) const = default;
};

/// Commutativity, associativity and unit law on all basis tuples.
/// Axiom ids: "comm" (i,j), "assoc" (i,j,k), "unit" (i).
CheckReport check_comm_algebra(const CommAlgebra& a);

/// Unit and associativity laws of the action.
/// Axiom ids: "module-unit" (j), "module-assoc" (i,j,k).
CheckReport check_a_module(const CommAlgebra& a, const AModule& m);

/// The A-module view of A acting on itself by multiplication.
AModule regular_module(const CommAlgebra& a);

/// M (x)_A W presented as a quotient of M (x)_k W. Index (i,j) of the
/// ambient space is flattened as i * dim(W) + j.
struct TensorOverA {
  std::size_t ambient_dim;
  Subspace relators;   // span of (a.m)(x)w - m(x)(a.w) over basis triples
  Matrix projection;   // ambient -> quotient
  Matrix section;      // quotient -> ambient
  std::size_t quotient_dim;
};

TensorOverA tensor_over_A(const CommAlgebra& a, const AModule& m, const AModule& w);

/// Square-zero extension A (+) M with (a,m)(a',m') = (aa', a.m' + a'.m).
/// A-block first; the unit is (1_A, 0).
CommAlgebra square_zero_extension(const CommAlgebra& a, const AModule& m);

/// Structure constants in the basis given by the columns of T (coordinates
/// relative to the old basis). T must be invertible.
CommAlgebra change_basis(const CommAlgebra& a, const Matrix& t);
AModule change_basis_module(const AModule& m, const Matrix& t_algebra, const Matrix& t_module);

/// Shared helper: conjugates a bilinear tensor U x V -> W by basis changes
/// on the three factors.
StructureTensor change_basis_tensor(const StructureTensor& t, const Matrix& t1, const Matrix& t2,
                                    const Matrix& t3);

}  // namespace loday
