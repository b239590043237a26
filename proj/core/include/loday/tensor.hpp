#pragma once

#include <cstddef>

#include "loday/matrix.hpp"

namespace loday {

/// Structure constants of a bilinear map B: U x V -> W relative to chosen
/// bases: B(u_i, v_j) = sum_k t(i,j,k) w_k. Carrier for every multiplication,
/// bracket, action and anchor in the library.
class StructureTensor {
 public:
  StructureTensor() : d1_(0), d2_(0), d3_(0) {}
  StructureTensor(Field field, std::size_t d1, std::size_t d2, std::size_t d3)
      : field_(field), d1_(d1), d2_(d2), d3_(d3), data_(d1 * d2 * d3, field.zero()) {}

  const Field& field() const { return field_; }
  std::size_t d1() const { return d1_; }
  std::size_t d2() const { return d2_; }
  std::size_t d3() const { return d3_; }

  Scalar& at(std::size_t i, std::size_t j, std::size_t k) {
    return data_[(i * d2_ + j) * d3_ + k];
  }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
    return data_[(i * d2_ + j) * d3_ + k];
  }

  /// B(e_i, e_j) as a vector in W.
  Vec eval_basis(std::size_t i, std::size_t j) const;

  /// Bilinear evaluation on arbitrary coordinate vectors.
  Vec eval(const Vec& x, const Vec& y) const;

  /// Matrix of B(x, .) : V -> W.
  Matrix left_action(const Vec& x) const;

  /// Matrix of B(., y) : U -> W.
  Matrix right_action(const Vec& y) const;

  bool operator==(const StructureTensor&) const = default;

 private:
  Field field_;
  std::size_t d1_, d2_, d3_;
  Vec data_;
};

}  // namespace loday
