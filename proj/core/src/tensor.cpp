#include "loday/tensor.hpp"

#include "loday/errors.hpp"

namespace loday {

Vec StructureTensor::eval_basis(std::size_t i, std::size_t j) const {
  Vec out(d3_);
  for (std::size_t k = 0; k < d3_; ++k) out[k] = at(i, j, k);
  return out;
}

Vec StructureTensor::eval(const Vec& x, const Vec& y) const {
  if (x.size() != d1_ || y.size() != d2_) throw structural_error("tensor eval shape mismatch");
  Vec out = zero_vec(field_, d3_);
  for (std::size_t i = 0; i < d1_; ++i) {
    if (field_.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < d2_; ++j) {
      if (field_.is_zero(y[j])) continue;
      Scalar c = field_.mul(x[i], y[j]);
      for (std::size_t k = 0; k < d3_; ++k)
        out[k] = field_.add(out[k], field_.mul(c, at(i, j, k)));
    }
  }
  return out;
}

Matrix StructureTensor::left_action(const Vec& x) const {
  if (x.size() != d1_) throw structural_error("tensor left_action shape mismatch");
  Matrix out(field_, d3_, d2_);
  for (std::size_t i = 0; i < d1_; ++i) {
    if (field_.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < d2_; ++j)
      for (std::size_t k = 0; k < d3_; ++k)
        out.at(k, j) = field_.add(out.at(k, j), field_.mul(x[i], at(i, j, k)));
  }
  return out;
}

Matrix StructureTensor::right_action(const Vec& y) const {
  if (y.size() != d2_) throw structural_error("tensor right_action shape mismatch");
  Matrix out(field_, d3_, d1_);
  for (std::size_t j = 0; j < d2_; ++j) {
    if (field_.is_zero(y[j])) continue;
    for (std::size_t i = 0; i < d1_; ++i)
      for (std::size_t k = 0; k < d3_; ++k)
        out.at(k, i) = field_.add(out.at(k, i), field_.mul(y[j], at(i, j, k)));
  }
  return out;
}

}  // namespace loday
