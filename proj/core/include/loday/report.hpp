#pragma once

#include <string>
#include <vector>

#include "loday/matrix.hpp"

namespace loday {

/// One violated law: which axiom, at which basis tuple, with the exact
/// residual vector. Map-valued residuals are flattened row-major.
struct Violation {
  std::string axiom;
  std::vector<long> witness;
  Vec residual;

  bool operator==(const Violation&) const = default;
};

/// Outcome of an axiom check. Each violated axiom id appears once, carrying
/// the lexicographically first offending basis tuple; violations are sorted
/// by (axiom, witness) so reports are reproducible byte for byte.
struct CheckReport {
  std::string entity;
  std::string kind;
  Field field = Field::rationals();
  std::vector<Violation> violations;

  bool pass() const { return violations.empty(); }
};

/// Collects violations during a basis sweep. Loops must visit witnesses in
/// lexicographic order; the first failure per axiom id is kept.
class AxiomRecorder {
 public:
  void fail(const std::string& axiom, std::vector<long> witness, Vec residual);

  /// Records a failure when residual is nonzero; returns true on failure.
  bool residual(const Field& f, const std::string& axiom, std::vector<long> witness,
                const Vec& value);

  /// Sorted report with the given metadata.
  CheckReport finish(std::string entity, std::string kind, Field field);

  /// Merges another report's violations (used by compound checkers); an
  /// optional prefix namespaces the axiom ids.
  void merge(const CheckReport& sub, const std::string& prefix = "");

  bool clean() const { return violations_.empty(); }

 private:
  std::vector<Violation> violations_;
};

}  // namespace loday
