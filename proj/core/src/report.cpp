#include "loday/report.hpp"

#include <algorithm>

namespace loday {

void AxiomRecorder::fail(const std::string& axiom, std::vector<long> witness, Vec residual) {
  for (const Violation& v : violations_)
    if (v.axiom == axiom) return;  // keep the first witness per axiom
  violations_.push_back({axiom, std::move(witness), std::move(residual)});
}

bool AxiomRecorder::residual(const Field& f, const std::string& axiom,
                             std::vector<long> witness, const Vec& value) {
  if (is_zero_vec(f, value)) return false;
  fail(axiom, std::move(witness), value);
  return true;
}

CheckReport AxiomRecorder::finish(std::string entity, std::string kind, Field field) {
  std::sort(violations_.begin(), violations_.end(), [](const Violation& a, const Violation& b) {
    if (a.axiom != b.axiom) return a.axiom < b.axiom;
    return a.witness < b.witness;
  });
  CheckReport r;
  r.entity = std::move(entity);
  r.kind = std::move(kind);
  r.field = field;
  r.violations = std::move(violations_);
  return r;
}

void AxiomRecorder::merge(const CheckReport& sub, const std::string& prefix) {
  for (const Violation& v : sub.violations) fail(prefix + v.axiom, v.witness, v.residual);
}

}  // namespace loday
