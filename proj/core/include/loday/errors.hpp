#pragma once

#include <stdexcept>
#include <string>

#include "loday/report.hpp"

namespace loday {

/// Malformed input: shape or field mismatches, unresolvable data.
class structural_error : public std::runtime_error {
 public:
  explicit structural_error(const std::string& what) : std::runtime_error(what) {}
};

/// A construction was invoked on data that fails its axiomatic precondition.
/// Carries the offending check report so callers can surface the witnesses.
class precondition_error : public std::runtime_error {
 public:
  precondition_error(const std::string& what, CheckReport report)
      : std::runtime_error(what), report_(std::move(report)) {}

  const CheckReport& report() const { return report_; }

 private:
  CheckReport report_;
};

}  // namespace loday
