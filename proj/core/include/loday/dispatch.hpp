#pragma once

#include "loday/document.hpp"
#include "loday/errors.hpp"

namespace loday {

/// Wrong command-line usage: unknown kind or recipe, kind mismatch, missing
/// entity. Distinct from axiom failures; maps to exit code 2.
class usage_error : public std::runtime_error {
 public:
  explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

/// All check kinds accepted by run_check. Package kinds check themselves;
/// "leibniz"/"lie" cross-apply to either bracket package; "local" and
/// "tensor-square-anchor" run the extra diagnostics on algebroid /
/// Lie-Rinehart packages.
std::vector<std::string> check_kinds();

/// Dispatches a named entity to its checker. Deterministic: identical
/// documents and arguments produce identical reports.
CheckReport run_check(const DefinitionDocument& doc, const std::string& entity,
                      const std::string& kind);

std::vector<std::string> construct_recipes();

/// Runs a construction recipe on named entities and returns a complete,
/// re-loadable output document with provenance. Axiom precondition
/// failures raise precondition_error carrying the offending report.
Value run_construct(const DefinitionDocument& doc, const std::string& recipe,
                    const std::vector<std::string>& entities);

Value report_to_value(const CheckReport& r);
std::optional<CheckReport> report_from_value(const Value& v);

/// Machine format: the stable document schema (byte-identical for equal
/// reports). Human format: one line per violation with the axiom's
/// equation name spelled out.
std::string emit_report_machine(const CheckReport& r);
std::string emit_report_human(const CheckReport& r);

/// Short description of an axiom id (prefix-aware), used by the human
/// report format.
std::string axiom_description(const std::string& axiom_id);

}  // namespace loday
