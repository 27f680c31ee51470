#pragma once

// Independent well-structuredness checker for instantiated pseudo-terms.
// Works only on the PseudoTerm itself — never on constraint sets — so it can
// serve as the soundness oracle for the inference pipeline.

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dlal/param.hpp"

namespace dlal {

struct CheckFailure {
  std::string condition;  // "local-typing" | "bracketing" | "bang" | "scope"
  std::string position;   // node path
  std::string detail;
};

struct CheckReport {
  bool pass = false;
  std::vector<CheckFailure> failures;
  StarRef output_type;  // present when local typing passes
};

using PseudoTypes = std::unordered_map<const PseudoNode*, StarRef>;

/// Local typing: the eight syntax-directed rules, the multiplicity rule and
/// the eigenvariable condition. Fills `types` (type after the node's doors)
/// when given.
std::optional<StarRef> check_local_typing(const PseudoRef& t,
                                          std::vector<CheckFailure>* failures = nullptr,
                                          PseudoTypes* types = nullptr);

std::vector<CheckFailure> check_bracketing(const PseudoRef& t);

/// Bang condition via the door-extreme reformulation; runs local typing
/// internally to find bang subterms.
std::vector<CheckFailure> check_bang(const PseudoRef& t);

std::vector<CheckFailure> check_scope(const PseudoRef& t);

CheckReport check_well_structured(const PseudoRef& t);

std::string format_report(const CheckReport& r);

}  // namespace dlal
