#pragma once

#include <string>
#include <vector>

namespace ecurve {

/// Outcome of one validation criterion.
struct CriterionResult {
    int id = 0;
    std::string name;    ///< short slug, e.g. "balanced-constant-frequency"
    bool passed = false;
    std::string detail;  ///< measured residuals against their thresholds
};

/// Run the built-in numerical validation suite (criteria 1..9) against the
/// closed-form signal models; no files are read. The end-to-end CLI check
/// (criterion 10) is exercised separately by the acceptance harness, which
/// drives the actual binary. `filter` selects a subset: an empty filter runs
/// everything; otherwise a criterion runs when the filter matches its id or
/// is a substring of its slug (e.g. "balanced" runs criteria 1 and 2).
std::vector<CriterionResult> run_validation(const std::string& filter = "");

/// One report line: "criterion N [slug] PASS|FAIL - detail".
std::string format_criterion(const CriterionResult& r);

} // namespace ecurve
