#pragma once

#include <span>
#include <string>
#include <vector>

#include "catspec/caterpillar.hpp"
#include "json.hpp"

namespace catspec::cli {

struct CheckOutcome {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // first few, "spec: detail"
};

struct VerifyReport {
  std::size_t specs = 0;
  double tol = 0.0;
  std::vector<CheckOutcome> checks;
  /// Divergences from reference values; informational only.
  std::vector<std::string> notes;

  bool passed() const;
};

/// Runs every identity and bound check on each spec. Oracle comparisons use
/// absolute tolerance `tol`; exact checks ignore it. Error{NonConvergence}
/// propagates; any other library error counts as a failure of that check.
VerifyReport run_verify(std::span<const CaterpillarSpec> specs, double tol);

void to_json(nlohmann::json& j, const VerifyReport& r);
std::string render_text(const VerifyReport& r);
std::string render_csv(const VerifyReport& r);

}  // namespace catspec::cli
