#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "catspec/caterpillar.hpp"

namespace catspec::cli {

/// Reference values for a caterpillar, 4 decimals as listed.
struct ReferenceValues {
  std::vector<LegCount> q;
  std::optional<double> mu;
  std::optional<double> ub_cardano;
  std::optional<double> ub_trace;
  std::optional<double> lb;
  /// Deletion index the listed ub_trace refers to; 0 means the minimum.
  std::size_t ub_trace_term = 0;
  const char* source = "";
};

/// Divergences above this are reported.
inline constexpr double kReferenceTolerance = 1e-3;

std::span<const ReferenceValues> reference_values();
const ReferenceValues* find_reference(const CaterpillarSpec& spec);

}  // namespace catspec::cli
