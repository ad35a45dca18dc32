#pragma once

#include <cstdint>
#include <vector>

#include "catspec/caterpillar.hpp"

namespace catspec {

struct RandomSpecOptions {
  std::size_t count = 200;
  std::size_t k_min = 1;
  std::size_t k_max = 8;
  LegCount q_max = 6;
  std::uint64_t seed = 7;
  /// Forces at least one zero leg in every spec.
  bool require_zero_leg = false;
};

/// Deterministic for a fixed seed on every platform (mt19937_64 with
/// modulo reduction, no std distributions).
std::vector<CaterpillarSpec> random_specs(const RandomSpecOptions& options);

}  // namespace catspec
