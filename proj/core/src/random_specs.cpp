#include "catspec/random_specs.hpp"

#include <random>
#include <stdexcept>

namespace catspec {

std::vector<CaterpillarSpec> random_specs(const RandomSpecOptions& options) {
  if (options.k_min < 1 || options.k_min > options.k_max) throw std::invalid_argument("random_specs: bad k range");
  std::mt19937_64 rng(options.seed);
  auto draw = [&rng](std::uint64_t lo, std::uint64_t hi) { return lo + rng() % (hi - lo + 1); };

  std::vector<CaterpillarSpec> out;
  out.reserve(options.count);
  while (out.size() < options.count) {
    const auto k = static_cast<std::size_t>(draw(options.k_min, options.k_max));
    std::vector<LegCount> legs(k);
    for (auto& q : legs) q = draw(0, options.q_max);
    if (options.require_zero_leg) legs[draw(0, k - 1)] = 0;
    out.emplace_back(std::move(legs));
  }
  return out;
}

}  // namespace catspec
