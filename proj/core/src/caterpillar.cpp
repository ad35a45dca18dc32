#include "catspec/caterpillar.hpp"

#include <numeric>

#include "catspec/errors.hpp"

namespace catspec {

CaterpillarSpec::CaterpillarSpec(std::vector<LegCount> legs) : legs_(std::move(legs)) {
  if (legs_.empty()) throw Error(ErrorCode::EmptySpec, "a caterpillar needs at least one spine vertex");
}

std::uint64_t CaterpillarSpec::order() const noexcept {
  return std::accumulate(legs_.begin(), legs_.end(), std::uint64_t{0}) + legs_.size();
}

bool CaterpillarSpec::canonical() const noexcept { return legs_.size() >= 2 && order() >= 5; }

CaterpillarSpec CaterpillarSpec::slice(std::size_t first, std::size_t count) const {
  if (count == 0 || first + count > legs_.size()) {
    throw Error(ErrorCode::IndexOutOfRange, "slice [" + std::to_string(first) + ", " +
                                                std::to_string(first + count) + ") of " + to_string());
  }
  return CaterpillarSpec(std::vector<LegCount>(legs_.begin() + first, legs_.begin() + first + count));
}

std::string CaterpillarSpec::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < legs_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(legs_[i]);
  }
  return out + ')';
}

CaterpillarSpec validate_spec(std::span<const std::int64_t> q) {
  if (q.empty()) throw Error(ErrorCode::EmptySpec, "empty leg vector");
  std::vector<LegCount> legs;
  legs.reserve(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] < 0) {
      throw Error(ErrorCode::NegativeLegCount,
                  "q" + std::to_string(i + 1) + " = " + std::to_string(q[i]));
    }
    legs.push_back(static_cast<LegCount>(q[i]));
  }
  return CaterpillarSpec(std::move(legs));
}

DerivedParams derive_params(const CaterpillarSpec& spec) {
  DerivedParams p;
  const auto k = spec.spine_length();
  p.delta.reserve(k);
  p.qplus.reserve(k);
  std::uint64_t delta_sum = 0;
  for (LegCount q : spec.legs()) {
    const int d = q > 0 ? 1 : 0;
    p.delta.push_back(d);
    p.qplus.push_back(qplus(q));
    delta_sum += d;
    p.a += q - d;
  }
  p.n = spec.order();
  p.b = k - delta_sum;
  p.dim_c = 2 * k - 1;
  return p;
}

}  // namespace catspec
