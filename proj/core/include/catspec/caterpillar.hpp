#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace catspec {

using LegCount = std::uint64_t;

/// The caterpillar T(q_1,...,q_k): a spine path on k vertices where spine
/// vertex i carries q_i pendant legs. Immutable once constructed.
///
/// Stars (k = 1) and bare paths (all q_i = 0) are accepted; `canonical()`
/// reports whether the tree is a caterpillar in the strict sense (k >= 2 and
/// order n >= 5).
class CaterpillarSpec {
 public:
  /// Throws Error{EmptySpec} when `legs` is empty.
  explicit CaterpillarSpec(std::vector<LegCount> legs);

  std::span<const LegCount> legs() const noexcept { return legs_; }
  std::size_t spine_length() const noexcept { return legs_.size(); }
  /// 0-based access to q_{i+1}.
  LegCount leg(std::size_t i) const { return legs_.at(i); }

  /// n = q_1 + ... + q_k + k.
  std::uint64_t order() const noexcept;
  bool canonical() const noexcept;

  /// The caterpillar on spine vertices [first, first + count).
  CaterpillarSpec slice(std::size_t first, std::size_t count) const;

  /// "(q1,...,qk)".
  std::string to_string() const;

  friend bool operator==(const CaterpillarSpec&, const CaterpillarSpec&) = default;

 private:
  std::vector<LegCount> legs_;
};

/// Checks signed input and builds a spec. Errors: NegativeLegCount, EmptySpec.
CaterpillarSpec validate_spec(std::span<const std::int64_t> q);

struct DerivedParams {
  std::vector<int> delta;           // delta(q_i) = 1 iff q_i > 0
  std::vector<LegCount> qplus;      // max(1, q_i)
  std::uint64_t n = 0;              // graph order
  std::uint64_t a = 0;              // sum(q_i - delta(q_i)), multiplicity of -1 in the line graph
  std::uint64_t b = 0;              // k - sum(delta), zero rows of C
  std::uint64_t dim_c = 0;          // 2k - 1
};

DerivedParams derive_params(const CaterpillarSpec& spec);

inline LegCount qplus(LegCount q) noexcept { return q == 0 ? 1 : q; }

}  // namespace catspec
