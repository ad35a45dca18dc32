#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "catspec/caterpillar.hpp"

namespace catspec::cli {

/// Bad command-line input; maps to exit status 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { Text, Json, Csv };

Format parse_format(std::string_view text);

/// Largest tree the dense oracle is asked to handle.
inline constexpr std::uint64_t kMaxOrder = 2000;

/// "4,9,0,1" or "(4,9,0,1)". Throws UsageError on anything else, including
/// negative counts and trees above kMaxOrder vertices.
CaterpillarSpec parse_q(std::string_view text);

struct BatchEntry {
  std::size_t line = 0;  // 1-based
  std::optional<CaterpillarSpec> spec;
  std::string error;  // set when spec is empty
};

/// One spec per line. Blank lines and lines starting with '#' are skipped;
/// whitespace inside a line is ignored.
std::vector<BatchEntry> read_batch(std::istream& in);

}  // namespace catspec::cli
