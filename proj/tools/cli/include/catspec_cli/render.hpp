#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "catspec/bounds.hpp"
#include "catspec/charpoly.hpp"

namespace catspec::cli {

/// Four decimals with a dot separator; the exact binary value is rounded
/// to nearest, ties to even.
std::string fixed4(double x);

/// Always "num/den", den > 0.
std::string rational_string(const Rational& r);
/// Accepts "num/den" or a plain integer. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// "v^m v^m ..." with 4-decimal values.
std::string spectrum_string(const SpectrumMultiset& s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

}  // namespace catspec::cli
