#include "catspec_cli/render.hpp"

#include <cstdio>
#include <stdexcept>

namespace catspec::cli {

std::string fixed4(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", x);
  std::string s(buf);
  if (s == "-0.0000") s.erase(0, 1);
  return s;
}

std::string rational_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(BigInt(std::string(text)));
    const BigInt num(std::string(text.substr(0, slash)));
    const BigInt den(std::string(text.substr(slash + 1)));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  }
}

std::string spectrum_string(const SpectrumMultiset& s) {
  std::vector<std::string> parts;
  parts.reserve(s.size());
  for (const auto& e : s) parts.push_back(fixed4(e.value) + "^" + std::to_string(e.multiplicity));
  return join(parts, " ");
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

}  // namespace catspec::cli
