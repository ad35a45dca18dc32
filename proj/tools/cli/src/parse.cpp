#include "catspec_cli/parse.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>

#include "catspec/errors.hpp"

namespace catspec::cli {

Format parse_format(std::string_view text) {
  if (text == "text") return Format::Text;
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  throw UsageError("unknown format '" + std::string(text) + "' (expected text, json or csv)");
}

CaterpillarSpec parse_q(std::string_view text) {
  std::string_view body = text;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  if (body.empty()) throw UsageError("empty leg list");

  std::vector<std::int64_t> q;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = body.find(',', pos);
    const std::string_view item = body.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    std::int64_t value = 0;
    const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (item.empty() || ec != std::errc() || end != item.data() + item.size()) {
      throw UsageError("bad leg count '" + std::string(item) + "' in '" + std::string(text) + "'");
    }
    q.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }

  try {
    CaterpillarSpec spec = validate_spec(q);
    if (spec.order() > kMaxOrder) {
      throw UsageError("tree has " + std::to_string(spec.order()) + " vertices; the limit is " +
                       std::to_string(kMaxOrder));
    }
    return spec;
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

std::vector<BatchEntry> read_batch(std::istream& in) {
  std::vector<BatchEntry> out;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    std::erase_if(line, [](unsigned char c) { return std::isspace(c) != 0; });
    if (line.empty() || line.front() == '#') continue;
    BatchEntry entry;
    entry.line = number;
    try {
      entry.spec = parse_q(line);
    } catch (const UsageError& e) {
      entry.error = e.what();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace catspec::cli
