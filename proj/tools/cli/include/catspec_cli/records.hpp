#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catspec/bounds.hpp"
#include "catspec/charpoly.hpp"
#include "json.hpp"

namespace catspec::cli {

using nlohmann::json;

/// Everything `bounds` and `table` report for one caterpillar. Exact values
/// travel as strings so the JSON form round-trips losslessly.
struct BoundsRecord {
  std::vector<LegCount> q;
  double mu = 0.0;
  Rational lb;
  std::optional<Rational> ub_trace;
  std::size_t ub_trace_argmin = 0;
  std::vector<std::optional<Rational>> ub_trace_terms;
  double ub_cardano = 0.0;
  std::size_t ub_cardano_argmin = 0;
  bool cardano_in_scope = false;
  Rational trace_inv;
  BigInt p_minus2;
  BigInt pprime_minus2;
  /// "code: message"; the codes make up the CSV flags column.
  std::vector<std::string> warnings;

  bool has_violation() const;
};

/// Requires k >= 2. Sandwich checks use slack `tol`; reference values are
/// compared and any divergence above 1e-3 becomes a warning.
BoundsRecord make_bounds_record(const CaterpillarSpec& spec, double tol);

void to_json(json& j, const BoundsRecord& r);
void from_json(const json& j, BoundsRecord& r);
std::string render_text(const BoundsRecord& r);

inline constexpr const char* kCsvHeader = "q;mu;ub_cardano;ub_trace;lb_trace;flags";
std::string csv_row(const BoundsRecord& r);
/// Aligned one-line-per-spec layout used by `table --format text`.
std::string text_table(const std::vector<BoundsRecord>& rows);

struct SpectrumRecord {
  std::vector<LegCount> q;
  SpectrumMultiset laplacian;
  SpectrumMultiset line_graph;
  /// max |sigma(L) - ({0} + sigma(A(line graph)) + 2)|
  double shift_deviation = 0.0;
};

SpectrumRecord make_spectrum_record(const CaterpillarSpec& spec);
void to_json(json& j, const SpectrumRecord& r);
void from_json(const json& j, SpectrumRecord& r);
std::string render_text(const SpectrumRecord& r);
std::string render_csv(const SpectrumRecord& r);

enum class PolyOf { C, L };

struct CharpolyRecord {
  std::vector<LegCount> q;
  PolyOf of = PolyOf::C;
  IntPolynomial poly;
};

CharpolyRecord make_charpoly_record(const CaterpillarSpec& spec, PolyOf of);
void to_json(json& j, const CharpolyRecord& r);
void from_json(const json& j, CharpolyRecord& r);
std::string render_text(const CharpolyRecord& r);
std::string render_csv(const CharpolyRecord& r);

std::string q_string(const std::vector<LegCount>& q);

}  // namespace catspec::cli
