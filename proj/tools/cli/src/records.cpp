#include "catspec_cli/records.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "catspec_cli/reference_values.hpp"
#include "catspec_cli/render.hpp"

namespace catspec::cli {

namespace {

std::string code_of(const std::string& warning) { return warning.substr(0, warning.find(':')); }

std::string padded(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

std::string rstrip(std::string s) {
  s.erase(s.find_last_not_of(' ') + 1);
  return s;
}

void compare_reference(const ReferenceValues& pub, const BoundsRecord& r, std::vector<std::string>& out) {
  auto check = [&](const char* name, const std::optional<double>& listed, std::optional<double> computed) {
    if (!listed || !computed) return;
    if (std::abs(*listed - *computed) > kReferenceTolerance) {
      out.push_back(std::string("reference_") + name + ": listed " + fixed4(*listed) + ", computed " +
                    fixed4(*computed) + " (" + pub.source + ")");
    }
  };
  check("mu", pub.mu, r.mu);
  check("ub_cardano", pub.ub_cardano, r.ub_cardano);
  std::optional<double> ub;
  if (pub.ub_trace_term == 0) {
    if (r.ub_trace) ub = to_double(*r.ub_trace);
  } else if (pub.ub_trace_term <= r.ub_trace_terms.size() && r.ub_trace_terms[pub.ub_trace_term - 1]) {
    ub = to_double(*r.ub_trace_terms[pub.ub_trace_term - 1]);
  }
  check("ub_trace", pub.ub_trace, ub);
  check("lb", pub.lb, to_double(r.lb));
}

json optional_rational(const std::optional<Rational>& r) { return r ? json(rational_string(*r)) : json(nullptr); }

std::optional<Rational> optional_rational(const json& j) {
  if (j.is_null()) return std::nullopt;
  return parse_rational(j.get<std::string>());
}

const char* poly_name(PolyOf of) { return of == PolyOf::C ? "C" : "L"; }

}  // namespace

std::string q_string(const std::vector<LegCount>& q) { return CaterpillarSpec(q).to_string(); }

bool BoundsRecord::has_violation() const {
  return std::any_of(warnings.begin(), warnings.end(), [](const std::string& w) { return code_of(w) == "sandwich"; });
}

BoundsRecord make_bounds_record(const CaterpillarSpec& spec, double tol) {
  const BoundsReport rep = bounds_report(spec, tol);
  BoundsRecord r;
  r.q.assign(spec.legs().begin(), spec.legs().end());
  r.mu = rep.mu;
  r.lb = rep.trace.lb;
  r.ub_trace = rep.trace.ub;
  r.ub_trace_argmin = rep.trace.ub_argmin;
  r.ub_trace_terms = rep.trace.terms;
  r.ub_cardano = rep.cardano->value;
  r.ub_cardano_argmin = rep.cardano->argmin_j;
  r.cardano_in_scope = rep.cardano->in_stated_scope;
  r.trace_inv = rep.trace_inv;
  r.p_minus2 = rep.p_minus2;
  r.pprime_minus2 = rep.pprime_minus2;

  for (const auto& v : rep.violations) r.warnings.push_back("sandwich: " + v);
  if (!r.ub_trace) r.warnings.push_back("no_ub_trace: no deletion index gives a positive denominator");
  if (!r.cardano_in_scope) {
    r.warnings.push_back("cardano_scope: the interlacing bound is stated for k >= 4 with q1, qk nonzero");
  }
  if (const ReferenceValues* pub = find_reference(spec)) compare_reference(*pub, r, r.warnings);
  return r;
}

void to_json(json& j, const BoundsRecord& r) {
  json terms = json::array();
  for (const auto& t : r.ub_trace_terms) terms.push_back(optional_rational(t));
  j = json{
      {"q", r.q},
      {"mu", r.mu},
      {"bounds",
       {{"lb", to_double(r.lb)},
        {"ub_trace", r.ub_trace ? json(to_double(*r.ub_trace)) : json(nullptr)},
        {"ub_cardano", r.ub_cardano}}},
      {"exact",
       {{"trace_inv", rational_string(r.trace_inv)},
        {"p_minus2", r.p_minus2.str()},
        {"pprime_minus2", r.pprime_minus2.str()},
        {"lb", rational_string(r.lb)},
        {"ub_trace", optional_rational(r.ub_trace)},
        {"ub_trace_terms", terms}}},
      {"argmin", {{"ub_trace_i", r.ub_trace_argmin}, {"ub_cardano_j", r.ub_cardano_argmin}}},
      {"cardano_in_scope", r.cardano_in_scope},
      {"warnings", r.warnings},
  };
}

void from_json(const json& j, BoundsRecord& r) {
  r.q = j.at("q").get<std::vector<LegCount>>();
  r.mu = j.at("mu").get<double>();
  r.ub_cardano = j.at("bounds").at("ub_cardano").get<double>();
  const json& ex = j.at("exact");
  r.trace_inv = parse_rational(ex.at("trace_inv").get<std::string>());
  r.p_minus2 = BigInt(ex.at("p_minus2").get<std::string>());
  r.pprime_minus2 = BigInt(ex.at("pprime_minus2").get<std::string>());
  r.lb = parse_rational(ex.at("lb").get<std::string>());
  r.ub_trace = optional_rational(ex.at("ub_trace"));
  r.ub_trace_terms.clear();
  for (const auto& t : ex.at("ub_trace_terms")) r.ub_trace_terms.push_back(optional_rational(t));
  r.ub_trace_argmin = j.at("argmin").at("ub_trace_i").get<std::size_t>();
  r.ub_cardano_argmin = j.at("argmin").at("ub_cardano_j").get<std::size_t>();
  r.cardano_in_scope = j.at("cardano_in_scope").get<bool>();
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
}

std::string render_text(const BoundsRecord& r) {
  std::ostringstream out;
  auto row = [&](const std::string& label, const std::string& value, const std::string& extra) {
    out << rstrip(padded(label, 12) + padded(value, 10) + extra) << '\n';
  };
  row("q", q_string(r.q), "");
  row("mu", fixed4(r.mu), "");
  row("lb_trace", fixed4(to_double(r.lb)), rational_string(r.lb));
  if (r.ub_trace) {
    row("ub_trace", fixed4(to_double(*r.ub_trace)), "i=" + std::to_string(r.ub_trace_argmin));
  } else {
    row("ub_trace", "n/a", "");
  }
  for (std::size_t i = 0; i < r.ub_trace_terms.size(); ++i) {
    const auto& t = r.ub_trace_terms[i];
    row("  i=" + std::to_string(i + 1), t ? fixed4(to_double(*t)) : "n/a", t ? rational_string(*t) : "");
  }
  row("ub_cardano", fixed4(r.ub_cardano), "j=" + std::to_string(r.ub_cardano_argmin));
  row("trace_inv", fixed4(to_double(r.trace_inv)),
      rational_string(r.trace_inv) + " = -(" + r.pprime_minus2.str() + ")/" + r.p_minus2.str());
  for (const auto& w : r.warnings) out << "warning     " << w << '\n';
  return out.str();
}

std::string csv_row(const BoundsRecord& r) {
  std::vector<std::string> flags;
  for (const auto& w : r.warnings) {
    const std::string c = code_of(w);
    if (std::find(flags.begin(), flags.end(), c) == flags.end()) flags.push_back(c);
  }
  return q_string(r.q) + ";" + fixed4(r.mu) + ";" + fixed4(r.ub_cardano) + ";" +
         (r.ub_trace ? fixed4(to_double(*r.ub_trace)) : std::string()) + ";" + fixed4(to_double(r.lb)) + ";" +
         join(flags, "|");
}

std::string text_table(const std::vector<BoundsRecord>& rows) {
  std::size_t width = 12;
  for (const auto& r : rows) width = std::max(width, q_string(r.q).size() + 2);
  std::ostringstream out;
  out << padded("q", width) << padded("mu", 9) << padded("ub_card", 9) << padded("ub_trace", 9)
      << padded("lb_trace", 9) << "flags\n";
  for (const auto& r : rows) {
    std::vector<std::string> cells;
    std::istringstream parts(csv_row(r));
    for (std::string cell; std::getline(parts, cell, ';');) cells.push_back(cell);
    cells.resize(6);
    out << rstrip(padded(cells[0], width) + padded(cells[1], 9) + padded(cells[2], 9) + padded(cells[3], 9) +
                  padded(cells[4], 9) + cells[5])
        << '\n';
  }
  return out.str();
}

SpectrumRecord make_spectrum_record(const CaterpillarSpec& spec) {
  SpectrumRecord r;
  r.q.assign(spec.legs().begin(), spec.legs().end());
  r.laplacian = laplacian_spectrum(spec);
  r.line_graph = line_graph_spectrum(spec);
  std::vector<double> lhs = expand_spectrum(r.laplacian);
  std::vector<double> rhs{0.0};
  for (double v : expand_spectrum(r.line_graph)) rhs.push_back(v + 2.0);
  std::sort(lhs.begin(), lhs.end());
  std::sort(rhs.begin(), rhs.end());
  if (lhs.size() != rhs.size()) {
    r.shift_deviation = INFINITY;
  } else {
    for (std::size_t i = 0; i < lhs.size(); ++i) r.shift_deviation = std::max(r.shift_deviation, std::abs(lhs[i] - rhs[i]));
  }
  return r;
}

namespace {

json spectrum_json(const SpectrumMultiset& s) {
  json a = json::array();
  for (const auto& e : s) a.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}});
  return a;
}

SpectrumMultiset spectrum_from_json(const json& a) {
  SpectrumMultiset s;
  for (const auto& e : a) s.push_back({e.at("value").get<double>(), e.at("multiplicity").get<std::size_t>()});
  return s;
}

}  // namespace

void to_json(json& j, const SpectrumRecord& r) {
  j = json{{"q", r.q},
           {"laplacian", spectrum_json(r.laplacian)},
           {"line_graph", spectrum_json(r.line_graph)},
           {"shift_deviation", r.shift_deviation}};
}

void from_json(const json& j, SpectrumRecord& r) {
  r.q = j.at("q").get<std::vector<LegCount>>();
  r.laplacian = spectrum_from_json(j.at("laplacian"));
  r.line_graph = spectrum_from_json(j.at("line_graph"));
  r.shift_deviation = j.at("shift_deviation").get<double>();
}

std::string render_text(const SpectrumRecord& r) {
  char dev[32];
  std::snprintf(dev, sizeof dev, "%.1e", r.shift_deviation);
  std::ostringstream out;
  out << padded("q", 12) << q_string(r.q) << '\n';
  out << padded("laplacian", 12) << spectrum_string(r.laplacian) << '\n';
  out << padded("line graph", 12) << (r.line_graph.empty() ? "(empty)" : spectrum_string(r.line_graph)) << '\n';
  out << padded("shift", 12) << "sigma(L) = {0} + (sigma(A(line graph)) + 2), max deviation " << dev << '\n';
  return out.str();
}

std::string render_csv(const SpectrumRecord& r) {
  std::ostringstream out;
  out << "q;kind;value;multiplicity\n";
  for (const auto& e : r.laplacian) out << q_string(r.q) << ";laplacian;" << fixed4(e.value) << ';' << e.multiplicity << '\n';
  for (const auto& e : r.line_graph) out << q_string(r.q) << ";line_graph;" << fixed4(e.value) << ';' << e.multiplicity << '\n';
  return out.str();
}

CharpolyRecord make_charpoly_record(const CaterpillarSpec& spec, PolyOf of) {
  return {std::vector<LegCount>(spec.legs().begin(), spec.legs().end()), of,
          of == PolyOf::C ? charpoly_p(spec) : laplacian_charpoly(spec)};
}

void to_json(json& j, const CharpolyRecord& r) {
  std::vector<std::string> coeffs;
  for (const auto& c : r.poly.coeffs()) coeffs.push_back(c.str());
  j = json{{"q", r.q}, {"of", poly_name(r.of)}, {"coefficients", coeffs}};
}

void from_json(const json& j, CharpolyRecord& r) {
  r.q = j.at("q").get<std::vector<LegCount>>();
  const auto of = j.at("of").get<std::string>();
  if (of != "C" && of != "L") throw std::invalid_argument("bad 'of': " + of);
  r.of = of == "C" ? PolyOf::C : PolyOf::L;
  std::vector<BigInt> coeffs;
  for (const auto& c : j.at("coefficients")) coeffs.emplace_back(c.get<std::string>());
  r.poly = IntPolynomial(std::move(coeffs));
}

std::string render_text(const CharpolyRecord& r) {
  std::vector<std::string> coeffs;
  for (const auto& c : r.poly.coeffs()) coeffs.push_back(c.str());
  std::ostringstream out;
  out << padded("q", 14) << q_string(r.q) << '\n';
  out << padded("of", 14) << poly_name(r.of) << '\n';
  out << padded("coefficients", 14) << '[' << join(coeffs, ", ") << "]\n";
  out << padded("polynomial", 14) << r.poly.to_string() << '\n';
  return out.str();
}

std::string render_csv(const CharpolyRecord& r) {
  std::ostringstream out;
  out << "q;of;degree;coefficient\n";
  const auto coeffs = r.poly.coeffs();
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    out << q_string(r.q) << ';' << poly_name(r.of) << ';' << i << ';' << coeffs[i].str() << '\n';
  }
  return out.str();
}

}  // namespace catspec::cli
