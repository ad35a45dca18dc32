#include "catspec_cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <sstream>

#include "catspec/bounds.hpp"
#include "catspec/charpoly.hpp"
#include "catspec/errors.hpp"
#include "catspec/graph.hpp"
#include "catspec/oracle.hpp"
#include "catspec_cli/records.hpp"

namespace catspec::cli {

namespace {

constexpr std::size_t kKeptFailures = 5;

using Result = std::optional<std::string>;  // failure detail

struct Check {
  const char* name;
  std::size_t min_k;
  std::function<Result(const CaterpillarSpec&, double)> run;
};

std::string num(double x) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << x;
  return s.str();
}

double sorted_gap(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) return INFINITY;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

Result gap_check(const char* what, double gap, double tol) {
  if (gap <= tol) return std::nullopt;
  return std::string(what) + " differ by " + num(gap);
}

Result check_params(const CaterpillarSpec& spec, double) {
  const auto p = derive_params(spec);
  std::uint64_t sum = 0;
  for (LegCount q : spec.legs()) sum += q;
  if (p.n != sum + spec.spine_length()) return "n != sum(q) + k";
  if (1 + p.a + p.dim_c - p.b != p.n) return "1 + a + (2k-1) - b != n";
  return std::nullopt;
}

Result check_incidence(const CaterpillarSpec& spec, double) {
  const Graph g = build_caterpillar(spec);
  const auto m = matrices(g);
  if (!(m.laplacian == m.degree - m.adjacency)) return "L != D - A";
  if (!(m.signless_laplacian == m.degree + m.adjacency)) return "Q != D + A";
  const DenseMatrix n = incidence(g);
  if (!(n * n.transpose() == m.signless_laplacian)) return "N N^t != Q";
  if (g.size() == 0) return std::nullopt;
  const DenseMatrix a_lg = matrices(line_graph(g)).adjacency;
  if (!(n.transpose() * n == 2.0 * DenseMatrix::identity(g.size()) + a_lg)) return "N^t N != 2I + A(line graph)";
  return std::nullopt;
}

Result check_hjoin(const CaterpillarSpec& spec, double tol) {
  const auto d = linegraph_as_hjoin(spec);
  const Graph composed = h_join(d.h, d.family);
  const Graph lg = line_graph(build_caterpillar(spec));
  if (composed.order() != lg.order() || composed.size() != lg.size()) return "H-join order or size differs";
  return gap_check("H-join and line graph spectra",
                   sorted_gap(sym_eigs(matrices(composed).adjacency).values, sym_eigs(matrices(lg).adjacency).values),
                   tol);
}

Result check_bipartite(const CaterpillarSpec& spec, double tol) {
  const auto m = matrices(build_caterpillar(spec));
  return gap_check("sigma(L) and sigma(Q)", sorted_gap(sym_eigs(m.laplacian).values, sym_eigs(m.signless_laplacian).values),
                   tol);
}

Result check_shift(const CaterpillarSpec& spec, double tol) {
  const Graph g = build_caterpillar(spec);
  std::vector<double> shifted{0.0};
  if (g.size() > 0) {
    for (double v : sym_eigs(matrices(line_graph(g)).adjacency).values) shifted.push_back(v + 2.0);
  }
  return gap_check("sigma(Q) and shifted line graph spectrum",
                   sorted_gap(sym_eigs(matrices(g).signless_laplacian).values, shifted), tol);
}

Result check_charpoly_det(const CaterpillarSpec& spec, double) {
  const auto p = charpoly_p(spec);
  const auto b = deradicalize(build_c(spec));
  const auto k = static_cast<long>(spec.spine_length());
  for (long t = -k; t < k; ++t) {
    if (p(BigInt(t)) != exact_det(b, BigInt(t))) return "p and det(B - tI) differ at t=" + std::to_string(t);
  }
  return std::nullopt;
}

Result check_scalar(const CaterpillarSpec& spec, double) {
  const auto p = charpoly_p(spec);
  if (p_minus2(spec) != p(BigInt(-2))) return "p(-2) recursion mismatch";
  if (pprime_minus2(spec) != p.derivative()(BigInt(-2))) return "p'(-2) recursion mismatch";
  return std::nullopt;
}

Result check_laplacian_charpoly(const CaterpillarSpec& spec, double) {
  const auto l = IntMatrix::from_dense(matrices(build_caterpillar(spec)).laplacian);
  if (laplacian_charpoly(spec) != exact_charpoly(l)) return "coefficients differ from det(xI - L)";
  return std::nullopt;
}

Result check_laplacian_spectrum(const CaterpillarSpec& spec, double tol) {
  return gap_check("formula and oracle spectra",
                   sorted_gap(expand_spectrum(laplacian_spectrum(spec)),
                              sym_eigs(matrices(build_caterpillar(spec)).laplacian).values),
                   tol);
}

Result check_divisibility(const CaterpillarSpec& spec, double) {
  const auto b = derive_params(spec).b;
  try {
    charpoly_p(spec).shifted(BigInt(-2)).divide_by_root_power(BigInt(2), b);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::InexactDivision) return std::string("nonzero remainder: ") + e.what();
    throw;
  }
  return std::nullopt;
}

Result check_mu(const CaterpillarSpec& spec, double tol) {
  const double mu = mu_oracle(spec);
  const double pruned = sym_eigs(prune_zero(build_c(spec)).to_dense()).values.front() + 2.0;
  if (auto r = gap_check("mu and lambda_min(pruned C) + 2", std::abs(mu - pruned), tol)) return r;
  const double root = min_root(connectivity_polynomial(spec), 0.0, 2.5);
  return gap_check("mu and the least root of p(q; x - 2) / (x - 2)^b", std::abs(mu - root), tol);
}

double inverse_shift_sum(const DenseMatrix& m) {
  double s = 0.0;
  for (double v : sym_eigs(m).values) s += 1.0 / (v + 2.0);
  return s;
}

Result check_trace(const CaterpillarSpec& spec, double tol) {
  if (auto r = gap_check("trace_inv and sum 1/(lambda + 2)",
                         std::abs(to_double(trace_inv(spec)) - inverse_shift_sum(build_c(spec).to_dense())), tol)) {
    return r;
  }
  for (std::size_t i = 1; i < spec.spine_length(); ++i) {
    const double gap = std::abs(to_double(trace_inv_deleted(spec, i)) - inverse_shift_sum(deleted_c(spec, i).to_dense()));
    if (gap > tol) return "deleted trace at i=" + std::to_string(i) + " off by " + num(gap);
  }
  return std::nullopt;
}

Result check_interlacing(const CaterpillarSpec& spec, double tol) {
  const auto full = sym_eigs(build_c(spec).to_dense()).values;
  for (std::size_t i = 1; i < spec.spine_length(); ++i) {
    const auto del = sym_eigs(deleted_c(spec, i).to_dense()).values;
    for (std::size_t m = 0; m < del.size(); ++m) {
      if (full[m] > del[m] + tol || del[m] > full[m + 1] + tol) {
        return "deletion i=" + std::to_string(i) + " breaks interlacing at position " + std::to_string(m + 1);
      }
    }
  }
  return std::nullopt;
}

Result check_sandwich(const CaterpillarSpec& spec, double tol) {
  const auto rep = bounds_report(spec, tol);
  if (rep.sandwich_holds()) return std::nullopt;
  std::string out;
  for (const auto& v : rep.violations) out += (out.empty() ? "" : ", ") + v;
  return out;
}

Result check_cardano(const CaterpillarSpec& spec, double tol) {
  for (std::size_t j = 0; j + 1 < spec.spine_length(); ++j) {
    const LegCount a = spec.leg(j);
    const LegCount b = spec.leg(j + 1);
    const auto s = cardano_roots(a, b);
    const auto dense = sym_eigs(build_c(CaterpillarSpec({a, b})).to_dense()).values;
    const double gap = sorted_gap({s.descending.begin(), s.descending.end()}, dense);
    if (gap > tol) return "pair j=" + std::to_string(j + 1) + " off by " + num(gap);
  }
  return std::nullopt;
}

const std::vector<Check>& checks() {
  static const std::vector<Check> all = {
      {"params", 1, check_params},
      {"incidence", 1, check_incidence},
      {"hjoin", 2, check_hjoin},
      {"bipartite", 1, check_bipartite},
      {"shift", 1, check_shift},
      {"charpoly_det", 1, check_charpoly_det},
      {"scalar_recursions", 1, check_scalar},
      {"laplacian_charpoly", 1, check_laplacian_charpoly},
      {"laplacian_spectrum", 1, check_laplacian_spectrum},
      {"divisibility", 1, check_divisibility},
      {"mu", 2, check_mu},
      {"trace_identity", 1, check_trace},
      {"interlacing", 2, check_interlacing},
      {"sandwich", 2, check_sandwich},
      {"cardano", 2, check_cardano},
  };
  return all;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckOutcome& c) { return c.failed == 0; });
}

VerifyReport run_verify(std::span<const CaterpillarSpec> specs, double tol) {
  VerifyReport report;
  report.specs = specs.size();
  report.tol = tol;
  for (const auto& c : checks()) report.checks.push_back({c.name, 0, 0, {}});

  for (const auto& spec : specs) {
    for (std::size_t i = 0; i < checks().size(); ++i) {
      const Check& c = checks()[i];
      if (spec.spine_length() < c.min_k) continue;
      CheckOutcome& out = report.checks[i];
      ++out.checked;
      Result r;
      try {
        r = c.run(spec, tol);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::NonConvergence) throw;
        r = std::string(e.what());
      }
      if (r) {
        ++out.failed;
        if (out.failures.size() < kKeptFailures) out.failures.push_back(spec.to_string() + ": " + *r);
      }
    }
    if (spec.spine_length() >= 2) {
      for (const auto& w : make_bounds_record(spec, tol).warnings) {
        if (w.rfind("reference_", 0) == 0) report.notes.push_back(spec.to_string() + " " + w);
      }
    }
  }
  return report;
}

void to_json(nlohmann::json& j, const VerifyReport& r) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& c : r.checks) {
    list.push_back({{"name", c.name}, {"checked", c.checked}, {"failed", c.failed}, {"failures", c.failures}});
  }
  j = {{"specs", r.specs}, {"tol", r.tol}, {"checks", list}, {"notes", r.notes}, {"passed", r.passed()}};
}

std::string render_text(const VerifyReport& r) {
  std::ostringstream out;
  out << "specs " << r.specs << ", tol " << num(r.tol) << '\n';
  for (const auto& c : r.checks) {
    std::string name = c.name;
    name.resize(std::max<std::size_t>(name.size(), 20), ' ');
    out << (c.failed == 0 ? "PASS " : "FAIL ") << name << (c.checked - c.failed) << '/' << c.checked << '\n';
    for (const auto& f : c.failures) out << "     " << f << '\n';
  }
  for (const auto& n : r.notes) out << "note " << n << '\n';
  out << (r.passed() ? "all checks passed" : "verification failed") << '\n';
  return out.str();
}

std::string render_csv(const VerifyReport& r) {
  std::ostringstream out;
  out << "check;checked;failed;status\n";
  for (const auto& c : r.checks) {
    out << c.name << ';' << c.checked << ';' << c.failed << ';' << (c.failed == 0 ? "pass" : "fail") << '\n';
  }
  return out.str();
}

}  // namespace catspec::cli
