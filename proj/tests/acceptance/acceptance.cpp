// Acceptance gate: one PASS/FAIL line per criterion. `--only N` runs a single
// criterion; exit status is nonzero when any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "catspec/bounds.hpp"
#include "catspec/charpoly.hpp"
#include "catspec/graph.hpp"
#include "catspec/oracle.hpp"
#include "catspec/random_specs.hpp"

namespace {

using namespace catspec;

// Tolerances.
constexpr double kLbTol = 5e-5;
constexpr double kUbExampleTol = 5e-4;
constexpr double kMuExampleTol = 5e-4;
constexpr double kTableTol = 2e-3;
constexpr double kUnitCardanoTol = 1e-6;
constexpr double kSpectrumTol = 1e-8;
constexpr double kBipartiteTol = 1e-9;
constexpr double kShiftTol = 1e-9;
constexpr double kSandwichSlack = 1e-9;
constexpr double kInterlaceTol = 1e-8;
constexpr double kTraceTol = 1e-8;
constexpr double kCardanoTol = 1e-9;
constexpr double kCardanoSeconds = 2.0;
constexpr double kClosedFormTol = 1e-10;

constexpr std::uint64_t kSeed = 7;
constexpr std::size_t kRandomCount = 200;
constexpr std::size_t kZeroLegCount = 100;

struct Criterion {
  int id;
  const char* title;
  std::function<void(std::vector<std::string>&)> run;  // appends failure details
};

CaterpillarSpec spec_of(std::vector<LegCount> q) { return CaterpillarSpec(std::move(q)); }

std::string fmt(double x) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

double sorted_gap(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) return INFINITY;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

std::vector<double> eigs(const DenseMatrix& m) { return sym_eigs(m).values; }

void expect(std::vector<std::string>& fails, bool ok, const std::string& what) {
  if (!ok) fails.push_back(what);
}

void expect_near(std::vector<std::string>& fails, double got, double want, double tol, const std::string& what) {
  if (!(std::abs(got - want) <= tol)) {
    fails.push_back(what + ": got " + fmt(got) + ", expected " + fmt(want) + " +- " + fmt(tol));
  }
}

const std::vector<CaterpillarSpec>& random_suite() {
  static const auto specs = random_specs({.count = kRandomCount, .k_min = 1, .k_max = 8, .q_max = 6, .seed = kSeed});
  return specs;
}

void worked_example_exact(std::vector<std::string>& f) {
  auto eq = [&](const auto& got, const auto& want, const std::string& what) {
    if (got != want) {
      std::ostringstream s;
      s << what << ": got " << got << ", expected " << want;
      f.push_back(s.str());
    }
  };
  eq(p_minus2(spec_of({1})), BigInt(2), "p(1;-2)");
  eq(p_minus2(spec_of({0, 1})), BigInt(6), "p(0,1;-2)");
  eq(p_minus2(spec_of({4, 9, 0, 1})), BigInt(36), "p(4,9,0,1;-2)");
  eq(pprime_minus2(spec_of({1})), BigInt(-1), "p'(1;-2)");
  eq(pprime_minus2(spec_of({4, 9, 0, 1})), BigInt(-382), "p'(4,9,0,1;-2)");
  eq(trace_inv(spec_of({4, 9, 0, 1})), Rational(382, 36), "trace_inv(4,9,0,1)");
  eq(trace_inv(spec_of({4, 9})), Rational(67, 15), "trace_inv(4,9)");
  eq(trace_inv(spec_of({0, 1})), Rational(11, 6), "trace_inv(0,1)");
  eq(trace_inv_deleted(spec_of({4, 9, 0, 1}), 2), Rational(63, 10), "trace_inv_deleted((4,9,0,1),2)");
}

void worked_example_bounds(std::vector<std::string>& f) {
  const auto spec = spec_of({4, 9, 0, 1});
  const auto t = bounds_trace(spec);
  expect_near(f, to_double(t.lb), 0.0942, kLbTol, "lb");
  if (t.terms.size() < 2 || !t.terms[1]) {
    f.push_back("ub_trace term i=2 unavailable");
  } else {
    expect_near(f, to_double(*t.terms[1]), 0.2320, kUbExampleTol, "ub_trace term i=2");
  }
  expect_near(f, mu_oracle(spec), 0.1862, kMuExampleTol, "mu_oracle");
}

struct PrintedRow {
  std::vector<LegCount> q;
  double mu, ub_cardano, ub_trace, lb;
};

void table_reproduction(std::vector<std::string>& f) {
  const std::vector<PrintedRow> rows = {
      {{3, 2, 1, 0, 5, 4}, 0.0601, 0.2788, 0.0658, 0.0372},
      {{2, 0, 3, 4, 7}, 0.0893, 0.2536, 0.1056, 0.0514},
      {{3, 5, 0, 0, 9, 10}, 0.0398, 0.3087, 0.0423, 0.0270},
      {{9, 5, 5, 4, 2, 0, 3}, 0.0407, 0.2157, 0.0500, 0.0290},
      {{5, 0, 5, 0, 5, 0, 5, 0, 5}, 0.0285, 1.0000, 0.0346, 0.0167},
      {{3, 9, 10, 0, 5, 0, 4, 2, 0, 7}, 0.0173, 0.1624, 0.0201, 0.0108},
  };
  for (const auto& row : rows) {
    const auto spec = spec_of(row.q);
    const std::string name = spec.to_string();
    const double mu = mu_oracle(spec);
    const auto t = bounds_trace(spec);
    const auto card = ub_cardano(spec);
    expect_near(f, mu, row.mu, kTableTol, name + " mu");
    if (!t.ub) {
      f.push_back(name + " ub_trace unavailable");
    } else {
      expect_near(f, to_double(*t.ub), row.ub_trace, kTableTol, name + " ub_trace");
    }
    expect_near(f, to_double(t.lb), row.lb, kTableTol, name + " lb_trace");
    expect(f, mu <= card.value + kSandwichSlack, name + " mu > ub_cardano");
    if (row.ub_cardano == 1.0) {
      expect_near(f, card.value, 1.0, kUnitCardanoTol, name + " ub_cardano");
    } else if (std::abs(card.value - row.ub_cardano) > kTableTol) {
      std::cout << "  note: " << name << " ub_cardano computed " << fmt(card.value) << ", listed "
                << fmt(row.ub_cardano) << " (reported, not failed)\n";
    }
  }
}

void oracle_equivalence(std::vector<std::string>& f) {
  for (const auto& spec : random_suite()) {
    const std::string name = spec.to_string();
    const auto p = charpoly_p(spec);
    const auto b = deradicalize(build_c(spec));
    const auto k = static_cast<long>(spec.spine_length());
    for (long t = -k; t < k; ++t) {
      expect(f, p(BigInt(t)) == exact_det(b, BigInt(t)), name + " p != det(B - tI) at t=" + std::to_string(t));
    }

    const Graph g = build_caterpillar(spec);
    const auto m = matrices(g);
    expect(f, laplacian_charpoly(spec) == exact_charpoly(IntMatrix::from_dense(m.laplacian)),
           name + " laplacian_charpoly != det(xI - L)");

    const auto sigma_l = eigs(m.laplacian);
    const auto sigma_q = eigs(m.signless_laplacian);
    const double spec_gap = sorted_gap(expand_spectrum(laplacian_spectrum(spec)), sigma_l);
    expect(f, spec_gap <= kSpectrumTol, name + " laplacian_spectrum off by " + fmt(spec_gap));
    const double bip_gap = sorted_gap(sigma_l, sigma_q);
    expect(f, bip_gap <= kBipartiteTol, name + " sigma(L) != sigma(Q) by " + fmt(bip_gap));

    const DenseMatrix n = incidence(g);
    expect(f, n * n.transpose() == m.signless_laplacian, name + " N N^t != Q");
    std::vector<double> shifted{0.0};
    if (g.size() > 0) {
      const DenseMatrix a_lg = matrices(line_graph(g)).adjacency;
      expect(f, n.transpose() * n == 2.0 * DenseMatrix::identity(g.size()) + a_lg, name + " N^t N != 2I + A(line graph)");
      for (double v : eigs(a_lg)) shifted.push_back(v + 2.0);
    }
    const double shift_gap = sorted_gap(sigma_q, shifted);
    expect(f, shift_gap <= kShiftTol, name + " shift relation off by " + fmt(shift_gap));
  }
}

double inverse_shift_sum(const DenseMatrix& m) {
  double s = 0.0;
  for (double v : eigs(m)) s += 1.0 / (v + 2.0);
  return s;
}

void bound_sandwich(std::vector<std::string>& f) {
  for (const auto& spec : random_suite()) {
    if (spec.spine_length() < 2) continue;
    const std::string name = spec.to_string();
    const double mu = mu_oracle(spec);
    const auto t = bounds_trace(spec);
    const auto card = ub_cardano(spec);
    expect(f, to_double(t.lb) <= mu + kSandwichSlack, name + " lb > mu");
    expect(f, !t.ub || mu <= to_double(*t.ub) + kSandwichSlack, name + " mu > ub_trace");
    expect(f, mu <= card.value + kSandwichSlack, name + " mu > ub_cardano");
    expect(f, mu > 0.0, name + " mu <= 0");
    // T(0,0) is a single edge with mu = 2; the unit ceiling needs two edges.
    if (spec.order() >= 3) expect(f, mu <= 1.0 + kSandwichSlack, name + " mu > 1");

    const DenseMatrix c = build_c(spec).to_dense();
    const auto full = eigs(c);
    const double trace_gap = std::abs(to_double(trace_inv(spec)) - inverse_shift_sum(c));
    expect(f, trace_gap <= kTraceTol, name + " trace_inv off by " + fmt(trace_gap));
    for (std::size_t i = 1; i < spec.spine_length(); ++i) {
      const DenseMatrix d = deleted_c(spec, i).to_dense();
      const auto del = eigs(d);
      for (std::size_t j = 0; j < del.size(); ++j) {
        expect(f, full[j] <= del[j] + kInterlaceTol && del[j] <= full[j + 1] + kInterlaceTol,
               name + " interlacing fails for i=" + std::to_string(i));
      }
      const double del_gap = std::abs(to_double(trace_inv_deleted(spec, i)) - inverse_shift_sum(d));
      expect(f, del_gap <= kTraceTol, name + " deleted trace off by " + fmt(del_gap));
    }
  }
}

void cardano_exhaustive(std::vector<std::string>& f) {
  const auto start = std::chrono::steady_clock::now();
  for (LegCount a = 0; a <= 10; ++a) {
    for (LegCount b = 0; b <= 10; ++b) {
      if (a + b == 0) continue;
      const auto s = cardano_roots(a, b);
      const double gap = sorted_gap({s.descending.begin(), s.descending.end()}, eigs(build_c(spec_of({a, b})).to_dense()));
      expect(f, gap <= kCardanoTol, "(" + std::to_string(a) + "," + std::to_string(b) + ") off by " + fmt(gap));
    }
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  expect(f, seconds < kCardanoSeconds, "took " + fmt(seconds) + " s");
}

void closed_forms(std::vector<std::string>& f) {
  expect_near(f, mu_oracle(spec_of({1, 1})), 2.0 - std::sqrt(2.0), kClosedFormTol, "mu(T(1,1))");
  const double star_gap = sorted_gap(eigs(matrices(build_caterpillar(spec_of({3}))).laplacian), {0, 1, 1, 4});
  expect(f, star_gap <= kClosedFormTol, "sigma(L(K_{1,3})) off by " + fmt(star_gap));
  for (LegCount q = 1; q <= 10; ++q) {
    const Graph lg = line_graph(build_caterpillar(spec_of({q, 0})));
    std::vector<double> want(q, -1.0);
    want.push_back(static_cast<double>(q));
    const double gap = sorted_gap(eigs(matrices(lg).adjacency), want);
    expect(f, gap <= kClosedFormTol, "line graph of T(" + std::to_string(q) + ",0) off by " + fmt(gap));
  }
}

void divisibility(std::vector<std::string>& f) {
  RandomSpecOptions opts{.count = kZeroLegCount, .k_min = 1, .k_max = 8, .q_max = 6, .seed = kSeed};
  opts.require_zero_leg = true;
  for (const auto& spec : random_specs(opts)) {
    const auto b = derive_params(spec).b;
    expect(f, b >= 1, spec.to_string() + " has no zero leg");
    try {
      charpoly_p(spec).shifted(BigInt(-2)).divide_by_root_power(BigInt(2), b);
    } catch (const std::exception& e) {
      f.push_back(spec.to_string() + ": " + e.what());
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--only" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: catspec_acceptance [--only N]\n";
      return 1;
    }
  }

  const std::vector<Criterion> criteria = {
      {1, "exact worked-example values", worked_example_exact},
      {2, "bounds for T(4,9,0,1)", worked_example_bounds},
      {3, "reference table reproduction", table_reproduction},
      {4, "formula versus oracle on 200 random specs", oracle_equivalence},
      {5, "bound sandwich, interlacing and trace identities", bound_sandwich},
      {6, "Cardano roots on [0,10]^2", cardano_exhaustive},
      {7, "known closed forms", closed_forms},
      {8, "exact division by (x-2)^b on 100 zero-leg specs", divisibility},
  };
  if (only < 0 || only > static_cast<int>(criteria.size())) {
    std::cerr << "no criterion " << only << '\n';
    return 1;
  }

  int failed = 0;
  for (const auto& c : criteria) {
    if (only != 0 && c.id != only) continue;
    std::vector<std::string> fails;
    try {
      c.run(fails);
    } catch (const std::exception& e) {
      fails.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (fails.empty() ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << '\n';
    for (const auto& d : fails) std::cout << "  " << d << '\n';
    if (!fails.empty()) ++failed;
  }
  return failed == 0 ? 0 : 2;
}
