#include <gtest/gtest.h>

#include <cmath>

#include "catspec/bounds.hpp"
#include "catspec/charpoly.hpp"
#include "catspec/oracle.hpp"
#include "catspec/random_specs.hpp"
#include "test_support.hpp"

namespace catspec {
namespace {

using testing::eigs;
using testing::max_sorted_diff;

const std::vector<CaterpillarSpec>& suite() {
  static const auto specs = random_specs({});
  return specs;
}

TEST(Properties, CharpolyMatchesExactDeterminant) {
  for (const auto& spec : suite()) {
    const auto p = charpoly_p(spec);
    const auto b = deradicalize(build_c(spec));
    const auto k = static_cast<int>(spec.spine_length());
    for (int t = -k; t < k; ++t) ASSERT_EQ(p(BigInt(t)), exact_det(b, BigInt(t))) << spec.to_string() << " t=" << t;
  }
}

TEST(Properties, ScalarRecursionsMatchPolynomial) {
  for (const auto& spec : suite()) {
    const auto p = charpoly_p(spec);
    EXPECT_EQ(p_minus2(spec), p(BigInt(-2))) << spec.to_string();
    EXPECT_EQ(pprime_minus2(spec), p.derivative()(BigInt(-2))) << spec.to_string();
  }
}

TEST(Properties, LaplacianCharpolyMatchesExplicitMatrix) {
  for (const auto& spec : suite()) {
    const auto l = IntMatrix::from_dense(matrices(build_caterpillar(spec)).laplacian);
    EXPECT_EQ(laplacian_charpoly(spec), exact_charpoly(l)) << spec.to_string();
  }
}

TEST(Properties, LaplacianSpectrumMatchesOracle) {
  for (const auto& spec : suite()) {
    const auto m = matrices(build_caterpillar(spec));
    const auto oracle = eigs(m.laplacian);
    EXPECT_LT(max_sorted_diff(expand_spectrum(laplacian_spectrum(spec)), oracle), 1e-8) << spec.to_string();
    EXPECT_LT(max_sorted_diff(oracle, eigs(m.signless_laplacian)), 1e-9) << spec.to_string();
  }
}

TEST(Properties, MuFromPrunedQuotient) {
  for (const auto& spec : suite()) {
    if (spec.spine_length() < 2) continue;
    const auto pruned = eigs(prune_zero(build_c(spec)).to_dense());
    EXPECT_NEAR(mu_oracle(spec), pruned.front() + 2.0, 1e-8) << spec.to_string();
  }
}

TEST(Properties, BoundSandwich) {
  for (const auto& spec : suite()) {
    if (spec.spine_length() < 2) continue;
    const auto rep = bounds_report(spec);
    EXPECT_TRUE(rep.sandwich_holds()) << spec.to_string();
  }
}

TEST(Properties, TraceInverseSums) {
  for (const auto& spec : suite()) {
    double full = 0;
    for (double l : eigs(build_c(spec).to_dense())) full += 1.0 / (l + 2.0);
    EXPECT_NEAR(to_double(trace_inv(spec)), full, 1e-8) << spec.to_string();
    for (std::size_t i = 1; i < spec.spine_length(); ++i) {
      double del = 0;
      for (double l : eigs(deleted_c(spec, i).to_dense())) del += 1.0 / (l + 2.0);
      EXPECT_NEAR(to_double(trace_inv_deleted(spec, i)), del, 1e-8) << spec.to_string() << " i=" << i;
    }
  }
}

TEST(Properties, DeletionInterlaces) {
  for (const auto& spec : suite()) {
    const auto full = eigs(build_c(spec).to_dense());
    for (std::size_t i = 1; i < spec.spine_length(); ++i) {
      const auto del = eigs(deleted_c(spec, i).to_dense());
      for (std::size_t m = 0; m < del.size(); ++m) {
        EXPECT_LE(full[m], del[m] + 1e-8) << spec.to_string();
        EXPECT_LE(del[m], full[m + 1] + 1e-8) << spec.to_string();
      }
    }
  }
}

TEST(Properties, CardanoAgreesWithDense) {
  for (LegCount a = 0; a <= 10; ++a)
    for (LegCount b = 0; b <= 10; ++b) {
      if (a + b == 0) continue;
      const auto s = cardano_roots(a, b);
      const auto dense = eigs(build_c(CaterpillarSpec({a, b})).to_dense());
      EXPECT_LT(max_sorted_diff({s.descending.begin(), s.descending.end()}, dense), 1e-9) << a << "," << b;
    }
}

TEST(Properties, ZeroLegDivisionIsExact) {
  RandomSpecOptions opts;
  opts.count = 100;
  opts.require_zero_leg = true;
  for (const auto& spec : random_specs(opts)) {
    const auto b = derive_params(spec).b;
    ASSERT_GE(b, 1u);
    const auto shifted = charpoly_p(spec).shifted(BigInt(-2));
    EXPECT_NO_THROW(shifted.divide_by_root_power(BigInt(2), b)) << spec.to_string();
  }
}

}  // namespace
}  // namespace catspec
