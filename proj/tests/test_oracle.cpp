#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "catspec/charpoly.hpp"
#include "catspec/errors.hpp"
#include "catspec/oracle.hpp"
#include "catspec/tridiagonal.hpp"
#include "test_support.hpp"

namespace catspec {
namespace {

using testing::max_sorted_diff;
using testing::spec_of;

IntPolynomial poly(std::initializer_list<long long> c) {
  std::vector<BigInt> v;
  for (long long x : c) v.emplace_back(x);
  return IntPolynomial(std::move(v));
}

TEST(SymEigs, TwoByTwo) {
  DenseMatrix m(2, 2);
  m(0, 1) = m(1, 0) = 1.0;
  const auto r = sym_eigs(m);
  EXPECT_LT(max_sorted_diff(r.values, {-1, 1}), 1e-15);
  EXPECT_LE(r.residual, 1e-10 * (1 + m.norm_inf()));
}

TEST(SymEigs, PathLaplacian) {
  const auto r = sym_eigs(matrices(build_caterpillar(spec_of({1, 1}))).laplacian);
  std::vector<double> expected;
  for (int j = 0; j < 4; ++j) expected.push_back(2 - 2 * std::cos(std::numbers::pi * j / 4));
  EXPECT_LT(max_sorted_diff(r.values, expected), 1e-13);
}

TEST(SymEigs, QuotientMatrixC49) {
  const auto r = sym_eigs(build_c(spec_of({4, 9})).to_dense());
  ASSERT_EQ(r.values.size(), 3u);
  EXPECT_NEAR(r.values[0], -1.7619, 1e-4);
  EXPECT_NEAR(r.values[1], 3.6920, 1e-4);
  EXPECT_NEAR(r.values[2], 9.0700, 1e-3);
  // each value is a root of -x^3 + 11x^2 - 11x - 59
  for (double x : r.values) EXPECT_NEAR(-x * x * x + 11 * x * x - 11 * x - 59, 0.0, 1e-9);
}

TEST(SymEigs, DiagonalIsExact) {
  DenseMatrix m(4, 4);
  const double d[] = {3.5, -1.25, 7.0, 0.0};
  for (int i = 0; i < 4; ++i) m(i, i) = d[i];
  const auto r = sym_eigs(m);
  EXPECT_EQ(r.values, (std::vector<double>{-1.25, 0.0, 3.5, 7.0}));
  EXPECT_EQ(r.sweeps, 0);
}

TEST(SymEigs, TraceConsistencyAndAgreementWithBisection) {
  const auto spec = spec_of({3, 9, 10, 0, 5, 0, 4, 2, 0, 7});
  const DenseMatrix l = matrices(build_caterpillar(spec)).laplacian;
  const auto r = sym_eigs(l);
  double sum = 0;
  for (double v : r.values) sum += v;
  EXPECT_NEAR(sum, l.trace(), 1e-8 * l.rows() * l.norm_inf());
  EXPECT_LE(r.residual, 1e-10 * (1 + l.norm_inf()));
  EXPECT_LT(max_sorted_diff(r.values, bisection_eigenvalues(l)), 1e-10);
}

TEST(SymEigs, RejectsAsymmetric) {
  DenseMatrix m(2, 2);
  m(0, 1) = 1.0;
  EXPECT_THROW(sym_eigs(m), std::invalid_argument);
}

TEST(MuOracle, KnownValues) {
  EXPECT_NEAR(mu_oracle(spec_of({4, 9, 0, 1})), 0.1862, 5e-4);
  EXPECT_NEAR(mu_oracle(spec_of({3})), 1.0, 1e-12);
  EXPECT_NEAR(mu_oracle(spec_of({1, 1})), 2 - std::sqrt(2.0), 1e-12);
  EXPECT_THROW(mu_oracle(spec_of({0})), Error);
}

TEST(Deradicalize, TwoSpineVertices) {
  const IntMatrix b = deradicalize(build_c(spec_of({4, 9})));
  const long long expected[3][3] = {{3, 4, 0}, {1, 0, 1}, {0, 9, 8}};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) EXPECT_EQ(b(r, c), expected[r][c]) << r << "," << c;
  EXPECT_EQ(exact_det(b, BigInt(0)), -59);
}

TEST(Deradicalize, UnitLegsUnchanged) {
  const IntMatrix b = deradicalize(build_c(spec_of({1, 1})));
  EXPECT_EQ(b, IntMatrix::from_dense(build_c(spec_of({1, 1})).to_dense()));
  const IntMatrix single = deradicalize(build_c(spec_of({6})));
  ASSERT_EQ(single.order(), 1u);
  EXPECT_EQ(single(0, 0), 5);
}

TEST(Deradicalize, PreservesCharpolyWithTriangles) {
  // k >= 3 puts v_q2 in a triangle with its two join neighbours.
  const auto spec = spec_of({2, 3, 5});
  const IntMatrix b = deradicalize(build_c(spec));
  const auto p = charpoly_p(spec);
  for (int t = -4; t <= 6; ++t) EXPECT_EQ(exact_det(b, BigInt(t)), p(BigInt(t)));
}

TEST(ExactDet, Basics) {
  IntMatrix id(3);
  for (int i = 0; i < 3; ++i) id(i, i) = 1;
  EXPECT_EQ(exact_det(id, BigInt(0)), 1);
  EXPECT_EQ(exact_det(id, BigInt(1)), 0);
  EXPECT_EQ(exact_det(IntMatrix(0), BigInt(5)), 1);
  // needs a row swap: [[0,1],[1,0]]
  IntMatrix swap(2);
  swap(0, 1) = swap(1, 0) = 1;
  EXPECT_EQ(exact_det(swap, BigInt(0)), -1);
}

TEST(ExactDet, AnchorsTheNineZeroOneValue) {
  EXPECT_EQ(exact_det(deradicalize(build_c(spec_of({9, 0, 1}))), BigInt(-2)), 26);
  EXPECT_EQ(exact_det(deradicalize(build_c(spec_of({4, 9, 0, 1}))), BigInt(-2)), 36);
}

TEST(ExactCharpoly, LaplacianOfP4) {
  const IntMatrix l = IntMatrix::from_dense(matrices(build_caterpillar(spec_of({1, 1}))).laplacian);
  EXPECT_EQ(exact_charpoly(l), poly({0, -4, 10, -6, 1}));
}

TEST(MinRoot, CubicWithSymmetricRoots) {
  EXPECT_NEAR(min_root(poly({0, 2, 0, -1}), -2, 0), -std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(min_root(poly({-59, -11, 11, -1}), -2, 0), -1.76194, 1e-5);
}

TEST(MinRoot, AlgebraicConnectivityOfWorkedExample) {
  const auto spec = spec_of({4, 9, 0, 1});
  const double mu = min_root(connectivity_polynomial(spec), 0.0, 1.0);
  EXPECT_NEAR(mu, 0.1862, 5e-4);
  EXPECT_NEAR(mu, mu_oracle(spec), 1e-9);
}

TEST(MinRoot, RepeatedRootHasNoSignChangeButIsFound) {
  const auto p = pow(poly({-1, 2}), 2) * poly({3, 1});  // (2x-1)^2 (x+3)
  EXPECT_NEAR(min_root(p, 0.0, 1.0), 0.5, 1e-12);
}

TEST(MinRoot, NoRoot) {
  try {
    min_root(poly({1, 0, 1}), -1, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoRootFound);
  }
}

}  // namespace
}  // namespace catspec
