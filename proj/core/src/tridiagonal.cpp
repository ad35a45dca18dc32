#include "catspec/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace catspec {

Tridiagonal householder_tridiagonalize(const DenseMatrix& input) {
  if (input.rows() != input.cols()) throw std::invalid_argument("tridiagonalize: matrix is not square");
  const std::size_t n = input.rows();
  DenseMatrix a = input;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) a(i, j) = a(j, i);

  Tridiagonal t;
  t.diag.resize(n);
  t.off.resize(n > 0 ? n - 1 : 0);
  std::vector<double> v(n), p(n), w(n);

  for (std::size_t k = 0; k + 2 < n; ++k) {
    double alpha = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) alpha += a(i, k) * a(i, k);
    alpha = std::sqrt(alpha);
    if (alpha == 0.0) {
      t.off[k] = 0.0;
      continue;
    }
    if (a(k + 1, k) > 0) alpha = -alpha;
    // v = x - alpha e1 on rows k+1..n-1
    std::fill(v.begin(), v.end(), 0.0);
    v[k + 1] = a(k + 1, k) - alpha;
    for (std::size_t i = k + 2; i < n; ++i) v[i] = a(i, k);
    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vnorm2 += v[i] * v[i];
    if (vnorm2 == 0.0) {
      t.off[k] = a(k + 1, k);
      continue;
    }
    const double beta = 2.0 / vnorm2;
    // A <- H A H with H = I - beta v v^T, restricted to the trailing block.
    for (std::size_t i = k; i < n; ++i) {
      double s = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) s += a(i, j) * v[j];
      p[i] = beta * s;
    }
    double vp = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vp += v[i] * p[i];
    const double half = 0.5 * beta * vp;
    for (std::size_t i = k; i < n; ++i) w[i] = p[i] - half * v[i];
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = k; j < n; ++j) a(i, j) -= v[i] * w[j] + w[i] * v[j];
    t.off[k] = alpha;
  }
  for (std::size_t i = 0; i < n; ++i) t.diag[i] = a(i, i);
  if (n >= 2) t.off[n - 2] = a(n - 1, n - 2);
  return t;
}

std::size_t sturm_count_below(const Tridiagonal& t, double x) {
  const std::size_t n = t.diag.size();
  std::size_t count = 0;
  double d = 1.0;
  const double tiny = std::numeric_limits<double>::min();
  for (std::size_t i = 0; i < n; ++i) {
    const double b2 = i == 0 ? 0.0 : t.off[i - 1] * t.off[i - 1];
    d = (t.diag[i] - x) - (i == 0 ? 0.0 : b2 / d);
    if (d == 0.0) d = -tiny;
    if (d < 0.0) ++count;
  }
  return count;
}

std::vector<double> tridiagonal_eigenvalues(const Tridiagonal& t) {
  const std::size_t n = t.diag.size();
  if (n == 0) return {};
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < n; ++i) {
    double r = 0.0;
    if (i > 0) r += std::abs(t.off[i - 1]);
    if (i + 1 < n) r += std::abs(t.off[i]);
    lo = std::min(lo, t.diag[i] - r);
    hi = std::max(hi, t.diag[i] + r);
  }
  const double pad = 1e-12 * std::max(1.0, std::max(std::abs(lo), std::abs(hi)));
  lo -= pad;
  hi += pad;

  std::vector<double> values(n);
  const double eps = std::numeric_limits<double>::epsilon();
  for (std::size_t m = 0; m < n; ++m) {
    // m-th smallest eigenvalue: smallest x with count_below(x) > m.
    double a = lo;
    double b = hi;
    for (int iter = 0; iter < 256; ++iter) {
      const double mid = 0.5 * (a + b);
      if (mid <= a || mid >= b) break;
      if (b - a <= 2.0 * eps * std::max(std::abs(a), std::abs(b)) + 4.0 * std::numeric_limits<double>::min())
        break;
      if (sturm_count_below(t, mid) > m)
        b = mid;
      else
        a = mid;
    }
    values[m] = 0.5 * (a + b);
  }
  return values;
}

}  // namespace catspec
