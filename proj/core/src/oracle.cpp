#include "catspec/oracle.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "catspec/errors.hpp"

namespace catspec {
namespace {

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

double off_diagonal_norm(const DenseMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

int sign_of(const HighPrecision& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

}  // namespace

EigenResult sym_eigs(const DenseMatrix& m) {
  if (!m.is_symmetric()) throw std::invalid_argument("sym_eigs: matrix is not symmetric");
  const std::size_t n = m.rows();
  DenseMatrix a = m;
  double frob = 0.0;
  for (double x : m.data()) frob += x * x;
  frob = std::sqrt(frob);
  const double target = 1e-12 * frob;

  constexpr int kMaxSweeps = 100;
  EigenResult result;
  double off = off_diagonal_norm(a);
  while (off > target) {
    if (result.sweeps == kMaxSweeps) {
      throw Error(ErrorCode::NonConvergence,
                  "Jacobi did not converge in " + std::to_string(kMaxSweeps) + " sweeps (off = " +
                      std::to_string(off) + ")");
    }
    ++result.sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t r = 0; r < n; ++r) {
          const double arp = a(r, p);
          const double arq = a(r, q);
          a(r, p) = c * arp - s * arq;
          a(r, q) = s * arp + c * arq;
        }
        for (std::size_t r = 0; r < n; ++r) {
          const double apr = a(p, r);
          const double aqr = a(q, r);
          a(p, r) = c * apr - s * aqr;
          a(q, r) = s * apr + c * aqr;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
    off = off_diagonal_norm(a);
  }
  result.residual = off;
  result.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) result.values[i] = a(i, i);
  std::sort(result.values.begin(), result.values.end());
  return result;
}

double mu_oracle(const CaterpillarSpec& spec) {
  if (spec.order() < 2) {
    throw Error(ErrorCode::SpecTooSmall, "algebraic connectivity needs at least two vertices: " + spec.to_string());
  }
  return sym_eigs(matrices(build_caterpillar(spec)).laplacian).values[1];
}

IntMatrix IntMatrix::from_dense(const DenseMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("IntMatrix::from_dense: not square");
  IntMatrix out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const double v = m(r, c);
      if (v != std::round(v)) throw std::invalid_argument("IntMatrix::from_dense: non-integer entry");
      out(r, c) = BigInt(static_cast<long long>(v));
    }
  return out;
}

IntMatrix deradicalize(const StructuredC& c) {
  IntMatrix b(c.dim());
  for (std::size_t i = 0; i < c.dim(); ++i) b(i, i) = BigInt(c.diag()[i]);
  for (const auto& e : c.offdiag()) {
    if (e.tag == WeightTag::One) {
      b(e.row, e.col) = 1;
      b(e.col, e.row) = 1;
      continue;
    }
    const bool row_is_leg = c.nodes()[e.row].kind == NodeKind::Leg;
    const std::size_t leg = row_is_leg ? e.row : e.col;
    const std::size_t join = row_is_leg ? e.col : e.row;
    b(leg, join) = BigInt(e.q);
    b(join, leg) = e.q == 0 ? BigInt(0) : BigInt(1);
  }
  return b;
}

BigInt exact_det(const IntMatrix& b, const BigInt& t) {
  const std::size_t n = b.order();
  if (n == 0) return 1;
  IntMatrix a = b;
  for (std::size_t i = 0; i < n; ++i) a(i, i) -= t;

  BigInt sign = 1;
  BigInt previous = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(pivot, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / previous;
      }
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntPolynomial exact_charpoly(const IntMatrix& m) {
  const std::size_t n = m.order();
  // Newton divided differences on x = 0..n, then expansion to monomials.
  std::vector<Rational> dd(n + 1);
  const BigInt parity = (n % 2 == 0) ? 1 : -1;  // det(xI - M) = (-1)^n det(M - xI)
  for (std::size_t i = 0; i <= n; ++i) dd[i] = Rational(parity * exact_det(m, BigInt(i)));
  for (std::size_t level = 1; level <= n; ++level)
    for (std::size_t i = n; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / Rational(level);

  std::vector<Rational> coeffs(n + 1, Rational(0));
  // Horner in Newton form: p = dd[0] + (x-0)(dd[1] + (x-1)(dd[2] + ...)).
  std::vector<Rational> acc{dd[n]};
  for (std::size_t i = n; i-- > 0;) {
    std::vector<Rational> next(acc.size() + 1, Rational(0));
    for (std::size_t d = 0; d < acc.size(); ++d) {
      next[d + 1] += acc[d];
      next[d] -= acc[d] * Rational(i);
    }
    next[0] += dd[i];
    acc = std::move(next);
  }
  std::vector<BigInt> ints;
  ints.reserve(acc.size());
  for (const Rational& c : acc) {
    if (boost::multiprecision::denominator(c) != 1) {
      throw std::logic_error("exact_charpoly: non-integer coefficient " + c.str());
    }
    ints.push_back(boost::multiprecision::numerator(c));
  }
  return IntPolynomial(std::move(ints));
}

double min_root(const IntPolynomial& p, double lo, double hi) {
  if (!(lo <= hi)) throw std::invalid_argument("min_root: empty interval");
  if (p.is_zero()) return lo;
  const IntPolynomial sf = square_free_part(p);
  auto eval = [&sf](double x) { return sf.evaluate(HighPrecision(x)); };

  const double span = hi - lo;
  const auto steps = static_cast<std::size_t>(std::ceil(span / 1e-3));
  const double h = steps == 0 ? 0.0 : span / static_cast<double>(steps);

  double left = lo;
  int left_sign = sign_of(eval(left));
  if (left_sign == 0) return left;
  for (std::size_t i = 1; i <= steps; ++i) {
    const double right = i == steps ? hi : lo + h * static_cast<double>(i);
    const int right_sign = sign_of(eval(right));
    if (right_sign == 0) return right;
    if (right_sign != left_sign) {
      double a = left;
      double b = right;
      while (b - a > 1e-13) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;
        const int s = sign_of(eval(mid));
        if (s == 0) return mid;
        if (s == left_sign)
          a = mid;
        else
          b = mid;
      }
      return 0.5 * (a + b);
    }
    left = right;
    left_sign = right_sign;
  }
  throw Error(ErrorCode::NoRootFound,
              "no root of " + p.to_string() + " in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

}  // namespace catspec
