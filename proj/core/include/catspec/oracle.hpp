#pragma once

#include <cstddef>
#include <vector>

#include "catspec/caterpillar.hpp"
#include "catspec/charpoly.hpp"
#include "catspec/graph.hpp"
#include "catspec/int_polynomial.hpp"

namespace catspec {

// Brute-force ground truth. Nothing here uses the caterpillar recursions;
// everything works from explicit matrices.

struct EigenResult {
  std::vector<double> values;  // ascending
  double residual = 0.0;       // off-diagonal Frobenius norm at convergence
  int sweeps = 0;
};

/// Cyclic Jacobi rotations on a symmetric matrix. Converges when the
/// off-diagonal Frobenius norm drops below 1e-12 * ||M||_F; throws
/// Error{NonConvergence} after 100 sweeps.
EigenResult sym_eigs(const DenseMatrix& m);

/// Second-smallest eigenvalue of L(T) from the explicit Laplacian. Throws
/// Error{SpecTooSmall} when T has a single vertex.
double mu_oracle(const CaterpillarSpec& spec);

/// Square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, BigInt(0)) {}

  std::size_t order() const noexcept { return n_; }
  BigInt& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const BigInt& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  /// Throws std::invalid_argument unless every entry is an integer.
  static IntMatrix from_dense(const DenseMatrix& m);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<BigInt> data_;
};

/// Integer matrix similar to C: each sqrt(q) pair between a leg node and a
/// join node becomes q in the leg node's row and 1 in the join node's row
/// (conjugation by diag(sqrt q) on leg nodes), so det(B - xI) = det(C - xI).
IntMatrix deradicalize(const StructuredC& c);

/// det(B - t I) by fraction-free (Bareiss) elimination with row pivoting.
BigInt exact_det(const IntMatrix& b, const BigInt& t);

/// Monic det(x I - M), interpolated exactly from exact_det at x = 0..n.
IntPolynomial exact_charpoly(const IntMatrix& m);

/// Smallest real root of p in [lo, hi] to 1e-12: the square-free part of p is
/// scanned on a grid of step <= 1e-3 for sign changes, then bisected.
/// Throws Error{NoRootFound}.
double min_root(const IntPolynomial& p, double lo, double hi);

}  // namespace catspec
