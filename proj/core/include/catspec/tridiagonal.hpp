#pragma once

#include <cstddef>
#include <vector>

#include "catspec/graph.hpp"

namespace catspec {

/// Symmetric tridiagonal matrix: diag has n entries, off has n-1.
struct Tridiagonal {
  std::vector<double> diag;
  std::vector<double> off;
};

/// Householder reduction of a symmetric matrix to tridiagonal form (same
/// spectrum). Only the lower triangle of `a` is read.
Tridiagonal householder_tridiagonalize(const DenseMatrix& a);

/// Number of eigenvalues strictly less than x (Sturm sequence count).
std::size_t sturm_count_below(const Tridiagonal& t, double x);

/// All eigenvalues, ascending, each located by bisection on the Sturm count.
std::vector<double> tridiagonal_eigenvalues(const Tridiagonal& t);

inline std::vector<double> bisection_eigenvalues(const DenseMatrix& symmetric) {
  return tridiagonal_eigenvalues(householder_tridiagonalize(symmetric));
}

}  // namespace catspec
