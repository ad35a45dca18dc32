#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "catspec/caterpillar.hpp"
#include "catspec/graph.hpp"
#include "catspec/oracle.hpp"

namespace catspec::testing {

inline CaterpillarSpec spec_of(std::vector<std::int64_t> q) { return validate_spec(q); }

inline double max_sorted_diff(std::vector<double> a, std::vector<double> b) {
  if (a.size() != b.size()) return INFINITY;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

inline std::vector<double> eigs(const DenseMatrix& m) { return sym_eigs(m).values; }

inline bool exactly_equal(const DenseMatrix& a, const DenseMatrix& b) {
  return a.rows() == b.rows() && a.cols() == b.cols() &&
         std::equal(a.data().begin(), a.data().end(), b.data().begin());
}

}  // namespace catspec::testing
