#pragma once

#include <cstddef>
#include <vector>

#include "catspec/caterpillar.hpp"
#include "catspec/graph.hpp"
#include "catspec/int_polynomial.hpp"

namespace catspec {

/// Row/column kinds of the quotient matrix C(q_1..q_k).
enum class NodeKind { Leg, Join };

struct CNode {
  NodeKind kind;
  std::size_t spine;  // Leg: vertex i (0-based) for v_q(i+1); Join: i for v_(i+1)(i+2)
  LegCount q;         // leg count of a Leg node, 0 for Join nodes
};

/// Off-diagonal weight: sqrt(q) on leg-join links, 1 on join-join links.
enum class WeightTag { SqrtLeg, One };

struct OffDiagonal {
  std::size_t row;  // row < col, 0-based
  std::size_t col;
  WeightTag tag;
  LegCount q;  // radicand for SqrtLeg
};

/// C(q_1..q_k) in symbolic form: integer diagonal, off-diagonal entries
/// tagged sqrt(q_i) or 1. Direct sums and principal submatrices stay in this
/// form so the exact oracle can de-radicalize them.
class StructuredC {
 public:
  StructuredC() = default;
  StructuredC(std::vector<CNode> nodes, std::vector<LegCount> diag, std::vector<OffDiagonal> offdiag);

  std::size_t dim() const noexcept { return nodes_.size(); }
  const std::vector<CNode>& nodes() const noexcept { return nodes_; }
  const std::vector<LegCount>& diag() const noexcept { return diag_; }
  const std::vector<OffDiagonal>& offdiag() const noexcept { return offdiag_; }

  /// Principal submatrix keeping the listed rows (ascending, 0-based).
  StructuredC principal(const std::vector<std::size_t>& keep) const;
  /// Block-diagonal a (+) b.
  friend StructuredC direct_sum(const StructuredC& a, const StructuredC& b);

  /// sqrt(q) rendered in double precision.
  DenseMatrix to_dense() const;

  friend bool operator==(const StructuredC& a, const StructuredC& b);

 private:
  std::vector<CNode> nodes_;
  std::vector<LegCount> diag_;
  std::vector<OffDiagonal> offdiag_;  // sorted by (row, col)
};

/// The (2k-1) x (2k-1) matrix with rows v_q1, v_12, v_q2, ..., v_qk.
StructuredC build_c(const CaterpillarSpec& spec);
/// Drops the rows/columns of leg nodes with q_i = 0 (the b all-zero rows).
StructuredC prune_zero(const StructuredC& c);
/// C(q) with row/column 2i (1-based) removed, equal to
/// C(q_1..q_i) (+) C(q_{i+1}..q_k). Requires 1 <= i <= k-1.
StructuredC deleted_c(const CaterpillarSpec& spec, std::size_t i);

/// p(q;x) = det(C(q) - x I): degree 2k-1, leading coefficient -1.
IntPolynomial charpoly_p(const CaterpillarSpec& spec);

/// p(q;-2) and p'(q;-2) via the integer recursions specialised at x = -2.
BigInt p_minus2(const CaterpillarSpec& spec);
BigInt pprime_minus2(const CaterpillarSpec& spec);

/// p(q; x-2) / (x-2)^b: its roots are the pruned spectrum of C shifted by 2.
IntPolynomial connectivity_polynomial(const CaterpillarSpec& spec);

/// Monic det(x I - L(T)) = -x (x-1)^a p(q; x-2) / (x-2)^b.
IntPolynomial laplacian_charpoly(const CaterpillarSpec& spec);

struct SpectrumEntry {
  double value;
  std::size_t multiplicity;
};
using SpectrumMultiset = std::vector<SpectrumEntry>;

/// Groups ascending values closer than `tol` into one entry (first value kept).
SpectrumMultiset group_spectrum(std::vector<double> values, double tol = 1e-9);
std::vector<double> expand_spectrum(const SpectrumMultiset& s);

/// {0} + {1^a} + (eigenvalues of prune_zero(build_c(spec)) + 2), ascending.
SpectrumMultiset laplacian_spectrum(const CaterpillarSpec& spec);

/// {-1^a} + eigenvalues of prune_zero(build_c(spec)): adjacency spectrum of
/// the line graph. Empty for T(0).
SpectrumMultiset line_graph_spectrum(const CaterpillarSpec& spec);

}  // namespace catspec
