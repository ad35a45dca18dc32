#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "catspec/caterpillar.hpp"

namespace catspec {

/// Undirected edge with 1-based endpoints, stored with u < v.
struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 1..n. Edges are kept sorted
/// lexicographically; loops, duplicates and out-of-range endpoints are rejected
/// with std::invalid_argument.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t order, std::vector<Edge> edges);

  static Graph complete(std::size_t order);
  static Graph edgeless(std::size_t order);

  std::size_t order() const noexcept { return order_; }
  std::size_t size() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::vector<std::size_t> degrees() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<Edge> edges_;
};

/// Row-major dense real matrix.
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<const double> data() const noexcept { return data_; }

  DenseMatrix transpose() const;
  bool is_symmetric() const;
  /// Infinity norm (max absolute row sum).
  double norm_inf() const;
  double trace() const;

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator*(double s, const DenseMatrix& a);
  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Spine vertices 1..k form the path; pendant vertices follow, grouped by the
/// spine vertex they hang from (all legs of spine 1, then spine 2, ...).
Graph build_caterpillar(const CaterpillarSpec& spec);

struct GraphMatrices {
  DenseMatrix adjacency;
  DenseMatrix degree;
  DenseMatrix laplacian;          // D - A
  DenseMatrix signless_laplacian; // D + A
};

GraphMatrices matrices(const Graph& g);

/// n x m vertex-edge incidence matrix; column j is edge j in sorted order.
DenseMatrix incidence(const Graph& g);

/// Line graph with vertex j+1 standing for the j-th edge of `g` in sorted
/// order. Throws Error{NoEdges} for an edgeless graph.
Graph line_graph(const Graph& g);

/// The H-join of `family` along `h`: vertices of family[0] come first, then
/// family[1], and so on. Empty members (K_0) contribute no vertices. Throws
/// Error{FamilySizeMismatch} when family.size() != h.order().
Graph h_join(const Graph& h, std::span<const Graph> family);

struct HJoinDecomposition {
  Graph h;
  std::vector<Graph> family;
};

/// Writes the line graph of T(q_1..q_k) as an H-join. H and the family are
/// indexed like the rows of C(q_1..q_k): v_q1, v_12, v_q2, v_23, ..., v_qk.
/// Leg classes are K_{q_i} (K_0 when q_i = 0, kept as an isolated vertex of
/// H) and join classes are K_1. With the K_0 placeholders removed, H is the
/// line graph of T(delta(q_1),...,delta(q_k)).
/// Throws Error{SpecTooSmall} for k < 2.
HJoinDecomposition linegraph_as_hjoin(const CaterpillarSpec& spec);

}  // namespace catspec
