#include "catspec/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "catspec/errors.hpp"

namespace catspec {

Graph::Graph(std::size_t order, std::vector<Edge> edges) : order_(order), edges_(std::move(edges)) {
  for (Edge& e : edges_) {
    if (e.u == e.v) throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 1 || e.v > order_) {
      throw std::invalid_argument("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                  ") outside 1.." + std::to_string(order_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("duplicate edge");
  }
}

Graph Graph::complete(std::size_t order) {
  std::vector<Edge> edges;
  for (std::size_t u = 1; u <= order; ++u)
    for (std::size_t v = u + 1; v <= order; ++v) edges.push_back({u, v});
  return Graph(order, std::move(edges));
}

Graph Graph::edgeless(std::size_t order) { return Graph(order, {}); }

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> deg(order_, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u - 1];
    ++deg[e.v - 1];
  }
  return deg;
}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool DenseMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

double DenseMatrix::norm_inf() const {
  double best = 0.0;
  for (std::size_t r = 0; r < rows_; ++r) {
    double row = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) row += std::abs((*this)(r, c));
    best = std::max(best, row);
  }
  return best;
}

double DenseMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
  DenseMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t l = 0; l < a.cols_; ++l) {
      const double x = a(i, l);
      if (x == 0.0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(l, j);
    }
  return out;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum shape mismatch");
  DenseMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) { return a + (-1.0) * b; }

DenseMatrix operator*(double s, const DenseMatrix& a) {
  DenseMatrix out = a;
  for (double& x : out.data_) x *= s;
  return out;
}

Graph build_caterpillar(const CaterpillarSpec& spec) {
  const std::size_t k = spec.spine_length();
  const auto n = static_cast<std::size_t>(spec.order());
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::size_t i = 1; i < k; ++i) edges.push_back({i, i + 1});
  std::size_t next = k + 1;
  for (std::size_t i = 0; i < k; ++i)
    for (LegCount l = 0; l < spec.leg(i); ++l) edges.push_back({i + 1, next++});
  return Graph(n, std::move(edges));
}

GraphMatrices matrices(const Graph& g) {
  const std::size_t n = g.order();
  GraphMatrices m{DenseMatrix(n, n), DenseMatrix(n, n), {}, {}};
  for (const Edge& e : g.edges()) {
    m.adjacency(e.u - 1, e.v - 1) = 1.0;
    m.adjacency(e.v - 1, e.u - 1) = 1.0;
  }
  const auto deg = g.degrees();
  for (std::size_t i = 0; i < n; ++i) m.degree(i, i) = static_cast<double>(deg[i]);
  m.laplacian = m.degree - m.adjacency;
  m.signless_laplacian = m.degree + m.adjacency;
  return m;
}

DenseMatrix incidence(const Graph& g) {
  DenseMatrix inc(g.order(), g.size());
  const auto edges = g.edges();
  for (std::size_t j = 0; j < edges.size(); ++j) {
    inc(edges[j].u - 1, j) = 1.0;
    inc(edges[j].v - 1, j) = 1.0;
  }
  return inc;
}

Graph line_graph(const Graph& g) {
  const auto edges = g.edges();
  if (edges.empty()) throw Error(ErrorCode::NoEdges, "line graph of an edgeless graph");
  std::vector<Edge> out;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge& a = edges[i];
      const Edge& b = edges[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) out.push_back({i + 1, j + 1});
    }
  return Graph(edges.size(), std::move(out));
}

Graph h_join(const Graph& h, std::span<const Graph> family) {
  if (family.size() != h.order()) {
    throw Error(ErrorCode::FamilySizeMismatch, "H has " + std::to_string(h.order()) +
                                                   " vertices but the family has " +
                                                   std::to_string(family.size()) + " graphs");
  }
  std::vector<std::size_t> offset(family.size() + 1, 0);
  for (std::size_t r = 0; r < family.size(); ++r) offset[r + 1] = offset[r] + family[r].order();

  std::vector<Edge> edges;
  for (std::size_t r = 0; r < family.size(); ++r)
    for (const Edge& e : family[r].edges()) edges.push_back({e.u + offset[r], e.v + offset[r]});
  for (const Edge& hs : h.edges()) {
    const std::size_t r = hs.u - 1;
    const std::size_t s = hs.v - 1;
    for (std::size_t x = offset[r] + 1; x <= offset[r + 1]; ++x)
      for (std::size_t y = offset[s] + 1; y <= offset[s + 1]; ++y) edges.push_back({x, y});
  }
  return Graph(offset.back(), std::move(edges));
}

HJoinDecomposition linegraph_as_hjoin(const CaterpillarSpec& spec) {
  const std::size_t k = spec.spine_length();
  if (k < 2) throw Error(ErrorCode::SpecTooSmall, "H-join form needs k >= 2, got " + spec.to_string());

  // Vertex 2i+1 (1-based) is v_q(i+1); vertex 2i+2 is the join vertex v_(i+1)(i+2).
  const std::size_t dim = 2 * k - 1;
  auto leg_vertex = [](std::size_t i) { return 2 * i + 1; };
  auto join_vertex = [](std::size_t i) { return 2 * i + 2; };  // between spine i and i+1 (0-based)

  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 2 < k; ++i) edges.push_back({join_vertex(i), join_vertex(i + 1)});
  for (std::size_t i = 0; i < k; ++i) {
    if (spec.leg(i) == 0) continue;
    if (i > 0) edges.push_back({join_vertex(i - 1), leg_vertex(i)});
    if (i + 1 < k) edges.push_back({leg_vertex(i), join_vertex(i)});
  }

  HJoinDecomposition out{Graph(dim, std::move(edges)), {}};
  out.family.reserve(dim);
  for (std::size_t i = 0; i < k; ++i) {
    out.family.push_back(Graph::complete(static_cast<std::size_t>(spec.leg(i))));
    if (i + 1 < k) out.family.push_back(Graph::complete(1));
  }
  return out;
}

}  // namespace catspec
