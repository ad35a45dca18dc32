#include "catspec/charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "catspec/errors.hpp"
#include "catspec/tridiagonal.hpp"

namespace catspec {
namespace {

BigInt big(LegCount v) { return BigInt(v); }

// Entries of the recursion for a single leg count q (x is the variable).
//   A(x) = x^2 - (q+ - 1) x - q
//   B(x) = q+ - 1 - x            (= p(q;x))
//   E(x) = q (2 + x) - (q+ - 1 - x)
IntPolynomial poly_a(LegCount q) {
  return IntPolynomial({-big(q), -(big(qplus(q)) - 1), BigInt(1)});
}
IntPolynomial poly_b(LegCount q) { return IntPolynomial::linear(big(qplus(q)) - 1, BigInt(-1)); }
IntPolynomial poly_e(LegCount q) {
  return IntPolynomial::linear(2 * big(q) - (big(qplus(q)) - 1), big(q) + 1);
}

// p for the suffix q[s..], given p for every shorter suffix in `memo`.
IntPolynomial suffix_charpoly(std::span<const LegCount> q, std::size_t s,
                              const std::vector<IntPolynomial>& memo) {
  const std::size_t m = q.size() - s;
  const LegCount q1 = q[s];
  switch (m) {
    case 1:
      return poly_b(q1);
    case 2: {
      const LegCount q2 = q[s + 1];
      return poly_a(q1) * poly_b(q2) - poly_b(q1) * big(q2);
    }
    case 3: {
      const LegCount q2 = q[s + 1];
      const LegCount q3 = q[s + 2];
      return poly_a(q1) * memo[s + 1] + poly_b(q1) * poly_e(q2) * poly_b(q3) + poly_b(q1) * (big(q2) * big(q3));
    }
    default:
      break;
  }
  IntPolynomial sum;
  BigInt prefix = 1;  // q_2 ... q_{j-1} relative to the suffix
  for (std::size_t j = 2; j <= m - 1; ++j) {
    IntPolynomial term = poly_e(q[s + j - 1]) * memo[s + j] * prefix;
    if (j % 2 == 1) term = -term;
    sum += term;
    prefix *= big(q[s + j - 1]);
  }
  prefix *= big(q[s + m - 1]);  // q_2 ... q_k
  IntPolynomial out = poly_a(q1) * memo[s + 1] + poly_b(q1) * sum;
  IntPolynomial tail = poly_b(q1) * prefix;
  if ((m + 1) % 2 == 1) tail = -tail;
  return out + tail;
}

struct AtMinus2 {
  std::vector<BigInt> p;
  std::vector<BigInt> dp;
};

// p(q[s..];-2) and p'(q[s..];-2) for every suffix start s, longest last.
AtMinus2 evaluate_suffixes_at_minus2(std::span<const LegCount> q) {
  const std::size_t k = q.size();
  AtMinus2 r{std::vector<BigInt>(k + 1), std::vector<BigInt>(k + 1)};
  for (std::size_t s = k; s-- > 0;) {
    const std::size_t m = k - s;
    const BigInt q1 = big(q[s]);
    const BigInt q1p = big(qplus(q[s]));
    if (m == 1) {
      r.p[s] = q1p + 1;
      r.dp[s] = -1;
      continue;
    }
    const BigInt head = 2 + 2 * q1p - q1;  // A(-2)
    BigInt p = head * r.p[s + 1];
    BigInt dp = (-3 - q1p) * r.p[s + 1] + head * r.dp[s + 1];
    BigInt prefix = 1;
    for (std::size_t j = 2; j <= m - 1; ++j) {
      const BigInt qj = big(q[s + j - 1]);
      const BigInt qjp = big(qplus(q[s + j - 1]));
      const BigInt sign = (j % 2 == 0) ? 1 : -1;  // (-1)^j
      p += -sign * prefix * (q1p + 1) * (qjp + 1) * r.p[s + j];
      dp += sign * prefix * ((qjp + 1) + (qj + 1) * (q1p + 1)) * r.p[s + j];
      dp += -sign * prefix * (q1p + 1) * (qjp + 1) * r.dp[s + j];
      prefix *= qj;
    }
    prefix *= big(q[s + m - 1]);
    const BigInt tail_sign = (m % 2 == 0) ? 1 : -1;  // (-1)^m
    p += -tail_sign * (q1p + 1) * prefix;            // (-1)^(m+1)
    dp += tail_sign * prefix;
    r.p[s] = std::move(p);
    r.dp[s] = std::move(dp);
  }
  return r;
}

}  // namespace

StructuredC::StructuredC(std::vector<CNode> nodes, std::vector<LegCount> diag, std::vector<OffDiagonal> offdiag)
    : nodes_(std::move(nodes)), diag_(std::move(diag)), offdiag_(std::move(offdiag)) {
  for (auto& e : offdiag_)
    if (e.row > e.col) std::swap(e.row, e.col);
  std::sort(offdiag_.begin(), offdiag_.end(),
            [](const OffDiagonal& a, const OffDiagonal& b) { return std::tie(a.row, a.col) < std::tie(b.row, b.col); });
}

StructuredC StructuredC::principal(const std::vector<std::size_t>& keep) const {
  std::vector<std::size_t> position(dim(), dim());
  std::vector<CNode> nodes;
  std::vector<LegCount> diag;
  for (std::size_t idx = 0; idx < keep.size(); ++idx) {
    position.at(keep[idx]) = idx;
    nodes.push_back(nodes_[keep[idx]]);
    diag.push_back(diag_[keep[idx]]);
  }
  std::vector<OffDiagonal> off;
  for (const auto& e : offdiag_) {
    if (position[e.row] == dim() || position[e.col] == dim()) continue;
    off.push_back({position[e.row], position[e.col], e.tag, e.q});
  }
  return StructuredC(std::move(nodes), std::move(diag), std::move(off));
}

StructuredC direct_sum(const StructuredC& a, const StructuredC& b) {
  std::vector<CNode> nodes = a.nodes_;
  nodes.insert(nodes.end(), b.nodes_.begin(), b.nodes_.end());
  std::vector<LegCount> diag = a.diag_;
  diag.insert(diag.end(), b.diag_.begin(), b.diag_.end());
  std::vector<OffDiagonal> off = a.offdiag_;
  for (const auto& e : b.offdiag_) off.push_back({e.row + a.dim(), e.col + a.dim(), e.tag, e.q});
  return StructuredC(std::move(nodes), std::move(diag), std::move(off));
}

DenseMatrix StructuredC::to_dense() const {
  DenseMatrix m(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) m(i, i) = static_cast<double>(diag_[i]);
  for (const auto& e : offdiag_) {
    const double w = e.tag == WeightTag::One ? 1.0 : std::sqrt(static_cast<double>(e.q));
    m(e.row, e.col) = w;
    m(e.col, e.row) = w;
  }
  return m;
}

bool operator==(const StructuredC& a, const StructuredC& b) {
  auto node_eq = [](const CNode& x, const CNode& y) { return x.kind == y.kind && x.spine == y.spine && x.q == y.q; };
  auto off_eq = [](const OffDiagonal& x, const OffDiagonal& y) {
    return x.row == y.row && x.col == y.col && x.tag == y.tag && x.q == y.q;
  };
  return a.diag_ == b.diag_ && std::equal(a.nodes_.begin(), a.nodes_.end(), b.nodes_.begin(), b.nodes_.end(), node_eq) &&
         std::equal(a.offdiag_.begin(), a.offdiag_.end(), b.offdiag_.begin(), b.offdiag_.end(), off_eq);
}

StructuredC build_c(const CaterpillarSpec& spec) {
  const std::size_t k = spec.spine_length();
  std::vector<CNode> nodes;
  std::vector<LegCount> diag;
  std::vector<OffDiagonal> off;
  for (std::size_t i = 0; i < k; ++i) {
    const LegCount q = spec.leg(i);
    const std::size_t leg_row = 2 * i;
    nodes.push_back({NodeKind::Leg, i, q});
    diag.push_back(qplus(q) - 1);
    if (i > 0) off.push_back({leg_row - 1, leg_row, WeightTag::SqrtLeg, q});
    if (i + 1 < k) {
      nodes.push_back({NodeKind::Join, i, 0});
      diag.push_back(0);
      off.push_back({leg_row, leg_row + 1, WeightTag::SqrtLeg, q});
      if (i + 2 < k) off.push_back({leg_row + 1, leg_row + 3, WeightTag::One, 0});
    }
  }
  return StructuredC(std::move(nodes), std::move(diag), std::move(off));
}

StructuredC prune_zero(const StructuredC& c) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < c.dim(); ++i) {
    const CNode& node = c.nodes()[i];
    if (node.kind == NodeKind::Leg && node.q == 0) continue;
    keep.push_back(i);
  }
  return c.principal(keep);
}

StructuredC deleted_c(const CaterpillarSpec& spec, std::size_t i) {
  const std::size_t k = spec.spine_length();
  if (i < 1 || i >= k) {
    throw Error(ErrorCode::IndexOutOfRange,
                "deletion index " + std::to_string(i) + " not in 1.." + std::to_string(k - 1));
  }
  const StructuredC full = build_c(spec);
  std::vector<std::size_t> keep;
  for (std::size_t r = 0; r < full.dim(); ++r)
    if (r != 2 * i - 1) keep.push_back(r);
  return full.principal(keep);
}

IntPolynomial charpoly_p(const CaterpillarSpec& spec) {
  const auto q = spec.legs();
  const std::size_t k = q.size();
  std::vector<IntPolynomial> memo(k + 1);
  for (std::size_t s = k; s-- > 0;) memo[s] = suffix_charpoly(q, s, memo);
  return memo[0];
}

BigInt p_minus2(const CaterpillarSpec& spec) { return evaluate_suffixes_at_minus2(spec.legs()).p[0]; }

BigInt pprime_minus2(const CaterpillarSpec& spec) { return evaluate_suffixes_at_minus2(spec.legs()).dp[0]; }

IntPolynomial connectivity_polynomial(const CaterpillarSpec& spec) {
  const DerivedParams params = derive_params(spec);
  return charpoly_p(spec).shifted(BigInt(-2)).divide_by_root_power(BigInt(2), params.b);
}

IntPolynomial laplacian_charpoly(const CaterpillarSpec& spec) {
  const DerivedParams params = derive_params(spec);
  const IntPolynomial ones = pow(IntPolynomial::linear(BigInt(-1), BigInt(1)), params.a);
  return IntPolynomial::monomial(BigInt(-1), 1) * ones * connectivity_polynomial(spec);
}

SpectrumMultiset group_spectrum(std::vector<double> values, double tol) {
  std::sort(values.begin(), values.end());
  SpectrumMultiset out;
  for (double v : values) {
    if (!out.empty() && std::abs(v - out.back().value) <= tol)
      ++out.back().multiplicity;
    else
      out.push_back({v, 1});
  }
  return out;
}

std::vector<double> expand_spectrum(const SpectrumMultiset& s) {
  std::vector<double> out;
  for (const auto& e : s) out.insert(out.end(), e.multiplicity, e.value);
  return out;
}

SpectrumMultiset line_graph_spectrum(const CaterpillarSpec& spec) {
  const DerivedParams params = derive_params(spec);
  std::vector<double> values(params.a, -1.0);
  for (double v : bisection_eigenvalues(prune_zero(build_c(spec)).to_dense())) values.push_back(v);
  return group_spectrum(std::move(values));
}

SpectrumMultiset laplacian_spectrum(const CaterpillarSpec& spec) {
  const DerivedParams params = derive_params(spec);
  std::vector<double> values{0.0};
  values.insert(values.end(), params.a, 1.0);
  for (double v : bisection_eigenvalues(prune_zero(build_c(spec)).to_dense())) values.push_back(v + 2.0);
  return group_spectrum(std::move(values));
}

}  // namespace catspec
