#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "catspec/caterpillar.hpp"
#include "catspec/int_polynomial.hpp"

namespace catspec {

/// The three eigenvalues of C(q1, q2).
///
/// For q1, q2 > 0 they come from the trigonometric form of Cardano's formula
/// applied to the depressed cubic g^3 + r g + s of -p(q1,q2;z):
///   z_j = 2 sqrt(-r/3) cos((theta + 2 pi j)/3) + (q1 + q2 - 2)/3.
/// With one leg count zero the matrix has a zero row and the spectrum is
/// {q1 + q2, 0, -1} exactly; C(0,0) is the zero matrix.
struct CubicSolution {
  double r = 0.0;
  double s = 0.0;
  double theta = 0.0;
  std::array<double, 3> zetas{};       // z_0, z_1, z_2 in formula order
  std::array<double, 3> descending{};  // lambda_1 >= lambda_2 >= lambda_3
  bool closed_form = false;            // a zero leg: no trigonometry used
  bool both_zero = false;              // C(0,0)
  bool degenerate = false;             // |r| < 1e-12: values from the dense eigensolver

  double lambda3() const noexcept { return descending[2]; }
};

CubicSolution cardano_roots(LegCount q1, LegCount q2);

struct CardanoBound {
  double value = 0.0;         // min_j lambda_3(C(q_j, q_j+1)) + 2
  std::size_t argmin_j = 0;   // 1-based, smallest j on ties
  bool in_stated_scope = false;   // k >= 4 and q_1 != 0 != q_k
};

/// Throws Error{SpecTooSmall} for k < 2.
CardanoBound ub_cardano(const CaterpillarSpec& spec);

/// tr((2I + C)^-1) = -p'(q;-2) / p(q;-2), exact.
Rational trace_inv(const CaterpillarSpec& spec);

/// tr((2I + C~_(i))^-1) for the deletion of row 2i; 1 <= i <= k-1, otherwise
/// Error{IndexOutOfRange}.
Rational trace_inv_deleted(const CaterpillarSpec& spec, std::size_t i);

struct TraceBounds {
  Rational lb;                                // 1 / tr((2I + C)^-1)
  std::optional<Rational> ub;                 // empty when no index gives a positive denominator
  std::size_t ub_argmin = 0;                  // 1-based i attaining ub
  std::vector<std::optional<Rational>> terms; // per i = 1..k-1; empty where the denominator <= 0
};

TraceBounds bounds_trace(const CaterpillarSpec& spec);

struct BoundsReport {
  double mu = 0.0;  // explicit-Laplacian oracle
  Rational trace_inv;
  BigInt p_minus2;
  BigInt pprime_minus2;
  TraceBounds trace;
  std::optional<CardanoBound> cardano;  // empty for k < 2
  std::vector<std::string> violations;  // failed sandwich checks

  bool sandwich_holds() const noexcept { return violations.empty(); }
};

/// Assembles every bound for `spec` and checks lb <= mu <= ub_trace,
/// mu <= ub_cardano and (for trees with at least two edges) 0 < mu <= 1,
/// each with absolute slack `tol`. Requires k >= 2 (Error{SpecTooSmall}).
BoundsReport bounds_report(const CaterpillarSpec& spec, double tol = 1e-9);

/// Nearest double to an exact rational.
double to_double(const Rational& r);

}  // namespace catspec
