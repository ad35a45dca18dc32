#include "catspec/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "catspec/charpoly.hpp"
#include "catspec/errors.hpp"
#include "catspec/oracle.hpp"

namespace catspec {

double to_double(const Rational& r) { return r.convert_to<double>(); }

CubicSolution cardano_roots(LegCount q1, LegCount q2) {
  CubicSolution sol;
  auto finish = [&sol](std::array<double, 3> values) {
    std::sort(values.begin(), values.end(), std::greater<>());
    sol.descending = values;
  };

  if (q1 == 0 && q2 == 0) {
    sol.both_zero = true;
    sol.closed_form = true;
    finish({0.0, 0.0, 0.0});
    return sol;
  }
  if (q1 == 0 || q2 == 0) {
    sol.closed_form = true;
    finish({static_cast<double>(q1 + q2), 0.0, -1.0});
    return sol;
  }

  const double x1 = static_cast<double>(q1);
  const double x2 = static_cast<double>(q2);
  // -p(q1,q2;z) = z^3 + a2 z^2 + a1 z + a0
  const double a2 = 2.0 - x1 - x2;
  const double a1 = (x1 - 1.0) * (x2 - 1.0) - x1 - x2;
  const double a0 = x1 * (x2 - 1.0) + x2 * (x1 - 1.0);
  sol.r = a1 - a2 * a2 / 3.0;
  sol.s = 2.0 * std::pow(a2 / 3.0, 3) - a2 * a1 / 3.0 + a0;

  if (std::abs(sol.r) < 1e-12) {
    sol.degenerate = true;
    const auto values = sym_eigs(build_c(CaterpillarSpec({q1, q2})).to_dense()).values;
    finish({values[0], values[1], values[2]});
    return sol;
  }

  const double radicand = std::max(0.0, -std::pow(sol.r / 3.0, 3) - (sol.s / 2.0) * (sol.s / 2.0));
  sol.theta = std::atan2(std::sqrt(radicand), -sol.s / 2.0);
  const double amplitude = 2.0 * std::sqrt(-sol.r / 3.0);
  const double shift = (x1 + x2 - 2.0) / 3.0;
  for (int j = 0; j < 3; ++j) {
    sol.zetas[j] = amplitude * std::cos((sol.theta + 2.0 * std::numbers::pi * j) / 3.0) + shift;
  }
  finish(sol.zetas);
  return sol;
}

CardanoBound ub_cardano(const CaterpillarSpec& spec) {
  const std::size_t k = spec.spine_length();
  if (k < 2) throw Error(ErrorCode::SpecTooSmall, "ub_cardano needs k >= 2, got " + spec.to_string());
  CardanoBound best;
  best.value = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j + 1 < k; ++j) {
    const double candidate = cardano_roots(spec.leg(j), spec.leg(j + 1)).lambda3() + 2.0;
    if (candidate < best.value) {
      best.value = candidate;
      best.argmin_j = j + 1;
    }
  }
  best.in_stated_scope = k >= 4 && spec.leg(0) != 0 && spec.leg(k - 1) != 0;
  return best;
}

Rational trace_inv(const CaterpillarSpec& spec) {
  return Rational(-pprime_minus2(spec), p_minus2(spec));
}

Rational trace_inv_deleted(const CaterpillarSpec& spec, std::size_t i) {
  const std::size_t k = spec.spine_length();
  if (i < 1 || i >= k) {
    throw Error(ErrorCode::IndexOutOfRange,
                "deletion index " + std::to_string(i) + " not in 1.." + std::to_string(k - 1));
  }
  return trace_inv(spec.slice(0, i)) + trace_inv(spec.slice(i, k - i));
}

TraceBounds bounds_trace(const CaterpillarSpec& spec) {
  const Rational total = trace_inv(spec);
  TraceBounds out;
  out.lb = 1 / total;
  for (std::size_t i = 1; i < spec.spine_length(); ++i) {
    const Rational gap = total - trace_inv_deleted(spec, i);
    if (gap <= 0) {
      out.terms.emplace_back(std::nullopt);
      continue;
    }
    const Rational term = 1 / gap;
    out.terms.emplace_back(term);
    if (!out.ub || term < *out.ub) {
      out.ub = term;
      out.ub_argmin = i;
    }
  }
  return out;
}

BoundsReport bounds_report(const CaterpillarSpec& spec, double tol) {
  if (spec.spine_length() < 2) {
    throw Error(ErrorCode::SpecTooSmall, "bounds need k >= 2, got " + spec.to_string());
  }
  BoundsReport rep;
  rep.p_minus2 = p_minus2(spec);
  rep.pprime_minus2 = pprime_minus2(spec);
  rep.trace_inv = Rational(-rep.pprime_minus2, rep.p_minus2);
  rep.trace = bounds_trace(spec);
  rep.cardano = ub_cardano(spec);
  rep.mu = mu_oracle(spec);

  const double lb = to_double(rep.trace.lb);
  if (lb > rep.mu + tol) rep.violations.push_back("lb_trace > mu");
  if (rep.trace.ub && rep.mu > to_double(*rep.trace.ub) + tol) rep.violations.push_back("mu > ub_trace");
  if (rep.mu > rep.cardano->value + tol) rep.violations.push_back("mu > ub_cardano");
  if (!(rep.mu > 0.0)) rep.violations.push_back("mu <= 0");
  if (spec.order() >= 3 && rep.mu > 1.0 + tol) rep.violations.push_back("mu > 1");
  return rep;
}

}  // namespace catspec
