#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace catspec {

using BigInt = boost::multiprecision::cpp_int;
/// Reduced fraction with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Univariate polynomial over the integers, coefficients in ascending degree
/// order. Trailing zero coefficients are stripped, so the leading coefficient
/// is nonzero unless the polynomial is zero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial constant(BigInt c);
  /// c0 + c1 x
  static IntPolynomial linear(BigInt c0, BigInt c1);
  static IntPolynomial monomial(BigInt c, std::size_t degree);

  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  std::span<const BigInt> coeffs() const noexcept { return coeffs_; }
  BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
  BigInt leading() const { return is_zero() ? BigInt(0) : coeffs_.back(); }

  BigInt operator()(const BigInt& x) const;

  /// Horner evaluation in any real type constructible from BigInt.
  template <class Real>
  Real evaluate(const Real& x) const {
    Real acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Real(*it);
    return acc;
  }

  IntPolynomial derivative() const;
  /// p(x + c).
  IntPolynomial shifted(const BigInt& c) const;

  /// Divides by (x - root)^power with synthetic division. Throws
  /// Error{InexactDivision} if any step leaves a nonzero remainder.
  IntPolynomial divide_by_root_power(const BigInt& root, std::size_t power) const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& rhs);
  IntPolynomial& operator-=(const IntPolynomial& rhs);
  IntPolynomial& operator*=(const BigInt& s);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }
  friend IntPolynomial operator*(const BigInt& s, IntPolynomial a) { return a *= s; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// e.g. "-x^3 + 11x^2 - 11x - 59".
  std::string to_string(char var = 'x') const;

 private:
  void normalize();
  std::vector<BigInt> coeffs_;
};

IntPolynomial pow(const IntPolynomial& base, std::size_t exponent);

/// Primitive gcd with positive leading coefficient (computed over Q).
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// p / gcd(p, p'), made primitive: same real roots, all simple.
IntPolynomial square_free_part(const IntPolynomial& p);

}  // namespace catspec
