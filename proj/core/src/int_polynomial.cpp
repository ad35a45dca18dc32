#include "catspec/int_polynomial.hpp"

#include <algorithm>
#include <utility>

#include "catspec/errors.hpp"

namespace catspec {
namespace {

using RationalPoly = std::vector<Rational>;

void trim(RationalPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Remainder of a / b over Q; b nonzero.
RationalPoly remainder(RationalPoly a, const RationalPoly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

IntPolynomial primitive_from_rational(const RationalPoly& p) {
  BigInt lcm_den = 1;
  for (const Rational& c : p) {
    const BigInt d = boost::multiprecision::denominator(c);
    lcm_den = lcm_den / boost::multiprecision::gcd(lcm_den, d) * d;
  }
  std::vector<BigInt> ints;
  ints.reserve(p.size());
  BigInt content = 0;
  for (const Rational& c : p) {
    ints.push_back(boost::multiprecision::numerator(c) * (lcm_den / boost::multiprecision::denominator(c)));
    content = boost::multiprecision::gcd(content, ints.back());
  }
  if (content != 0) {
    if (ints.back() < 0) content = -content;
    for (BigInt& c : ints) c /= content;
  }
  return IntPolynomial(std::move(ints));
}

RationalPoly to_rational(const IntPolynomial& p) {
  return RationalPoly(p.coeffs().begin(), p.coeffs().end());
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPolynomial IntPolynomial::constant(BigInt c) { return IntPolynomial({std::move(c)}); }

IntPolynomial IntPolynomial::linear(BigInt c0, BigInt c1) {
  return IntPolynomial({std::move(c0), std::move(c1)});
}

IntPolynomial IntPolynomial::monomial(BigInt c, std::size_t degree) {
  std::vector<BigInt> coeffs(degree + 1, BigInt(0));
  coeffs[degree] = std::move(c);
  return IntPolynomial(std::move(coeffs));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::operator()(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long long>(i);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::shifted(const BigInt& c) const {
  // Repeated synthetic division (Taylor shift), O(d^2).
  std::vector<BigInt> a = coeffs_;
  const std::size_t n = a.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = n - 1; j > i; --j) a[j - 1] += c * a[j];
  return IntPolynomial(std::move(a));
}

IntPolynomial IntPolynomial::divide_by_root_power(const BigInt& root, std::size_t power) const {
  std::vector<BigInt> a = coeffs_;
  for (std::size_t step = 0; step < power; ++step) {
    if (a.empty()) return {};
    // a(x) = (x - root) q(x) + r
    std::vector<BigInt> q(a.size() - 1);
    BigInt carry = 0;
    for (std::size_t j = a.size(); j-- > 1;) {
      carry = a[j] + carry * root;
      q[j - 1] = carry;
    }
    const BigInt rem = a[0] + carry * root;
    if (rem != 0) {
      throw Error(ErrorCode::InexactDivision, "(x - " + root.str() + ")^" + std::to_string(power) +
                                                  " does not divide " + to_string());
    }
    a = std::move(q);
  }
  return IntPolynomial(std::move(a));
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial out = *this;
  for (BigInt& c : out.coeffs_) c = -c;
  return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& s) {
  for (BigInt& c : coeffs_) c *= s;
  normalize();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigInt mag = negative ? BigInt(-c) : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (mag != 1 || i == 0) out += mag.str();
    if (i >= 1) out += var;
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

IntPolynomial pow(const IntPolynomial& base, std::size_t exponent) {
  IntPolynomial result = IntPolynomial::constant(1);
  IntPolynomial square = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * square;
    exponent >>= 1U;
    if (exponent > 0) square = square * square;
  }
  return result;
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  RationalPoly x = to_rational(a);
  RationalPoly y = to_rational(b);
  trim(x);
  trim(y);
  while (!y.empty()) {
    RationalPoly r = remainder(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return primitive_from_rational(x);
}

IntPolynomial square_free_part(const IntPolynomial& p) {
  if (p.degree() <= 0) return p;
  const IntPolynomial g = gcd(p, p.derivative());
  if (g.degree() == 0) return primitive_from_rational(to_rational(p));

  // Exact long division p / g over Q.
  RationalPoly num = to_rational(p);
  const RationalPoly den = to_rational(g);
  RationalPoly quot(num.size() - den.size() + 1);
  while (num.size() >= den.size() && !num.empty()) {
    const Rational factor = num.back() / den.back();
    const std::size_t shift = num.size() - den.size();
    quot[shift] = factor;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= factor * den[i];
    num.pop_back();
    trim(num);
  }
  return primitive_from_rational(quot);
}

}  // namespace catspec
