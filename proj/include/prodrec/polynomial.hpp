#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "prodrec/rational.hpp"

namespace prodrec {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class DensePolynomial {
 public:
  DensePolynomial() = default;
  explicit DensePolynomial(std::vector<Rational> ascending);

  static DensePolynomial constant(Rational c);
  /// c * x^degree
  static DensePolynomial monomial(Rational c, std::size_t degree);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Degree, or -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }
  /// Coefficient of x^i; zero past the degree.
  Rational coefficient(std::size_t i) const;
  Rational leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

  Rational operator()(const Rational& x) const;

  DensePolynomial& operator+=(const DensePolynomial& rhs);
  DensePolynomial& operator-=(const DensePolynomial& rhs);
  DensePolynomial& operator*=(const Rational& scalar);
  friend DensePolynomial operator+(DensePolynomial a, const DensePolynomial& b) { return a += b; }
  friend DensePolynomial operator-(DensePolynomial a, const DensePolynomial& b) { return a -= b; }
  friend DensePolynomial operator*(DensePolynomial a, const Rational& s) { return a *= s; }
  friend DensePolynomial operator*(const Rational& s, DensePolynomial a) { return a *= s; }
  friend DensePolynomial operator*(const DensePolynomial& a, const DensePolynomial& b);
  DensePolynomial operator-() const { return *this * Rational(-1); }

  friend bool operator==(const DensePolynomial&, const DensePolynomial&) = default;

  /// Human-readable, highest degree first, e.g. "x^3 - 2x^2 - 2x + 1".
  std::string to_string(char variable = 'x') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

inline DensePolynomial poly_mul(const DensePolynomial& a, const DensePolynomial& b) { return a * b; }
inline Rational poly_eval(const DensePolynomial& f, const Rational& x) { return f(x); }

/// x^d * f(1/x). Requires deg f <= d.
DensePolynomial reciprocal(const DensePolynomial& f, std::size_t d);

/// f(x / lambda) * lambda^{deg f}. Requires lambda != 0.
DensePolynomial scale_argument(const DensePolynomial& f, const Rational& lambda);

struct PolynomialDivision {
  DensePolynomial quotient;
  DensePolynomial remainder;
};

/// Euclidean division over Q. Throws std::domain_error on a zero divisor.
PolynomialDivision divide(const DensePolynomial& dividend, const DensePolynomial& divisor);

}  // namespace prodrec
