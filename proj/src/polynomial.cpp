#include "prodrec/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace prodrec {

DensePolynomial::DensePolynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

DensePolynomial DensePolynomial::constant(Rational c) {
  return DensePolynomial(std::vector<Rational>{std::move(c)});
}

DensePolynomial DensePolynomial::monomial(Rational c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = std::move(c);
  return DensePolynomial(std::move(v));
}

void DensePolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational DensePolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational();
}

Rational DensePolynomial::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

DensePolynomial& DensePolynomial::operator+=(const DensePolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

DensePolynomial& DensePolynomial::operator-=(const DensePolynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

DensePolynomial& DensePolynomial::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

DensePolynomial operator*(const DensePolynomial& a, const DensePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return DensePolynomial(std::move(out));
}

std::string DensePolynomial::to_string(char variable) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Rational mag = c.abs();
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = mag.is_one();
    if (!unit || i == 0) {
      if (mag.is_integer()) os << mag; else os << '(' << mag << ')';
    }
    if (i >= 1) os << variable;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

DensePolynomial reciprocal(const DensePolynomial& f, std::size_t d) {
  if (f.degree() > static_cast<long>(d)) {
    throw std::invalid_argument("reciprocal: degree " + std::to_string(f.degree()) +
                                " exceeds " + std::to_string(d));
  }
  std::vector<Rational> out(d + 1);
  for (std::size_t i = 0; i < f.coefficients().size(); ++i) out[d - i] = f.coefficients()[i];
  return DensePolynomial(std::move(out));
}

DensePolynomial scale_argument(const DensePolynomial& f, const Rational& lambda) {
  if (lambda.is_zero()) throw std::domain_error("scale_argument: lambda must be nonzero");
  if (f.is_zero()) return f;
  const auto deg = static_cast<std::size_t>(f.degree());
  std::vector<Rational> out(deg + 1);
  Rational power(1);
  // c_i * lambda^{deg - i}, filled from the top down
  for (std::size_t k = 0; k <= deg; ++k) {
    out[deg - k] = f.coefficients()[deg - k] * power;
    power *= lambda;
  }
  return DensePolynomial(std::move(out));
}

PolynomialDivision divide(const DensePolynomial& dividend, const DensePolynomial& divisor) {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = dividend.coefficients();
  const long dd = divisor.degree();
  if (dividend.degree() < dd) return {DensePolynomial(), dividend};
  std::vector<Rational> quot(static_cast<std::size_t>(dividend.degree() - dd + 1));
  const Rational lead = divisor.leading();
  for (long i = dividend.degree(); i >= dd; --i) {
    const Rational factor = rem[static_cast<std::size_t>(i)] / lead;
    quot[static_cast<std::size_t>(i - dd)] = factor;
    if (factor.is_zero()) continue;
    for (long j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(i - dd + j)] -= factor * divisor.coefficients()[static_cast<std::size_t>(j)];
    }
  }
  return {DensePolynomial(std::move(quot)), DensePolynomial(std::move(rem))};
}

}  // namespace prodrec
