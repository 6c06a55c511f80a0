#include "prodrec/quadratic.hpp"

#include <stdexcept>

namespace prodrec {

QuadraticRingElement::QuadraticRingElement(QuadraticContext ctx, Rational c0, Rational c1)
    : ctx_(std::move(ctx)), c0_(std::move(c0)), c1_(std::move(c1)) {}

void QuadraticRingElement::require_same_context(const QuadraticRingElement& rhs) const {
  if (!(ctx_ == rhs.ctx_)) throw std::invalid_argument("quadratic ring: context mismatch");
}

QuadraticRingElement QuadraticRingElement::conjugate() const {
  // c0 + c1 (p - alpha)
  return {ctx_, c0_ + c1_ * ctx_.p, -c1_};
}

Rational QuadraticRingElement::norm() const {
  return c0_ * c0_ + ctx_.p * c0_ * c1_ + ctx_.q * c1_ * c1_;
}

Rational QuadraticRingElement::trace() const { return Rational(2) * c0_ + ctx_.p * c1_; }

QuadraticRingElement& QuadraticRingElement::operator+=(const QuadraticRingElement& rhs) {
  require_same_context(rhs);
  c0_ += rhs.c0_;
  c1_ += rhs.c1_;
  return *this;
}

QuadraticRingElement& QuadraticRingElement::operator-=(const QuadraticRingElement& rhs) {
  require_same_context(rhs);
  c0_ -= rhs.c0_;
  c1_ -= rhs.c1_;
  return *this;
}

QuadraticRingElement& QuadraticRingElement::operator*=(const QuadraticRingElement& rhs) {
  require_same_context(rhs);
  const Rational cross = c1_ * rhs.c1_;  // coefficient of alpha^2 = p alpha - q
  Rational n0 = c0_ * rhs.c0_ - ctx_.q * cross;
  Rational n1 = c0_ * rhs.c1_ + c1_ * rhs.c0_ + ctx_.p * cross;
  c0_ = std::move(n0);
  c1_ = std::move(n1);
  return *this;
}

std::string QuadraticRingElement::to_string() const {
  return c0_.to_string() + " + " + c1_.to_string() + "*alpha";
}

QuadraticRingElement pow(const QuadraticRingElement& e, unsigned long k) {
  QuadraticRingElement result(e.context(), 1);
  QuadraticRingElement base = e;
  for (; k > 0; k >>= 1) {
    if (k & 1UL) result *= base;
    if (k > 1) base *= base;
  }
  return result;
}

}  // namespace prodrec
