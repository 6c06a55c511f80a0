#pragma once

#include <string>

#include "prodrec/rational.hpp"

namespace prodrec {

/// Parameters of the ring Q[alpha]/(alpha^2 - p alpha + q). alpha and beta = p - alpha are
/// the roots of x^2 - p x + q.
struct QuadraticContext {
  Rational p;
  Rational q;
  friend bool operator==(const QuadraticContext&, const QuadraticContext&) = default;
};

/// c0 + c1 * alpha with alpha^2 = p alpha - q.
class QuadraticRingElement {
 public:
  QuadraticRingElement(QuadraticContext ctx, Rational c0, Rational c1 = Rational());

  static QuadraticRingElement alpha(const QuadraticContext& ctx) { return {ctx, 0, 1}; }
  static QuadraticRingElement beta(const QuadraticContext& ctx) { return {ctx, ctx.p, -1}; }

  const Rational& c0() const { return c0_; }
  const Rational& c1() const { return c1_; }
  const QuadraticContext& context() const { return ctx_; }
  bool is_rational() const { return c1_.is_zero(); }

  /// Swaps alpha and beta.
  QuadraticRingElement conjugate() const;
  /// c0^2 + p c0 c1 + q c1^2, the element times its conjugate.
  Rational norm() const;
  Rational trace() const;

  QuadraticRingElement& operator+=(const QuadraticRingElement& rhs);
  QuadraticRingElement& operator-=(const QuadraticRingElement& rhs);
  QuadraticRingElement& operator*=(const QuadraticRingElement& rhs);
  friend QuadraticRingElement operator+(QuadraticRingElement a, const QuadraticRingElement& b) { return a += b; }
  friend QuadraticRingElement operator-(QuadraticRingElement a, const QuadraticRingElement& b) { return a -= b; }
  friend QuadraticRingElement operator*(QuadraticRingElement a, const QuadraticRingElement& b) { return a *= b; }
  QuadraticRingElement operator-() const { return {ctx_, -c0_, -c1_}; }

  friend bool operator==(const QuadraticRingElement&, const QuadraticRingElement&) = default;

  std::string to_string() const;

 private:
  void require_same_context(const QuadraticRingElement& rhs) const;

  QuadraticContext ctx_;
  Rational c0_;
  Rational c1_;
};

/// e^k by repeated squaring.
QuadraticRingElement pow(const QuadraticRingElement& e, unsigned long k);

inline QuadraticRingElement quad_mul(const QuadraticRingElement& a, const QuadraticRingElement& b) { return a * b; }
inline QuadraticRingElement quad_pow(const QuadraticRingElement& e, unsigned long k) { return pow(e, k); }
inline QuadraticRingElement quad_conjugate(const QuadraticRingElement& e) { return e.conjugate(); }

}  // namespace prodrec
