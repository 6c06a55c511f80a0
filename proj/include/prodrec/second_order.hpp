#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "prodrec/polynomial.hpp"
#include "prodrec/relation.hpp"
#include "prodrec/sequences.hpp"

namespace prodrec {

/// Smallest k in [1, limit] with u_k = 0, if any.
std::optional<long> first_vanishing_u(const SecondOrderSpec& so, long limit);

/**
 * Generalized binomial coefficients (m|k)_u = u_m u_{m-1} ... u_{m-k+1} / (u_k ... u_1).
 *
 * Values are cached; lookups are safe from several threads.
 */
class UBinomialTable {
 public:
  explicit UBinomialTable(SecondOrderSpec so);

  const SecondOrderSpec& spec() const { return so_; }
  Rational u(long m) const { return u_(m); }

  /// Requires 0 <= k <= m and u_1 ... u_k != 0 (PreconditionError otherwise).
  Rational operator()(long m, long k) const;

 private:
  SecondOrderSpec so_;
  SequenceInstance u_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<long, long>, Rational> cache_;
};

Rational u_binomial(const SecondOrderSpec& so, long m, long k);

/// sum_{i=0}^{n+1} (-1)^i q^{i(i-1)/2} (n+1|i)_u X(m-i) = 0. Requires u_1 ... u_{n+1} != 0.
RecurrenceRelation jarden_recurrence(const SecondOrderSpec& so, unsigned n);

/// X(m) - u_{k+1}^n X(m-k) = 0 for the smallest k >= 1 with u_k = 0.
RecurrenceRelation degenerate_recurrence(const SecondOrderSpec& so, unsigned n);

/// sum_{i=0}^{v} (-1)^i q^{i(i-1)/2} (v|i)_u x^i, ascending. Requires u_1 ... u_v != 0.
DensePolynomial galois_polynomial(const SecondOrderSpec& so, unsigned v);

struct ProductCharPoly {
  unsigned n = 0;
  SecondOrderSpec so;
  DensePolynomial poly;  // monic, degree n + 1
};

/// prod_{j=0}^{n} (x - alpha^j beta^{n-j}) expanded in Q[alpha]; every alpha-component must cancel.
ProductCharPoly product_char_poly(const SecondOrderSpec& so, unsigned n);

struct ExtremalFactorization {
  DensePolynomial quadratic;  // x^2 - V_n x + q^n
  DensePolynomial cofactor;
};

/// Splits off the factor (x - alpha^n)(x - beta^n) from product_char_poly(so, n).
ExtremalFactorization factor_extremal_quadratic(const SecondOrderSpec& so, unsigned n);

/// psi_n(x) == (x^2 - V_n x + q^n) q^{n-1} psi_{n-2}(x/q) with psi = product_char_poly.
bool verify_42_recursion(const SecondOrderSpec& so, unsigned n);

struct LucasIdentityRow {
  long n = 0;
  Rational residual;     // V_n^2 - (p^2 - 4q) u_n^2 - 4 q^n
  Rational witness;      // u_n
  bool square_form = false;  // V_n^2 - 4 q^n == (p^2 - 4q) witness^2
};

/// The (p, q) generalization of L_n^2 - 5 F_n^2 = 4(-1)^n over n in [first, last].
std::vector<LucasIdentityRow> lucas_identity_check(const SecondOrderSpec& so, long first, long last);

/// Fibonacci/Lucas instance (p, q) = (1, -1).
std::vector<LucasIdentityRow> fib_lucas_identity_check(long first, long last);

}  // namespace prodrec
