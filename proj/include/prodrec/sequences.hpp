#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "prodrec/quadratic.hpp"
#include "prodrec/rational.hpp"

namespace prodrec {

/**
 * Constant-coefficient linear recurrence of order s:
 *
 *   x(m) = A_1 x(m-1) + A_2 x(m-2) + ... + A_s x(m-s)
 *
 * At least one A_i is nonzero. Backward evaluation needs A_s != 0.
 */
class RecurrenceSpec {
 public:
  explicit RecurrenceSpec(std::vector<Rational> coefficients);

  /// "1,1" (A_1..A_s) or the second-order shorthand "p=1,q=-1".
  static RecurrenceSpec parse(std::string_view text);

  std::size_t order() const { return coeffs_.size(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// A_i, 1-based; zero for i outside 1..s.
  Rational coefficient(std::size_t i) const;
  bool backward_extensible() const { return !coeffs_.back().is_zero(); }
  bool has_integer_coefficients() const;

  std::string to_string() const;

  friend bool operator==(const RecurrenceSpec&, const RecurrenceSpec&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// W_m = p W_{m-1} - q W_{m-2}.
struct SecondOrderSpec {
  Rational p;
  Rational q;

  /// Accepts "p=1,q=-1" or the coefficient form "1,1" of an order-2 spec.
  static SecondOrderSpec parse(std::string_view text);

  RecurrenceSpec to_spec() const { return RecurrenceSpec({p, -q}); }
  QuadraticContext ring() const { return {p, q}; }
  std::string to_string() const;

  friend bool operator==(const SecondOrderSpec&, const SecondOrderSpec&) = default;
};

/**
 * One solution of a RecurrenceSpec, fixed by s initial values at indices
 * window_base .. window_base + s - 1.
 *
 * Values are memoized in a window that grows on demand in both directions. Copies share the
 * cache; the cache is guarded by a mutex so concurrent reads are safe.
 */
class SequenceInstance {
 public:
  SequenceInstance(RecurrenceSpec spec, long window_base, std::vector<Rational> initial);

  const RecurrenceSpec& spec() const { return spec_; }
  long window_base() const { return window_base_; }
  const std::vector<Rational>& initial_values() const { return initial_; }

  /// x(m). Throws PreconditionError when m lies below the window and A_s = 0.
  Rational operator()(long m) const;
  Rational at(long m) const { return (*this)(m); }

  /// x(first), ..., x(last).
  std::vector<Rational> values(long first, long last) const;

 private:
  struct Cache;

  RecurrenceSpec spec_;
  long window_base_;
  std::vector<Rational> initial_;
  std::shared_ptr<Cache> cache_;
};

/// The fundamental solution u: u(1) = 1 and u(0) = u(-1) = ... = u(2-s) = 0.
SequenceInstance fundamental(const RecurrenceSpec& spec);

/// The same sequence indexed with u(1) = ... = u(s-1) = 0, u(s) = 1, i.e. u(m - s + 1).
SequenceInstance fundamental_leading_unit(const RecurrenceSpec& spec);

/// Generalized Fibonacci W(a, b; p, q): W_0 = a, W_1 = b.
SequenceInstance generalized_fibonacci(const SecondOrderSpec& so, Rational a, Rational b);

/**
 * a_1(m), ..., a_s(m) such that x(m + r + 1) = sum_i a_i(m) x(r + 2 - i) for every solution x
 * and every r:
 *
 *   a_1(m) = u(m+1),  a_i(m) = A_i u(m) + A_{i+1} u(m-1) + ... + A_s u(m-s+i)  (i >= 2).
 *
 * `u` must be fundamental(spec).
 */
std::vector<Rational> shift_coefficients(const SequenceInstance& u, long m);
std::vector<Rational> shift_coefficients(const RecurrenceSpec& spec, long m);

/// V_m with V_0 = 2, V_1 = p, so V_m = alpha^m + beta^m.
SequenceInstance lucas_sequence(const SecondOrderSpec& so);
Rational lucas_companion(const SecondOrderSpec& so, long m);

/// Splits "a,b,c" into trimmed fields and parses each as a Rational.
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace prodrec
