#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "prodrec/rational.hpp"
#include "prodrec/sequences.hpp"

namespace prodrec {

/**
 * sum_{j=0}^{t} c_j X(m - j) = 0, stored descending from X(m).
 *
 * c_0 != 0 and trailing zeros are trimmed, so c_t != 0 and order() == t.
 */
class RecurrenceRelation {
 public:
  explicit RecurrenceRelation(std::vector<Rational> coefficients);

  /// The defining relation of a spec: [1, -A_1, ..., -A_s].
  static RecurrenceRelation from_spec(const RecurrenceSpec& spec);

  std::size_t order() const { return coeffs_.size() - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  /// Leading coefficient 1.
  RecurrenceRelation monic() const;
  /// Coprime integers with a positive leading entry.
  RecurrenceRelation primitive() const;
  /// Monic, unless `integer_domain` and the monic form has a non-integer entry; then primitive.
  RecurrenceRelation normalized(bool integer_domain) const;

  bool proportional_to(const RecurrenceRelation& other) const;

  /// "[1,-2,-2,1]"
  std::string to_string() const;
  /// "X(m) = 2X(m-1) + 2X(m-2) - X(m-3)"
  std::string equation() const;

  friend bool operator==(const RecurrenceRelation&, const RecurrenceRelation&) = default;

 private:
  std::vector<Rational> coeffs_;
};

/// Finite window X(first), ..., X(first + size - 1) of a sequence.
class SampledSequence {
 public:
  SampledSequence(long first, std::vector<Rational> values);

  long first() const { return first_; }
  long last() const { return first_ + static_cast<long>(values_.size()) - 1; }
  bool contains(long m) const { return m >= first_ && m <= last(); }
  /// Throws std::out_of_range outside the window.
  const Rational& operator()(long m) const;
  const std::vector<Rational>& values() const { return values_; }

 private:
  long first_;
  std::vector<Rational> values_;
};

SampledSequence sample(const SequenceInstance& x, long first, long last);

/// Termwise product of the factors over [first, last].
SampledSequence product_sample(std::span<const SequenceInstance> factors, long first, long last);

/// sum_j c_j X(m - j).
Rational residual(const RecurrenceRelation& rel, const SampledSequence& values, long m);

/// True iff the residual vanishes for every m in [first_m, last_m]. Throws std::out_of_range
/// when the window does not cover [first_m - order, last_m].
bool verify_relation(const RecurrenceRelation& rel, const SampledSequence& values, long first_m, long last_m);

}  // namespace prodrec
