#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "prodrec/matrix.hpp"
#include "prodrec/relation.hpp"
#include "prodrec/sequences.hpp"

namespace prodrec {

/// Multinomial exponents (e_1, ..., e_s), sum n, with at least two nonzero entries.
using ExponentTuple = std::vector<unsigned>;

/// All exponent tuples for (n, s) in ascending lexicographic order.
std::vector<ExponentTuple> delta_set(unsigned n, std::size_t s);

/// |delta_set(n, s)| = C(n+s-1, n) - s.
std::size_t delta_size(unsigned n, std::size_t s);

/// (k+1) x k matrix with entry (m-1, col) = prod_i a_i(m)^{e_i} for m = 1..k+1, where col
/// indexes delta_set(n, s) and a_i are the shift coefficients.
RationalMatrix monomial_matrix(const RecurrenceSpec& spec, unsigned n);

struct DerivationReport {
  RecurrenceRelation relation;
  std::size_t k = 0;        // |delta_set|
  std::size_t rank = 0;     // rank of the monomial matrix
  std::size_t nullity = 0;  // k + 1 - rank
  RationalVector tau;       // chosen left-null vector, k + 1 entries
};

/**
 * Recurrence satisfied by every product X(m) = x_1(m) ... x_n(m) of n solutions of `spec`.
 *
 * Takes a left-null vector tau of the monomial matrix and reads the relation off
 *
 *   sum_j tau_j [ X(r+2+j) - sum_i a_i(1+j)^n X(r+2-i) ] = 0.
 *
 * tau is the unique (up to scale) dependency among the shortest dependent prefix of rows, so
 * the highest row index it touches is as small as possible. The output is monic, or primitive
 * integer when the spec has integer coefficients and the monic form is not integral.
 */
DerivationReport derive_product_recurrence(const RecurrenceSpec& spec, unsigned n);

/// Full (k+1) x (k+1) matrix: first column c(m) = X(m+r+1) - sum_i a_i(m)^n X(r+2-i) for the
/// product of `factors`, remaining columns the monomial matrix.
RationalMatrix recurrence_matrix(const RecurrenceSpec& spec, unsigned n,
                                 std::span<const SequenceInstance> factors, long r);

/// det of the t x t matrix with row i = (X(k + i t + 1), ..., X(k + i t + t)), i = 0..t-1.
Rational hankel_check(const SampledSequence& values, std::size_t t, long k);

/// Least-order relation (order <= max_order) that annihilates values over the whole window
/// [first_m, last_m]. Needs a window of at least 2 max_order + 2 values.
std::optional<RecurrenceRelation> minimal_relation(const SampledSequence& values, std::size_t max_order,
                                                   long first_m, long last_m);

}  // namespace prodrec
