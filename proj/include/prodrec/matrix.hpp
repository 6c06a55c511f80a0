#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "prodrec/polynomial.hpp"
#include "prodrec/rational.hpp"

namespace prodrec {

using RationalVector = std::vector<Rational>;

/// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols);
  RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  static RationalMatrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows);
  static RationalMatrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);
  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
  std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  const std::vector<Rational>& entries() const { return entries_; }

  RationalMatrix transpose() const;
  /// The first `count` rows.
  RationalMatrix top_rows(std::size_t count) const;
  /// Copy with row `r` and column `c` removed.
  RationalMatrix minor_matrix(std::size_t r, std::size_t c) const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& s, RationalMatrix m);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Row vector times matrix.
RationalVector operator*(std::span<const Rational> v, const RationalMatrix& m);

/// Exact determinant by fraction-free (Bareiss) elimination. 0x0 has determinant 1.
Rational det(const RationalMatrix& m);

/// Rank by fraction-free elimination.
std::size_t rank(const RationalMatrix& m);

/// Basis of {x : m x = 0}; vectors in primitive integer form, first nonzero entry positive,
/// ordered by the free column they are pinned to.
std::vector<RationalVector> right_nullspace(const RationalMatrix& m);

/// Basis of {t : t m = 0}, same normalization as right_nullspace.
std::vector<RationalVector> left_nullspace(const RationalMatrix& m);

RationalMatrix inverse(const RationalMatrix& m);

/// m^e; negative exponents go through the inverse.
RationalMatrix power(const RationalMatrix& m, long e);

/// Monic det(xI - m).
DensePolynomial char_poly(const RationalMatrix& m);

/// Scale to coprime integers with the first nonzero entry positive. Zero stays zero.
RationalVector primitive_integer_form(RationalVector v);

}  // namespace prodrec
