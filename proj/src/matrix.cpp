#include "prodrec/matrix.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "prodrec/errors.hpp"

namespace prodrec {
namespace {

void require_square(const RationalMatrix& m, const char* op) {
  if (!m.is_square()) {
    throw std::invalid_argument(std::string(op) + ": matrix is " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + ", not square");
  }
}

// Integer matrix with each row cleared of denominators. scale collects the product of the
// row multipliers so that det(original) = det(integer) / scale.
struct IntegerRows {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<mpz_class> a;
  mpz_class scale = 1;

  mpz_class& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
};

IntegerRows clear_denominators(const RationalMatrix& m) {
  IntegerRows out{m.rows(), m.cols(), std::vector<mpz_class>(m.rows() * m.cols()), 1};
  for (std::size_t r = 0; r < m.rows(); ++r) {
    mpz_class l = 1;
    for (const auto& e : m.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.raw().get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& e = m(r, c).raw();
      out.at(r, c) = e.get_num() * (l / e.get_den());
    }
    out.scale *= l;
  }
  return out;
}

// Fraction-free forward elimination with column skipping. Returns the pivot count; `sign`
// tracks row swaps and `last_pivot` is the final pivot (the determinant when square and full).
std::size_t bareiss(IntegerRows& m, int& sign, mpz_class& last_pivot) {
  sign = 1;
  mpz_class prev = 1;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < m.cols && pivot_row < m.rows; ++col) {
    std::size_t sel = pivot_row;
    while (sel < m.rows && m.at(sel, col) == 0) ++sel;
    if (sel == m.rows) continue;
    if (sel != pivot_row) {
      for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(sel, c), m.at(pivot_row, c));
      sign = -sign;
    }
    const mpz_class pivot = m.at(pivot_row, col);
    for (std::size_t r = pivot_row + 1; r < m.rows; ++r) {
      const mpz_class lead = m.at(r, col);
      for (std::size_t c = col + 1; c < m.cols; ++c) {
        mpz_class v = pivot * m.at(r, c) - lead * m.at(pivot_row, c);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m.at(r, c) = std::move(v);
      }
      m.at(r, col) = 0;
    }
    prev = pivot;
    ++pivot_row;
  }
  last_pivot = prev;
  return pivot_row;
}

// Reduced row echelon form over Q; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    }
    const Rational inv = m(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rational f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw std::invalid_argument("RationalMatrix: entry count does not match shape");
  }
}

RationalMatrix RationalMatrix::from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
  const std::size_t cols = rows.size() == 0 ? 0 : rows.begin()->size();
  std::vector<Rational> e;
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("RationalMatrix: ragged rows");
    e.insert(e.end(), r.begin(), r.end());
  }
  return RationalMatrix(rows.size(), cols, std::move(e));
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  std::vector<Rational> e;
  e.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw std::invalid_argument("RationalMatrix: ragged rows");
    e.insert(e.end(), r.begin(), r.end());
  }
  return RationalMatrix(rows.size(), cols, std::move(e));
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool RationalMatrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!e.is_zero()) return false;
  }
  return true;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

RationalMatrix RationalMatrix::top_rows(std::size_t count) const {
  if (count > rows_) throw std::out_of_range("top_rows: not enough rows");
  return RationalMatrix(count, cols_,
                        std::vector<Rational>(entries_.begin(), entries_.begin() + count * cols_));
}

RationalMatrix RationalMatrix::minor_matrix(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw std::out_of_range("minor_matrix: index out of range");
  RationalMatrix out(rows_ - 1, cols_ - 1);
  for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
    if (i == r) continue;
    for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
      if (j == c) continue;
      out(oi, oj++) = (*this)(i, j);
    }
    ++oi;
  }
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  RationalMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  RationalMatrix out = a;
  for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
  return out;
}

RationalMatrix operator*(const Rational& s, RationalMatrix m) {
  for (auto& e : m.entries_) e *= s;
  return m;
}

RationalVector operator*(std::span<const Rational> v, const RationalMatrix& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("vector-matrix product: shape mismatch");
  RationalVector out(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (v[r].is_zero()) continue;
    for (std::size_t c = 0; c < m.cols(); ++c) out[c] += v[r] * m(r, c);
  }
  return out;
}

std::string RationalMatrix::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c);
    os << ']';
  }
  os << ']';
  return os.str();
}

Rational det(const RationalMatrix& m) {
  require_square(m, "det");
  if (m.rows() == 0) return Rational(1);
  IntegerRows ints = clear_denominators(m);
  int sign = 1;
  mpz_class last;
  if (bareiss(ints, sign, last) < m.rows()) return Rational();
  return Rational(mpz_class(sign * last), ints.scale);
}

std::size_t rank(const RationalMatrix& m) {
  IntegerRows ints = clear_denominators(m);
  int sign = 1;
  mpz_class last;
  return bareiss(ints, sign, last);
}

std::vector<RationalVector> right_nullspace(const RationalMatrix& m) {
  RationalMatrix reduced = m;
  const auto pivots = rref(reduced);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -reduced(i, free);
    basis.push_back(primitive_integer_form(std::move(v)));
  }
  return basis;
}

std::vector<RationalVector> left_nullspace(const RationalMatrix& m) {
  return right_nullspace(m.transpose());
}

RationalMatrix inverse(const RationalMatrix& m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const auto pivots = rref(aug);
  if (pivots.size() < n || (n > 0 && pivots[n - 1] != n - 1)) {
    throw std::domain_error("inverse: matrix is singular");
  }
  RationalMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = aug(r, n + c);
  }
  return out;
}

RationalMatrix power(const RationalMatrix& m, long e) {
  require_square(m, "power");
  if (e < 0) return power(inverse(m), -e);
  RationalMatrix result = RationalMatrix::identity(m.rows());
  RationalMatrix base = m;
  for (auto k = static_cast<unsigned long>(e); k > 0; k >>= 1) {
    if (k & 1UL) result = result * base;
    if (k > 1) base = base * base;
  }
  return result;
}

DensePolynomial char_poly(const RationalMatrix& m) {
  require_square(m, "char_poly");
  // Faddeev-LeVerrier: N_k = m N_{k-1} + c_{n-k+1} I, c_{n-k} = -tr(m N_k) / k.
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  RationalMatrix acc(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    acc = m * acc;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[n - k + 1];
    const RationalMatrix prod = m * acc;
    Rational trace;
    for (std::size_t i = 0; i < n; ++i) trace += prod(i, i);
    c[n - k] = -trace / Rational(static_cast<long>(k));
  }
  return DensePolynomial(std::move(c));
}

RationalVector primitive_integer_form(RationalVector v) {
  mpz_class l = 1;
  for (const auto& e : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.raw().get_den_mpz_t());
  mpz_class g = 0;
  std::vector<mpz_class> ints;
  ints.reserve(v.size());
  for (const auto& e : v) {
    ints.push_back(e.raw().get_num() * (l / e.raw().get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  if (g == 0) return v;
  int lead_sign = 0;
  for (const auto& x : ints) {
    if (x != 0) { lead_sign = sgn(x); break; }
  }
  if (lead_sign < 0) g = -g;
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rational(mpz_class(ints[i] / g));
  return v;
}

}  // namespace prodrec
