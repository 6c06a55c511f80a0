#include "prodrec/second_order.hpp"

#include <stdexcept>
#include <string>

#include "prodrec/errors.hpp"
#include "prodrec/quadratic.hpp"

namespace prodrec {
namespace {

// Over Q a vanishing u_k (k >= 2) means alpha/beta is a root of unity of order k in a quadratic
// field, so k is one of 2, 3, 4, 6.
constexpr long kVanishingSearchFloor = 6;

void require_nonzero_u(const UBinomialTable& table, long upto) {
  for (long k = 1; k <= upto; ++k) {
    if (table.u(k).is_zero()) {
      throw PreconditionError("u_" + std::to_string(k) + " = 0: use the degenerate recurrence");
    }
  }
}

// (-1)^i q^{i(i-1)/2} (top|i)_u for i = 0..top.
std::vector<Rational> signed_binomial_row(const UBinomialTable& table, long top) {
  const Rational& q = table.spec().q;
  std::vector<Rational> c;
  c.reserve(static_cast<std::size_t>(top + 1));
  for (long i = 0; i <= top; ++i) {
    Rational v = q.pow(i * (i - 1) / 2) * table(top, i);
    c.push_back(i % 2 ? -v : v);
  }
  return c;
}

void require_q_nonzero(const SecondOrderSpec& so, const char* op) {
  if (so.q.is_zero()) throw PreconditionError(std::string(op) + ": requires q != 0");
}

}  // namespace

std::optional<long> first_vanishing_u(const SecondOrderSpec& so, long limit) {
  const SequenceInstance u = fundamental(so.to_spec());
  for (long k = 1; k <= limit; ++k) {
    if (u(k).is_zero()) return k;
  }
  return std::nullopt;
}

UBinomialTable::UBinomialTable(SecondOrderSpec so) : so_(std::move(so)), u_(fundamental(so_.to_spec())) {}

Rational UBinomialTable::operator()(long m, long k) const {
  if (k < 0 || k > m) {
    throw std::invalid_argument("u-binomial (" + std::to_string(m) + "|" + std::to_string(k) +
                                ") needs 0 <= k <= m");
  }
  if (k == 0) return Rational(1);
  {
    std::lock_guard lock(mutex_);
    if (auto it = cache_.find({m, k}); it != cache_.end()) return it->second;
  }
  Rational num(1);
  Rational den(1);
  for (long i = 0; i < k; ++i) {
    const Rational d = u_(k - i);
    if (d.is_zero()) {
      throw PreconditionError("u-binomial (" + std::to_string(m) + "|" + std::to_string(k) + "): u_" +
                              std::to_string(k - i) + " = 0");
    }
    num *= u_(m - i);
    den *= d;
  }
  Rational value = num / den;
  std::lock_guard lock(mutex_);
  cache_.emplace(std::make_pair(m, k), value);
  return value;
}

Rational u_binomial(const SecondOrderSpec& so, long m, long k) { return UBinomialTable(so)(m, k); }

RecurrenceRelation jarden_recurrence(const SecondOrderSpec& so, unsigned n) {
  if (n < 1) throw std::invalid_argument("jarden_recurrence: n must be >= 1");
  const UBinomialTable table(so);
  require_nonzero_u(table, static_cast<long>(n) + 1);
  return RecurrenceRelation(signed_binomial_row(table, static_cast<long>(n) + 1));
}

RecurrenceRelation degenerate_recurrence(const SecondOrderSpec& so, unsigned n) {
  if (n < 1) throw std::invalid_argument("degenerate_recurrence: n must be >= 1");
  const long limit = std::max<long>(static_cast<long>(n) + 1, kVanishingSearchFloor);
  const auto k = first_vanishing_u(so, limit);
  if (!k) {
    throw PreconditionError("degenerate_recurrence: u_1 ... u_" + std::to_string(limit) +
                            " are all nonzero; use the Jarden recurrence");
  }
  const SequenceInstance u = fundamental(so.to_spec());
  std::vector<Rational> c(static_cast<std::size_t>(*k) + 1);
  c.front() = 1;
  c.back() = -u(*k + 1).pow(n);
  return RecurrenceRelation(std::move(c));
}

DensePolynomial galois_polynomial(const SecondOrderSpec& so, unsigned v) {
  const UBinomialTable table(so);
  require_nonzero_u(table, static_cast<long>(v));
  return DensePolynomial(signed_binomial_row(table, static_cast<long>(v)));
}

ProductCharPoly product_char_poly(const SecondOrderSpec& so, unsigned n) {
  require_q_nonzero(so, "product_char_poly");
  const QuadraticContext ctx = so.ring();
  const auto alpha = QuadraticRingElement::alpha(ctx);
  const auto beta = QuadraticRingElement::beta(ctx);
  // Coefficients in Q[alpha], ascending; start from the constant 1.
  std::vector<QuadraticRingElement> acc{QuadraticRingElement(ctx, 1)};
  for (unsigned j = 0; j <= n; ++j) {
    const QuadraticRingElement root = pow(alpha, j) * pow(beta, n - j);
    std::vector<QuadraticRingElement> next(acc.size() + 1, QuadraticRingElement(ctx, 0));
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i + 1] += acc[i];
      next[i] -= acc[i] * root;
    }
    acc = std::move(next);
  }
  std::vector<Rational> coeffs;
  coeffs.reserve(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) {
    if (!acc[i].is_rational()) {
      throw ConsistencyError("product_char_poly: coefficient of x^" + std::to_string(i) +
                             " keeps alpha-component " + acc[i].c1().to_string());
    }
    coeffs.push_back(acc[i].c0());
  }
  return {n, so, DensePolynomial(std::move(coeffs))};
}

ExtremalFactorization factor_extremal_quadratic(const SecondOrderSpec& so, unsigned n) {
  require_q_nonzero(so, "factor_extremal_quadratic");
  if (n < 1) throw std::invalid_argument("factor_extremal_quadratic: n must be >= 1");
  const DensePolynomial psi = product_char_poly(so, n).poly;
  DensePolynomial quadratic({so.q.pow(n), -lucas_companion(so, n), Rational(1)});
  auto [quotient, remainder] = divide(psi, quadratic);
  if (!remainder.is_zero()) {
    throw ConsistencyError("factor_extremal_quadratic: remainder " + remainder.to_string() +
                           " dividing " + psi.to_string() + " by " + quadratic.to_string());
  }
  return {std::move(quadratic), std::move(quotient)};
}

bool verify_42_recursion(const SecondOrderSpec& so, unsigned n) {
  if (n < 2) throw std::invalid_argument("verify_42_recursion: n must be >= 2");
  require_q_nonzero(so, "verify_42_recursion");
  const DensePolynomial lhs = product_char_poly(so, n).poly;
  const DensePolynomial quadratic({so.q.pow(n), -lucas_companion(so, n), Rational(1)});
  const DensePolynomial inner = scale_argument(product_char_poly(so, n - 2).poly, so.q);
  return lhs == quadratic * inner;
}

std::vector<LucasIdentityRow> lucas_identity_check(const SecondOrderSpec& so, long first, long last) {
  if (first < 0) require_q_nonzero(so, "lucas_identity_check at negative n");
  const SequenceInstance u = fundamental(so.to_spec());
  const SequenceInstance v = lucas_sequence(so);
  const Rational disc = so.p * so.p - Rational(4) * so.q;
  std::vector<LucasIdentityRow> rows;
  for (long n = first; n <= last; ++n) {
    const Rational vn = v(n);
    const Rational un = u(n);
    const Rational four_qn = Rational(4) * so.q.pow(n);
    LucasIdentityRow row;
    row.n = n;
    row.residual = vn * vn - disc * un * un - four_qn;
    row.witness = un;
    row.square_form = (vn * vn - four_qn) == disc * un * un;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<LucasIdentityRow> fib_lucas_identity_check(long first, long last) {
  return lucas_identity_check(SecondOrderSpec{1, -1}, first, last);
}

}  // namespace prodrec
