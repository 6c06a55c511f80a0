#include <doctest.h>

#include <random>

#include "prodrec/errors.hpp"
#include "prodrec/product_recurrence.hpp"
#include "prodrec/second_order.hpp"
#include "test_support.hpp"

using namespace prodrec;
using prodrec::testing::random_small_rational;

namespace {

RecurrenceRelation rel(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return RecurrenceRelation(std::move(v));
}

DensePolynomial poly(std::initializer_list<long> ascending) {
  std::vector<Rational> v;
  for (long x : ascending) v.emplace_back(x);
  return DensePolynomial(std::move(v));
}

// Order-3 relation for squares.
RecurrenceRelation squares_relation(const SecondOrderSpec& so) {
  const Rational& p = so.p;
  const Rational& q = so.q;
  return RecurrenceRelation({1, -(p * p - q), -(q * q - p * p * q), -(q * q * q)});
}

bool nonvanishing(const SecondOrderSpec& so, long upto) { return !first_vanishing_u(so, upto).has_value(); }

const SecondOrderSpec kFib{1, -1};

}  // namespace

TEST_CASE("u-binomial examples") {
  CHECK(u_binomial(kFib, 5, 2) == Rational(15));
  CHECK(u_binomial(kFib, 4, 0) == Rational(1));
  CHECK(u_binomial(kFib, 6, 6) == Rational(1));
  CHECK(u_binomial(SecondOrderSpec{2, 1}, 5, 2) == Rational(10));
  CHECK(u_binomial(SecondOrderSpec{3, 2}, 4, 2) == Rational(35));
  CHECK_THROWS_AS(u_binomial(SecondOrderSpec{2, 4}, 5, 3), PreconditionError);
}

TEST_CASE("u-binomial is symmetric and reduces to binomials at p=2, q=1") {
  const UBinomialTable table(SecondOrderSpec{2, 1});
  long binom = 1;
  for (long k = 0; k <= 8; ++k) {
    CHECK(table(8, k) == Rational(binom));
    binom = binom * (8 - k) / (k + 1);
  }
  const UBinomialTable fib(kFib);
  for (long m = 0; m <= 12; ++m)
    for (long k = 0; k <= m; ++k) CHECK(fib(m, k) == fib(m, m - k));
}

TEST_CASE("jarden examples") {
  CHECK(jarden_recurrence(kFib, 2) == rel({1, -2, -2, 1}));
  CHECK(jarden_recurrence(kFib, 3) == rel({1, -3, -6, 3, 1}));
  CHECK(jarden_recurrence(kFib, 1) == rel({1, -1, -1}));
  CHECK(jarden_recurrence(SecondOrderSpec{3, 2}, 2) == squares_relation(SecondOrderSpec{3, 2}));
  CHECK_THROWS_AS(jarden_recurrence(SecondOrderSpec{2, 4}, 3), PreconditionError);
  CHECK_THROWS_AS(jarden_recurrence(SecondOrderSpec{0, 1}, 1), PreconditionError);
}

TEST_CASE("degenerate examples") {
  CHECK(degenerate_recurrence(SecondOrderSpec{2, 4}, 3) == rel({1, 0, 0, 512}));
  CHECK(degenerate_recurrence(SecondOrderSpec{0, 1}, 2) == rel({1, 0, -1}));
  CHECK(degenerate_recurrence(SecondOrderSpec{2, 4}, 1) == rel({1, 0, 0, 8}));
  CHECK_THROWS_AS(degenerate_recurrence(kFib, 3), PreconditionError);
}

TEST_CASE("galois polynomial examples") {
  CHECK(galois_polynomial(kFib, 2) == poly({1, -1, -1}));
  CHECK(galois_polynomial(kFib, 3) == poly({1, -2, -2, 1}));
  CHECK(galois_polynomial(kFib, 0) == poly({1}));
}

TEST_CASE("product characteristic polynomial examples") {
  CHECK(product_char_poly(kFib, 1).poly == poly({-1, -1, 1}));
  CHECK(product_char_poly(kFib, 2).poly == poly({1, -2, -2, 1}));
  CHECK(product_char_poly(SecondOrderSpec{2, 1}, 3).poly == poly({1, -4, 6, -4, 1}));
  // roots -8, -8 and 8 e^{+-i pi/3}
  CHECK(product_char_poly(SecondOrderSpec{2, 4}, 3).poly == poly({4096, 512, 0, 8, 1}));
  CHECK_THROWS_AS(product_char_poly(SecondOrderSpec{1, 0}, 2), PreconditionError);
}

TEST_CASE("extremal quadratic factor") {
  const auto f = factor_extremal_quadratic(kFib, 2);
  CHECK(f.quadratic == poly({1, -3, 1}));
  CHECK(f.cofactor == poly({1, 1}));
  for (long p = -2; p <= 3; ++p) {
    for (long q = -2; q <= 2; ++q) {
      if (q == 0) continue;
      const SecondOrderSpec so{p, q};
      for (unsigned n = 1; n <= 10; ++n) {
        const auto x = factor_extremal_quadratic(so, n);
        CHECK(x.quadratic * x.cofactor == product_char_poly(so, n).poly);
        CHECK(x.quadratic == poly({0, 0, 1}) - DensePolynomial({0, lucas_companion(so, n)}) +
                                 DensePolynomial({so.q.pow(n)}));
      }
    }
  }
}

TEST_CASE("psi recursion") {
  CHECK(verify_42_recursion(kFib, 2));
  CHECK(verify_42_recursion(kFib, 3));
  CHECK(verify_42_recursion(SecondOrderSpec{2, 3}, 4));
  for (long p = -3; p <= 3; ++p)
    for (long q = -3; q <= 3; ++q)
      if (q != 0)
        for (unsigned n = 2; n <= 10; ++n) CHECK(verify_42_recursion(SecondOrderSpec{p, q}, n));
}

TEST_CASE("Fibonacci and Lucas rows") {
  const auto rows = fib_lucas_identity_check(0, 2);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].witness == Rational(0));
  CHECK(rows[1].witness == Rational(1));
  CHECK(rows[2].witness == Rational(1));
  for (const auto& r : fib_lucas_identity_check(0, 50)) {
    CHECK(r.residual.is_zero());
    CHECK(r.square_form);
  }
  std::mt19937_64 rng(31);
  for (int t = 0; t < 20; ++t) {
    const SecondOrderSpec so{random_small_rational(rng, 4, 3), random_small_rational(rng, 4, 3)};
    for (const auto& r : lucas_identity_check(so, 0, 30)) CHECK(r.residual.is_zero());
  }
}

TEST_CASE("Fibonacci and Lucas squares share the order-3 relation") {
  const auto relation = squares_relation(kFib);
  const auto f = generalized_fibonacci(kFib, 0, 1);
  const auto l = lucas_sequence(kFib);
  const std::vector<SequenceInstance> ff{f, f};
  const std::vector<SequenceInstance> ll{l, l};
  CHECK(verify_relation(relation, product_sample(ff, -10, 40), -7, 40));
  CHECK(verify_relation(relation, product_sample(ll, -10, 40), -7, 40));
  for (long m = 0; m <= 40; ++m) {
    const Rational lm = l(m);
    const Rational fm = f(m);
    CHECK(lm * lm - Rational(4) * Rational(-1).pow(m) == Rational(5) * fm * fm);
  }
}

TEST_CASE("jarden agrees with the general engine") {
  for (long p = -3; p <= 3; ++p) {
    for (long q = -3; q <= 3; ++q) {
      if (q == 0) continue;
      const SecondOrderSpec so{p, q};
      for (unsigned n = 1; n <= 5; ++n) {
        if (!nonvanishing(so, n + 1)) continue;
        const auto j = jarden_recurrence(so, n);
        CHECK(j.proportional_to(derive_product_recurrence(so.to_spec(), n).relation));
      }
    }
  }
}

TEST_CASE("reversal and coefficient identities") {
  for (long p = -3; p <= 3; ++p) {
    for (long q = -3; q <= 3; ++q) {
      if (q == 0) continue;
      const SecondOrderSpec so{p, q};
      for (unsigned v = 1; v <= 6; ++v) {
        if (!nonvanishing(so, v)) continue;
        CHECK(reciprocal(galois_polynomial(so, v), v) == product_char_poly(so, v - 1).poly);
        auto desc = product_char_poly(so, v - 1).poly.coefficients();
        std::reverse(desc.begin(), desc.end());
        if (v >= 2) CHECK(RecurrenceRelation(desc) == jarden_recurrence(so, v - 1));
      }
    }
  }
}

TEST_CASE("degenerate relation annihilates powers of u in both directions") {
  for (long p = -3; p <= 3; ++p) {
    for (long q = -4; q <= 4; ++q) {
      if (q == 0) continue;
      const SecondOrderSpec so{p, q};
      if (nonvanishing(so, 6)) continue;
      const auto u = fundamental(so.to_spec());
      for (unsigned n = 1; n <= 5; ++n) {
        const auto d = degenerate_recurrence(so, n);
        const std::vector<SequenceInstance> factors(n, u);
        CHECK(verify_relation(d, product_sample(factors, -20, 30), -20 + static_cast<long>(d.order()), 30));
      }
    }
  }
}

TEST_CASE("doubled index, shifted products and q powers satisfy the squares relation") {
  std::mt19937_64 rng(1313);
  for (int t = 0; t < 25; ++t) {
    SecondOrderSpec so{random_small_rational(rng, 3, 2), random_small_rational(rng, 3, 2)};
    if (so.q.is_zero()) so.q = 1;
    const auto w = generalized_fibonacci(so, random_small_rational(rng, 5, 1), random_small_rational(rng, 5, 1));
    const long r = static_cast<long>(rng() % 11) - 5;
    const auto relation = squares_relation(so);
    std::vector<Rational> a, b, c;
    for (long m = 0; m <= 40; ++m) {
      a.push_back(w(2 * m));
      b.push_back(w(m) * w(m + r));
      c.push_back(so.q.pow(m));
    }
    CHECK(verify_relation(relation, SampledSequence(0, a), 3, 40));
    CHECK(verify_relation(relation, SampledSequence(0, b), 3, 40));
    CHECK(verify_relation(relation, SampledSequence(0, c), 3, 40));
  }
}
