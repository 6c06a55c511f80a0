#include <doctest.h>

#include <random>

#include "prodrec/product_recurrence.hpp"
#include "test_support.hpp"

using namespace prodrec;
using prodrec::testing::random_small_rational;

namespace {

RecurrenceRelation rel(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return RecurrenceRelation(std::move(v));
}

RecurrenceSpec random_spec(std::mt19937_64& rng, std::size_t s, bool allow_zero_tail) {
  std::vector<Rational> a;
  for (std::size_t i = 0; i < s; ++i) a.push_back(random_small_rational(rng, 2, 2));
  if (!allow_zero_tail && a.back().is_zero()) a.back() = -1;
  bool any = false;
  for (const auto& x : a) any = any || !x.is_zero();
  if (!any) a.front() = 1;
  return RecurrenceSpec(a);
}

std::vector<SequenceInstance> random_factors(std::mt19937_64& rng, const RecurrenceSpec& spec, unsigned n) {
  std::vector<SequenceInstance> out;
  for (unsigned i = 0; i < n; ++i) {
    std::vector<Rational> init;
    for (std::size_t j = 0; j < spec.order(); ++j) init.push_back(random_small_rational(rng, 5, 2));
    out.emplace_back(spec, 0, init);
  }
  return out;
}

SampledSequence squares(const SequenceInstance& x, long first, long last) {
  std::vector<SequenceInstance> f{x, x};
  return product_sample(f, first, last);
}

}  // namespace

TEST_CASE("delta_set examples") {
  CHECK(delta_set(2, 2) == std::vector<ExponentTuple>{{1, 1}});
  CHECK(delta_set(3, 2) == std::vector<ExponentTuple>{{1, 2}, {2, 1}});
  CHECK(delta_set(2, 3) == std::vector<ExponentTuple>{{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
  CHECK(delta_set(1, 4).empty());
  CHECK(delta_set(5, 1).empty());
}

TEST_CASE("delta_set size is the multinomial count minus the pure powers") {
  for (unsigned n = 1; n <= 6; ++n) {
    for (std::size_t s = 1; s <= 5; ++s) {
      const auto d = delta_set(n, s);
      CHECK(d.size() == delta_size(n, s));
      CHECK(std::is_sorted(d.begin(), d.end()));
      for (const auto& e : d) {
        unsigned sum = 0;
        std::size_t nonzero = 0;
        for (auto x : e) {
          sum += x;
          nonzero += x != 0;
        }
        CHECK(sum == n);
        CHECK(nonzero >= 2);
      }
    }
  }
}

TEST_CASE("monomial_matrix examples") {
  const auto fib = SecondOrderSpec{1, -1}.to_spec();
  CHECK(monomial_matrix(fib, 2) == RationalMatrix::from_rows({{1}, {2}}));

  const auto one = monomial_matrix(RecurrenceSpec({1, 2, 3}), 1);
  CHECK(one.rows() == 1);
  CHECK(one.cols() == 0);

  const auto degenerate = monomial_matrix(SecondOrderSpec{2, 4}.to_spec(), 3);
  REQUIRE(degenerate.rows() == 3);
  CHECK(degenerate(1, 0).is_zero());
  CHECK(degenerate(1, 1).is_zero());
}

TEST_CASE("derive examples") {
  const auto fib2 = derive_product_recurrence(SecondOrderSpec{1, -1}.to_spec(), 2);
  CHECK(fib2.relation == rel({1, -2, -2, 1}));
  CHECK(fib2.k == 1);
  CHECK(fib2.rank == 1);
  CHECK(fib2.nullity == 1);

  const RecurrenceSpec spec({3, Rational(mpz_class(-1), mpz_class(2)), 7});
  CHECK(derive_product_recurrence(spec, 1).relation == RecurrenceRelation::from_spec(spec));

  const auto deg = derive_product_recurrence(SecondOrderSpec{2, 4}.to_spec(), 3);
  CHECK(deg.relation == rel({1, 0, 0, 512}));
  CHECK(deg.tau == RationalVector{0, 1, 0});
  CHECK(deg.nullity == 2);

  CHECK(derive_product_recurrence(RecurrenceSpec({2, -1}), 2).relation == rel({1, -3, 3, -1}));
}

TEST_CASE("derived relation for rational specs is monic") {
  const RecurrenceSpec spec({Rational(mpz_class(1), mpz_class(2)), Rational(mpz_class(1), mpz_class(3))});
  const auto report = derive_product_recurrence(spec, 2);
  CHECK(report.relation.coefficients().front() == Rational(1));
}

TEST_CASE("recurrence matrix examples") {
  const SecondOrderSpec fib{1, -1};
  const auto spec = fib.to_spec();
  const auto f = generalized_fibonacci(fib, 0, 1);
  const std::vector<SequenceInstance> two{f, f};
  const auto z = recurrence_matrix(spec, 2, two, 0);
  CHECK(z.rows() == 2);
  CHECK(det(z) == Rational(0));

  const std::vector<SequenceInstance> one{f};
  CHECK(recurrence_matrix(spec, 1, one, 5) == RationalMatrix::from_rows({{0}}));

  const std::vector<SequenceInstance> three{f, f, f};
  const auto z3 = recurrence_matrix(spec, 3, three, 3);
  CHECK(z3.rows() == 3);
  CHECK(det(z3) == Rational(0));

  CHECK_THROWS_AS(recurrence_matrix(spec, 3, two, 0), std::invalid_argument);
}

TEST_CASE("verify_relation examples") {
  const auto f = generalized_fibonacci(SecondOrderSpec{1, -1}, 0, 1);
  const auto fsq = squares(f, 0, 40);
  CHECK(verify_relation(rel({1, -2, -2, 1}), fsq, 3, 40));
  CHECK_FALSE(verify_relation(rel({1, -1, -1}), fsq, 3, 40));

  const SampledSequence constant(0, std::vector<Rational>(10, Rational(7)));
  CHECK(verify_relation(rel({1, -1}), constant, 1, 9));

  const auto u = fundamental(SecondOrderSpec{2, 4}.to_spec());
  const std::vector<SequenceInstance> cube{u, u, u};
  const auto ucube = product_sample(cube, 0, 30);
  const auto printed = rel({1, -8, 0, -512, 4096});
  CHECK_FALSE(verify_relation(printed, ucube, 4, 4));
  CHECK(residual(printed, ucube, 4) == Rational(-1024));
  CHECK(verify_relation(rel({1, 8, 0, 512, 4096}), ucube, 4, 30));

  CHECK_THROWS_AS(verify_relation(rel({1, -2, -2, 1}), fsq, 2, 40), std::out_of_range);
  CHECK_THROWS_AS(verify_relation(rel({1, -2, -2, 1}), fsq, 3, 41), std::out_of_range);
}

TEST_CASE("hankel_check examples") {
  const auto f = generalized_fibonacci(SecondOrderSpec{1, -1}, 0, 1);
  const auto fsq = squares(f, 0, 200);
  CHECK(hankel_check(fsq, 4, 0) == Rational(0));
  CHECK(hankel_check(fsq, 3, 0) == Rational(64));
  const SampledSequence ones(0, std::vector<Rational>(10, Rational(1)));
  CHECK(hankel_check(ones, 2, 0) == Rational(0));
  CHECK_THROWS_AS(hankel_check(ones, 4, 0), std::out_of_range);
}

TEST_CASE("minimal_relation examples") {
  const RecurrenceSpec lin({2, -1});
  const SequenceInstance x(lin, 0, {1, 1});
  const SequenceInstance y(lin, 0, {0, 1});
  const auto xs = squares(x, 0, 30);
  const auto ys = squares(y, 0, 30);

  const auto mx = minimal_relation(xs, 4, 0, 30);
  REQUIRE(mx);
  CHECK(*mx == rel({1, -1}));
  // The derived relation still annihilates the constant case.
  CHECK(verify_relation(derive_product_recurrence(lin, 2).relation, xs, 3, 30));

  const auto my = minimal_relation(ys, 4, 0, 30);
  REQUIRE(my);
  CHECK(*my == rel({1, -3, 3, -1}));
  CHECK_FALSE(verify_relation(rel({1, -2, 1}), ys, 2, 30));

  const auto fib = sample(generalized_fibonacci(SecondOrderSpec{1, -1}, 0, 1), 0, 40);
  const auto mf = minimal_relation(fib, 5, 0, 40);
  REQUIRE(mf);
  CHECK(*mf == rel({1, -1, -1}));

  CHECK_FALSE(minimal_relation(ys, 2, 0, 30).has_value());
  CHECK_THROWS_AS(minimal_relation(ys, 4, 0, 8), std::invalid_argument);
}

TEST_CASE("derived relations annihilate random products") {
  std::mt19937_64 rng(8128);
  for (std::size_t s = 1; s <= 4; ++s) {
    for (unsigned n = 1; n <= 4; ++n) {
      for (int variant = 0; variant < 2; ++variant) {
        const bool zero_tail = variant == 1 && s > 1;
        const auto spec = random_spec(rng, s, zero_tail);
        const auto report = derive_product_recurrence(spec, n);
        CHECK(report.k == delta_size(n, s));
        CHECK(report.relation.order() <= report.k + s);
        const long t = static_cast<long>(report.relation.order());
        // without backward extension the untrimmed window k+s must fit
        const long low = spec.backward_extensible() ? -10 : static_cast<long>(report.k + s);
        for (int tuple = 0; tuple < 50; ++tuple) {
          const auto factors = random_factors(rng, spec, n);
          const auto values = product_sample(factors, low - t, low + 60);
          INFO("spec ", spec.to_string(), " n ", n, " rel ", report.relation.to_string());
          CHECK(verify_relation(report.relation, values, low, low + 60));
        }
      }
    }
  }
}

TEST_CASE("the recurrence matrix is singular for every offset") {
  std::mt19937_64 rng(404);
  for (std::size_t s = 2; s <= 3; ++s) {
    for (unsigned n = 2; n <= 3; ++n) {
      const auto spec = random_spec(rng, s, false);
      const auto factors = random_factors(rng, spec, n);
      for (long r = -4; r <= 6; ++r) CHECK(det(recurrence_matrix(spec, n, factors, r)) == Rational(0));
    }
  }
}

TEST_CASE("hankel determinant vanishes one past the derived order") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 6; ++trial) {
    const auto spec = random_spec(rng, 2 + trial % 2, false);
    const unsigned n = 2;
    const auto report = derive_product_recurrence(spec, n);
    const auto t = report.relation.order() + 1;
    const auto factors = random_factors(rng, spec, n);
    const auto values = product_sample(factors, 0, static_cast<long>(10 + t * t + 1));
    for (long k = 0; k <= 10; ++k) CHECK(hankel_check(values, t, k) == Rational(0));
  }
}

TEST_CASE("minimal relation is no longer than the derived one") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 12; ++trial) {
    const auto spec = random_spec(rng, 2 + trial % 2, false);
    const unsigned n = 2 + trial % 2;
    const auto derived = derive_product_recurrence(spec, n).relation;
    const auto factors = random_factors(rng, spec, n);
    const long hi = 40;
    const auto values = product_sample(factors, 0, hi);
    const auto minimal = minimal_relation(values, derived.order(), 0, hi);
    REQUIRE(minimal);
    CHECK(minimal->order() <= derived.order());
    CHECK(verify_relation(*minimal, values, static_cast<long>(minimal->order()), hi));
    CHECK(verify_relation(derived, values, static_cast<long>(derived.order()), hi));
  }
}
