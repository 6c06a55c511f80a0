#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "prodrec/appendix.hpp"
#include "prodrec/product_recurrence.hpp"
#include "prodrec/second_order.hpp"

using namespace prodrec;

namespace {

// Everything is exact; the only pinned tolerance is equality with zero residual.
constexpr long kPinnedTolerance = 0;

RecurrenceRelation rel(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return RecurrenceRelation(std::move(v));
}

const std::vector<SecondOrderSpec>& grid() {
  static const std::vector<SecondOrderSpec> g = [] {
    std::vector<SecondOrderSpec> out;
    for (long p = -2; p <= 3; ++p)
      for (long q = -2; q <= 3; ++q)
        if (q != 0) out.push_back(SecondOrderSpec{p, q});
    return out;
  }();
  return g;
}

bool squares_formula() {
  for (auto [p, q] : std::vector<std::pair<long, long>>{{1, -1}, {2, 4}, {3, 2}}) {
    const Rational P(p), Q(q);
    const RecurrenceRelation expected({1, -(P * P - Q), -(Q * Q - P * P * Q), -(Q * Q * Q)});
    if (!(derive_product_recurrence(SecondOrderSpec{p, q}.to_spec(), 2).relation == expected)) return false;
  }
  return true;
}

bool degenerate_cubes() {
  const SecondOrderSpec so{2, 4};
  const auto derived = derive_product_recurrence(so.to_spec(), 3).relation;
  if (!(derived == rel({1, 0, 0, 512}))) return false;
  const auto u = fundamental(so.to_spec());
  const std::vector<SequenceInstance> cube{u, u, u};
  if (!verify_relation(derived, product_sample(cube, -3, 30), 0, 30)) return false;
  return degenerate_recurrence(so, 3) == derived;
}

bool jarden_consistency() {
  const std::vector<SecondOrderSpec> ten{{1, -1}, {2, 1}, {3, 2}, {2, 3}, {1, 2},
                                         {-1, -1}, {3, -1}, {-2, 3}, {1, -3}, {4, 5}};
  int checked = 0;
  for (const auto& so : ten) {
    for (unsigned n = 1; n <= 5; ++n) {
      if (first_vanishing_u(so, n + 1)) continue;
      if (!jarden_recurrence(so, n).proportional_to(derive_product_recurrence(so.to_spec(), n).relation)) return false;
      ++checked;
    }
  }
  return checked > 0;
}

bool universality() {
  const RecurrenceSpec spec({1, 1, 1});
  const auto report = derive_product_recurrence(spec, 2);
  if (report.k != 3 || report.relation.order() > report.k + spec.order()) return false;
  const long t = static_cast<long>(report.relation.order());
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<long> d(-9, 9);
  for (int i = 0; i < 50; ++i) {
    std::vector<SequenceInstance> f;
    for (int j = 0; j < 2; ++j) f.emplace_back(spec, 0, std::vector<Rational>{d(rng), d(rng), d(rng)});
    const auto values = product_sample(f, 0, 39 + t);
    for (long m = t; m <= 39 + t; ++m)
      if (residual(report.relation, values, m) != Rational(kPinnedTolerance)) return false;
  }
  return true;
}

bool hankel() {
  const SecondOrderSpec fib{1, -1};
  const auto f = generalized_fibonacci(fib, 0, 1);
  const std::vector<SequenceInstance> sq{f, f};
  const auto values = product_sample(sq, 0, 40);
  for (long k = 0; k <= 10; ++k)
    if (!hankel_check(values, 4, k).is_zero()) return false;
  return !hankel_check(values, 3, 0).is_zero();
}

bool minimality() {
  const RecurrenceSpec lin({2, -1});
  const SequenceInstance x(lin, 0, {1, 1});
  const SequenceInstance y(lin, 0, {0, 1});
  const auto xs = product_sample(std::vector<SequenceInstance>{x, x}, 0, 30);
  const auto ys = product_sample(std::vector<SequenceInstance>{y, y}, 0, 30);
  const auto mx = minimal_relation(xs, 4, 0, 30);
  const auto my = minimal_relation(ys, 4, 0, 30);
  if (!mx || mx->order() != 1) return false;
  if (!my || !(*my == rel({1, -3, 3, -1}))) return false;
  return verify_relation(derive_product_recurrence(lin, 2).relation, xs, 3, 30);
}

bool appendix() {
  int ran = 0;
  for (const auto& so : grid()) {
    for (unsigned n = 1; n <= 5; ++n) {
      if (first_vanishing_u(so, n + 1)) continue;
      for (const auto& o : run_appendix_checks("all", n, so, std::pair<Rational, Rational>{2, 1}, -2)) {
        if (!o.passed) return false;
        ++ran;
      }
    }
  }
  for (const auto& so : grid())
    for (unsigned n = 1; n <= 8; ++n)
      if (det(build_Q(n, so)) != so.q.pow(static_cast<long>(n) * (n - 1) / 2)) return false;
  return ran > 0;
}

bool identities() {
  for (const auto& row : fib_lucas_identity_check(0, 50))
    if (!row.residual.is_zero() || !row.square_form) return false;
  for (const auto& so : std::vector<SecondOrderSpec>{{1, -1}, {2, 3}, {3, -2}})
    for (unsigned n = 2; n <= 10; ++n)
      if (!verify_42_recursion(so, n)) return false;
  for (const auto& so : grid()) {
    for (unsigned n = 1; n <= 10; ++n) {
      const auto f = factor_extremal_quadratic(so, n);
      const auto division = divide(product_char_poly(so, n).poly, f.quadratic);
      if (!division.remainder.is_zero() || !(division.quotient == f.cofactor)) return false;
    }
  }
  return true;
}

bool reversal() {
  for (const auto& so : grid()) {
    for (unsigned v = 1; v <= 6; ++v) {
      if (first_vanishing_u(so, v)) continue;
      const auto lhs = reciprocal(galois_polynomial(so, v), v);
      if (!(lhs == product_char_poly(so, v - 1).poly)) return false;
      if (!(lhs == char_poly(build_Q(v, so)))) return false;
    }
  }
  return true;
}

bool sign_flip_discrepancy() {
  const auto u = fundamental(SecondOrderSpec{2, 4}.to_spec());
  const auto values = product_sample(std::vector<SequenceInstance>{u, u, u}, 0, 30);
  if (residual(rel({1, -8, 0, -512, 4096}), values, 4) != Rational(-1024)) return false;
  return verify_relation(rel({1, 8, 0, 512, 4096}), values, 4, 30);
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool()>>> criteria{
      {"squares relation for three (p,q)", squares_formula},
      {"degenerate cubes at p=2, q=4", degenerate_cubes},
      {"closed form agrees with the general engine", jarden_consistency},
      {"one relation annihilates 50 random products", universality},
      {"Hankel determinants of Fibonacci squares", hankel},
      {"minimal relations of constant and linear squares", minimality},
      {"appendix checks and det Q_n", appendix},
      {"Lucas identities, psi recursion, extremal factor", identities},
      {"reversal identity v <= 6", reversal},
      {"sign-flipped order-4 relation fails, corrected one holds", sign_flip_discrepancy},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    bool ok = false;
    std::string why;
    try {
      ok = fn();
    } catch (const std::exception& e) {
      why = std::string(" (") + e.what() + ")";
    }
    std::printf("[%s] %d. %s%s\n", ok ? "PASS" : "FAIL", index, name.c_str(), why.c_str());
    failures += !ok;
  }
  std::printf("%d/%zu criteria passed\n", index - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
