#include "prodrec/product_recurrence.hpp"

#include <stdexcept>
#include <string>

#include "prodrec/errors.hpp"

namespace prodrec {
namespace {

void enumerate(std::size_t pos, unsigned remaining, ExponentTuple& current, std::vector<ExponentTuple>& out) {
  if (pos + 1 == current.size()) {
    current[pos] = remaining;
    std::size_t nonzero = 0;
    for (auto e : current) nonzero += (e != 0);
    if (nonzero >= 2) out.push_back(current);
    return;
  }
  for (unsigned e = 0; e <= remaining; ++e) {
    current[pos] = e;
    enumerate(pos + 1, remaining - e, current, out);
  }
}

Rational monomial(const std::vector<Rational>& a, const ExponentTuple& e) {
  Rational acc(1);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0) acc *= a[i].pow(e[i]);
  }
  return acc;
}

void require_n(unsigned n) {
  if (n < 1) throw std::invalid_argument("number of factors must be >= 1");
}

}  // namespace

std::vector<ExponentTuple> delta_set(unsigned n, std::size_t s) {
  require_n(n);
  if (s < 1) throw std::invalid_argument("order must be >= 1");
  std::vector<ExponentTuple> out;
  ExponentTuple current(s);
  enumerate(0, n, current, out);
  return out;
}

std::size_t delta_size(unsigned n, std::size_t s) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n + s - 1, n);
  return static_cast<std::size_t>(b.get_ui()) - s;
}

RationalMatrix monomial_matrix(const RecurrenceSpec& spec, unsigned n) {
  const auto delta = delta_set(n, spec.order());
  const std::size_t k = delta.size();
  const SequenceInstance u = fundamental(spec);
  RationalMatrix v(k + 1, k);
  for (std::size_t row = 0; row <= k; ++row) {
    const auto a = shift_coefficients(u, static_cast<long>(row) + 1);
    for (std::size_t col = 0; col < k; ++col) v(row, col) = monomial(a, delta[col]);
  }
  return v;
}

DerivationReport derive_product_recurrence(const RecurrenceSpec& spec, unsigned n) {
  require_n(n);
  const std::size_t s = spec.order();
  const RationalMatrix v = monomial_matrix(spec, n);
  const std::size_t k = v.cols();

  DerivationReport report{RecurrenceRelation({Rational(1)}), k, rank(v), 0, {}};
  report.nullity = k + 1 - report.rank;

  // Shortest dependent prefix of rows: its left nullspace is one-dimensional.
  std::size_t last = 0;
  while (rank(v.top_rows(last + 1)) == last + 1) ++last;
  const auto basis = left_nullspace(v.top_rows(last + 1));
  if (basis.size() != 1 || basis.front()[last].is_zero()) {
    throw ConsistencyError("monomial matrix prefix of " + std::to_string(last + 1) +
                           " rows has an unexpected left nullspace");
  }
  report.tau = basis.front();
  report.tau.resize(k + 1);

  const SequenceInstance u = fundamental(spec);
  // Descending coefficients with m = r + 2 + last: X(r+2+j) -> index last - j,
  // X(r+2-i) -> index last + i.
  std::vector<Rational> c(last + s + 1);
  for (std::size_t j = 0; j <= last; ++j) {
    const Rational& tj = report.tau[j];
    if (tj.is_zero()) continue;
    c[last - j] += tj;
    const auto a = shift_coefficients(u, static_cast<long>(j) + 1);
    for (std::size_t i = 1; i <= s; ++i) c[last + i] -= tj * a[i - 1].pow(n);
  }
  report.relation = RecurrenceRelation(std::move(c)).normalized(spec.has_integer_coefficients());
  return report;
}

RationalMatrix recurrence_matrix(const RecurrenceSpec& spec, unsigned n,
                                 std::span<const SequenceInstance> factors, long r) {
  require_n(n);
  if (factors.size() != n) {
    throw std::invalid_argument("recurrence_matrix: expected " + std::to_string(n) + " factors, got " +
                                std::to_string(factors.size()));
  }
  for (const auto& f : factors) {
    if (!(f.spec() == spec)) throw std::invalid_argument("recurrence_matrix: factor built on a different spec");
  }
  const std::size_t s = spec.order();
  const RationalMatrix v = monomial_matrix(spec, n);
  const std::size_t k = v.cols();
  const SequenceInstance u = fundamental(spec);
  auto product = [&](long m) {
    Rational acc(1);
    for (const auto& f : factors) acc *= f(m);
    return acc;
  };
  RationalMatrix z(k + 1, k + 1);
  for (std::size_t row = 0; row <= k; ++row) {
    const long m = static_cast<long>(row) + 1;
    const auto a = shift_coefficients(u, m);
    Rational c = product(m + r + 1);
    for (std::size_t i = 1; i <= s; ++i) c -= a[i - 1].pow(n) * product(r + 2 - static_cast<long>(i));
    z(row, 0) = std::move(c);
    for (std::size_t col = 0; col < k; ++col) z(row, col + 1) = v(row, col);
  }
  return z;
}

Rational hankel_check(const SampledSequence& values, std::size_t t, long k) {
  if (t < 1) throw std::invalid_argument("hankel_check: t must be >= 1");
  const long tt = static_cast<long>(t);
  if (!values.contains(k + 1) || !values.contains(k + tt * tt)) {
    throw std::out_of_range("hankel_check: values must cover [" + std::to_string(k + 1) + ", " +
                            std::to_string(k + tt * tt) + "]");
  }
  RationalMatrix h(t, t);
  for (std::size_t i = 0; i < t; ++i) {
    for (std::size_t j = 0; j < t; ++j) {
      h(i, j) = values(k + static_cast<long>(i * t + j) + 1);
    }
  }
  return det(h);
}

std::optional<RecurrenceRelation> minimal_relation(const SampledSequence& values, std::size_t max_order,
                                                   long first_m, long last_m) {
  const long length = last_m - first_m + 1;
  if (length < 2 * static_cast<long>(max_order) + 2) {
    throw std::invalid_argument("minimal_relation: range of " + std::to_string(length) +
                                " values is shorter than 2*max_order+2 = " + std::to_string(2 * max_order + 2));
  }
  if (!values.contains(first_m) || !values.contains(last_m)) {
    throw std::out_of_range("minimal_relation: range not covered by the sampled values");
  }
  bool integral = true;
  for (long m = first_m; m <= last_m; ++m) integral = integral && values(m).is_integer();

  bool all_zero = true;
  for (long m = first_m; m <= last_m; ++m) all_zero = all_zero && values(m).is_zero();
  if (all_zero) return RecurrenceRelation({Rational(1)});

  for (std::size_t d = 1; d <= max_order; ++d) {
    const long dd = static_cast<long>(d);
    RationalMatrix windows(static_cast<std::size_t>(length - dd), d + 1);
    for (long m = first_m + dd; m <= last_m; ++m) {
      for (std::size_t j = 0; j <= d; ++j) {
        windows(static_cast<std::size_t>(m - first_m - dd), j) = values(m - static_cast<long>(j));
      }
    }
    std::optional<RecurrenceRelation> best;
    for (auto& candidate : right_nullspace(windows)) {
      if (candidate.front().is_zero()) continue;
      RecurrenceRelation rel(std::move(candidate));
      if (!verify_relation(rel, values, first_m + static_cast<long>(rel.order()), last_m)) continue;
      if (!best || rel.order() < best->order()) best = std::move(rel);
    }
    if (best) return best->normalized(integral);
  }
  return std::nullopt;
}

}  // namespace prodrec
