#include "prodrec/relation.hpp"

#include <sstream>
#include <stdexcept>

#include "prodrec/matrix.hpp"

namespace prodrec {

RecurrenceRelation::RecurrenceRelation(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  if (coeffs_.empty()) throw std::invalid_argument("relation has no nonzero coefficient");
  if (coeffs_.front().is_zero()) throw std::invalid_argument("relation needs a nonzero leading coefficient");
}

RecurrenceRelation RecurrenceRelation::from_spec(const RecurrenceSpec& spec) {
  std::vector<Rational> c{Rational(1)};
  for (const auto& a : spec.coefficients()) c.push_back(-a);
  return RecurrenceRelation(std::move(c));
}

RecurrenceRelation RecurrenceRelation::monic() const {
  const Rational inv = coeffs_.front().inverse();
  std::vector<Rational> c = coeffs_;
  for (auto& x : c) x *= inv;
  return RecurrenceRelation(std::move(c));
}

RecurrenceRelation RecurrenceRelation::primitive() const {
  return RecurrenceRelation(primitive_integer_form(coeffs_));
}

RecurrenceRelation RecurrenceRelation::normalized(bool integer_domain) const {
  RecurrenceRelation m = monic();
  if (!integer_domain) return m;
  for (const auto& c : m.coeffs_) {
    if (!c.is_integer()) return primitive();
  }
  return m;
}

bool RecurrenceRelation::proportional_to(const RecurrenceRelation& other) const {
  if (coeffs_.size() != other.coeffs_.size()) return false;
  // c_i d_0 == d_i c_0 for all i
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] * other.coeffs_[0] != other.coeffs_[i] * coeffs_[0]) return false;
  }
  return true;
}

std::string RecurrenceRelation::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i];
  os << ']';
  return os.str();
}

std::string RecurrenceRelation::equation() const {
  auto term = [](const Rational& mag, const std::string& x) {
    if (mag.is_one()) return x;
    return (mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")") + x;
  };
  std::ostringstream os;
  const Rational& lead = coeffs_.front();
  os << (lead.sign() < 0 ? "-" : "") << term(lead.abs(), "X(m)") << " =";
  bool first = true;
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    const Rational rhs = -coeffs_[j];
    if (rhs.is_zero()) continue;
    const std::string x = "X(m-" + std::to_string(j) + ")";
    if (first) {
      os << ' ' << (rhs.sign() < 0 ? "-" : "") << term(rhs.abs(), x);
    } else {
      os << (rhs.sign() < 0 ? " - " : " + ") << term(rhs.abs(), x);
    }
    first = false;
  }
  if (first) os << " 0";
  return os.str();
}

SampledSequence::SampledSequence(long first, std::vector<Rational> values)
    : first_(first), values_(std::move(values)) {}

const Rational& SampledSequence::operator()(long m) const {
  if (!contains(m)) {
    throw std::out_of_range("index " + std::to_string(m) + " outside sampled range [" +
                            std::to_string(first_) + ", " + std::to_string(last()) + "]");
  }
  return values_[static_cast<std::size_t>(m - first_)];
}

SampledSequence sample(const SequenceInstance& x, long first, long last) {
  return SampledSequence(first, x.values(first, last));
}

SampledSequence product_sample(std::span<const SequenceInstance> factors, long first, long last) {
  std::vector<Rational> out(static_cast<std::size_t>(last >= first ? last - first + 1 : 0), Rational(1));
  for (const auto& f : factors) {
    const auto v = f.values(first, last);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] *= v[i];
  }
  return SampledSequence(first, std::move(out));
}

Rational residual(const RecurrenceRelation& rel, const SampledSequence& values, long m) {
  Rational acc;
  const auto& c = rel.coefficients();
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (!c[j].is_zero()) acc += c[j] * values(m - static_cast<long>(j));
  }
  return acc;
}

bool verify_relation(const RecurrenceRelation& rel, const SampledSequence& values, long first_m, long last_m) {
  const long t = static_cast<long>(rel.order());
  if (first_m > last_m || !values.contains(first_m - t) || !values.contains(last_m)) {
    throw std::out_of_range("verify_relation: window [" + std::to_string(values.first()) + ", " +
                            std::to_string(values.last()) + "] does not cover [" +
                            std::to_string(first_m - t) + ", " + std::to_string(last_m) + "]");
  }
  for (long m = first_m; m <= last_m; ++m) {
    if (!residual(rel, values, m).is_zero()) return false;
  }
  return true;
}

}  // namespace prodrec
