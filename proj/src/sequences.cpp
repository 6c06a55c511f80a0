#include "prodrec/sequences.hpp"

#include <cctype>
#include <deque>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "prodrec/errors.hpp"

namespace prodrec {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    out.push_back(trim(text.substr(start, pos == std::string_view::npos ? pos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

// Parses "p=..,q=.." in either order; returns false when the text is not in that form.
bool parse_pq(std::string_view text, Rational& p, Rational& q) {
  if (text.find('=') == std::string_view::npos) return false;
  bool have_p = false;
  bool have_q = false;
  for (auto field : split(text, ',')) {
    const auto eq = field.find('=');
    if (eq == std::string_view::npos) throw ParseError("expected key=value in '" + std::string(field) + "'");
    const auto key = trim(field.substr(0, eq));
    const auto value = Rational::parse(field.substr(eq + 1));
    if (key == "p" && !have_p) {
      p = value;
      have_p = true;
    } else if (key == "q" && !have_q) {
      q = value;
      have_q = true;
    } else {
      throw ParseError("unexpected key '" + std::string(key) + "' in '" + std::string(text) + "'");
    }
  }
  if (!have_p || !have_q) throw ParseError("second-order spec needs both p and q: '" + std::string(text) + "'");
  return true;
}

}  // namespace

std::vector<Rational> parse_rational_list(std::string_view text) {
  if (trim(text).empty()) throw ParseError("empty list");
  std::vector<Rational> out;
  for (auto field : split(text, ',')) out.push_back(Rational::parse(field));
  return out;
}

RecurrenceSpec::RecurrenceSpec(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw std::invalid_argument("recurrence must have order >= 1");
  bool any = false;
  for (const auto& c : coeffs_) any = any || !c.is_zero();
  if (!any) throw std::invalid_argument("recurrence needs at least one nonzero coefficient");
}

RecurrenceSpec RecurrenceSpec::parse(std::string_view text) {
  Rational p, q;
  if (parse_pq(text, p, q)) return SecondOrderSpec{p, q}.to_spec();
  auto coeffs = parse_rational_list(text);
  bool any = false;
  for (const auto& c : coeffs) any = any || !c.is_zero();
  if (!any) throw ParseError("recurrence needs at least one nonzero coefficient");
  return RecurrenceSpec(std::move(coeffs));
}

Rational RecurrenceSpec::coefficient(std::size_t i) const {
  return (i >= 1 && i <= coeffs_.size()) ? coeffs_[i - 1] : Rational();
}

bool RecurrenceSpec::has_integer_coefficients() const {
  for (const auto& c : coeffs_) {
    if (!c.is_integer()) return false;
  }
  return true;
}

std::string RecurrenceSpec::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i];
  return os.str();
}

SecondOrderSpec SecondOrderSpec::parse(std::string_view text) {
  Rational p, q;
  if (parse_pq(text, p, q)) return {p, q};
  const auto coeffs = parse_rational_list(text);
  if (coeffs.size() != 2) throw ParseError("second-order spec needs exactly two coefficients");
  return {coeffs[0], -coeffs[1]};
}

std::string SecondOrderSpec::to_string() const { return "p=" + p.to_string() + ",q=" + q.to_string(); }

struct SequenceInstance::Cache {
  std::mutex mutex;
  long first = 0;
  std::deque<Rational> values;
};

SequenceInstance::SequenceInstance(RecurrenceSpec spec, long window_base, std::vector<Rational> initial)
    : spec_(std::move(spec)), window_base_(window_base), initial_(std::move(initial)),
      cache_(std::make_shared<Cache>()) {
  if (initial_.size() != spec_.order()) {
    throw std::invalid_argument("sequence needs " + std::to_string(spec_.order()) +
                                " initial values, got " + std::to_string(initial_.size()));
  }
  cache_->first = window_base_;
  cache_->values.assign(initial_.begin(), initial_.end());
}

Rational SequenceInstance::operator()(long m) const {
  const auto& a = spec_.coefficients();
  const std::size_t s = a.size();
  std::lock_guard lock(cache_->mutex);
  auto& vals = cache_->values;
  long& first = cache_->first;
  if (m < first) {
    if (!spec_.backward_extensible()) {
      throw PreconditionError("backward evaluation at index " + std::to_string(m) +
                              " needs a nonzero last coefficient A_" + std::to_string(s));
    }
    const Rational inv_last = a[s - 1].inverse();
    while (m < first) {
      // x(j - s) = (x(j) - sum_{i<s} A_i x(j-i)) / A_s  with j = first + s - 1
      Rational acc = vals[s - 1];
      for (std::size_t i = 1; i < s; ++i) acc -= a[i - 1] * vals[s - 1 - i];
      vals.push_front(acc * inv_last);
      --first;
    }
  }
  while (m >= first + static_cast<long>(vals.size())) {
    Rational next;
    const std::size_t n = vals.size();
    for (std::size_t i = 1; i <= s; ++i) {
      if (!a[i - 1].is_zero()) next += a[i - 1] * vals[n - i];
    }
    vals.push_back(std::move(next));
  }
  return vals[static_cast<std::size_t>(m - first)];
}

std::vector<Rational> SequenceInstance::values(long first, long last) const {
  std::vector<Rational> out;
  if (last < first) return out;
  out.reserve(static_cast<std::size_t>(last - first + 1));
  (*this)(first);
  (*this)(last);
  for (long m = first; m <= last; ++m) out.push_back((*this)(m));
  return out;
}

SequenceInstance fundamental(const RecurrenceSpec& spec) {
  const std::size_t s = spec.order();
  std::vector<Rational> init(s);
  init.back() = 1;
  return SequenceInstance(spec, 2 - static_cast<long>(s), std::move(init));
}

SequenceInstance fundamental_leading_unit(const RecurrenceSpec& spec) {
  std::vector<Rational> init(spec.order());
  init.back() = 1;
  return SequenceInstance(spec, 1, std::move(init));
}

SequenceInstance generalized_fibonacci(const SecondOrderSpec& so, Rational a, Rational b) {
  return SequenceInstance(so.to_spec(), 0, {std::move(a), std::move(b)});
}

std::vector<Rational> shift_coefficients(const SequenceInstance& u, long m) {
  const RecurrenceSpec& spec = u.spec();
  const std::size_t s = spec.order();
  std::vector<Rational> out(s);
  out[0] = u(m + 1);
  for (std::size_t i = 2; i <= s; ++i) {
    Rational acc;
    for (std::size_t j = i; j <= s; ++j) {
      const Rational& aj = spec.coefficients()[j - 1];
      if (!aj.is_zero()) acc += aj * u(m - static_cast<long>(j - i));
    }
    out[i - 1] = std::move(acc);
  }
  return out;
}

std::vector<Rational> shift_coefficients(const RecurrenceSpec& spec, long m) {
  return shift_coefficients(fundamental(spec), m);
}

SequenceInstance lucas_sequence(const SecondOrderSpec& so) {
  return generalized_fibonacci(so, 2, so.p);
}

Rational lucas_companion(const SecondOrderSpec& so, long m) { return lucas_sequence(so)(m); }

}  // namespace prodrec
