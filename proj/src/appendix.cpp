#include "prodrec/appendix.hpp"

#include <stdexcept>

#include "prodrec/errors.hpp"
#include "prodrec/second_order.hpp"

namespace prodrec {
namespace {

Rational binomial(unsigned top, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), top, k);
  return Rational(b);
}

void require_nonzero_u(const SequenceInstance& u, long upto) {
  for (long k = 1; k <= upto; ++k) {
    if (u(k).is_zero()) {
      throw PreconditionError("u_" + std::to_string(k) + " = 0: appendix identities need u_1 ... u_" +
                              std::to_string(upto) + " != 0");
    }
  }
}

// Row l (1-based) of the degree-(n-1) monomial matrix in (u_{l+1+shift}, u_{l+shift}).
template <typename U>
RationalMatrix monomial_rows(unsigned n, long shift, const U& u) {
  RationalMatrix m(n, n);
  for (unsigned l = 1; l <= n; ++l) {
    const Rational hi = u(static_cast<long>(l) + 1 + shift);
    const Rational lo = u(static_cast<long>(l) + shift);
    for (unsigned j = 1; j <= n; ++j) m(l - 1, j - 1) = hi.pow(n - j) * lo.pow(j - 1);
  }
  return m;
}

CheckOutcome outcome(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok, ok ? std::string() : std::move(detail)};
}

}  // namespace

RationalMatrix build_Q(unsigned v, const SecondOrderSpec& so) {
  RationalMatrix q(v, v);
  const Rational minus_q = -so.q;
  for (unsigned col = 0; col < v; ++col) {
    const unsigned e = v - 1 - col;  // exponent of (p x - q y)
    for (unsigned row = 0; row <= e; ++row) {
      q(row, col) = binomial(e, row) * so.p.pow(e - row) * minus_q.pow(row);
    }
  }
  return q;
}

RationalMatrix build_E(unsigned v, const SecondOrderSpec& so) {
  const DensePolynomial f = galois_polynomial(so, v);
  RationalMatrix e(v, v);
  for (unsigned i = 0; i + 1 < v; ++i) e(i, i + 1) = 1;
  for (unsigned j = 0; j < v; ++j) e(v - 1, j) = -f.coefficient(v - j);
  return e;
}

bool check_D3(unsigned v, const SecondOrderSpec& so) {
  const SequenceInstance u = fundamental(so.to_spec());
  require_nonzero_u(u, v);
  const RationalMatrix a1 = monomial_rows(v, 0, u);
  return build_E(v, so) * a1 == a1 * build_Q(v, so);
}

bool check_cor36(unsigned v, const SecondOrderSpec& so) {
  return char_poly(build_Q(v, so)) == reciprocal(galois_polynomial(so, v), v);
}

AppendixContext::AppendixContext(unsigned n, SecondOrderSpec so, std::optional<std::pair<Rational, Rational>> w,
                                 long r)
    : n_(n), so_(std::move(so)), r_(r), u_(fundamental(so_.to_spec())) {
  if (n_ < 1) throw std::invalid_argument("appendix context: n must be >= 1");
  if (so_.q.is_zero()) throw PreconditionError("appendix context: requires q != 0");
  require_nonzero_u(u_, static_cast<long>(n_) + 1);
  if (w) w_ = generalized_fibonacci(so_, w->first, w->second);
}

Rational AppendixContext::u(long m) const {
  if (m >= 0) return u_(m);
  return -so_.q.pow(m) * u_(-m);
}

Rational AppendixContext::w(long m) const {
  if (!w_) throw PreconditionError("matrix C needs a W instance (a, b)");
  return (*w_)(m);
}

Rational AppendixContext::sigma(long m) const {
  Rational acc(1);
  for (long i = 2; i <= m + 1; ++i) acc *= u(i);
  return acc;
}

Rational AppendixContext::tau(long m) const { return so_.q.pow(m * (m - 1) / 2); }

RationalMatrix AppendixContext::build_A() const {
  RationalMatrix a(n_, n_);
  for (unsigned i = 1; i <= n_; ++i) {
    const Rational hi = u(i + 1);
    const Rational lo = u(i);
    for (unsigned j = 1; j <= n_; ++j) a(i - 1, j - 1) = hi.pow(n_ + 1 - j) * lo.pow(j - 1);
  }
  return a;
}

RationalMatrix AppendixContext::build_A1() const { return shifted_A1(0); }

RationalMatrix AppendixContext::shifted_A1(long shift) const {
  return monomial_rows(n_, shift, [this](long m) { return u(m); });
}

RationalMatrix AppendixContext::build_B() const {
  RationalMatrix b = build_A();
  for (unsigned i = 1; i <= n_; ++i) b(i - 1, 0) = u(i).pow(n_);
  return b;
}

RationalMatrix AppendixContext::build_C() const {
  RationalMatrix c = build_A();
  for (unsigned i = 1; i <= n_; ++i) c(i - 1, 0) = w(r_ + i + 1).pow(n_);
  return c;
}

CheckOutcome AppendixContext::check_A3() const {
  const Rational lhs = det(build_A());
  const Rational rhs = sigma(n_) * det(build_A1());
  return outcome("A3", lhs == rhs, "det A = " + lhs.to_string() + " but sigma(n) det A1 = " + rhs.to_string());
}

CheckOutcome AppendixContext::check_A7() const {
  Rational closed(1);
  for (long m = 2; m <= static_cast<long>(n_); ++m) closed *= tau(m);
  for (long m = 1; m <= static_cast<long>(n_) - 2; ++m) closed *= sigma(m);
  const Rational d = det(build_A1());
  if (d.is_zero()) return outcome("A7", false, "det A1 = 0");
  return outcome("A7", d == closed, "det A1 = " + d.to_string() + " but the product form gives " + closed.to_string());
}

CheckOutcome AppendixContext::check_shift() const {
  const RationalMatrix a1 = build_A1();
  const RationalMatrix q = build_Q(n_, so_);
  if (!(a1 * q == shifted_A1(1))) return outcome("shift", false, "A1 Q_n is not A1 with indices raised by one");
  const RationalMatrix q_inv = inverse(q);
  RationalMatrix walked = a1;
  for (unsigned i = 1; i <= n_; ++i) {
    walked = walked * q_inv;
    if (!(walked == shifted_A1(-static_cast<long>(i)))) {
      return outcome("shift", false, "A1 Q_n^-" + std::to_string(i) + " is not A1 with indices lowered by " +
                                         std::to_string(i));
    }
    for (unsigned j = 0; j < n_; ++j) {
      const Rational expected = j == 0 ? Rational(1) : Rational();
      if (walked(i - 1, j) != expected) {
        return outcome("shift", false, "row " + std::to_string(i) + " of A1 Q_n^-" + std::to_string(i) +
                                           " is not (1, 0, ..., 0)");
      }
    }
  }
  return outcome("shift", true, {});
}

CheckOutcome AppendixContext::check_B() const {
  const Rational lhs = det(build_B());
  const Rational sign = (n_ - 1) % 2 ? Rational(-1) : Rational(1);
  const Rational rhs = sign * sigma(static_cast<long>(n_) - 1) * det(build_A1());
  return outcome("B", lhs == rhs, "det B = " + lhs.to_string() + " but (-1)^(n-1) sigma(n-1) det A1 = " +
                                      rhs.to_string());
}

Rational AppendixContext::closed_form_cofactor(unsigned i) const {
  if (i < 1 || i > n_) throw std::out_of_range("closed_form_cofactor: i outside 1..n");
  const long il = static_cast<long>(i);
  const long nl = static_cast<long>(n_);
  const Rational det_q_small = det(build_Q(n_ - 1, so_)).pow(il);
  const Rational det_q = det(build_Q(n_, so_)).pow(il);
  Rational negative_run(1);  // u_{1-i} ... u_{-1}
  for (long m = 1 - il; m <= -1; ++m) negative_run *= u(m);
  Rational positive_run(1);  // u_1 ... u_{n-i}
  for (long m = 1; m <= nl - il; ++m) positive_run *= u(m);
  const Rational numerator = w(r_ + il + 1).pow(n_) * sigma(nl) * sigma(nl - 1) * det(build_A1()) * det_q_small;
  const Rational denominator = u(il + 1) * u(il) * negative_run * positive_run * det_q;
  return numerator / denominator;
}

CheckOutcome AppendixContext::check_C() const {
  const RationalMatrix c = build_C();
  const Rational direct = det(c);
  Rational expansion;
  Rational closed;
  for (unsigned i = 1; i <= n_; ++i) {
    const Rational cofactor = c(i - 1, 0) * det(c.minor_matrix(i - 1, 0));
    expansion += (i % 2 ? cofactor : -cofactor);
    closed += closed_form_cofactor(i);
  }
  if (direct != expansion) {
    return outcome("C", false, "first-column expansion " + expansion.to_string() + " != det C " + direct.to_string());
  }
  return outcome("C", direct == closed, "sum of closed-form cofactors " + closed.to_string() + " != det C " +
                                            direct.to_string());
}

CheckOutcome AppendixContext::check_determinant_expansion() const {
  for (const auto& part : {check_A3(), check_B(), check_C()}) {
    if (!part.passed) return outcome("expansion", false, part.name + ": " + part.detail);
  }
  return outcome("expansion", true, {});
}

const std::vector<std::string>& appendix_check_names() {
  static const std::vector<std::string> names{"A3", "A7", "shift", "B", "C", "D3", "cor36"};
  return names;
}

std::vector<CheckOutcome> run_appendix_checks(const std::string& which, unsigned n, const SecondOrderSpec& so,
                                              std::optional<std::pair<Rational, Rational>> w, long r) {
  const auto& names = appendix_check_names();
  std::vector<std::string> selected;
  if (which == "all") {
    selected = names;
  } else if (std::find(names.begin(), names.end(), which) != names.end()) {
    selected = {which};
  } else {
    throw ParseError("unknown appendix check '" + which + "'");
  }
  // C needs a W instance; default to the fundamental one.
  if (!w) w = std::make_pair(Rational(0), Rational(1));
  std::optional<AppendixContext> ctx;
  std::vector<CheckOutcome> out;
  for (const auto& name : selected) {
    if (name == "D3") {
      out.push_back(outcome("D3", check_D3(n, so), "E A1 != A1 Q_v"));
      continue;
    }
    if (name == "cor36") {
      out.push_back(outcome("cor36", check_cor36(n, so), "char_poly(Q_v) != reciprocal Galois polynomial"));
      continue;
    }
    if (!ctx) ctx.emplace(n, so, w, r);
    if (name == "A3") out.push_back(ctx->check_A3());
    else if (name == "A7") out.push_back(ctx->check_A7());
    else if (name == "shift") out.push_back(ctx->check_shift());
    else if (name == "B") out.push_back(ctx->check_B());
    else if (name == "C") out.push_back(ctx->check_C());
  }
  return out;
}

}  // namespace prodrec
