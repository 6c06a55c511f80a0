#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "prodrec/matrix.hpp"
#include "prodrec/sequences.hpp"

namespace prodrec {

/// Q_v: column i (1-based) holds the binomial coefficients of (p x - q y)^{v-i}.
RationalMatrix build_Q(unsigned v, const SecondOrderSpec& so);

/**
 * Companion matrix E of the monic reciprocal of galois_polynomial(so, v): ones on the
 * superdiagonal and bottom row (-a_v, -a_{v-1}, ..., -a_1), where a_i are the ascending
 * coefficients of the Galois polynomial. With this layout E A_1 = A_1 Q_v.
 */
RationalMatrix build_E(unsigned v, const SecondOrderSpec& so);

/// E A_1 == A_1 Q_v with A_1 built for n = v. Requires u_1 ... u_v != 0.
bool check_D3(unsigned v, const SecondOrderSpec& so);

/// char_poly(Q_v) == reciprocal(galois_polynomial(so, v), v). Requires u_1 ... u_v != 0.
bool check_cor36(unsigned v, const SecondOrderSpec& so);

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;  // which sub-identity failed, empty on success
};

/**
 * The n x n matrices behind the second-order determinant expansion, for a fixed (p, q) with
 * u_1 ... u_{n+1} != 0. Entries use u at negative indices through u_{-m} = -q^{-m} u_m.
 */
class AppendixContext {
 public:
  /// Throws PreconditionError when some u_k, 1 <= k <= n+1, vanishes or when q = 0.
  AppendixContext(unsigned n, SecondOrderSpec so, std::optional<std::pair<Rational, Rational>> w = std::nullopt,
                  long r = 0);

  unsigned n() const { return n_; }
  const SecondOrderSpec& spec() const { return so_; }
  long r() const { return r_; }

  /// u_m for any integer m.
  Rational u(long m) const;
  /// W_m of the attached instance (a, b); PreconditionError when none is attached.
  Rational w(long m) const;

  /// prod_{i=2}^{m+1} u_i
  Rational sigma(long m) const;
  /// q^{m(m-1)/2}
  Rational tau(long m) const;

  RationalMatrix build_A() const;
  RationalMatrix build_A1() const;
  RationalMatrix build_B() const;
  RationalMatrix build_C() const;

  /// Rows (u_{l+1+shift}^{n-j} u_{l+shift}^{j-1}), l = 1..n: A_1 when shift = 0.
  RationalMatrix shifted_A1(long shift) const;

  CheckOutcome check_A3() const;
  CheckOutcome check_A7() const;
  CheckOutcome check_shift() const;
  CheckOutcome check_B() const;
  CheckOutcome check_C() const;
  /// A3, B and C run together.
  CheckOutcome check_determinant_expansion() const;

  /// C_i from the closed form, i = 1..n.
  Rational closed_form_cofactor(unsigned i) const;

 private:
  unsigned n_;
  SecondOrderSpec so_;
  std::optional<SequenceInstance> w_;
  long r_;
  SequenceInstance u_;
};

/// Names accepted by run_appendix_checks besides "all".
const std::vector<std::string>& appendix_check_names();

/// Runs the named check ("all", "A3", "A7", "shift", "B", "C", "D3", "cor36") for n (which
/// doubles as v for D3 and cor36).
std::vector<CheckOutcome> run_appendix_checks(const std::string& which, unsigned n, const SecondOrderSpec& so,
                                              std::optional<std::pair<Rational, Rational>> w, long r);

}  // namespace prodrec
