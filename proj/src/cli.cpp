#include "prodrec/cli.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "prodrec/appendix.hpp"
#include "prodrec/errors.hpp"
#include "prodrec/product_recurrence.hpp"
#include "prodrec/second_order.hpp"

namespace prodrec::cli {
namespace {

using nlohmann::json;

json to_json(const std::vector<Rational>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

json to_json(const RecurrenceRelation& rel) {
  return {{"order", rel.order()}, {"coefficients", to_json(rel.coefficients())}, {"equation", rel.equation()}};
}

std::string list_text(const std::vector<Rational>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

/// Output record shared by every command. Text mode prints "key: value" lines in insertion order.
struct CommandResult {
  json doc = json::object();
  std::vector<std::pair<std::string, std::string>> lines;
  bool all_checks_pass = true;

  void line(std::string key, std::string value) { lines.emplace_back(std::move(key), std::move(value)); }

  void relation(const RecurrenceRelation& rel, const std::string& key = "relation") {
    doc[key] = to_json(rel);
    line(key, rel.equation());
    line(key == "relation" ? "coefficients" : key + " coefficients", rel.to_string());
    line(key == "relation" ? "order" : key + " order", std::to_string(rel.order()));
  }

  void check(const std::string& name, bool ok) {
    doc["checks"][name] = ok;
    line("check " + name, ok ? "true" : "false");
    all_checks_pass = all_checks_pass && ok;
  }

  void polynomial(const std::string& name, const DensePolynomial& f) {
    doc["polynomials"][name] = to_json(f.coefficients());
    line(name, f.to_string());
  }
};

struct CommonOptions {
  std::string coeffs;
  std::string p;
  std::string q;
  std::string format = "text";
};

void add_pq(CLI::App* cmd, CommonOptions& o, bool required) {
  auto* p = cmd->add_option("--p", o.p, "p in W_m = p W_{m-1} - q W_{m-2} (rational, num/den)");
  auto* q = cmd->add_option("--q", o.q, "q in W_m = p W_{m-1} - q W_{m-2} (rational, num/den)");
  if (required) {
    p->required();
    q->required();
  }
}

void add_format(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
}

RecurrenceSpec spec_from(const CommonOptions& o) {
  const bool have_pq = !o.p.empty() || !o.q.empty();
  if (!o.coeffs.empty() && have_pq) throw ParseError("give either --coeffs or --p/--q, not both");
  if (!o.coeffs.empty()) return RecurrenceSpec::parse(o.coeffs);
  if (o.p.empty() || o.q.empty()) throw ParseError("a recurrence needs --coeffs or both --p and --q");
  return SecondOrderSpec{Rational::parse(o.p), Rational::parse(o.q)}.to_spec();
}

SecondOrderSpec second_order_from(const CommonOptions& o) {
  return {Rational::parse(o.p), Rational::parse(o.q)};
}

std::optional<SecondOrderSpec> as_second_order(const RecurrenceSpec& spec) {
  if (spec.order() != 2) return std::nullopt;
  return SecondOrderSpec{spec.coefficients()[0], -spec.coefficients()[1]};
}

std::pair<long, long> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw ParseError("range must look like lo:hi, got '" + text + "'");
  const Rational lo = Rational::parse(text.substr(0, colon));
  const Rational hi = Rational::parse(text.substr(colon + 1));
  if (!lo.is_integer() || !hi.is_integer()) throw ParseError("range bounds must be integers");
  const long a = lo.numerator().get_si();
  const long b = hi.numerator().get_si();
  if (a > b) throw ParseError("empty range '" + text + "'");
  return {a, b};
}

void emit(const CommandResult& result, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << result.doc.dump(2) << '\n';
    return;
  }
  for (const auto& [k, v] : result.lines) out << k << ": " << v << '\n';
}

CommandResult cmd_derive(const CommonOptions& o, unsigned n) {
  const RecurrenceSpec spec = spec_from(o);
  CommandResult res;
  res.doc["inputs"] = {{"coefficients", to_json(spec.coefficients())}, {"n", n}};
  const DerivationReport report = derive_product_recurrence(spec, n);
  res.relation(report.relation);
  res.doc["k"] = report.k;
  res.doc["rank"] = report.rank;
  res.doc["nullity"] = report.nullity;
  res.doc["tau"] = to_json(report.tau);
  res.line("k", std::to_string(report.k));
  res.line("rank", std::to_string(report.rank));
  res.line("nullity", std::to_string(report.nullity));
  res.line("tau", list_text(report.tau));
  res.doc["checks"] = json::object();
  if (auto so = as_second_order(spec); so && !so->q.is_zero() &&
                                       !first_vanishing_u(*so, static_cast<long>(n) + 1)) {
    const bool agree = report.relation.proportional_to(jarden_recurrence(*so, n));
    res.check("agrees_with_jarden", agree);
    if (!agree) throw ConsistencyError("derived relation is not proportional to the Jarden relation");
  }
  return res;
}

CommandResult cmd_jarden(const CommonOptions& o, unsigned n) {
  const SecondOrderSpec so = second_order_from(o);
  CommandResult res;
  res.doc["inputs"] = {{"p", so.p.to_string()}, {"q", so.q.to_string()}, {"n", n}};
  res.relation(jarden_recurrence(so, n));
  res.doc["checks"] = json::object();
  return res;
}

CommandResult cmd_degenerate(const CommonOptions& o, unsigned n) {
  const SecondOrderSpec so = second_order_from(o);
  CommandResult res;
  res.doc["inputs"] = {{"p", so.p.to_string()}, {"q", so.q.to_string()}, {"n", n}};
  res.relation(degenerate_recurrence(so, n));
  res.doc["checks"] = json::object();
  return res;
}

CommandResult cmd_charpoly(const CommonOptions& o, unsigned v) {
  const SecondOrderSpec so = second_order_from(o);
  if (v < 1) throw ParseError("--v must be >= 1");
  CommandResult res;
  res.doc["inputs"] = {{"p", so.p.to_string()}, {"q", so.q.to_string()}, {"v", v}};
  const DensePolynomial galois = galois_polynomial(so, v);
  const DensePolynomial rev = reciprocal(galois, v);
  const DensePolynomial q_char = char_poly(build_Q(v, so));
  res.polynomial("galois", galois);
  res.polynomial("galois_reciprocal", rev);
  res.polynomial("char_poly_Q", q_char);
  res.doc["checks"] = json::object();
  res.check("cor36", q_char == rev);
  res.check("D3", check_D3(v, so));
  if (!so.q.is_zero()) {
    const DensePolynomial psi = product_char_poly(so, v - 1).poly;
    res.polynomial("product_char_poly", psi);
    res.check("reversal_identity", psi == rev);
  }
  return res;
}

CommandResult cmd_identities(const CommonOptions& o, unsigned max_n) {
  const SecondOrderSpec so = second_order_from(o);
  if (so.q.is_zero()) throw PreconditionError("identities: requires q != 0");
  CommandResult res;
  res.doc["inputs"] = {{"p", so.p.to_string()}, {"q", so.q.to_string()}, {"max_n", max_n}};
  res.doc["checks"] = json::object();
  json rows = json::array();
  bool residuals_zero = true;
  bool square_form = true;
  for (const auto& row : lucas_identity_check(so, 0, static_cast<long>(max_n))) {
    rows.push_back({{"n", row.n}, {"residual", row.residual.to_string()}, {"witness", row.witness.to_string()},
                    {"square_form", row.square_form}});
    res.line("n=" + std::to_string(row.n),
             "residual " + row.residual.to_string() + ", witness " + row.witness.to_string() + ", square form " +
                 (row.square_form ? "true" : "false"));
    residuals_zero = residuals_zero && row.residual.is_zero();
    square_form = square_form && row.square_form;
  }
  res.doc["lucas_rows"] = rows;
  res.check("lucas_residuals_zero", residuals_zero);
  res.check("lucas_square_form", square_form);
  for (unsigned n = 1; n <= max_n; ++n) {
    bool exact = true;
    try {
      factor_extremal_quadratic(so, n);
    } catch (const ConsistencyError&) {
      exact = false;
    }
    res.check("extremal_factor_n" + std::to_string(n), exact);
  }
  for (unsigned n = 2; n <= max_n; ++n) res.check("recursion_n" + std::to_string(n), verify_42_recursion(so, n));
  return res;
}

CommandResult cmd_verify(const CommonOptions& o, const std::vector<std::string>& inits, const std::string& relation,
                         const std::string& range, long base, unsigned max_order) {
  const RecurrenceSpec spec = spec_from(o);
  if (inits.empty()) throw ParseError("verify needs at least one --init");
  std::vector<SequenceInstance> factors;
  for (const auto& text : inits) factors.emplace_back(spec, base, parse_rational_list(text));
  const auto n = static_cast<unsigned>(factors.size());

  CommandResult res;
  res.doc["inputs"] = {{"coefficients", to_json(spec.coefficients())}, {"init", inits}, {"base", base}};
  const RecurrenceRelation rel = relation.empty() ? derive_product_recurrence(spec, n).relation
                                                  : RecurrenceRelation(parse_rational_list(relation));
  const auto order = static_cast<long>(rel.order());
  const auto [lo, hi] = range.empty() ? std::make_pair(base + order, base + order + 40) : parse_range(range);
  const long t = order + 1;
  const long hankel_k = lo - 1;
  const SampledSequence values = product_sample(factors, lo - order, std::max(hi, hankel_k + t * t));

  res.relation(rel);
  res.doc["range"] = {lo, hi};
  res.doc["checks"] = json::object();
  res.check("relation_holds", verify_relation(rel, values, lo, hi));
  const Rational hankel = hankel_check(values, static_cast<std::size_t>(t), hankel_k);
  res.doc["hankel_determinant"] = hankel.to_string();
  res.line("hankel_determinant", hankel.to_string());
  res.check("hankel_zero", hankel.is_zero());

  const long window = hi - (lo - order) + 1;
  const auto cap = static_cast<std::size_t>(std::max<long>(0, (window - 2) / 2));
  const std::size_t bound = std::min<std::size_t>(max_order == 0 ? static_cast<std::size_t>(order) : max_order, cap);
  if (const auto minimal = minimal_relation(values, bound, lo - order, hi)) {
    res.relation(*minimal, "minimal_relation");
  } else {
    res.doc["minimal_relation"] = nullptr;
    res.line("minimal_relation", "none up to order " + std::to_string(bound));
  }
  return res;
}

CommandResult cmd_oracle(const CommonOptions& o, unsigned n, const std::string& which, const std::string& a,
                         const std::string& b, long r) {
  const SecondOrderSpec so = second_order_from(o);
  std::optional<std::pair<Rational, Rational>> w;
  if (!a.empty() || !b.empty()) {
    if (a.empty() || b.empty()) throw ParseError("--a and --b go together");
    w = std::make_pair(Rational::parse(a), Rational::parse(b));
  }
  CommandResult res;
  res.doc["inputs"] = {{"p", so.p.to_string()}, {"q", so.q.to_string()}, {"n", n}, {"appendix", which}, {"r", r}};
  res.doc["checks"] = json::object();
  json details = json::object();
  for (const auto& c : run_appendix_checks(which, n, so, w, r)) {
    res.check(c.name, c.passed);
    if (!c.passed) details[c.name] = c.detail;
  }
  if (!details.empty()) res.doc["failures"] = details;
  return res;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact recurrences for products of linear recurrence solutions", "prodrec"};
  app.require_subcommand(1);

  CommonOptions common;
  unsigned n = 1;
  unsigned v = 1;
  unsigned max_n = 10;
  std::vector<std::string> inits;
  std::string relation;
  std::string range;
  long base = 0;
  unsigned max_order = 0;
  std::string appendix = "all";
  std::string w_a;
  std::string w_b;
  long r = 0;

  auto* derive = app.add_subcommand("derive", "recurrence satisfied by every product of n solutions");
  derive->add_option("--coeffs", common.coeffs, "A_1,...,A_s");
  add_pq(derive, common, false);
  derive->add_option("--n", n, "number of factors")->required()->check(CLI::PositiveNumber);
  add_format(derive, common);

  auto* jarden = app.add_subcommand("jarden", "closed-form second-order product recurrence");
  add_pq(jarden, common, true);
  jarden->add_option("--n", n, "number of factors")->required()->check(CLI::PositiveNumber);
  add_format(jarden, common);

  auto* degenerate = app.add_subcommand("degenerate", "second-order product recurrence when some u_k = 0");
  add_pq(degenerate, common, true);
  degenerate->add_option("--n", n, "number of factors")->required()->check(CLI::PositiveNumber);
  add_format(degenerate, common);

  auto* charpoly = app.add_subcommand("charpoly", "Galois polynomial and characteristic polynomial of Q_v");
  add_pq(charpoly, common, true);
  charpoly->add_option("--v", v, "size of Q_v")->required()->check(CLI::PositiveNumber);
  add_format(charpoly, common);

  auto* identities = app.add_subcommand("identities", "Lucas-type square identities and factorizations");
  add_pq(identities, common, true);
  identities->add_option("--max-n", max_n, "largest n");
  add_format(identities, common);

  auto* verify = app.add_subcommand("verify", "check a relation against a product of solutions");
  verify->add_option("--coeffs", common.coeffs, "A_1,...,A_s");
  add_pq(verify, common, false);
  verify->add_option("--init", inits, "initial values of one factor (repeat per factor)")->required();
  verify->add_option("--base", base, "index of the first initial value");
  verify->add_option("--relation", relation, "c_0,...,c_t (default: derived)");
  verify->add_option("--range", range, "lo:hi range of m to verify");
  verify->add_option("--max-order", max_order, "bound for the minimal-relation search (default: relation order)");
  add_format(verify, common);

  auto* oracle = app.add_subcommand("oracle", "determinant and shift identities of the appendix matrices");
  add_pq(oracle, common, true);
  oracle->add_option("--n", n, "matrix size n (v for D3, cor36)")->required()->check(CLI::PositiveNumber);
  oracle->add_option("--appendix", appendix, "which check")
      ->check(CLI::IsMember({"all", "A3", "A7", "shift", "B", "C", "D3", "cor36"}));
  oracle->add_option("--a", w_a, "W_0 for matrix C (default 0)");
  oracle->add_option("--b", w_b, "W_1 for matrix C (default 1)");
  oracle->add_option("--r", r, "offset r for matrix C");
  add_format(oracle, common);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  std::string name;
  std::function<CommandResult()> body;
  if (derive->parsed()) {
    name = "derive";
    body = [&] { return cmd_derive(common, n); };
  } else if (jarden->parsed()) {
    name = "jarden";
    body = [&] { return cmd_jarden(common, n); };
  } else if (degenerate->parsed()) {
    name = "degenerate";
    body = [&] { return cmd_degenerate(common, n); };
  } else if (charpoly->parsed()) {
    name = "charpoly";
    body = [&] { return cmd_charpoly(common, v); };
  } else if (identities->parsed()) {
    name = "identities";
    body = [&] { return cmd_identities(common, max_n); };
  } else if (verify->parsed()) {
    name = "verify";
    body = [&] { return cmd_verify(common, inits, relation, range, base, max_order); };
  } else {
    name = "oracle";
    body = [&] { return cmd_oracle(common, n, appendix, w_a, w_b, r); };
  }

  try {
    CommandResult result = body();
    const bool consistent = name == "verify" || result.all_checks_pass;
    result.doc["command"] = name;
    result.doc["status"] = consistent ? "ok" : "check_failed";
    result.lines.insert(result.lines.begin(), {"command", name});
    result.line("status", consistent ? "ok" : "check_failed");
    emit(result, common.format, out);
    return consistent ? kOk : kInconsistent;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const ConsistencyError& e) {
    err << "error: " << e.what() << '\n';
    return kInconsistent;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  }
}

}  // namespace prodrec::cli
