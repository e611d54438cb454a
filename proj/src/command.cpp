#include "docon/command.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <sstream>

#include "docon/certlists.hpp"
#include "docon/errors.hpp"
#include "docon/euclid.hpp"
#include "docon/expr.hpp"
#include "docon/factorization.hpp"
#include "docon/fractions.hpp"
#include "docon/integers.hpp"
#include "docon/laws.hpp"
#include "docon/naturals.hpp"
#include "docon/polynomials.hpp"
#include "docon/power.hpp"

namespace docon::cli {

using json = nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------------------
// Instance names

std::optional<Int> suffix_number(const std::string& name, const std::string& prefix) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
  const std::string digits = name.substr(prefix.size());
  if (digits.size() > 18 || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }))
    return std::nullopt;
  return parse_int(digits);
}

bool is_small_prime(const Int& p) { return p >= 2 && is_prime(p).is_prime(); }

const std::vector<std::string> kFixedInstances = {"nat-add", "nat-mul",  "nat-pos-mul", "nat-pos-factor",
                                                  "bin-add", "int",      "int-add",     "int-ufr",
                                                  "frac",    "poly-int", "poly-z7"};

// ---------------------------------------------------------------------------
// laws

struct LawSummary {
  std::string instance;
  std::string kind;
  std::size_t cases = 0;
  std::size_t checks = 0;
  struct Failure {
    std::string law;
    std::string witness;
    bool reproduces;
  };
  std::vector<Failure> failures;
};

template <class T>
LawSummary summarize(const StructureInstance<T>& inst, const LawsCmd& c) {
  validate(inst);
  const auto report = c.unique ? check_unique_sampled(inst, c.seed, c.budget)
                               : check_laws(inst, c.seed, c.budget, LawOptions{c.sweep});
  LawSummary s{inst.name, std::string(kind_name(inst.kind)), report.cases, report.checks, {}};
  for (const auto& f : report.failures) {
    std::string w = "(";
    for (std::size_t i = 0; i < f.witness.size(); ++i) w += (i ? ", " : "") + inst.show(f.witness[i]);
    // Unique-factorization failures have no catalogue law to re-run.
    s.failures.push_back({f.law, w + ")", c.unique || !recheck(inst, f)});
  }
  return s;
}

LawSummary laws_for(const std::string& name, const LawsCmd& c) {
  if (name == "nat-add") return summarize(nat_additive(), c);
  if (name == "nat-mul") return summarize(nat_multiplicative(), c);
  if (name == "nat-pos-mul") return summarize(positive_nat_multiplicative(), c);
  if (name == "nat-pos-factor") return summarize(positive_nat_factorization(), c);
  if (name == "nat-monus") return summarize(nat_monus(), c);
  if (name == "bin-add") return summarize(bin_additive(), c);
  if (name == "int") return summarize(int_ring(), c);
  if (name == "int-add") return summarize(int_additive_group(), c);
  if (name == "int-ufr") return summarize(int_ufr(), c);
  if (name == "frac") return summarize(rational_field(), c);
  if (name == "poly-int")
    return summarize(poly_additive_group(std::make_shared<const StructureInstance<Int>>(int_ring()), "poly-int"), c);
  if (name == "poly-z7")
    return summarize(
        poly_additive_group(std::make_shared<const StructureInstance<Residue<Int>>>(int_residue_ring(7)), "poly-z7"), c);
  if (auto b = suffix_number(name, "zmod")) return summarize(int_residue_ring(*b), c);
  if (auto p = suffix_number(name, "gf")) return summarize(int_residue_field(*p), c);
  throw DomainError("unknown instance " + name);
}

// ---------------------------------------------------------------------------
// Output helpers

struct Result {
  int exit = kOk;
  json doc;
  std::string text;
};

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

constexpr std::size_t kShownFailures = 8;

Result do_laws(const LawsCmd& c) {
  Result r;
  r.doc["command"] = "laws";
  r.doc["seed"] = c.seed;
  r.doc["budget"] = c.budget;
  r.doc["sweep"] = c.sweep;
  r.doc["suite"] = c.unique ? "unique-factorization" : "laws";
  std::vector<std::string> names{c.instance};
  if (c.instance == "all") names = c.unique ? std::vector<std::string>{"nat-pos-factor", "int-ufr"} : default_instances();
  json reports = json::array();
  std::size_t total_failures = 0;
  for (const auto& name : names) {
    const auto s = laws_for(name, c);
    json j;
    j["instance"] = s.instance;
    j["kind"] = s.kind;
    j["cases"] = s.cases;
    j["checks"] = s.checks;
    json fs = json::array();
    r.text += s.instance + " [" + s.kind + "] cases=" + std::to_string(s.cases) + " checks=" + std::to_string(s.checks) +
              (s.failures.empty() ? " ok" : " failures=" + std::to_string(s.failures.size())) + "\n";
    for (std::size_t i = 0; i < s.failures.size(); ++i) {
      const auto& f = s.failures[i];
      fs.push_back({{"law", f.law}, {"witness", f.witness}, {"reproduces", f.reproduces}});
      if (i < kShownFailures)
        r.text += "  FAIL " + f.law + " " + f.witness + (f.reproduces ? " (re-checked)" : " (did not reproduce)") + "\n";
    }
    if (s.failures.size() > kShownFailures)
      r.text += "  ... " + std::to_string(s.failures.size() - kShownFailures) + " more (see --json)\n";
    j["failures"] = fs;
    reports.push_back(j);
    total_failures += s.failures.size();
  }
  r.doc["reports"] = reports;
  r.doc["failures"] = total_failures;
  r.text += std::to_string(names.size()) + " instance(s), " + std::to_string(total_failures) + " failure(s)";
  r.exit = total_failures == 0 ? kOk : kNegative;
  return r;
}

Result do_factor(const FactorCmd& c) {
  const auto f = factor(c.n);
  bool verified = product_of(f) == c.n;
  json fs = json::array();
  for (const auto& pp : f.factors) {
    verified = verified && verify_primality(pp.cert);
    fs.push_back({{"prime", pp.prime.str()}, {"multiplicity", pp.multiplicity.str()}});
  }
  Result r;
  r.text = render_factorization(c.n, f);
  r.doc = {{"command", "factor"}, {"n", c.n.str()}, {"unit", f.unit.str()}, {"factors", fs}, {"verified", verified}};
  return r;
}

Result do_egcd(const EgcdCmd& c) {
  const auto& z = int_ring();
  const auto cert = extended_gcd(z, c.a, c.b);
  const bool ok = verify_bezout(z, c.a, c.b, cert);
  Result r;
  r.text = "g=" + cert.g.str() + " u=" + cert.u.str() + " v=" + cert.v.str() + "\nqa=" + cert.qa.str() +
           " qb=" + cert.qb.str() + "\nverified=" + (ok ? "true" : "false");
  r.doc = {{"command", "egcd"}, {"a", c.a.str()},   {"b", c.b.str()},   {"g", cert.g.str()},   {"u", cert.u.str()},
           {"v", cert.v.str()}, {"qa", cert.qa.str()}, {"qb", cert.qb.str()}, {"verified", ok}};
  return r;
}

Result do_isprime(const IsPrimeCmd& c) {
  const auto cert = is_prime(c.n);
  const bool ok = verify_primality(cert);
  Result r;
  r.doc = {{"command", "isprime"}, {"n", c.n.str()}, {"prime", cert.is_prime()}};
  if (cert.is_prime()) {
    r.text = "n=" + c.n.str() + " prime=true\nverified=" + (ok ? "true" : "false");
  } else {
    const auto& w = *cert.factor;
    r.text = "n=" + c.n.str() + " prime=false\nwitness=" + w.divisor.str() + " * " + w.quotient.str() + " = " +
             w.dividend.str() + "\nverified=" + (ok ? "true" : "false");
    r.doc["witness"] = {{"divisor", w.divisor.str()}, {"quotient", w.quotient.str()}, {"dividend", w.dividend.str()}};
    r.exit = kNegative;
  }
  r.doc["verified"] = ok;
  return r;
}

Result do_residue(const ResidueCmd& c) {
  const auto ring = c.field ? int_residue_field(c.modulus) : int_residue_ring(c.modulus);
  const Expr e = parse_expr(c.expression, ParseMode::Frac);
  const auto v = eval_residue(ring, e);
  const std::string shown = ring.show(v);
  Result r;
  r.text = c.expression + " = " + shown + " (mod " + c.modulus.str() + ")";
  r.doc = {{"command", "residue"},    {"modulus", c.modulus.str()}, {"field", c.field},
           {"expression", c.expression}, {"instance", ring.name},   {"value", shown}};
  return r;
}

Result do_frac(const FracCmd& c) {
  const Rational v = eval_frac(parse_expr(c.expression, ParseMode::Frac));
  Result r;
  r.text = to_string(v);
  r.doc = {{"command", "frac"},       {"expression", c.expression}, {"value", r.text},
           {"num", v.num().str()},    {"den", v.den().str()},       {"canonical", v.is_canonical()}};
  return r;
}

template <class T>
Result render_poly(const PolyCmd& c, const Poly<T>& p) {
  Result r;
  r.text = to_string(p);
  const Degree d = degree(p);
  const std::string deg = std::holds_alternative<Nat>(d) ? std::get<Nat>(d).str() : "-inf";
  json terms = json::array();
  for (const auto& t : p.terms()) terms.push_back({{"coeff", p.ring()->show(t.coeff)}, {"exp", t.exp.str()}});
  r.doc = {{"command", "poly"}, {"expression", c.expression}, {"coefficients", p.ring()->name},
           {"value", r.text},   {"degree", deg},              {"terms", terms}};
  return r;
}

Result do_poly(const PolyCmd& c) {
  const Expr e = parse_expr(c.expression, ParseMode::Poly);
  if (!c.modulus) {
    auto z = std::make_shared<const StructureInstance<Int>>(int_ring());
    return render_poly(c, eval_poly(z, e, [](const Int& v) { return v; }));
  }
  auto zm = std::make_shared<const StructureInstance<Residue<Int>>>(int_residue_ring(*c.modulus));
  const Int m = *c.modulus;
  return render_poly(c, eval_poly(zm, e, [m](const Int& v) { return Residue<Int>{m, int_div_mod(v, m).second}; }));
}

template <class T, class Parse>
Result sort_with(const SortCmd& c, const DecTotalOrder<T>& dto, const Parse& parse) {
  std::vector<T> xs;
  for (const auto& s : c.values) xs.push_back(parse(s));
  const auto res = sort_certified(dto, std::span<const T>(xs));
  const auto problems = sort_result_problems(dto, std::span<const T>(xs), res);
  std::vector<std::string> ys, perm;
  for (const auto& y : res.ys) ys.push_back(dto.base->show(y));
  for (auto k : res.perm) perm.push_back(std::to_string(k));
  Result r;
  r.text = "sorted: " + join(ys, " ") + "\nperm: " + join(perm, " ") + "\nverified: " + (problems.empty() ? "yes" : "no");
  for (const auto& p : problems) r.text += "\n  " + p;
  r.doc = {{"command", "sort"}, {"order", c.order}, {"input", c.values},         {"sorted", ys},
           {"perm", res.perm},  {"verified", problems.empty()}, {"problems", problems}};
  if (!problems.empty()) r.exit = kNegative;
  return r;
}

Result do_sort(const SortCmd& c) {
  if (c.order == "frac") return sort_with(c, rational_order(), [](const std::string& s) { return parse_rational(s); });
  return sort_with(c, int_order(), [](const std::string& s) { return parse_int(s); });
}

template <class T>
Result pow_with(const PowCmd& c, const StructureInstance<T>& m, const T& base) {
  PowerStats stats;
  const T v = power(m, base, c.exponent, &stats);
  Result r;
  r.text = m.show(base) + "^" + c.exponent.str() + " = " + m.show(v) + " in " + m.name + "\nexponent=" +
           to_string(to_bin(c.exponent)) + " squarings=" + std::to_string(stats.squarings) +
           " multiplications=" + std::to_string(stats.multiplications);
  r.doc = {{"command", "pow"},
           {"monoid", m.name},
           {"base", m.show(base)},
           {"exponent", c.exponent.str()},
           {"exponent_bin", to_string(to_bin(c.exponent))},
           {"value", m.show(v)},
           {"squarings", stats.squarings},
           {"multiplications", stats.multiplications}};
  return r;
}

Result do_pow(const PowCmd& c) {
  const std::string& n = c.monoid;
  if (n == "nat-add") return pow_with(c, nat_additive(), Nat::parse(c.base));
  if (n == "nat-mul") return pow_with(c, nat_multiplicative(), Nat::parse(c.base));
  if (n == "nat-pos-mul") {
    const Nat b = Nat::parse(c.base);
    if (b.is_zero()) throw DomainError("0 is not in N\\0");
    return pow_with(c, positive_nat_multiplicative(), b);
  }
  if (n == "bin-add") {
    const bool coded = c.base.rfind("0b", 0) == 0;
    return pow_with(c, bin_additive(), coded ? parse_bin(c.base) : to_bin(Nat::parse(c.base)));
  }
  if (n == "int-add") return pow_with(c, int_additive_group(), parse_int(c.base));
  if (n == "int-mul") return pow_with(c, multiplicative_monoid(int_ring()), parse_int(c.base));
  if (n == "frac-mul") return pow_with(c, multiplicative_monoid(rational_field()), parse_rational(c.base));
  if (n == "nat-monus") return pow_with(c, nat_monus(), Nat::parse(c.base));
  if (auto b = suffix_number(n, "zmod")) {
    const auto m = multiplicative_monoid(int_residue_ring(*b));
    return pow_with(c, m, Residue<Int>{*b, int_div_mod(parse_int(c.base), *b).second});
  }
  throw DomainError("unknown monoid " + n);
}

Result do_prove(const ProveCmd& c) {
  const auto [lhs_e, rhs_e] = parse_equation(c.equation);
  const Term lhs = to_prover_term(lhs_e, c.theory);
  const Term rhs = to_prover_term(rhs_e, c.theory);
  const auto verdict = prove_eq(c.theory, lhs, rhs);
  const auto& forms = verdict.is_yes() ? verdict.witness() : verdict.refuter();
  const std::string ln = to_string(forms.lhs);
  const std::string rn = to_string(forms.rhs);
  Result r;
  r.doc = {{"command", "prove"},    {"theory", std::string(theory_name(c.theory))},
           {"lhs", to_string(lhs)}, {"rhs", to_string(rhs)},
           {"verdict", verdict.is_yes() ? "yes" : "no"}, {"lhs_normal_form", ln}, {"rhs_normal_form", rn}};
  if (verdict.is_yes()) {
    r.text = "Yes: both sides normalize to " + ln;
    return r;
  }
  r.exit = kNegative;
  r.text = "No: lhs normalizes to " + ln + ", rhs to " + rn;
  if (const auto cm = find_countermodel(c.theory, lhs, rhs)) {
    std::vector<std::string> parts;
    json a = json::object();
    for (const auto& [k, v] : cm->assignment) {
      parts.push_back(k + "=" + v);
      a[k] = v;
    }
    r.text += "\ncountermodel: " + join(parts, " ") + " gives lhs=" + cm->lhs_value + " rhs=" + cm->rhs_value;
    r.doc["countermodel"] = a;
    r.doc["countermodel_lhs"] = cm->lhs_value;
    r.doc["countermodel_rhs"] = cm->rhs_value;
  }
  return r;
}

Result dispatch(const Command& cmd) {
  return std::visit(
      [](const auto& c) -> Result {
        using C = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<C, LawsCmd>) return do_laws(c);
        if constexpr (std::is_same_v<C, FactorCmd>) return do_factor(c);
        if constexpr (std::is_same_v<C, EgcdCmd>) return do_egcd(c);
        if constexpr (std::is_same_v<C, IsPrimeCmd>) return do_isprime(c);
        if constexpr (std::is_same_v<C, ResidueCmd>) return do_residue(c);
        if constexpr (std::is_same_v<C, FracCmd>) return do_frac(c);
        if constexpr (std::is_same_v<C, PolyCmd>) return do_poly(c);
        if constexpr (std::is_same_v<C, SortCmd>) return do_sort(c);
        if constexpr (std::is_same_v<C, PowCmd>) return do_pow(c);
        if constexpr (std::is_same_v<C, ProveCmd>) return do_prove(c);
      },
      cmd);
}

Outcome error_outcome(const Error& e, bool json_out) {
  json doc = {{"error", e.what()}, {"code", static_cast<int>(e.code())}};
  std::string text = std::string("error: ") + e.what();
  if (const auto* cm = dynamic_cast<const CompositeModulus<Int>*>(&e)) {
    const auto& w = cm->witness();
    text += "\nwitness: " + w.divisor.str() + " | " + w.dividend.str() + " (quotient " + w.quotient.str() + ")";
    doc["witness"] = {{"divisor", w.divisor.str()}, {"dividend", w.dividend.str()}, {"quotient", w.quotient.str()}};
  }
  if (const auto* se = dynamic_cast<const SyntaxError*>(&e)) {
    doc["position"] = se->position();
    doc["expected"] = se->expected();
  }
  doc["exit"] = static_cast<int>(e.code());
  return {static_cast<int>(e.code()), json_out ? doc.dump(2) : text};
}

}  // namespace

bool known_instance(const std::string& name) {
  if (name == "all" || name == "nat-monus") return true;
  if (std::find(kFixedInstances.begin(), kFixedInstances.end(), name) != kFixedInstances.end()) return true;
  if (auto b = suffix_number(name, "zmod")) return *b >= 2;
  if (auto p = suffix_number(name, "gf")) return is_small_prime(*p);
  return false;
}

std::vector<std::string> default_instances() {
  std::vector<std::string> names = kFixedInstances;
  for (int b = 2; b <= 50; ++b) names.push_back("zmod" + std::to_string(b));
  for (int p = 2; p < 100; ++p)
    if (is_small_prime(p)) names.push_back("gf" + std::to_string(p));
  return names;
}

bool known_monoid(const std::string& name) {
  static const std::vector<std::string> fixed = {"nat-add", "nat-mul", "nat-pos-mul", "nat-monus",
                                                 "bin-add", "int-add", "int-mul",     "frac-mul"};
  if (std::find(fixed.begin(), fixed.end(), name) != fixed.end()) return true;
  if (auto b = suffix_number(name, "zmod")) return *b >= 2;
  return false;
}

Outcome run(const Command& cmd, bool json_out) {
  try {
    Result r = dispatch(cmd);
    if (json_out) {
      r.doc["exit"] = r.exit;
      return {r.exit, r.doc.dump(2)};
    }
    return {r.exit, r.text};
  } catch (const Error& e) {
    return error_outcome(e, json_out);
  }
}

// ---------------------------------------------------------------------------
// Command line

namespace {

Int int_arg(const std::string& text, const std::string& what) {
  try {
    return parse_int(text);
  } catch (const Error&) {
    throw CLI::ValidationError(what, "not an integer: " + text);
  }
}

std::uint64_t default_seed() {
  if (const char* s = std::getenv("DOCON_SEED")) {
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      throw CLI::ValidationError("DOCON_SEED", std::string("not a seed: ") + s);
    }
  }
  return 1;
}

}  // namespace

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream* input) {
  CLI::App app{"docon: algebraic structures, certified algorithms and law suites", "docon"};
  app.require_subcommand(1);
  bool json_out = false;
  app.add_flag("--json", json_out, "Print one JSON object instead of text");

  Command cmd;
  std::string a1, a2, a3;
  std::vector<std::string> values;
  LawsCmd laws;
  ResidueCmd residue;
  PolyCmd poly;
  SortCmd sort;
  std::string theory = "csr";
  std::string poly_mod;

  auto* c_laws = app.add_subcommand("laws", "Run law suites on named instances");
  c_laws->add_option("instance", laws.instance, "Instance name or 'all'")->check(CLI::Validator(
      [](std::string& s) { return known_instance(s) ? std::string() : "unknown instance " + s; }, "INSTANCE"));
  c_laws->add_option("--seed", laws.seed, "Sampling seed (default: $DOCON_SEED or 1)");
  c_laws->add_option("--budget", laws.budget, "Sampled tuples per instance")->capture_default_str();
  c_laws->add_option("--sweep", laws.sweep, "Also check every tuple over enumerate(N)");
  c_laws->add_flag("--unique", laws.unique, "Run the unique-factorization check (factorization instances)");

  auto* c_factor = app.add_subcommand("factor", "Factor an integer by trial division");
  c_factor->add_option("n", a1)->required();
  auto* c_egcd = app.add_subcommand("egcd", "Extended gcd with a Bezout certificate");
  c_egcd->add_option("a", a1)->required();
  c_egcd->add_option("b", a2)->required();
  auto* c_isprime = app.add_subcommand("isprime", "Primality by trial division, with witness");
  c_isprime->add_option("n", a1)->required();

  auto* c_residue = app.add_subcommand("residue", "Evaluate an expression in Z/(m)");
  c_residue->add_option("-m,--modulus", a2, "Modulus")->required();
  c_residue->add_flag("--field", residue.field, "Build the residue field (m must be prime)");
  c_residue->add_option("expression", residue.expression)->required();

  auto* c_frac = app.add_subcommand("frac", "Evaluate a rational expression");
  c_frac->add_option("expression", a1)->required();

  auto* c_poly = app.add_subcommand("poly", "Evaluate a polynomial expression in x");
  c_poly->add_option("expression", poly.expression)->required();
  c_poly->add_option("-m,--modulus", poly_mod, "Coefficients in Z/(m)");

  auto* c_sort = app.add_subcommand("sort", "Certified merge sort (values from arguments or stdin)");
  c_sort->add_option("--order", sort.order, "int or frac")->check(CLI::IsMember({"int", "frac"}))->capture_default_str();
  c_sort->add_option("values", values);

  auto* c_pow = app.add_subcommand("pow", "Binary powering in a monoid");
  c_pow->add_option("monoid", a1)->required()->check(CLI::Validator(
      [](std::string& s) { return known_monoid(s) ? std::string() : "unknown monoid " + s; }, "MONOID"));
  c_pow->add_option("base", a2)->required();
  c_pow->add_option("exponent", a3)->required();

  auto* c_prove = app.add_subcommand("prove", "Decide an equation by normalization");
  c_prove->add_option("--theory", theory, "monoid, swo (semiring with one) or csr (commutative semiring)")
      ->check(CLI::Validator(
          [](std::string& s) { return parse_theory(s) ? std::string() : "unknown theory " + s; }, "THEORY"))
      ->capture_default_str();
  c_prove->add_option("equation", a1, "\"lhs = rhs\"")->required();

  try {
    laws.seed = default_seed();
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);

    if (*c_laws) {
      cmd = laws;
    } else if (*c_factor) {
      cmd = FactorCmd{int_arg(a1, "n")};
    } else if (*c_egcd) {
      cmd = EgcdCmd{int_arg(a1, "a"), int_arg(a2, "b")};
    } else if (*c_isprime) {
      cmd = IsPrimeCmd{int_arg(a1, "n")};
    } else if (*c_residue) {
      residue.modulus = int_arg(a2, "modulus");
      cmd = residue;
    } else if (*c_frac) {
      cmd = FracCmd{a1};
    } else if (*c_poly) {
      if (!poly_mod.empty()) poly.modulus = int_arg(poly_mod, "modulus");
      cmd = poly;
    } else if (*c_sort) {
      if (values.empty() && input) {
        std::string v;
        while (*input >> v) values.push_back(v);
      }
      sort.values = values;
      cmd = sort;
    } else if (*c_pow) {
      Nat e;
      try {
        e = Nat::parse(a3);
      } catch (const Error&) {
        throw CLI::ValidationError("exponent", "not a natural number: " + a3);
      }
      cmd = PowCmd{a1, a2, e};
    } else {
      cmd = ProveCmd{*parse_theory(theory), a1};
    }
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    app.exit(e, out, err);
    return kUsage;
  }

  const Outcome o = run(cmd, json_out);
  (o.exit >= kUsage && !json_out ? err : out) << o.output << "\n";
  return o.exit;
}

}  // namespace docon::cli
