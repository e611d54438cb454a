#include "docon/eqprover.hpp"

#include <algorithm>
#include <stdexcept>

#include "docon/errors.hpp"

namespace docon {

std::string_view theory_name(Theory t) {
  switch (t) {
    case Theory::Monoid: return "monoid";
    case Theory::SemiringWithOne: return "swo";
    case Theory::CommSemiring: return "csr";
  }
  return "?";
}

std::optional<Theory> parse_theory(std::string_view name) {
  if (name == "monoid") return Theory::Monoid;
  if (name == "swo" || name == "semiring") return Theory::SemiringWithOne;
  if (name == "csr" || name == "commsemiring") return Theory::CommSemiring;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Term

Term Term::var(std::string name) { return Term(Var{std::move(name)}); }
Term Term::nat(Nat value) { return Term(NatConst{std::move(value)}); }
Term Term::unit(UnitKind which) { return Term(UnitConst{which}); }
Term Term::apply(TermOp op, Term left, Term right) {
  return Term(std::make_shared<const Apply>(Apply{op, std::move(left), std::move(right)}));
}

bool Term::is_var() const { return node_.index() == 0; }
bool Term::is_nat() const { return node_.index() == 1; }
bool Term::is_unit() const { return node_.index() == 2; }
bool Term::is_apply() const { return node_.index() == 3; }
const Term::Var& Term::as_var() const { return std::get<0>(node_); }
const Term::NatConst& Term::as_nat() const { return std::get<1>(node_); }
const Term::UnitConst& Term::as_unit() const { return std::get<2>(node_); }
const Term::Apply& Term::as_apply() const { return *std::get<3>(node_); }

std::size_t Term::depth() const {
  if (!is_apply()) return 0;
  const auto& a = as_apply();
  return 1 + std::max(a.left.depth(), a.right.depth());
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_.index() != b.node_.index()) return false;
  if (a.is_var()) return a.as_var().name == b.as_var().name;
  if (a.is_nat()) return a.as_nat().value == b.as_nat().value;
  if (a.is_unit()) return a.as_unit().which == b.as_unit().which;
  const auto& x = a.as_apply();
  const auto& y = b.as_apply();
  return x.op == y.op && x.left == y.left && x.right == y.right;
}

namespace {

int precedence(TermOp op) { return op == TermOp::Add ? 1 : 2; }

void print(const Term& t, std::string& out) {
  if (t.is_var()) {
    out += t.as_var().name;
  } else if (t.is_nat()) {
    out += t.as_nat().value.str();
  } else if (t.is_unit()) {
    switch (t.as_unit().which) {
      case UnitKind::Identity: out += "e"; break;
      case UnitKind::Zero: out += "0"; break;
      case UnitKind::One: out += "1"; break;
    }
  } else {
    const auto& a = t.as_apply();
    const int p = precedence(a.op);
    // Operators are left-associative: a right operand of equal precedence needs parentheses.
    const bool left_parens = a.left.is_apply() && precedence(a.left.as_apply().op) < p;
    const bool right_parens = a.right.is_apply() && precedence(a.right.as_apply().op) <= p;
    if (left_parens) out += "(";
    print(a.left, out);
    if (left_parens) out += ")";
    out += a.op == TermOp::Add ? " + " : " * ";
    if (right_parens) out += "(";
    print(a.right, out);
    if (right_parens) out += ")";
  }
}

}  // namespace

std::string to_string(const Term& t) {
  std::string s;
  print(t, s);
  return s;
}

// ---------------------------------------------------------------------------
// Normal forms

void check_in_theory(Theory theory, const Term& t) {
  const bool monoid = theory == Theory::Monoid;
  if (t.is_var()) return;
  if (t.is_nat()) {
    if (monoid) throw DomainError("numeral " + t.as_nat().value.str() + " is not a monoid term");
    return;
  }
  if (t.is_unit()) {
    const bool identity = t.as_unit().which == UnitKind::Identity;
    if (monoid != identity)
      throw DomainError(std::string(monoid ? "semiring constant" : "monoid identity") + " used in theory " +
                        std::string(theory_name(theory)));
    return;
  }
  const auto& a = t.as_apply();
  const bool dot = a.op == TermOp::Dot;
  if (monoid != dot)
    throw DomainError(std::string("operator ") + (dot ? "monoid product" : a.op == TermOp::Add ? "+" : "*") +
                      " is not part of theory " + std::string(theory_name(theory)));
  check_in_theory(theory, a.left);
  check_in_theory(theory, a.right);
}

namespace {

using Word = NormalForm::Word;
using Poly = std::map<Word, Nat>;

void flatten(const Term& t, Word& out) {
  if (t.is_var()) {
    out.push_back(t.as_var().name);
  } else if (t.is_apply()) {
    flatten(t.as_apply().left, out);
    flatten(t.as_apply().right, out);
  }
  // The identity contributes nothing.
}

void accumulate(Poly& p, const Word& w, const Nat& c) {
  if (c.is_zero()) return;
  p[w] += c;
}

Poly expand(const Term& t, bool commutative) {
  Poly p;
  if (t.is_var()) {
    p[{t.as_var().name}] = Nat(1);
  } else if (t.is_nat()) {
    accumulate(p, {}, t.as_nat().value);
  } else if (t.is_unit()) {
    if (t.as_unit().which == UnitKind::One) p[{}] = Nat(1);
  } else {
    const auto& a = t.as_apply();
    Poly l = expand(a.left, commutative);
    Poly r = expand(a.right, commutative);
    if (a.op == TermOp::Add) {
      p = std::move(l);
      for (const auto& [w, c] : r) accumulate(p, w, c);
    } else {
      for (const auto& [wl, cl] : l)
        for (const auto& [wr, cr] : r) {
          Word w = wl;
          w.insert(w.end(), wr.begin(), wr.end());
          if (commutative) std::sort(w.begin(), w.end());
          accumulate(p, w, cl * cr);
        }
    }
  }
  return p;
}

}  // namespace

NormalForm normalize(Theory theory, const Term& t) {
  check_in_theory(theory, t);
  NormalForm nf;
  nf.theory = theory;
  if (theory == Theory::Monoid) {
    Word w;
    flatten(t, w);
    nf.terms.emplace_back(std::move(w), Nat(1));
    return nf;
  }
  const bool commutative = theory == Theory::CommSemiring;
  for (auto& [w, c] : expand(t, commutative)) nf.terms.emplace_back(w, c);
  if (commutative)
    std::stable_sort(nf.terms.begin(), nf.terms.end(),
                     [](const auto& a, const auto& b) { return a.first.size() < b.first.size(); });
  return nf;
}

Term to_term(const NormalForm& nf) {
  if (nf.theory == Theory::Monoid) {
    const auto& w = nf.terms.front().first;
    if (w.empty()) return Term::unit(UnitKind::Identity);
    Term acc = Term::var(w.front());
    for (std::size_t i = 1; i < w.size(); ++i) acc = Term::apply(TermOp::Dot, acc, Term::var(w[i]));
    return acc;
  }
  if (nf.terms.empty()) return Term::nat(Nat(0));
  std::optional<Term> sum;
  for (const auto& [w, c] : nf.terms) {
    std::optional<Term> prod;
    if (w.empty() || c != Nat(1)) prod = Term::nat(c);
    for (const auto& v : w) prod = prod ? Term::apply(TermOp::Mul, *prod, Term::var(v)) : Term::var(v);
    sum = sum ? Term::apply(TermOp::Add, *sum, *prod) : *prod;
  }
  return *sum;
}

std::string to_string(const NormalForm& nf) {
  auto word = [](const Word& w, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? sep : "") + w[i];
    return s;
  };
  if (nf.theory == Theory::Monoid) {
    const auto& w = nf.terms.front().first;
    return w.empty() ? "e" : word(w, "*");
  }
  if (nf.terms.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < nf.terms.size(); ++i) {
    const auto& [w, c] = nf.terms[i];
    if (i) s += " + ";
    if (w.empty()) {
      s += c.str();
      continue;
    }
    if (c != Nat(1)) s += c.str() + "*";
    s += word(w, "*");
  }
  return s;
}

Decision<NormalFormPair, NormalFormPair> prove_eq(Theory theory, const Term& lhs, const Term& rhs) {
  NormalFormPair forms{normalize(theory, lhs), normalize(theory, rhs)};
  if (forms.lhs == forms.rhs) return Decision<NormalFormPair, NormalFormPair>::yes(std::move(forms));
  return Decision<NormalFormPair, NormalFormPair>::no(std::move(forms));
}

// ---------------------------------------------------------------------------
// Interpretations

namespace {

template <class Env>
const typename Env::mapped_type& lookup(const Env& env, const std::string& name) {
  auto it = env.find(name);
  if (it == env.end()) throw DomainError("unassigned variable " + name);
  return it->second;
}

Mat2 mat_add(const Mat2& a, const Mat2& b) { return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]}; }

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

}  // namespace

Nat eval_nat(const Term& t, const std::map<std::string, Nat>& env) {
  if (t.is_var()) return lookup(env, t.as_var().name);
  if (t.is_nat()) return t.as_nat().value;
  if (t.is_unit()) {
    if (t.as_unit().which == UnitKind::Identity) throw DomainError("monoid identity in a semiring term");
    return Nat(t.as_unit().which == UnitKind::One ? 1 : 0);
  }
  const auto& a = t.as_apply();
  if (a.op == TermOp::Dot) throw DomainError("monoid product in a semiring term");
  const Nat l = eval_nat(a.left, env);
  const Nat r = eval_nat(a.right, env);
  return a.op == TermOp::Add ? l + r : l * r;
}

std::string eval_words(const Term& t, const std::map<std::string, std::string>& env) {
  if (t.is_var()) return lookup(env, t.as_var().name);
  if (t.is_unit() && t.as_unit().which == UnitKind::Identity) return "";
  if (!t.is_apply() || t.as_apply().op != TermOp::Dot) throw DomainError("not a monoid term");
  return eval_words(t.as_apply().left, env) + eval_words(t.as_apply().right, env);
}

Mat2 eval_mat2(const Term& t, const std::map<std::string, Mat2>& env) {
  if (t.is_var()) return lookup(env, t.as_var().name);
  if (t.is_nat()) {
    const Nat& n = t.as_nat().value;
    return {n, Nat(0), Nat(0), n};
  }
  if (t.is_unit()) {
    if (t.as_unit().which == UnitKind::Identity) throw DomainError("monoid identity in a semiring term");
    const Nat n(t.as_unit().which == UnitKind::One ? 1 : 0);
    return {n, Nat(0), Nat(0), n};
  }
  const auto& a = t.as_apply();
  if (a.op == TermOp::Dot) throw DomainError("monoid product in a semiring term");
  const Mat2 l = eval_mat2(a.left, env);
  const Mat2 r = eval_mat2(a.right, env);
  return a.op == TermOp::Add ? mat_add(l, r) : mat_mul(l, r);
}

namespace {

void collect_vars(const Term& t, std::vector<std::string>& out) {
  if (t.is_var()) {
    if (std::find(out.begin(), out.end(), t.as_var().name) == out.end()) out.push_back(t.as_var().name);
  } else if (t.is_apply()) {
    collect_vars(t.as_apply().left, out);
    collect_vars(t.as_apply().right, out);
  }
}

}  // namespace

std::vector<std::string> variables(const Term& t) {
  std::vector<std::string> out;
  collect_vars(t, out);
  return out;
}

namespace {

std::vector<std::string> joint_variables(const Term& lhs, const Term& rhs) {
  auto vs = variables(lhs);
  for (auto& v : variables(rhs))
    if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(std::move(v));
  return vs;
}

std::string show_mat(const Mat2& m) {
  return "[[" + m[0].str() + "," + m[1].str() + "],[" + m[2].str() + "," + m[3].str() + "]]";
}

// Visits every tuple in {0..base-1}^k until `visit` returns true or `limit`
// tuples have been tried.
template <class F>
bool odometer(std::size_t k, std::size_t base, std::size_t limit, F visit) {
  std::vector<std::size_t> idx(k, 0);
  for (std::size_t tried = 0; tried < limit; ++tried) {
    if (visit(idx)) return true;
    std::size_t j = 0;
    while (j < k && ++idx[j] == base) idx[j++] = 0;
    if (j == k) return false;
  }
  return false;
}

}  // namespace

std::optional<Countermodel> find_countermodel(Theory theory, const Term& lhs, const Term& rhs, unsigned bound,
                                              std::size_t limit) {
  check_in_theory(theory, lhs);
  check_in_theory(theory, rhs);
  const auto vars = joint_variables(lhs, rhs);
  std::optional<Countermodel> found;

  if (theory == Theory::Monoid) {
    std::map<std::string, std::string> env;
    for (std::size_t i = 0; i < vars.size(); ++i) env[vars[i]] = "<" + vars[i] + ">";
    const auto l = eval_words(lhs, env);
    const auto r = eval_words(rhs, env);
    if (l != r) found = Countermodel{env, l.empty() ? "e" : l, r.empty() ? "e" : r};
    return found;
  }

  odometer(vars.size(), bound + 1, limit, [&](const std::vector<std::size_t>& idx) {
    std::map<std::string, Nat> env;
    for (std::size_t i = 0; i < vars.size(); ++i) env[vars[i]] = Nat(idx[i]);
    const Nat l = eval_nat(lhs, env);
    const Nat r = eval_nat(rhs, env);
    if (l == r) return false;
    Countermodel cm{{}, l.str(), r.str()};
    for (const auto& [k, v] : env) cm.assignment[k] = v.str();
    found = std::move(cm);
    return true;
  });
  if (found || theory != Theory::SemiringWithOne) return found;

  odometer(vars.size(), 16, limit, [&](const std::vector<std::size_t>& idx) {
    std::map<std::string, Mat2> env;
    for (std::size_t i = 0; i < vars.size(); ++i)
      env[vars[i]] = {Nat(idx[i] & 1), Nat((idx[i] >> 1) & 1), Nat((idx[i] >> 2) & 1), Nat((idx[i] >> 3) & 1)};
    const Mat2 l = eval_mat2(lhs, env);
    const Mat2 r = eval_mat2(rhs, env);
    if (l == r) return false;
    Countermodel cm{{}, show_mat(l), show_mat(r)};
    for (const auto& [k, v] : env) cm.assignment[k] = show_mat(v);
    found = std::move(cm);
    return true;
  });
  return found;
}

// ---------------------------------------------------------------------------
// Fuel

Fuel Fuel::finite(Nat remaining) {
  Fuel f;
  f.finite_ = true;
  f.count_ = std::move(remaining);
  return f;
}

Fuel Fuel::practically_infinite() {
  Fuel f;
  f.finite_ = false;
  Int e = 1;
  for (int i = 0; i < 100; ++i) e *= 10;
  f.exponent_ = Nat(e);
  return f;
}

const Nat& Fuel::remaining() const {
  if (!finite_) throw std::logic_error("practically-infinite fuel has no remaining count");
  return count_;
}

const Nat& Fuel::steps_taken() const {
  if (finite_) throw std::logic_error("finite fuel does not count steps taken");
  return count_;
}

const Nat& Fuel::bound_exponent() const {
  if (finite_) throw std::logic_error("finite fuel has no symbolic bound");
  return exponent_;
}

bool Fuel::exhausted() const {
  if (finite_) return count_.is_zero();
  // steps ≥ 2^e exactly when the step count needs more than e bits.
  return Nat(count_.bit_length()) > exponent_;
}

void Fuel::consume() {
  if (finite_)
    count_ = monus(count_, Nat(1));
  else
    count_ += Nat(1);
}

}  // namespace docon
