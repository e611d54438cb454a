#pragma once

#include <array>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "docon/decision.hpp"
#include "docon/nat.hpp"

namespace docon {

enum class Theory { Monoid, SemiringWithOne, CommSemiring };

std::string_view theory_name(Theory t);
/// Accepts "monoid", "swo"/"semiring", "csr"/"commsemiring".
std::optional<Theory> parse_theory(std::string_view name);

enum class TermOp { Dot, Add, Mul };
enum class UnitKind { Identity, Zero, One };

/// Expression tree for the provers. Immutable; subtrees are shared.
class Term {
 public:
  struct Var {
    std::string name;
  };
  struct NatConst {
    Nat value;
  };
  struct UnitConst {
    UnitKind which;
  };
  struct Apply;

  static Term var(std::string name);
  static Term nat(Nat value);
  static Term unit(UnitKind which);
  static Term apply(TermOp op, Term left, Term right);

  bool is_var() const;
  bool is_nat() const;
  bool is_unit() const;
  bool is_apply() const;
  const Var& as_var() const;
  const NatConst& as_nat() const;
  const UnitConst& as_unit() const;
  const Apply& as_apply() const;

  std::size_t depth() const;
  friend bool operator==(const Term& a, const Term& b);

 private:
  using Node = std::variant<Var, NatConst, UnitConst, std::shared_ptr<const Apply>>;
  explicit Term(Node n) : node_(std::move(n)) {}
  Node node_;
};

struct Term::Apply {
  TermOp op;
  Term left;
  Term right;
};

/// Minimal parenthesization; ∙ prints as "*", the monoid identity as "e".
std::string to_string(const Term& t);

/// Canonical representative of a term in the free theory: a sorted list of
/// (word, coefficient). Monoid forms have exactly one word with coefficient 1.
/// CommSemiring words are sorted multisets of variables, ordered by degree
/// then lexicographically; SemiringWithOne words keep variable order and are
/// ordered lexicographically. No zero coefficients, no repeated words.
struct NormalForm {
  using Word = std::vector<std::string>;
  Theory theory = Theory::Monoid;
  std::vector<std::pair<Word, Nat>> terms;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

std::string to_string(const NormalForm& nf);

/// Throws DomainError when the term uses an operator or constant outside the theory.
void check_in_theory(Theory theory, const Term& t);

NormalForm normalize(Theory theory, const Term& t);

/// Re-embeds a normal form as a term of the same theory.
Term to_term(const NormalForm& nf);

struct NormalFormPair {
  NormalForm lhs;
  NormalForm rhs;
};

/// Yes iff both sides have the same normal form; both forms are returned as
/// evidence either way.
Decision<NormalFormPair, NormalFormPair> prove_eq(Theory theory, const Term& lhs, const Term& rhs);

// ---------------------------------------------------------------------------
// Interpretations, used to validate verdicts independently of normalize.

/// Semiring terms in ℕ. Throws DomainError on unassigned variables or ∙.
Nat eval_nat(const Term& t, const std::map<std::string, Nat>& env);
/// Monoid terms in the free monoid of strings.
std::string eval_words(const Term& t, const std::map<std::string, std::string>& env);

/// 2×2 matrices over ℕ, row-major: a non-commutative semiring with one.
using Mat2 = std::array<Nat, 4>;
Mat2 eval_mat2(const Term& t, const std::map<std::string, Mat2>& env);

/// Distinct variable names in order of first occurrence.
std::vector<std::string> variables(const Term& t);

/// An assignment under which the two sides evaluate differently.
struct Countermodel {
  std::map<std::string, std::string> assignment;
  std::string lhs_value;
  std::string rhs_value;
};

/// Searches small interpretations for a refutation of lhs = rhs: distinct
/// letters in the free monoid; ℕ values 0..bound for the semirings, then
/// 0/1 matrices for SemiringWithOne. At most `limit` assignments are tried.
std::optional<Countermodel> find_countermodel(Theory theory, const Term& lhs, const Term& rhs, unsigned bound = 3,
                                              std::size_t limit = 200000);

// ---------------------------------------------------------------------------
// Fuel-bounded iteration

/// Step budget for iterations whose termination is known but not proved.
/// Finite fuel counts down and stops at zero. Practically-infinite fuel is
/// the bound 2^(10^100): it is kept symbolically (only the exponent is
/// stored) and each step just increments a counter.
class Fuel {
 public:
  static Fuel finite(Nat remaining);
  static Fuel practically_infinite();

  bool is_finite() const noexcept { return finite_; }
  /// Remaining steps of a finite budget.
  const Nat& remaining() const;
  /// Steps consumed so far by a practically-infinite budget.
  const Nat& steps_taken() const;
  /// log₂ of the practically-infinite bound (10^100).
  const Nat& bound_exponent() const;

  bool exhausted() const;
  void consume();

 private:
  Fuel() = default;
  bool finite_ = true;
  Nat count_;
  Nat exponent_;
};

template <class S>
struct Completed {
  S result;
  Fuel left;
};

template <class S>
struct Exhausted {
  S state;
};

template <class S>
using FuelOutcome = std::variant<Completed<S>, Exhausted<S>>;

/// Applies `step` until `halted` holds or the fuel runs out.
template <class S>
FuelOutcome<S> with_fuel(Fuel fuel, const std::function<S(const S&)>& step, const std::function<bool(const S&)>& halted,
                         S state) {
  while (!halted(state)) {
    if (fuel.exhausted()) return Exhausted<S>{std::move(state)};
    state = step(state);
    fuel.consume();
  }
  return Completed<S>{std::move(state), std::move(fuel)};
}

}  // namespace docon
