#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "docon/eqprover.hpp"
#include "docon/errors.hpp"
#include "docon/euclid.hpp"
#include "docon/fractions.hpp"
#include "docon/nat.hpp"
#include "docon/polynomials.hpp"

namespace docon {

/// What a parse may contain.
///   int : integers, + - * ^, parentheses;
///   frac: as int, plus '/';
///   poly: as int, plus the variable x;
///   term: variables and naturals under + and * (no '-', '/', '^').
enum class ParseMode { Int, Frac, Poly, Term };

std::string_view mode_name(ParseMode m);

/// Parse tree. Grammar (left-associative, * and / bind tighter than + and -):
///   expr    := product (('+' | '-') product)*
///   product := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' natural)?
///   primary := natural | identifier | '(' expr ')'
/// In frac mode "n/d" with both sides integer literals is a single
/// fraction literal.
struct Expr {
  struct Number {
    Int value;
  };
  struct FracLit {
    Int num;
    Int den;
  };
  struct Var {
    std::string name;
  };
  struct Neg {
    std::shared_ptr<const Expr> arg;
  };
  struct Binary {
    char op;
    std::shared_ptr<const Expr> left;
    std::shared_ptr<const Expr> right;
  };
  struct Power {
    std::shared_ptr<const Expr> base;
    Nat exponent;
  };

  std::variant<Number, FracLit, Var, Neg, Binary, Power> node;
  /// Offset of the node's first character in the source text.
  std::size_t position = 0;
};

/// Throws SyntaxError with the offending position and the expected tokens.
Expr parse_expr(std::string_view text, ParseMode mode);

/// Two term-mode expressions separated by '='.
std::pair<Expr, Expr> parse_equation(std::string_view text);

/// Fully parenthesized rendering of the tree, e.g. "((x * y) * z)".
std::string to_string(const Expr& e);

Int eval_int(const Expr& e);
/// Throws DivisionByZero on a zero divisor.
Rational eval_frac(const Expr& e);

/// Prover term for `theory`. In the monoid theory '*' is the monoid
/// product and "1" / "e" the identity; in the semirings 0 and 1 are the
/// unit constants and larger numerals are natural constants.
Term to_prover_term(const Expr& e, Theory theory);

namespace detail {

template <class T, class Lift, class Recip>
T eval_in(const StructureInstance<T>& r, const Expr& e, const Lift& lift, const Recip& recip) {
  auto sub = [&](const Expr& x) { return eval_in(r, x, lift, recip); };
  if (auto* n = std::get_if<Expr::Number>(&e.node)) return lift(n->value);
  if (auto* f = std::get_if<Expr::FracLit>(&e.node)) return r.ops.mul(lift(f->num), recip(lift(f->den)));
  if (auto* v = std::get_if<Expr::Var>(&e.node)) throw DomainError("unexpected variable " + v->name);
  if (auto* n = std::get_if<Expr::Neg>(&e.node)) return r.ops.neg(sub(*n->arg));
  if (auto* p = std::get_if<Expr::Power>(&e.node)) {
    T base = sub(*p->base);
    T acc = *r.ops.one;
    for (Nat i = 0; i < p->exponent; i += 1) acc = r.ops.mul(acc, base);
    return acc;
  }
  const auto& b = std::get<Expr::Binary>(e.node);
  T x = sub(*b.left);
  T y = sub(*b.right);
  switch (b.op) {
    case '+': return r.ops.add(x, y);
    case '-': return r.ops.add(x, r.ops.neg(y));
    case '*': return r.ops.mul(x, y);
    default: return r.ops.mul(x, recip(y));
  }
}

}  // namespace detail

/// Evaluates an int- or frac-mode expression in a residue ring. '/' needs
/// the ring's reciprocal (fields only).
template <class T>
Residue<T> eval_residue(const StructureInstance<Residue<T>>& r, const Expr& e) {
  auto lift = [&](const Int& v) {
    // Binary expansion of |v| over one, so large literals stay cheap.
    Residue<T> acc = *r.ops.zero;
    Residue<T> step = *r.ops.one;
    Int k = abs(v);
    while (k > 0) {
      if ((k & 1) != 0) acc = r.ops.add(acc, step);
      step = r.ops.add(step, step);
      k >>= 1;
    }
    return v < 0 ? r.ops.neg(acc) : acc;
  };
  auto recip = [&](const Residue<T>& x) {
    if (!r.ops.recip) throw DomainError("division in " + r.name + " needs the residue field (--field)");
    return r.ops.recip(x);
  };
  return detail::eval_in(r, e, lift, recip);
}

/// Evaluates a poly-mode expression with coefficients in `ring`, lifting
/// integer literals through `lift`.
template <class T, class Lift>
Poly<T> eval_poly(const InstancePtr<T>& ring, const Expr& e, const Lift& lift) {
  auto sub = [&](const Expr& x) { return eval_poly(ring, x, lift); };
  if (auto* n = std::get_if<Expr::Number>(&e.node)) return mk_poly<T>(ring, {{lift(n->value), Nat(0)}});
  if (auto* v = std::get_if<Expr::Var>(&e.node)) {
    if (v->name != "x") throw DomainError("polynomials are in x, not " + v->name);
    return mk_poly<T>(ring, {{*ring->ops.one, Nat(1)}});
  }
  if (std::holds_alternative<Expr::FracLit>(e.node)) throw DomainError("fractions are not polynomial coefficients");
  if (auto* n = std::get_if<Expr::Neg>(&e.node)) return poly_neg(sub(*n->arg));
  if (auto* p = std::get_if<Expr::Power>(&e.node)) {
    Poly<T> base = sub(*p->base);
    Poly<T> acc = mk_poly<T>(ring, {{*ring->ops.one, Nat(0)}});
    for (Nat i = 0; i < p->exponent; i += 1) acc = poly_mul(acc, base);
    return acc;
  }
  const auto& b = std::get<Expr::Binary>(e.node);
  Poly<T> x = sub(*b.left);
  Poly<T> y = sub(*b.right);
  switch (b.op) {
    case '+': return poly_add(x, y);
    case '-': return poly_sub(x, y);
    case '*': return poly_mul(x, y);
    default: throw DomainError("division of polynomials is not supported");
  }
}

}  // namespace docon
