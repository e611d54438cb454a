#include "docon/expr.hpp"

#include <cctype>

namespace docon {

std::string_view mode_name(ParseMode m) {
  switch (m) {
    case ParseMode::Int: return "int";
    case ParseMode::Frac: return "frac";
    case ParseMode::Poly: return "poly";
    case ParseMode::Term: return "term";
  }
  return "?";
}

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Equals, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::string describe(Tok t) {
  switch (t) {
    case Tok::Number: return "number";
    case Tok::Ident: return "identifier";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::Caret: return "'^'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Equals: return "'='";
    case Tok::End: return "end of input";
  }
  return "?";
}

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(c)) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Number, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    Tok t;
    switch (c) {
      case '+': t = Tok::Plus; break;
      case '-': t = Tok::Minus; break;
      case '*': t = Tok::Star; break;
      case '/': t = Tok::Slash; break;
      case '^': t = Tok::Caret; break;
      case '(': t = Tok::LParen; break;
      case ')': t = Tok::RParen; break;
      case '=': t = Tok::Equals; break;
      default:
        throw SyntaxError(start, {}, "unexpected character '" + std::string(1, static_cast<char>(c)) +
                                         "' at position " + std::to_string(start));
    }
    out.push_back({t, std::string(1, static_cast<char>(c)), start});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::string_view text, ParseMode mode) : tokens_(lex(text)), mode_(mode) {}

  Expr expression() {
    Expr lhs = product();
    while (true) {
      const Tok t = peek().kind;
      if (t == Tok::Plus || (t == Tok::Minus && mode_ != ParseMode::Term)) {
        next();
        Expr rhs = product();
        lhs = binary(t == Tok::Plus ? '+' : '-', std::move(lhs), std::move(rhs));
      } else {
        return lhs;
      }
    }
  }

  void expect(Tok t, std::vector<Tok> also_allowed = {}) {
    if (peek().kind == t) {
      next();
      return;
    }
    also_allowed.push_back(t);
    fail(also_allowed);
  }

  // Operators that could have continued an expression at this point.
  std::vector<Tok> continuations() const {
    if (mode_ == ParseMode::Term) return {Tok::Plus, Tok::Star};
    std::vector<Tok> v{Tok::Plus, Tok::Minus, Tok::Star};
    if (mode_ == ParseMode::Frac) v.push_back(Tok::Slash);
    v.push_back(Tok::Caret);
    return v;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::vector<Tok>& expected) const {
    const Token& t = peek();
    std::vector<std::string> names;
    std::string list;
    for (Tok e : expected) {
      names.push_back(describe(e));
      list += (list.empty() ? "" : ", ") + describe(e);
    }
    const std::string found = t.kind == Tok::End ? "end of input" : "'" + t.text + "'";
    throw SyntaxError(t.pos, names,
                      "at position " + std::to_string(t.pos) + ": expected " + list + ", found " + found);
  }

  static Expr binary(char op, Expr l, Expr r) {
    const std::size_t at = l.position;
    return Expr{Expr::Binary{op, std::make_shared<const Expr>(std::move(l)), std::make_shared<const Expr>(std::move(r))},
                at};
  }

  Expr product() {
    Expr lhs = unary();
    const bool lhs_plain = !last_parenthesized_;
    while (true) {
      const Tok t = peek().kind;
      if (t == Tok::Star) {
        next();
        lhs = binary('*', std::move(lhs), unary());
      } else if (t == Tok::Slash && mode_ == ParseMode::Frac) {
        next();
        Expr rhs = unary();
        auto* n = std::get_if<Expr::Number>(&lhs.node);
        auto* d = std::get_if<Expr::Number>(&rhs.node);
        if (n && d && lhs_plain && !last_parenthesized_)
          lhs = Expr{Expr::FracLit{n->value, d->value}, lhs.position};
        else
          lhs = binary('/', std::move(lhs), std::move(rhs));
      } else if (t == Tok::Slash) {
        throw SyntaxError(peek().pos, {}, "at position " + std::to_string(peek().pos) + ": division is only allowed in frac mode");
      } else {
        return lhs;
      }
    }
  }

  Expr unary() {
    if (peek().kind == Tok::Minus && mode_ != ParseMode::Term) {
      const std::size_t at = next().pos;
      Expr arg = unary();
      last_parenthesized_ = true;
      return Expr{Expr::Neg{std::make_shared<const Expr>(std::move(arg))}, at};
    }
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (peek().kind == Tok::Caret && mode_ != ParseMode::Term) {
      next();
      if (peek().kind != Tok::Number) fail({Tok::Number});
      Nat e = Nat::parse(next().text);
      const std::size_t at = base.position;
      last_parenthesized_ = true;
      return Expr{Expr::Power{std::make_shared<const Expr>(std::move(base)), std::move(e)}, at};
    }
    return base;
  }

  Expr primary() {
    const Token& t = peek();
    last_parenthesized_ = false;
    if (t.kind == Tok::Number) {
      next();
      return Expr{Expr::Number{parse_int(t.text)}, t.pos};
    }
    if (t.kind == Tok::Ident && mode_ != ParseMode::Int && mode_ != ParseMode::Frac) {
      next();
      return Expr{Expr::Var{t.text}, t.pos};
    }
    if (t.kind == Tok::LParen) {
      next();
      Expr inner = expression();
      auto cont = continuations();
      cont.push_back(Tok::RParen);
      if (peek().kind != Tok::RParen) fail(cont);
      next();
      inner.position = t.pos;
      last_parenthesized_ = true;
      return inner;
    }
    std::vector<Tok> expected{Tok::Number};
    if (mode_ == ParseMode::Poly || mode_ == ParseMode::Term) expected.push_back(Tok::Ident);
    expected.push_back(Tok::LParen);
    if (mode_ != ParseMode::Term) expected.push_back(Tok::Minus);
    fail(expected);
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  ParseMode mode_;
  // Set when the most recent operand was bracketed, negated or raised to a
  // power; such operands never form a fraction literal.
  bool last_parenthesized_ = false;
};

}  // namespace

Expr parse_expr(std::string_view text, ParseMode mode) {
  Parser p(text, mode);
  Expr e = p.expression();
  p.expect(Tok::End, p.continuations());
  return e;
}

std::pair<Expr, Expr> parse_equation(std::string_view text) {
  Parser p(text, ParseMode::Term);
  Expr lhs = p.expression();
  p.expect(Tok::Equals, p.continuations());
  Expr rhs = p.expression();
  p.expect(Tok::End, p.continuations());
  return {std::move(lhs), std::move(rhs)};
}

std::string to_string(const Expr& e) {
  if (auto* n = std::get_if<Expr::Number>(&e.node)) return n->value.str();
  if (auto* f = std::get_if<Expr::FracLit>(&e.node)) return f->num.str() + "/" + f->den.str();
  if (auto* v = std::get_if<Expr::Var>(&e.node)) return v->name;
  if (auto* n = std::get_if<Expr::Neg>(&e.node)) return "(-" + to_string(*n->arg) + ")";
  if (auto* p = std::get_if<Expr::Power>(&e.node)) return "(" + to_string(*p->base) + "^" + p->exponent.str() + ")";
  const auto& b = std::get<Expr::Binary>(e.node);
  return "(" + to_string(*b.left) + " " + b.op + " " + to_string(*b.right) + ")";
}

Int eval_int(const Expr& e) {
  if (auto* n = std::get_if<Expr::Number>(&e.node)) return n->value;
  if (std::holds_alternative<Expr::FracLit>(e.node)) throw DomainError("fraction in an integer expression");
  if (auto* v = std::get_if<Expr::Var>(&e.node)) throw DomainError("unexpected variable " + v->name);
  if (auto* n = std::get_if<Expr::Neg>(&e.node)) return -eval_int(*n->arg);
  if (auto* p = std::get_if<Expr::Power>(&e.node)) {
    if (p->exponent.bit_length() > 32) throw DomainError("exponent too large");
    return boost::multiprecision::pow(eval_int(*p->base), static_cast<unsigned>(p->exponent.value()));
  }
  const auto& b = std::get<Expr::Binary>(e.node);
  const Int x = eval_int(*b.left);
  const Int y = eval_int(*b.right);
  switch (b.op) {
    case '+': return x + y;
    case '-': return x - y;
    case '*': return x * y;
    default: throw DomainError("division in an integer expression");
  }
}

Rational eval_frac(const Expr& e) {
  if (auto* n = std::get_if<Expr::Number>(&e.node)) return Rational(n->value);
  if (auto* f = std::get_if<Expr::FracLit>(&e.node)) return Rational::make(f->num, f->den);
  if (auto* v = std::get_if<Expr::Var>(&e.node)) throw DomainError("unexpected variable " + v->name);
  if (auto* n = std::get_if<Expr::Neg>(&e.node)) return neg(eval_frac(*n->arg));
  if (auto* p = std::get_if<Expr::Power>(&e.node)) {
    const Rational base = eval_frac(*p->base);
    Rational acc(Int(1));
    for (Nat i = 0; i < p->exponent; i += 1) acc = mul(acc, base);
    return acc;
  }
  const auto& b = std::get<Expr::Binary>(e.node);
  const Rational x = eval_frac(*b.left);
  const Rational y = eval_frac(*b.right);
  switch (b.op) {
    case '+': return add_optimized(x, y);
    case '-': return sub(x, y);
    case '*': return mul(x, y);
    default: return div(x, y);
  }
}

Term to_prover_term(const Expr& e, Theory theory) {
  const bool monoid = theory == Theory::Monoid;
  if (auto* n = std::get_if<Expr::Number>(&e.node)) {
    if (monoid) {
      if (n->value != 1) throw DomainError("numeral " + n->value.str() + " in a monoid term");
      return Term::unit(UnitKind::Identity);
    }
    if (n->value == 0) return Term::unit(UnitKind::Zero);
    if (n->value == 1) return Term::unit(UnitKind::One);
    return Term::nat(Nat(n->value));
  }
  if (auto* v = std::get_if<Expr::Var>(&e.node)) {
    if (monoid && v->name == "e") return Term::unit(UnitKind::Identity);
    return Term::var(v->name);
  }
  const auto* b = std::get_if<Expr::Binary>(&e.node);
  if (!b || (b->op != '+' && b->op != '*')) throw DomainError("prover terms use only + and *");
  if (monoid && b->op == '+') throw DomainError("'+' is not part of theory monoid");
  const TermOp op = monoid ? TermOp::Dot : b->op == '+' ? TermOp::Add : TermOp::Mul;
  return Term::apply(op, to_prover_term(*b->left, theory), to_prover_term(*b->right, theory));
}

}  // namespace docon
