#pragma once

#include <concepts>
#include <memory>
#include <string>
#include <string_view>

#include "docon/certlists.hpp"
#include "docon/errors.hpp"
#include "docon/instance.hpp"
#include "docon/nat.hpp"

namespace docon {

/// Coefficient domain for fractions: a GCD ring with exact division and a
/// canonical associate per class. `canonical_unit(x)` is a unit u making u·x
/// the canonical representative.
template <class R>
concept GcdDomain = requires(const typename R::Element& a, const typename R::Element& b) {
  { R::zero() } -> std::convertible_to<typename R::Element>;
  { R::one() } -> std::convertible_to<typename R::Element>;
  { R::equal(a, b) } -> std::convertible_to<bool>;
  { R::add(a, b) } -> std::convertible_to<typename R::Element>;
  { R::mul(a, b) } -> std::convertible_to<typename R::Element>;
  { R::neg(a) } -> std::convertible_to<typename R::Element>;
  { R::gcd(a, b) } -> std::convertible_to<typename R::Element>;
  { R::exact_quotient(a, b) } -> std::convertible_to<typename R::Element>;
  { R::canonical_unit(a) } -> std::convertible_to<typename R::Element>;
  { R::show(a) } -> std::convertible_to<std::string>;
};

/// ℤ as a GcdDomain; canonical associates are non-negative.
struct IntegerDomain {
  using Element = Int;
  static Int zero() { return 0; }
  static Int one() { return 1; }
  static bool equal(const Int& a, const Int& b) { return a == b; }
  static Int add(const Int& a, const Int& b) { return a + b; }
  static Int mul(const Int& a, const Int& b) { return a * b; }
  static Int neg(const Int& a) { return -a; }
  static Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
  static Int exact_quotient(const Int& a, const Int& b) { return a / b; }
  static Int canonical_unit(const Int& a) { return a.sign() < 0 ? -1 : 1; }
  static std::string show(const Int& a) { return a.str(); }
};

/// num/den in lowest terms: den ≉ 0, gcd(num, den) a unit, den canonical,
/// and zero is 0/1. Every constructor path goes through normalization, so
/// equality is structural.
template <GcdDomain R>
class Fraction {
 public:
  using Element = typename R::Element;

  Fraction() : num_(R::zero()), den_(R::one()) {}
  explicit Fraction(Element n) : num_(std::move(n)), den_(R::one()) {}

  /// Throws DivisionByZero when d ≈ 0.
  static Fraction make(const Element& n, const Element& d) {
    if (R::equal(d, R::zero())) throw DivisionByZero("fraction with zero denominator");
    if (R::equal(n, R::zero())) return Fraction();
    const Element g = R::gcd(n, d);
    return normalized(R::exact_quotient(n, g), R::exact_quotient(d, g));
  }

  const Element& num() const noexcept { return num_; }
  const Element& den() const noexcept { return den_; }
  bool is_zero() const { return R::equal(num_, R::zero()); }

  /// True when the representation invariants hold.
  bool is_canonical() const {
    if (R::equal(den_, R::zero())) return false;
    if (!R::equal(R::canonical_unit(den_), R::one())) return false;
    if (is_zero()) return R::equal(den_, R::one());
    // gcd is a unit iff its canonical associate is one.
    const Element g = R::gcd(num_, den_);
    return R::equal(R::mul(R::canonical_unit(g), g), R::one());
  }

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return R::equal(a.num_, b.num_) && R::equal(a.den_, b.den_);
  }

 private:
  Fraction(Element n, Element d, int) : num_(std::move(n)), den_(std::move(d)) {}

  // n/d already coprime; only the associate of d needs fixing.
  static Fraction normalized(const Element& n, const Element& d) {
    const Element u = R::canonical_unit(d);
    return Fraction(R::mul(u, n), R::mul(u, d), 0);
  }

  template <GcdDomain S>
  friend Fraction<S> add_optimized(const Fraction<S>&, const Fraction<S>&);
  template <GcdDomain S>
  friend Fraction<S> mul(const Fraction<S>&, const Fraction<S>&);
  template <GcdDomain S>
  friend Fraction<S> neg(const Fraction<S>&);
  template <GcdDomain S>
  friend Fraction<S> inverse(const Fraction<S>&);

  Element num_;
  Element den_;
};

/// Cross-multiply then reduce: (n₁d₂ + n₂d₁)/(d₁d₂).
template <GcdDomain R>
Fraction<R> add_naive(const Fraction<R>& x, const Fraction<R>& y) {
  return Fraction<R>::make(R::add(R::mul(x.num(), y.den()), R::mul(y.num(), x.den())), R::mul(x.den(), y.den()));
}

/// Sum through the gcd of the denominators. With g = gcd(d₁, d₂),
/// d₁ = g·t₁, d₂ = g·t₂ and n = n₁·t₂ + n₂·t₁, the unreduced sum is
/// n / (g·t₁·t₂). In a unique factorization domain n shares no prime with
/// t₁ or t₂ (n₁ is coprime to d₁, and t₁ to t₂), so only h = gcd(n, g)
/// needs removing.
template <GcdDomain R>
Fraction<R> add_optimized(const Fraction<R>& x, const Fraction<R>& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  const auto g = R::gcd(x.den_, y.den_);
  const auto t1 = R::exact_quotient(x.den_, g);
  const auto t2 = R::exact_quotient(y.den_, g);
  const auto n = R::add(R::mul(x.num_, t2), R::mul(y.num_, t1));
  if (R::equal(n, R::zero())) return Fraction<R>();
  const auto h = R::gcd(n, g);
  return Fraction<R>::normalized(R::exact_quotient(n, h), R::mul(R::mul(R::exact_quotient(g, h), t1), t2));
}

/// Product with cross-cancellation: gcd(n₁, d₂) and gcd(n₂, d₁) are removed
/// before multiplying, so the result is already reduced.
template <GcdDomain R>
Fraction<R> mul(const Fraction<R>& x, const Fraction<R>& y) {
  if (x.is_zero() || y.is_zero()) return Fraction<R>();
  const auto g1 = R::gcd(x.num_, y.den_);
  const auto g2 = R::gcd(y.num_, x.den_);
  return Fraction<R>::normalized(R::mul(R::exact_quotient(x.num_, g1), R::exact_quotient(y.num_, g2)),
                                 R::mul(R::exact_quotient(x.den_, g2), R::exact_quotient(y.den_, g1)));
}

template <GcdDomain R>
Fraction<R> neg(const Fraction<R>& x) {
  return Fraction<R>(R::neg(x.num_), x.den_, 0);
}

/// Throws DivisionByZero for 0.
template <GcdDomain R>
Fraction<R> inverse(const Fraction<R>& x) {
  if (x.is_zero()) throw DivisionByZero("inverse of zero fraction");
  return Fraction<R>::normalized(x.den_, x.num_);
}

template <GcdDomain R>
Fraction<R> sub(const Fraction<R>& x, const Fraction<R>& y) {
  return add_optimized(x, neg(y));
}

template <GcdDomain R>
Fraction<R> div(const Fraction<R>& x, const Fraction<R>& y) {
  return mul(x, inverse(y));
}

template <GcdDomain R>
std::string to_string(const Fraction<R>& x) {
  return R::show(x.num()) + "/" + R::show(x.den());
}

using Rational = Fraction<IntegerDomain>;

/// Parses "n/d" or "n" with an optional sign on n.
Rational parse_rational(std::string_view text);

/// Fraction field over ℤ as a Field instance.
const StructureInstance<Rational>& rational_field();
std::shared_ptr<const DSet<Rational>> rational_dset();
/// Numeric order (denominators are positive, so compare n₁·d₂ ≤ n₂·d₁).
DecTotalOrder<Rational> rational_order();

}  // namespace docon
