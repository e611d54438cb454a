#pragma once

#include <algorithm>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "docon/errors.hpp"
#include "docon/instance.hpp"
#include "docon/nat.hpp"
#include "docon/rng.hpp"

namespace docon {

template <class T>
struct PolyTerm {
  T coeff;
  Nat exp;
};

struct MinusInfinity {
  friend bool operator==(MinusInfinity, MinusInfinity) { return true; }
};

/// Degree of a polynomial; the zero polynomial has degree MinusInfinity.
using Degree = std::variant<MinusInfinity, Nat>;

/// Sparse univariate polynomial over a commutative ring: a list of
/// (coefficient, exponent) pairs with strictly decreasing exponents and no
/// zero coefficients. The empty list is the zero polynomial. Each value
/// carries its coefficient ring; binary operations require the same ring.
template <class T>
class Poly {
 public:
  using Ring = InstancePtr<T>;

  explicit Poly(Ring ring) : ring_(std::move(ring)) {}

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<PolyTerm<T>>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  bool is_canonical() const {
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (ring_->eq(terms_[i].coeff, *ring_->ops.zero)) return false;
      if (i > 0 && !(terms_[i].exp < terms_[i - 1].exp)) return false;
    }
    return true;
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.ring_ != b.ring_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].exp != b.terms_[i].exp || !a.ring_->eq(a.terms_[i].coeff, b.terms_[i].coeff)) return false;
    return true;
  }

 private:
  template <class S>
  friend Poly<S> mk_poly(typename Poly<S>::Ring, std::vector<PolyTerm<S>>);
  template <class S>
  friend Poly<S> poly_add(const Poly<S>&, const Poly<S>&);
  template <class S>
  friend Poly<S> poly_neg(const Poly<S>&);

  Ring ring_;
  std::vector<PolyTerm<T>> terms_;
};

namespace detail {

template <class T>
void require_coefficient_ring(const StructureInstance<T>& r) {
  if (family(r.kind) != Family::Ring || !is_a(r.kind, Kind::CommutativeRing))
    throw MismatchError(r.name + ": polynomial coefficients need a CommutativeRing");
}

}  // namespace detail

/// Canonicalizes a raw term list: sorts by decreasing exponent, adds up
/// like terms and drops zero coefficients.
template <class T>
Poly<T> mk_poly(typename Poly<T>::Ring ring, std::vector<PolyTerm<T>> raw) {
  detail::require_coefficient_ring(*ring);
  std::stable_sort(raw.begin(), raw.end(), [](const PolyTerm<T>& a, const PolyTerm<T>& b) { return b.exp < a.exp; });
  Poly<T> p(ring);
  for (auto& t : raw) {
    if (!p.terms_.empty() && p.terms_.back().exp == t.exp)
      p.terms_.back().coeff = ring->ops.add(p.terms_.back().coeff, t.coeff);
    else
      p.terms_.push_back(std::move(t));
  }
  std::erase_if(p.terms_, [&](const PolyTerm<T>& t) { return ring->eq(t.coeff, *ring->ops.zero); });
  return p;
}

/// Single merge pass over both term lists.
template <class T>
Poly<T> poly_add(const Poly<T>& p, const Poly<T>& q) {
  if (p.ring_ != q.ring_) throw MismatchError("polynomial sum over different coefficient rings");
  const auto& r = *p.ring_;
  Poly<T> out(p.ring_);
  auto i = p.terms_.begin();
  auto j = q.terms_.begin();
  while (i != p.terms_.end() || j != q.terms_.end()) {
    if (j == q.terms_.end() || (i != p.terms_.end() && j->exp < i->exp)) {
      out.terms_.push_back(*i++);
    } else if (i == p.terms_.end() || i->exp < j->exp) {
      out.terms_.push_back(*j++);
    } else {
      T c = r.ops.add(i->coeff, j->coeff);
      if (!r.eq(c, *r.ops.zero)) out.terms_.push_back({std::move(c), i->exp});
      ++i;
      ++j;
    }
  }
  return out;
}

template <class T>
Poly<T> poly_neg(const Poly<T>& p) {
  Poly<T> out(p.ring_);
  for (const auto& t : p.terms_) out.terms_.push_back({p.ring_->ops.neg(t.coeff), t.exp});
  return out;
}

template <class T>
Poly<T> poly_sub(const Poly<T>& p, const Poly<T>& q) {
  return poly_add(p, poly_neg(q));
}

template <class T>
Degree degree(const Poly<T>& p) {
  if (p.is_zero()) return MinusInfinity{};
  return p.terms().front().exp;
}

/// Schoolbook product. Not part of the certified surface.
template <class T>
Poly<T> poly_mul(const Poly<T>& p, const Poly<T>& q) {
  if (p.ring() != q.ring()) throw MismatchError("polynomial product over different coefficient rings");
  std::vector<PolyTerm<T>> raw;
  for (const auto& a : p.terms())
    for (const auto& b : q.terms()) raw.push_back({p.ring()->ops.mul(a.coeff, b.coeff), a.exp + b.exp});
  return mk_poly(p.ring(), std::move(raw));
}

/// "3*x^2 - x + 1"; the zero polynomial prints as "0".
template <class T>
std::string to_string(const Poly<T>& p) {
  if (p.is_zero()) return "0";
  const auto& r = *p.ring();
  std::string s;
  bool first = true;
  for (const auto& t : p.terms()) {
    std::string c = r.show(t.coeff);
    bool negative = !c.empty() && c.front() == '-';
    if (negative) c.erase(0, 1);
    if (first)
      s += negative ? "-" : "";
    else
      s += negative ? " - " : " + ";
    first = false;
    const bool constant = t.exp == Nat(0);
    if (constant) {
      s += c;
      continue;
    }
    if (c != "1") s += c + "*";
    s += "x";
    if (t.exp != Nat(1)) s += "^" + t.exp.str();
  }
  return s;
}

/// Polynomials over `ring` under addition, as a CommutativeGroup.
/// Samples have degree ≤ 12 with coefficients drawn from the ring's sampler.
template <class T>
StructureInstance<Poly<T>> poly_additive_group(InstancePtr<T> ring, std::string name) {
  detail::require_coefficient_ring(*ring);
  using P = Poly<T>;
  auto d = std::make_shared<DSet<P>>();
  d->name = ring->base->name + "[x]";
  d->equal = [](const P& a, const P& b) { return a == b; };
  d->sample = [ring](std::uint64_t seed, std::size_t count) {
    Rng rng(derive_seed(seed, 0x9017));
    const auto coeffs = ring->base->sample(seed, std::max<std::size_t>(count, 16));
    std::vector<P> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<PolyTerm<T>> raw;
      const auto n = rng.below(7);
      for (std::uint64_t k = 0; k < n; ++k) raw.push_back({coeffs[rng.below(coeffs.size())], Nat(rng.below(13))});
      out.push_back(mk_poly(ring, std::move(raw)));
    }
    return out;
  };
  if (ring->base->variant)
    d->variant = [ring](const P& p, std::uint64_t salt) {
      // Same polynomial with each coefficient replaced by an equal representative.
      std::vector<PolyTerm<T>> raw;
      for (const auto& t : p.terms()) raw.push_back({ring->base->variant(t.coeff, salt), t.exp});
      return mk_poly(ring, std::move(raw));
    };
  d->show = [](const P& p) { return to_string(p); };

  StructureInstance<P> s;
  s.name = std::move(name);
  s.kind = Kind::CommutativeGroup;
  s.base = d;
  s.ops.op = [](const P& a, const P& b) { return poly_add(a, b); };
  s.ops.identity = P(ring);
  s.ops.inverse = [](const P& a) { return poly_neg(a); };
  return s;
}

}  // namespace docon
