#pragma once

// Runtime counterparts of the constructive connectives: a decision carries
// either evidence for a proposition or evidence against it, and disjunction is
// a tagged union that records which side holds.

#include <string>
#include <utility>
#include <variant>

namespace docon {

/// Opaque evidence used where a decision needs no structured witness.
struct Evidence {
  std::string note;
  friend bool operator==(const Evidence&, const Evidence&) = default;
};

template <class T>
struct Left {
  T value;
};

template <class T>
struct Right {
  T value;
};

/// Constructive disjunction: exactly one side is inhabited and we know which.
template <class L, class R>
class Either {
 public:
  Either(Left<L> l) : v_(std::move(l)) {}
  Either(Right<R> r) : v_(std::move(r)) {}

  bool is_left() const noexcept { return v_.index() == 0; }
  bool is_right() const noexcept { return v_.index() == 1; }
  const L& left() const { return std::get<0>(v_).value; }
  const R& right() const { return std::get<1>(v_).value; }

 private:
  std::variant<Left<L>, Right<R>> v_;
};

template <class W>
struct Proof {
  W witness;
};

template <class R>
struct Refutation {
  R refuter;
};

/// A decided proposition: Yes with a witness or No with a refuter.
template <class Yes = Evidence, class No = Evidence>
class Decision {
 public:
  using yes_type = Yes;
  using no_type = No;

  Decision(Proof<Yes> p) : v_(std::move(p)) {}
  Decision(Refutation<No> r) : v_(std::move(r)) {}

  static Decision yes(Yes w) { return Decision(Proof<Yes>{std::move(w)}); }
  static Decision no(No r) { return Decision(Refutation<No>{std::move(r)}); }

  bool is_yes() const noexcept { return v_.index() == 0; }
  bool is_no() const noexcept { return v_.index() == 1; }
  explicit operator bool() const noexcept { return is_yes(); }

  const Yes& witness() const { return std::get<0>(v_).witness; }
  const No& refuter() const { return std::get<1>(v_).refuter; }

 private:
  std::variant<Proof<Yes>, Refutation<No>> v_;
};

inline Decision<> decide(bool holds, std::string yes_note, std::string no_note) {
  if (holds) return Decision<>::yes(Evidence{std::move(yes_note)});
  return Decision<>::no(Evidence{std::move(no_note)});
}

/// Negation swaps the roles of witness and refuter.
template <class Y, class N>
Decision<N, Y> negate(const Decision<Y, N>& d) {
  if (d.is_yes()) return Decision<N, Y>::no(d.witness());
  return Decision<N, Y>::yes(d.refuter());
}

/// Conjunction: both witnesses, or the first refuter found (left side preferred).
template <class A, class B, class C, class D>
Decision<std::pair<A, C>, Either<B, D>> both(const Decision<A, B>& p, const Decision<C, D>& q) {
  using Result = Decision<std::pair<A, C>, Either<B, D>>;
  if (p.is_no()) return Result::no(Either<B, D>(Left<B>{p.refuter()}));
  if (q.is_no()) return Result::no(Either<B, D>(Right<D>{q.refuter()}));
  return Result::yes({p.witness(), q.witness()});
}

/// Disjunction: the first witness found (left side preferred), or both refuters.
template <class A, class B, class C, class D>
Decision<Either<A, C>, std::pair<B, D>> either(const Decision<A, B>& p, const Decision<C, D>& q) {
  using Result = Decision<Either<A, C>, std::pair<B, D>>;
  if (p.is_yes()) return Result::yes(Either<A, C>(Left<A>{p.witness()}));
  if (q.is_yes()) return Result::yes(Either<A, C>(Right<C>{q.witness()}));
  return Result::no({p.refuter(), q.refuter()});
}

}  // namespace docon
