#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "docon/decision.hpp"
#include "docon/dset.hpp"
#include "docon/errors.hpp"
#include "docon/laws.hpp"
#include "docon/nat.hpp"
#include "docon/rng.hpp"

namespace docon {

// ---------------------------------------------------------------------------
// Multisets as association lists

/// Association list of (key, count ≥ 1) with keys pairwise eq-distinct under
/// the key DSet.
template <class K>
class Multiset {
 public:
  using Entry = std::pair<K, Nat>;

  explicit Multiset(std::shared_ptr<const DSet<K>> keys) : keys_(std::move(keys)) {}

  static Multiset of(std::shared_ptr<const DSet<K>> keys, std::span<const K> xs) {
    Multiset m(std::move(keys));
    for (const auto& x : xs) m.insert(x, Nat(1));
    return m;
  }

  void insert(const K& key, const Nat& count) {
    if (count.is_zero()) return;
    for (auto& e : entries_)
      if (keys_->equal(e.first, key)) {
        e.second += count;
        return;
      }
    entries_.emplace_back(key, count);
  }

  Nat count(const K& key) const {
    for (const auto& e : entries_)
      if (keys_->equal(e.first, key)) return e.second;
    return Nat(0);
  }

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  const std::shared_ptr<const DSet<K>>& keys() const noexcept { return keys_; }
  std::size_t distinct() const noexcept { return entries_.size(); }

 private:
  std::shared_ptr<const DSet<K>> keys_;
  std::vector<Entry> entries_;
};

/// Pointwise sum of counts. Throws MismatchError for different key DSets.
template <class K>
Multiset<K> mset_sum(const Multiset<K>& a, const Multiset<K>& b) {
  if (a.keys() != b.keys()) throw MismatchError("multiset sum over different key sets");
  Multiset<K> out = a;
  for (const auto& [k, c] : b.entries()) out.insert(k, c);
  return out;
}

/// Same keys with the same counts, up to the key equality.
template <class K>
bool mset_eq(const Multiset<K>& a, const Multiset<K>& b) {
  if (a.keys() != b.keys()) throw MismatchError("multiset comparison over different key sets");
  if (a.distinct() != b.distinct()) return false;
  for (const auto& [k, c] : a.entries())
    if (b.count(k) != c) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Decidable total orders and the certified merge sort

/// A decidable ≤ on a DSet. Its laws (totality, transitivity, antisymmetry up
/// to eq) are not enforced by construction; check_order_laws samples them.
template <class T>
struct DecTotalOrder {
  std::shared_ptr<const DSet<T>> base;
  std::function<Decision<>(const T&, const T&)> leq;
};

template <class T>
LawReport<T> check_order_laws(const DecTotalOrder<T>& dto, std::uint64_t seed, std::size_t budget) {
  LawReport<T> report;
  report.instance = dto.base->name + " (<=)";
  const auto pool = budget == 0 ? std::vector<T>{} : dto.base->sample(seed, budget);
  if (pool.empty()) return report;
  Rng rng(derive_seed(seed, 0x0dd));
  auto le = [&](const T& a, const T& b) { return dto.leq(a, b).is_yes(); };
  for (std::size_t i = 0; i < budget; ++i) {
    const T& x = pool[i % pool.size()];
    const T& y = pool[rng.below(pool.size())];
    const T& z = pool[rng.below(pool.size())];
    ++report.cases;
    report.checks += 3;
    if (!le(x, y) && !le(y, x)) report.failures.push_back({"total", {x, y}});
    if (le(x, y) && le(y, z) && !le(x, z)) report.failures.push_back({"transitive", {x, y, z}});
    if (le(x, y) && le(y, x) && !dto.base->equal(x, y)) report.failures.push_back({"antisymmetric", {x, y}});
  }
  return report;
}

/// Output of sort_certified: the sorted list, one re-checkable order decision
/// per adjacent pair, and perm[i] = position in ys of input element i.
template <class T>
struct SortResult {
  std::vector<T> ys;
  std::vector<Decision<>> ord_cert;
  std::vector<std::size_t> perm;
};

namespace detail {

template <class T>
void merge_sort_indices(const DecTotalOrder<T>& dto, std::span<const T> xs, std::vector<std::size_t>& idx,
                        std::vector<std::size_t>& scratch, std::size_t lo, std::size_t hi) {
  if (hi - lo < 2) return;
  const std::size_t mid = lo + (hi - lo) / 2;
  merge_sort_indices(dto, xs, idx, scratch, lo, mid);
  merge_sort_indices(dto, xs, idx, scratch, mid, hi);
  std::size_t i = lo, j = mid, k = lo;
  while (i < mid && j < hi) {
    // Ties go to the left run, which holds the earlier input positions.
    if (dto.leq(xs[idx[i]], xs[idx[j]]).is_yes())
      scratch[k++] = idx[i++];
    else
      scratch[k++] = idx[j++];
  }
  while (i < mid) scratch[k++] = idx[i++];
  while (j < hi) scratch[k++] = idx[j++];
  std::copy(scratch.begin() + static_cast<std::ptrdiff_t>(lo), scratch.begin() + static_cast<std::ptrdiff_t>(hi),
            idx.begin() + static_cast<std::ptrdiff_t>(lo));
}

}  // namespace detail

/// Stable top-down merge sort returning its own correctness certificate.
template <class T>
SortResult<T> sort_certified(const DecTotalOrder<T>& dto, std::span<const T> xs) {
  const std::size_t n = xs.size();
  std::vector<std::size_t> idx(n), scratch(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  detail::merge_sort_indices(dto, xs, idx, scratch, 0, n);

  SortResult<T> r;
  r.ys.reserve(n);
  r.perm.assign(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    r.ys.push_back(xs[idx[k]]);
    r.perm[idx[k]] = k;
  }
  for (std::size_t k = 0; k + 1 < n; ++k) r.ord_cert.push_back(dto.leq(r.ys[k], r.ys[k + 1]));
  return r;
}

/// Everything wrong with a claimed sort result, independent of how it was
/// produced. Empty means the result is certified.
template <class T>
std::vector<std::string> sort_result_problems(const DecTotalOrder<T>& dto, std::span<const T> xs, const SortResult<T>& r) {
  std::vector<std::string> problems;
  const std::size_t n = xs.size();
  if (r.ys.size() != n) problems.push_back("output length differs from input length");
  if (r.perm.size() != n) problems.push_back("permutation length differs from input length");
  const std::size_t expected_certs = n == 0 ? 0 : n - 1;
  if (r.ord_cert.size() != expected_certs) problems.push_back("wrong number of order certificates");
  if (!problems.empty()) return problems;

  std::vector<bool> hit(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = r.perm[i];
    if (k >= n || hit[k]) {
      problems.push_back("permutation is not a bijection at input " + std::to_string(i));
      break;
    }
    hit[k] = true;
    if (!dto.base->equal(r.ys[k], xs[i]))
      problems.push_back("permutation maps input " + std::to_string(i) + " to a different element");
  }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (!r.ord_cert[k].is_yes()) problems.push_back("order certificate " + std::to_string(k) + " is a refutation");
    if (!dto.leq(r.ys[k], r.ys[k + 1]).is_yes())
      problems.push_back("output is not ordered at position " + std::to_string(k));
  }
  if (!mset_eq(Multiset<T>::of(dto.base, xs), Multiset<T>::of(dto.base, std::span<const T>(r.ys))))
    problems.push_back("input and output multisets differ");
  return problems;
}

template <class T>
bool verify_sort_result(const DecTotalOrder<T>& dto, std::span<const T> xs, const SortResult<T>& r) {
  return sort_result_problems(dto, xs, r).empty();
}

// ---------------------------------------------------------------------------
// List lemmas

template <class T>
std::vector<T> append(std::span<const T> xs, std::span<const T> ys) {
  std::vector<T> out(xs.begin(), xs.end());
  out.insert(out.end(), ys.begin(), ys.end());
  return out;
}

/// rev [] = [];  rev (x ∷ xs) = rev xs ++ [x]. Quadratic, by definition.
template <class T>
std::vector<T> rev(std::span<const T> xs) {
  if (xs.empty()) return {};
  const std::vector<T> tail = rev(xs.subspan(1));
  const T head[1] = {xs.front()};
  return append<T>(tail, head);
}

template <class T>
std::vector<T> rev_linear(std::span<const T> xs) {
  return std::vector<T>(xs.rbegin(), xs.rend());
}

}  // namespace docon
