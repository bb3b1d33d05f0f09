#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace ordwork {

/// Element ids, sequence entries and code symbols are all naturals.
using Nat = std::uint32_t;

/// A finite sequence: a function from an initial segment of the naturals.
using Seq = std::vector<Nat>;

using Pair = std::pair<Nat, Nat>;

/// Finite strict partial order over a set of element ids.
///
/// The relation is stored as a dense matrix indexed by the position of each
/// element in the sorted element list, so ids need not form an initial
/// segment. Instances are immutable once built; use validate_poset() (or
/// Poset::chain / Poset::antichain) to obtain one.
class Poset {
 public:
  Poset() = default;

  static Poset antichain(std::vector<Nat> elements);
  /// 0 < 1 < ... < n-1.
  static Poset chain(std::size_t n);

  [[nodiscard]] const std::vector<Nat>& elements() const noexcept { return elements_; }
  [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
  [[nodiscard]] bool contains(Nat x) const noexcept;
  [[nodiscard]] std::size_t index_of(Nat x) const;

  /// x < y in the order. Throws UnknownElement for ids outside the field.
  [[nodiscard]] bool less(Nat x, Nat y) const;
  [[nodiscard]] bool less_at(std::size_t i, std::size_t j) const noexcept {
    return lt_[i * elements_.size() + j] != 0;
  }

  /// All related pairs, sorted.
  [[nodiscard]] std::vector<Pair> pairs() const;

  friend bool operator==(const Poset&, const Poset&) = default;

 private:
  friend Poset validate_poset(std::span<const Pair>, std::vector<Nat>);

  std::vector<Nat> elements_;
  std::vector<unsigned char> lt_;
};

/// Transitive closure of raw_pairs over elements.
/// Throws UnknownElement for undeclared ids and CycleError when the closure
/// relates some element to itself.
Poset validate_poset(std::span<const Pair> raw_pairs, std::vector<Nat> elements);

/// A decidable reflexive-transitive relation. Either an explicit finite
/// universe with a full relation matrix, or one of the builtin countable
/// families over all naturals.
class QuasiOrder {
 public:
  enum class Family { Explicit, NaturalLeq, NaturalEq, Divisibility };

  static QuasiOrder natural_leq();
  static QuasiOrder natural_eq();
  /// a <= b iff a divides b (so 0 is the top and 1 the bottom).
  static QuasiOrder divisibility();

  /// Reflexive-transitive closure of leq_pairs on the given universe.
  static QuasiOrder closure_of(std::vector<Nat> universe, std::span<const Pair> leq_pairs);
  /// Full relation matrix (row-major over the sorted universe). Throws
  /// PreconditionViolation if it is not reflexive and transitive.
  static QuasiOrder from_matrix(std::vector<Nat> universe, std::vector<unsigned char> leq);
  /// Reflexive closure of a strict partial order.
  static QuasiOrder from_poset(const Poset& order);
  /// Discrete order (equality only) on 0..n-1.
  static QuasiOrder antichain(std::size_t n);

  [[nodiscard]] Family family() const noexcept { return family_; }
  [[nodiscard]] bool contains(Nat x) const noexcept;
  [[nodiscard]] bool leq(Nat a, Nat b) const;
  /// Strict part: a <= b and not b <= a.
  [[nodiscard]] bool less(Nat a, Nat b) const { return leq(a, b) && !leq(b, a); }

  /// Universe elements strictly below bound, ascending.
  [[nodiscard]] std::vector<Nat> universe_below(Nat bound) const;
  /// Explicit universe; empty for builtin families.
  [[nodiscard]] const std::vector<Nat>& universe() const noexcept { return universe_; }

 private:
  explicit QuasiOrder(Family f) : family_(f) {}

  Family family_ = Family::Explicit;
  std::vector<Nat> universe_;
  std::vector<unsigned char> leq_;
};

/// Searches for a strictly descending chain c(0) > c(1) > ... of length
/// max_len that starts in `start`, restricted to universe elements below
/// universe_bound. Among start elements the smallest viable one is used; each
/// step takes the largest element that still admits a long enough descent.
std::optional<Seq> descending_chain_search(const QuasiOrder& order, std::span<const Nat> start,
                                           std::size_t max_len, Nat universe_bound);

/// sigma < tau iff they agree up to some position and differ there with
/// sigma's entry below tau's. A proper prefix is never below its extension.
template <class T, class Less>
bool seq_less(std::span<const T> sigma, std::span<const T> tau, Less&& less) {
  const std::size_t n = sigma.size() < tau.size() ? sigma.size() : tau.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!(sigma[i] == tau[i])) return less(sigma[i], tau[i]);
  }
  return false;
}

/// Throws UnknownElement if an entry lies outside the poset.
bool seq_less(std::span<const Nat> sigma, std::span<const Nat> tau, const Poset& order);

/// seq_less with the usual order on naturals.
bool seq_less_natural(std::span<const Nat> sigma, std::span<const Nat> tau) noexcept;

/// Plain lexicographic comparison where a proper prefix comes first.
bool lex_less(std::span<const Nat> a, std::span<const Nat> b) noexcept;

bool is_prefix(std::span<const Nat> prefix, std::span<const Nat> seq) noexcept;

}  // namespace ordwork
