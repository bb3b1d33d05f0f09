#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <tuple>
#include <vector>

#include "ordwork/order.hpp"

namespace ordwork {

using State = std::uint32_t;

/// Deterministic partial automaton presenting a tree: the nodes are the
/// words that have a run from the start state. A partial transition map
/// makes the presented set prefix-closed automatically.
class TreeAutomaton {
 public:
  static constexpr State kNone = static_cast<State>(-1);

  TreeAutomaton() = default;
  /// Start may be absent, giving the empty tree.
  TreeAutomaton(std::size_t alphabet, std::size_t states, std::optional<State> start);

  /// Throws InvalidInput on out-of-range states/letters or a conflicting
  /// transition for the same (state, letter).
  void add_transition(State from, Nat letter, State to);

  [[nodiscard]] std::size_t alphabet_size() const noexcept { return alphabet_; }
  [[nodiscard]] std::size_t state_count() const noexcept { return states_; }
  [[nodiscard]] std::optional<State> start() const noexcept { return start_; }

  /// Successor or nullopt.
  [[nodiscard]] std::optional<State> next(State s, Nat letter) const noexcept {
    const State t = delta_[s * alphabet_ + letter];
    if (t == kNone) return std::nullopt;
    return t;
  }

  /// Run from the start state; nullopt when the word is not a node. Throws
  /// BadLetter for letters outside the alphabet.
  [[nodiscard]] std::optional<State> run(std::span<const Nat> word) const;

  /// Triples (from, letter, to) sorted.
  [[nodiscard]] std::vector<std::tuple<State, Nat, State>> transitions() const;

  friend bool operator==(const TreeAutomaton&, const TreeAutomaton&) = default;

 private:
  std::size_t alphabet_ = 0;
  std::size_t states_ = 0;
  std::optional<State> start_;
  std::vector<State> delta_;
};

/// Eventually periodic infinite sequence prefix ⌢ cycle^ω.
struct LassoPath {
  Seq prefix;
  Seq cycle;

  /// Entry at position i of the infinite sequence.
  [[nodiscard]] Nat at(std::size_t i) const noexcept {
    return i < prefix.size() ? prefix[i] : cycle[(i - prefix.size()) % cycle.size()];
  }
  /// First n entries.
  [[nodiscard]] Seq take(std::size_t n) const;

  friend bool operator==(const LassoPath&, const LassoPath&) = default;
};

/// Shortest prefix and primitive cycle denoting the same infinite sequence.
/// Two lassos denote the same sequence iff their canonical forms are equal.
/// Throws PreconditionViolation on an empty cycle.
LassoPath canonical(LassoPath lasso);

}  // namespace ordwork
