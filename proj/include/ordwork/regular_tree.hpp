#pragma once

#include <span>
#include <string>
#include <vector>

#include "ordwork/automaton.hpp"
#include "ordwork/order.hpp"

namespace ordwork {

/// True iff sigma is a node of the presented tree. Throws BadLetter.
bool node_in_tree(const TreeAutomaton& aut, std::span<const Nat> sigma);

/// Membership flags for the states that admit an infinite run (greatest
/// fixpoint of "has a successor inside the set").
std::vector<bool> live_states(const TreeAutomaton& aut);

/// True iff every finite prefix of the lasso is a node.
bool lasso_is_path(const TreeAutomaton& aut, const LassoPath& path);

/// Pointwise-lexicographically least infinite path, in canonical form.
/// Throws WellFounded when the start state is absent or dead.
LassoPath leftmost_path(const TreeAutomaton& aut);

/// A path with no path of the tree below it under the sequence extension of
/// alphabet_order. Computed by coding the alphabet, lifting the tree, taking
/// the leftmost path of the lift and decoding it back.
/// Throws WellFounded, or PreconditionViolation when the order's elements are
/// not exactly the alphabet.
LassoPath minimal_path(const TreeAutomaton& aut, const Poset& alphabet_order);

/// Decides seq_less between the infinite sequences two lassos denote.
bool path_left_of(const LassoPath& lhs, const LassoPath& rhs, const Poset& order);

struct ChallengerResult {
  LassoPath challenger;
  bool is_path = false;
  bool left_of = false;
};

struct ChallengeReport {
  std::vector<ChallengerResult> results;
  /// No challenger is both a path and to the left of the candidate.
  bool relatively_minimal = true;
};

/// Throws InvalidWitness if `candidate` is not a path of `aut`.
ChallengeReport challenger_check(const TreeAutomaton& aut, const LassoPath& candidate,
                                 std::span<const LassoPath> challengers, const Poset& order);

}  // namespace ordwork
