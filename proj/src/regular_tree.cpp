#include "ordwork/regular_tree.hpp"

#include <algorithm>
#include <numeric>

#include "ordwork/error.hpp"
#include "ordwork/lexcode.hpp"

namespace ordwork {

bool node_in_tree(const TreeAutomaton& aut, std::span<const Nat> sigma) {
  return aut.run(sigma).has_value();
}

std::vector<bool> live_states(const TreeAutomaton& aut) {
  const std::size_t n = aut.state_count();
  const std::size_t k = aut.alphabet_size();
  std::vector<bool> live(n, true);
  for (bool changed = true; changed;) {
    changed = false;
    for (State s = 0; s < n; ++s) {
      if (!live[s]) continue;
      bool has_live_successor = false;
      for (Nat a = 0; a < k && !has_live_successor; ++a) {
        auto t = aut.next(s, a);
        has_live_successor = t && live[*t];
      }
      if (!has_live_successor) {
        live[s] = false;
        changed = true;
      }
    }
  }
  return live;
}

bool lasso_is_path(const TreeAutomaton& aut, const LassoPath& path) {
  if (path.cycle.empty() || !aut.start()) return false;
  auto step = [&](State s, Nat a) -> std::optional<State> {
    if (a >= aut.alphabet_size()) return std::nullopt;
    return aut.next(s, a);
  };
  State s = *aut.start();
  for (Nat a : path.prefix) {
    auto t = step(s, a);
    if (!t) return false;
    s = *t;
  }
  // The state at each cycle boundary determines the rest, so a repeat closes
  // the check.
  std::vector<bool> seen(aut.state_count(), false);
  while (!seen[s]) {
    seen[s] = true;
    for (Nat a : path.cycle) {
      auto t = step(s, a);
      if (!t) return false;
      s = *t;
    }
  }
  return true;
}

LassoPath leftmost_path(const TreeAutomaton& aut) {
  const auto live = live_states(aut);
  if (!aut.start() || !live[*aut.start()]) {
    throw Error(ErrorCode::WellFounded, "start state admits no infinite path");
  }
  // The greedy choice depends only on the current state, so the run is
  // periodic from the first repeated state.
  std::vector<std::size_t> first_visit(aut.state_count(), SIZE_MAX);
  Seq word;
  State s = *aut.start();
  while (first_visit[s] == SIZE_MAX) {
    first_visit[s] = word.size();
    for (Nat a = 0; a < aut.alphabet_size(); ++a) {
      auto t = aut.next(s, a);
      if (t && live[*t]) {
        word.push_back(a);
        s = *t;
        break;
      }
    }
  }
  const auto split = static_cast<std::ptrdiff_t>(first_visit[s]);
  return canonical(LassoPath{Seq(word.begin(), word.begin() + split), Seq(word.begin() + split, word.end())});
}

LassoPath minimal_path(const TreeAutomaton& aut, const Poset& alphabet_order) {
  const LexCode code = encode_order(alphabet_order);
  const TreeAutomaton lifted = lift_tree(code, aut);
  return decode_lasso(code, leftmost_path(lifted));
}

bool path_left_of(const LassoPath& lhs, const LassoPath& rhs, const Poset& order) {
  const std::size_t bound = lhs.prefix.size() + rhs.prefix.size() +
                            std::lcm(lhs.cycle.size(), rhs.cycle.size());
  for (std::size_t i = 0; i < bound; ++i) {
    const Nat a = lhs.at(i);
    const Nat b = rhs.at(i);
    if (a != b) return order.less(a, b);
  }
  return false;
}

ChallengeReport challenger_check(const TreeAutomaton& aut, const LassoPath& candidate,
                                 std::span<const LassoPath> challengers, const Poset& order) {
  if (!lasso_is_path(aut, candidate)) {
    throw Error(ErrorCode::InvalidWitness, "candidate is not a path of the tree");
  }
  ChallengeReport report;
  for (const auto& ch : challengers) {
    ChallengerResult r{ch, lasso_is_path(aut, ch), false};
    const bool letters_known =
        std::all_of(ch.prefix.begin(), ch.prefix.end(), [&](Nat a) { return order.contains(a); }) &&
        std::all_of(ch.cycle.begin(), ch.cycle.end(), [&](Nat a) { return order.contains(a); });
    r.left_of = !ch.cycle.empty() && letters_known && path_left_of(ch, candidate, order);
    if (r.is_path && r.left_of) report.relatively_minimal = false;
    report.results.push_back(std::move(r));
  }
  return report;
}

}  // namespace ordwork
