#include "ordwork/automaton.hpp"

#include <algorithm>
#include <string>

#include "ordwork/error.hpp"

namespace ordwork {

TreeAutomaton::TreeAutomaton(std::size_t alphabet, std::size_t states, std::optional<State> start)
    : alphabet_(alphabet), states_(states), start_(start), delta_(alphabet * states, kNone) {
  if (start_ && *start_ >= states_) {
    throw Error(ErrorCode::InvalidInput, "start state out of range");
  }
}

void TreeAutomaton::add_transition(State from, Nat letter, State to) {
  if (from >= states_ || to >= states_) throw Error(ErrorCode::InvalidInput, "state out of range");
  if (letter >= alphabet_) throw Error(ErrorCode::BadLetter, "letter " + std::to_string(letter));
  State& slot = delta_[from * alphabet_ + letter];
  if (slot != kNone && slot != to) {
    throw Error(ErrorCode::InvalidInput, "conflicting transition from state " + std::to_string(from));
  }
  slot = to;
}

std::optional<State> TreeAutomaton::run(std::span<const Nat> word) const {
  for (Nat a : word) {
    if (a >= alphabet_) throw Error(ErrorCode::BadLetter, "letter " + std::to_string(a));
  }
  if (!start_) return std::nullopt;
  State s = *start_;
  for (Nat a : word) {
    auto t = next(s, a);
    if (!t) return std::nullopt;
    s = *t;
  }
  return s;
}

std::vector<std::tuple<State, Nat, State>> TreeAutomaton::transitions() const {
  std::vector<std::tuple<State, Nat, State>> out;
  for (std::size_t s = 0; s < states_; ++s) {
    for (std::size_t a = 0; a < alphabet_; ++a) {
      const State t = delta_[s * alphabet_ + a];
      if (t != kNone) out.emplace_back(static_cast<State>(s), static_cast<Nat>(a), t);
    }
  }
  return out;
}

Seq LassoPath::take(std::size_t n) const {
  Seq out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = at(i);
  return out;
}

LassoPath canonical(LassoPath lasso) {
  if (lasso.cycle.empty()) throw Error(ErrorCode::PreconditionViolation, "empty lasso cycle");
  // Primitive root of the cycle.
  const std::size_t c = lasso.cycle.size();
  for (std::size_t d = 1; d <= c; ++d) {
    if (c % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < c && periodic; ++i) periodic = lasso.cycle[i] == lasso.cycle[i - d];
    if (periodic) {
      lasso.cycle.resize(d);
      break;
    }
  }
  // Fold the prefix tail into the cycle while it repeats the cycle's end.
  while (!lasso.prefix.empty() && lasso.prefix.back() == lasso.cycle.back()) {
    lasso.prefix.pop_back();
    std::rotate(lasso.cycle.rbegin(), lasso.cycle.rbegin() + 1, lasso.cycle.rend());
  }
  return lasso;
}

}  // namespace ordwork
