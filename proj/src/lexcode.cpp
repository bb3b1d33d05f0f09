#include "ordwork/lexcode.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "ordwork/error.hpp"

namespace ordwork {

namespace {

Nat smallest_fresh_odd(const std::vector<Seq>& used, Seq candidate) {
  candidate.push_back(1);
  while (std::find(used.begin(), used.end(), candidate) != used.end()) candidate.back() += 2;
  return candidate.back();
}

// Reads one block starting at `pos` of an indexable sequence. Returns the
// decoded element and advances pos; throws MalformedCode on failure. `avail`
// bounds how many entries may be read (SIZE_MAX for infinite input).
template <class At>
Nat read_block(const LexCode& code, At&& at, std::size_t& pos, std::size_t avail) {
  Seq base;
  const std::size_t start = pos;
  for (;;) {
    if (pos >= avail) {
      throw Error(ErrorCode::MalformedCode, "incomplete block at position " + std::to_string(start));
    }
    const Nat v = at(pos++);
    base.push_back(v);
    if (v % 2 == 1) break;
    if (base.size() > code.max_code_length()) {
      throw Error(ErrorCode::MalformedCode, "even run too long at position " + std::to_string(start));
    }
  }
  if (pos >= avail) {
    throw Error(ErrorCode::MalformedCode, "missing element id at position " + std::to_string(pos));
  }
  const Nat m = at(pos++);
  if (!code.order().contains(m) || code.base_code(m) != base) {
    throw Error(ErrorCode::MalformedCode,
                "block at position " + std::to_string(start) + " is not in the code table");
  }
  return m;
}

}  // namespace

LexCode encode_order(const Poset& order, TieBreak tie_break) {
  LexCode out;
  out.order_ = order;
  const auto& elems = order.elements();
  const std::size_t n = elems.size();
  out.codes_.resize(n);
  std::vector<Seq> used;

  for (std::size_t y = 0; y < n; ++y) {
    // Earlier elements above y.
    std::vector<std::size_t> cand;
    for (std::size_t x = 0; x < y; ++x) {
      if (order.less_at(y, x)) cand.push_back(x);
    }
    Seq code;
    if (cand.empty()) {
      code = {smallest_fresh_odd(used, {})};
    } else {
      std::vector<std::size_t> minimal;
      for (std::size_t x : cand) {
        bool is_min = std::none_of(cand.begin(), cand.end(),
                                   [&](std::size_t z) { return order.less_at(z, x); });
        if (is_min) minimal.push_back(x);
      }
      if (minimal.size() > 1 && tie_break == TieBreak::Strict) {
        throw Error(ErrorCode::AmbiguousLeast,
                    "several minimal candidates above element " + std::to_string(elems[y]));
      }
      std::size_t x = tie_break == TieBreak::LargestId ? minimal.back() : minimal.front();
      if (tie_break == TieBreak::LeastCode) {
        x = *std::min_element(minimal.begin(), minimal.end(), [&](std::size_t a, std::size_t b) {
          return std::lexicographical_compare(out.codes_[a].begin(), out.codes_[a].end(), out.codes_[b].begin(),
                                              out.codes_[b].end());
        });
      }
      Seq sigma = out.codes_[x];
      const Nat top = sigma.back();
      sigma.back() = top - 1;
      sigma.push_back(smallest_fresh_odd(used, sigma));
      code = std::move(sigma);
    }
    out.max_len_ = std::max(out.max_len_, code.size());
    for (Nat v : code) out.max_symbol_ = std::max(out.max_symbol_, v);
    out.max_symbol_ = std::max(out.max_symbol_, elems[y]);
    used.push_back(code);
    out.codes_[y] = std::move(code);
  }
  return out;
}

Seq encode_element(const LexCode& code, Nat x) {
  Seq out = code.base_code(x);
  out.push_back(x);
  return out;
}

Seq encode_seq(const LexCode& code, std::span<const Nat> sigma) {
  Seq out;
  for (Nat x : sigma) {
    const Seq& base = code.base_code(x);
    out.insert(out.end(), base.begin(), base.end());
    out.push_back(x);
  }
  return out;
}

Seq decode_path(const LexCode& code, std::span<const Nat> coded) {
  Seq out;
  std::size_t pos = 0;
  auto at = [&](std::size_t i) { return coded[i]; };
  while (pos < coded.size()) out.push_back(read_block(code, at, pos, coded.size()));
  return out;
}

TreeAutomaton lift_tree(const LexCode& code, const TreeAutomaton& tree) {
  const std::size_t k = tree.alphabet_size();
  const auto& elems = code.order().elements();
  bool dense = elems.size() == k;
  for (std::size_t i = 0; dense && i < k; ++i) dense = elems[i] == i;
  if (!dense) {
    throw Error(ErrorCode::PreconditionViolation, "tree alphabet must equal the poset elements");
  }
  const std::size_t alphabet = static_cast<std::size_t>(code.max_symbol()) + 1;

  // Transitions are collected first because the state count is only known
  // once every code has been threaded through its trie.
  std::map<std::pair<State, Nat>, State> delta;
  State next_state = static_cast<State>(tree.state_count());
  for (const auto& [s, letter, t] : tree.transitions()) {
    const Seq word = encode_element(code, letter);
    State cur = s;
    for (std::size_t j = 0; j + 1 < word.size(); ++j) {
      auto [it, inserted] = delta.try_emplace({cur, word[j]}, next_state);
      if (inserted) ++next_state;
      cur = it->second;
    }
    delta[{cur, word.back()}] = t;
  }
  TreeAutomaton lifted(alphabet, next_state, tree.start());
  for (const auto& [key, to] : delta) lifted.add_transition(key.first, key.second, to);
  return lifted;
}

LassoPath decode_lasso(const LexCode& code, const LassoPath& coded) {
  if (coded.cycle.empty()) throw Error(ErrorCode::MalformedCode, "empty cycle");
  const std::size_t p = coded.prefix.size();
  const std::size_t c = coded.cycle.size();
  auto at = [&](std::size_t i) { return coded.at(i); };

  // Block boundaries past the prefix are determined by their residue modulo
  // the cycle length, so the first repeated residue closes the decoded lasso.
  std::map<std::size_t, std::size_t> seen;  // residue -> decoded length
  Seq decoded;
  std::size_t pos = 0;
  for (;;) {
    if (pos >= p) {
      const std::size_t r = (pos - p) % c;
      auto [it, inserted] = seen.try_emplace(r, decoded.size());
      if (!inserted) {
        LassoPath out;
        out.prefix.assign(decoded.begin(), decoded.begin() + static_cast<std::ptrdiff_t>(it->second));
        out.cycle.assign(decoded.begin() + static_cast<std::ptrdiff_t>(it->second), decoded.end());
        return canonical(std::move(out));
      }
    }
    decoded.push_back(read_block(code, at, pos, SIZE_MAX));
  }
}

}  // namespace ordwork
