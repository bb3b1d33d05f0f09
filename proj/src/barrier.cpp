#include "ordwork/barrier.hpp"

#include <algorithm>
#include <string>

namespace ordwork {

namespace {

std::string show(std::span<const Nat> b) {
  std::string s = "<";
  for (std::size_t i = 0; i < b.size(); ++i) s += (i ? "," : "") + std::to_string(b[i]);
  return s + ">";
}

void require_increasing(std::span<const Nat> b) {
  if (!is_increasing(b)) throw Error(ErrorCode::NotIncreasing, show(b));
}

bool range_subset(std::span<const Nat> a, std::span<const Nat> b) {
  // Both increasing.
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool inside(std::span<const Nat> b, std::span<const Nat> sorted_set) {
  return std::all_of(b.begin(), b.end(),
                     [&](Nat x) { return std::binary_search(sorted_set.begin(), sorted_set.end(), x); });
}

std::vector<Nat> sorted_unique(std::span<const Nat> x) {
  std::vector<Nat> s(x.begin(), x.end());
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

}  // namespace

bool is_increasing(std::span<const Nat> b) noexcept {
  for (std::size_t i = 1; i < b.size(); ++i) {
    if (b[i - 1] >= b[i]) return false;
  }
  return true;
}

BarrierFragment::BarrierFragment(Nat window, std::vector<Block> blocks) : window_(window) {
  std::sort(blocks.begin(), blocks.end());
  blocks.erase(std::unique(blocks.begin(), blocks.end()), blocks.end());
  for (const auto& b : blocks) {
    if (b.empty()) throw Error(ErrorCode::EmptyBlock, "fragment blocks must be non-empty");
    require_increasing(b);
    if (b.back() >= window) {
      throw Error(ErrorCode::InvalidInput, "block " + show(b) + " exceeds window " + std::to_string(window));
    }
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      if (i != j && range_subset(blocks[i], blocks[j])) {
        throw Error(ErrorCode::InvalidInput,
                    "range of " + show(blocks[i]) + " is contained in range of " + show(blocks[j]));
      }
    }
  }
  blocks_ = std::move(blocks);
}

BarrierFragment BarrierFragment::uniform(Nat window, std::size_t k) {
  std::vector<Block> blocks;
  Block cur;
  auto gen = [&](auto&& self, Nat from) -> void {
    if (cur.size() == k) {
      blocks.push_back(cur);
      return;
    }
    for (Nat x = from; x < window; ++x) {
      cur.push_back(x);
      self(self, x + 1);
      cur.pop_back();
    }
  };
  if (k > 0) gen(gen, 0);
  return BarrierFragment(window, std::move(blocks));
}

bool BarrierFragment::contains(std::span<const Nat> b) const {
  return std::binary_search(blocks_.begin(), blocks_.end(), Block(b.begin(), b.end()));
}

std::vector<Nat> base_of(const BarrierFragment& frag) {
  std::vector<Nat> out;
  for (const auto& b : frag.blocks()) out.insert(out.end(), b.begin(), b.end());
  return sorted_unique(out);
}

Block tail(std::span<const Nat> b) {
  if (b.empty()) throw Error(ErrorCode::EmptyBlock, "tail of the empty sequence");
  return Block(b.begin() + 1, b.end());
}

bool block_tri(std::span<const Nat> b, std::span<const Nat> b2) {
  require_increasing(b);
  require_increasing(b2);
  const std::size_t p = b.size();
  const std::size_t q = b2.size();
  if (p == 0) return q == 0 || b2[0] > 0;
  // b*(i) = b(i) for i < p and b*(i + 1) = b2(i) for i < q, so the two
  // blocks must agree on the overlap, and b2 may only continue upward past
  // the end of b.
  for (std::size_t i = 1; i < p && i - 1 < q; ++i) {
    if (b[i] != b2[i - 1]) return false;
  }
  if (q >= p && b2[p - 1] <= b[p - 1]) return false;
  return true;
}

BarrierFragment restrict(const BarrierFragment& frag, std::span<const Nat> x) {
  const auto set = sorted_unique(x);
  std::vector<Block> kept;
  for (const auto& b : frag.blocks()) {
    if (inside(b, set)) kept.push_back(b);
  }
  return BarrierFragment(frag.window(), std::move(kept));
}

Block union_block(std::span<const Nat> b, std::span<const Nat> b2) {
  if (!block_tri(b, b2)) throw Error(ErrorCode::NotTriRelated, show(b) + " and " + show(b2));
  Block out;
  std::set_union(b.begin(), b.end(), b2.begin(), b2.end(), std::back_inserter(out));
  return out;
}

BarrierFragment star_fragment(const BarrierFragment& frag) {
  std::vector<Block> blocks;
  for (const auto& b : frag.blocks()) {
    for (const auto& b2 : frag.blocks()) {
      if (block_tri(b, b2)) blocks.push_back(union_block(b, b2));
    }
  }
  return BarrierFragment(frag.window(), std::move(blocks));
}

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "fail";
}

FragmentCheck check_fragment(const BarrierFragment& frag) {
  const auto base = base_of(frag);
  FragmentCheck out;
  Block cur;
  auto dfs = [&](auto&& self, std::size_t from) -> void {
    if (!cur.empty() && frag.contains(cur)) {
      ++out.covered;
      return;
    }
    if (!cur.empty() && from == base.size()) {
      ++out.exited;
      if (!out.first_exit) out.first_exit = cur;
      return;
    }
    for (std::size_t i = from; i < base.size(); ++i) {
      cur.push_back(base[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  dfs(dfs, 0);
  out.verdict = out.exited > 0 ? Verdict::Inconclusive : Verdict::Pass;
  return out;
}

std::string ArrayClass::label() const {
  if (pairs == 0) return "bad+perfect";
  if (perfect) return "perfect";
  if (good) return "mixed";
  return "bad";
}

namespace detail {
void require_blocks_in(const BarrierFragment& frag, std::span<const Block> blocks) {
  for (const auto& b : blocks) {
    if (!frag.contains(b)) throw Error(ErrorCode::UnknownElement, "block " + show(b) + " is not in the fragment");
  }
}
}  // namespace detail

namespace {

template <class V>
void require_values(const PartialArray<V>& f, const QuasiOrder& q) {
  for (const auto& [b, v] : f.entries) {
    if constexpr (std::is_same_v<V, Nat>) {
      if (!q.contains(v)) throw Error(ErrorCode::UnknownElement, "value " + std::to_string(v));
    } else {
      for (Nat x : v) {
        if (!q.contains(x)) throw Error(ErrorCode::UnknownElement, "value entry " + std::to_string(x));
      }
    }
  }
}

auto higman(const QuasiOrder& q) {
  return [&q](const Seq& a, const Seq& b) {
    return higman_leq(std::span<const Nat>(a), std::span<const Nat>(b), [&](Nat x, Nat y) { return q.leq(x, y); });
  };
}

}  // namespace

ArrayClass classify_array(const PartialArray<Nat>& f, const BarrierFragment& frag, const QuasiOrder& q) {
  require_values(f, q);
  return classify_array(f, frag, [&](Nat a, Nat b) { return q.leq(a, b); });
}

ArrayClass classify_array(const PartialArray<Seq>& f, const BarrierFragment& frag, const QuasiOrder& q) {
  require_values(f, q);
  return classify_array(f, frag, higman(q));
}

ArrayCheck check_bad_partial_array(const PartialArray<Nat>& sigma, const BarrierFragment& frag, const QuasiOrder& q) {
  require_values(sigma, q);
  return check_bad_partial_array(sigma, frag, [&](Nat a, Nat b) { return q.leq(a, b); });
}

ArrayCheck check_bad_partial_array(const PartialArray<Seq>& sigma, const BarrierFragment& frag, const QuasiOrder& q) {
  require_values(sigma, q);
  return check_bad_partial_array(sigma, frag, higman(q));
}

std::optional<BarrierHomogeneous> barrier_pair_homogeneous(
    const BarrierFragment& frag, const std::function<int(const Block&, const Block&)>& color, std::size_t target) {
  const auto base = base_of(frag);
  if (target > base.size()) return std::nullopt;
  std::vector<Nat> pick;
  std::optional<BarrierHomogeneous> found;
  auto test = [&]() -> std::optional<BarrierHomogeneous> {
    std::optional<int> col;
    const auto sub = restrict(frag, pick);
    for (const auto& b : sub.blocks()) {
      for (const auto& b2 : sub.blocks()) {
        if (!block_tri(b, b2)) continue;
        const int c = color(b, b2);
        if (col && *col != c) return std::nullopt;
        col = c;
      }
    }
    return BarrierHomogeneous{pick, col};
  };
  auto dfs = [&](auto&& self, std::size_t from) -> bool {
    if (pick.size() == target) {
      found = test();
      return found.has_value();
    }
    for (std::size_t i = from; i < base.size(); ++i) {
      pick.push_back(base[i]);
      if (self(self, i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  dfs(dfs, 0);
  return found;
}

PartialArray<Seq> nwt_improvement_step(const PartialArray<Seq>& array, std::span<const Nat> subset,
                                       const BarrierFragment& frag, const QuasiOrder& q) {
  auto violation = [](const std::string& clause) { return Error(ErrorCode::PreconditionViolation, clause); };
  for (const auto& [b, v] : array.entries) {
    if (v.empty()) throw violation("array values must be non-empty");
  }
  const auto verdict = check_bad_partial_array(array, frag, q);
  if (!verdict.ok) throw violation("input is not a bad partial array: " + verdict.detail);

  const auto s = sorted_unique(subset);
  const auto& entries = array.entries;
  std::optional<std::size_t> first;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (inside(entries[i].first, s)) {
      first = i;
      break;
    }
  }
  if (!first) throw violation("subset contains no block of the array");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!inside(entries[i].first, s)) continue;
    for (std::size_t j = 0; j < entries.size(); ++j) {
      if (!inside(entries[j].first, s) || !block_tri(entries[i].first, entries[j].first)) continue;
      if (!q.leq(entries[i].second.back(), entries[j].second.back())) {
        throw violation("last entries are not perfect on the restriction to the subset");
      }
    }
  }

  std::vector<Nat> keep(s.begin(), s.end());
  for (std::size_t i = 0; i < *first; ++i) keep.insert(keep.end(), entries[i].first.begin(), entries[i].first.end());
  keep = sorted_unique(keep);

  PartialArray<Seq> out;
  for (const auto& [b, v] : entries) {
    std::pair<Block, Seq> e;
    if (inside(b, s)) {
      e = {b, Seq(v.begin(), v.end() - 1)};
    } else if (inside(b, keep)) {
      e = {b, v};
    } else {
      continue;
    }
    if (std::find(out.entries.begin(), out.entries.end(), e) == out.entries.end()) out.entries.push_back(std::move(e));
  }
  return out;
}

bool array_length_less(const PartialArray<Seq>& lhs, const PartialArray<Seq>& rhs) {
  return seq_less(std::span<const std::pair<Block, Seq>>(lhs.entries),
                  std::span<const std::pair<Block, Seq>>(rhs.entries),
                  [](const auto& a, const auto& b) { return a.second.size() < b.second.size(); });
}

}  // namespace ordwork
