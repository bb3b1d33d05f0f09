#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ordwork/error.hpp"
#include "ordwork/order.hpp"
#include "ordwork/wqo.hpp"

namespace ordwork {

/// Strictly increasing finite sequence of naturals.
using Block = Seq;

bool is_increasing(std::span<const Nat> b) noexcept;

/// The part of a barrier whose blocks have every entry below `window`.
///
/// A barrier is infinite; a fragment only claims to list the blocks that fit
/// inside the window. Construction checks that blocks are increasing, fit
/// the window and have pairwise non-nested ranges.
class BarrierFragment {
 public:
  BarrierFragment() = default;
  /// Throws NotIncreasing, EmptyBlock, or InvalidInput for range inclusion
  /// and window overflow.
  BarrierFragment(Nat window, std::vector<Block> blocks);

  /// All k-element subsets of [0, window), as increasing blocks.
  static BarrierFragment uniform(Nat window, std::size_t k);

  [[nodiscard]] Nat window() const noexcept { return window_; }
  /// Sorted lexicographically.
  [[nodiscard]] const std::vector<Block>& blocks() const noexcept { return blocks_; }
  [[nodiscard]] bool contains(std::span<const Nat> b) const;

  friend bool operator==(const BarrierFragment&, const BarrierFragment&) = default;

 private:
  Nat window_ = 0;
  std::vector<Block> blocks_;
};

/// Union of block ranges, ascending.
std::vector<Nat> base_of(const BarrierFragment& frag);

/// b with its first entry removed. Throws EmptyBlock.
Block tail(std::span<const Nat> b);

/// The shift relation: some increasing b* extends b and has b' as a prefix of
/// its tail. Throws NotIncreasing.
bool block_tri(std::span<const Nat> b, std::span<const Nat> b2);

/// Blocks whose range lies inside x; window unchanged.
BarrierFragment restrict(const BarrierFragment& frag, std::span<const Nat> x);

/// Increasing sequence with range rng(b) ∪ rng(b2). Throws NotTriRelated.
Block union_block(std::span<const Nat> b, std::span<const Nat> b2);

/// Unions of all shift-related pairs of blocks.
BarrierFragment star_fragment(const BarrierFragment& frag);

enum class Verdict { Pass, Fail, Inconclusive };
std::string_view to_string(Verdict v) noexcept;

struct FragmentCheck {
  Verdict verdict = Verdict::Pass;
  /// Increasing in-window sequences with a prefix among the blocks.
  std::size_t covered = 0;
  /// Maximal in-window sequences that leave the window before meeting a block.
  std::size_t exited = 0;
  std::optional<Block> first_exit;
};

/// Window-completeness check: every increasing sequence drawn from the base
/// either has a prefix in the fragment (pass) or runs out of in-window
/// entries first (inconclusive; its block would lie beyond the window).
FragmentCheck check_fragment(const BarrierFragment& frag);

template <class V>
struct PartialArray {
  std::vector<std::pair<Block, V>> entries;
};

struct ArrayClass {
  bool good = false;     ///< some shift pair is ordered
  bool perfect = true;   ///< every shift pair is ordered
  std::size_t pairs = 0; ///< number of shift-related pairs
  /// An ordered pair (witness of good) and an unordered one (witness against
  /// perfect), as entry indices.
  std::optional<std::pair<std::size_t, std::size_t>> good_pair;
  std::optional<std::pair<std::size_t, std::size_t>> bad_pair;

  [[nodiscard]] bool bad() const noexcept { return !good; }
  /// "good", "bad", "perfect", "mixed", or "bad+perfect" when no pair exists.
  [[nodiscard]] std::string label() const;
};

namespace detail {
void require_blocks_in(const BarrierFragment& frag, std::span<const Block> blocks);
}

/// Classifies an array by its values on shift-related pairs.
template <class V, class Leq>
ArrayClass classify_array(const PartialArray<V>& f, const BarrierFragment& frag, Leq&& leq) {
  std::vector<Block> blocks;
  for (const auto& e : f.entries) blocks.push_back(e.first);
  detail::require_blocks_in(frag, blocks);
  ArrayClass out;
  for (std::size_t i = 0; i < f.entries.size(); ++i) {
    for (std::size_t j = 0; j < f.entries.size(); ++j) {
      if (!block_tri(f.entries[i].first, f.entries[j].first)) continue;
      ++out.pairs;
      if (leq(f.entries[i].second, f.entries[j].second)) {
        out.good = true;
        if (!out.good_pair) out.good_pair = {i, j};
      } else {
        out.perfect = false;
        if (!out.bad_pair) out.bad_pair = {i, j};
      }
    }
  }
  return out;
}

struct ArrayCheck {
  bool ok = true;
  /// Which condition failed first (1: maxima, 2: badness, 3: completeness).
  int failed_condition = 0;
  std::string detail;
};

/// The three bad-partial-array conditions: block maxima non-decreasing,
/// no shift pair ordered, and every fragment block inside the array's base
/// with max below the last block's max already listed earlier.
template <class V, class Leq>
ArrayCheck check_bad_partial_array(const PartialArray<V>& sigma, const BarrierFragment& frag, Leq&& leq) {
  std::vector<Block> blocks;
  for (const auto& e : sigma.entries) blocks.push_back(e.first);
  detail::require_blocks_in(frag, blocks);
  const std::size_t k = blocks.size();
  for (std::size_t i = 0; i + 1 < k; ++i) {
    if (blocks[i].back() > blocks[i + 1].back()) {
      return {false, 1, "max of entry " + std::to_string(i) + " exceeds max of entry " + std::to_string(i + 1)};
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (block_tri(blocks[i], blocks[j]) && leq(sigma.entries[i].second, sigma.entries[j].second)) {
        return {false, 2, "shift pair (" + std::to_string(i) + "," + std::to_string(j) + ") is ordered"};
      }
    }
  }
  if (k == 0) return {};
  std::set<Nat> base;
  for (const auto& b : blocks) base.insert(b.begin(), b.end());
  const Nat last_max = blocks.back().back();
  for (const auto& b : frag.blocks()) {
    if (b.empty() || b.back() >= last_max) continue;
    if (!std::all_of(b.begin(), b.end(), [&](Nat x) { return base.count(x) > 0; })) continue;
    if (std::find(blocks.begin(), blocks.end() - 1, b) == blocks.end() - 1) {
      std::string s;
      for (Nat x : b) s += (s.empty() ? "" : ",") + std::to_string(x);
      return {false, 3, "block <" + s + "> missing below the last maximum"};
    }
  }
  return {};
}

ArrayClass classify_array(const PartialArray<Nat>& f, const BarrierFragment& frag, const QuasiOrder& q);
ArrayClass classify_array(const PartialArray<Seq>& f, const BarrierFragment& frag, const QuasiOrder& q);
ArrayCheck check_bad_partial_array(const PartialArray<Nat>& sigma, const BarrierFragment& frag, const QuasiOrder& q);
/// Values in Q^{<omega} under the Higman order.
ArrayCheck check_bad_partial_array(const PartialArray<Seq>& sigma, const BarrierFragment& frag, const QuasiOrder& q);

struct BarrierHomogeneous {
  std::vector<Nat> subset;
  std::optional<int> color;  ///< nullopt when the restriction has no shift pair
};

/// First base subset of the given size, in lexicographic order, on whose
/// restricted shift pairs the colouring is constant.
std::optional<BarrierHomogeneous> barrier_pair_homogeneous(
    const BarrierFragment& frag, const std::function<int(const Block&, const Block&)>& color, std::size_t target);

/// The improvement step of the minimal-bad-array argument. Entries whose
/// block lies inside `subset` lose their last value entry; entries whose
/// block lies inside subset ∪ base(blocks before the first such entry) are
/// kept verbatim; all others are dropped.
/// Throws PreconditionViolation naming the failed clause.
PartialArray<Seq> nwt_improvement_step(const PartialArray<Seq>& array, std::span<const Nat> subset,
                                       const BarrierFragment& frag, const QuasiOrder& q);

/// (b, sigma) below (b', sigma') iff |sigma| < |sigma'|, extended to arrays
/// at the first differing entry.
bool array_length_less(const PartialArray<Seq>& lhs, const PartialArray<Seq>& rhs);

}  // namespace ordwork
