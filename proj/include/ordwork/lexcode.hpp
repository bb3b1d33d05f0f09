#pragma once

#include <span>
#include <vector>

#include "ordwork/automaton.hpp"
#include "ordwork/order.hpp"

namespace ordwork {

/// How to choose among several minimal candidates when coding an element
/// below earlier ones. LeastCode takes the candidate whose code is
/// lexicographically least, the only choice that keeps the order embedding
/// in general; the id-based policies can break it once two minimal
/// candidates are incomparable. Strict refuses (AmbiguousLeast) instead of
/// choosing.
enum class TieBreak { LeastCode, SmallestId, LargestId, Strict };

/// Embedding of a finite partial order into finite sequences of naturals such
/// that x < y implies code(x) is lexicographically below code(y).
///
/// Each base code is a (possibly empty) run of even numbers closed by a single
/// odd number, so codes are pairwise prefix-free. The element code appends the
/// element id to the base code, which makes decoding a concatenation of
/// element codes a left-to-right block scan.
class LexCode {
 public:
  [[nodiscard]] const Poset& order() const noexcept { return order_; }
  /// Elements in the order they were coded (ascending id).
  [[nodiscard]] const std::vector<Nat>& processing_order() const noexcept {
    return order_.elements();
  }
  /// Base code (even* odd) of x. Throws UnknownElement.
  [[nodiscard]] const Seq& base_code(Nat x) const { return codes_[order_.index_of(x)]; }
  /// Largest symbol in any element code.
  [[nodiscard]] Nat max_symbol() const noexcept { return max_symbol_; }
  /// Longest base code.
  [[nodiscard]] std::size_t max_code_length() const noexcept { return max_len_; }

 private:
  friend LexCode encode_order(const Poset&, TieBreak);

  Poset order_;
  std::vector<Seq> codes_;
  Nat max_symbol_ = 0;
  std::size_t max_len_ = 0;
};

LexCode encode_order(const Poset& order, TieBreak tie_break = TieBreak::LeastCode);

/// Base code of x followed by x.
Seq encode_element(const LexCode& code, Nat x);

/// Concatenation of element codes; the empty sequence maps to itself.
Seq encode_seq(const LexCode& code, std::span<const Nat> sigma);

/// Inverse of encode_seq. Throws MalformedCode when the input is not a
/// concatenation of complete element codes.
Seq decode_path(const LexCode& code, std::span<const Nat> coded);

/// Automaton for the prefix closure of the images of all nodes of `tree`.
/// The tree alphabet must be exactly the poset's elements 0..k-1. The lifted
/// alphabet is 0..max(max code symbol, k-1); original states keep their ids
/// and mark block boundaries.
TreeAutomaton lift_tree(const LexCode& code, const TreeAutomaton& tree);

/// Decodes an infinite coded sequence given as a lasso. Throws MalformedCode.
LassoPath decode_lasso(const LexCode& code, const LassoPath& coded);

}  // namespace ordwork
