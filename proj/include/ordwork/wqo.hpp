#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ordwork/order.hpp"

namespace ordwork {

using Node = std::size_t;

/// Finite rooted tree with Q-labels. Ancestry is the tree order, so the set
/// of ancestors of any node is a chain and meets always exist.
class KTree {
 public:
  KTree() = default;

  /// parent[i] is the parent of node i, or -1 for the root. Exactly one root
  /// is allowed and every node must reach it. Throws InvalidInput.
  static KTree from_parents(std::vector<long> parent, std::vector<Nat> labels);
  static KTree leaf(Nat label) { return from_parents({-1}, {label}); }

  [[nodiscard]] std::size_t size() const noexcept { return labels_.size(); }
  [[nodiscard]] Node root() const noexcept { return root_; }
  [[nodiscard]] Nat label(Node t) const { return labels_.at(t); }
  [[nodiscard]] const std::vector<Nat>& labels() const noexcept { return labels_; }
  [[nodiscard]] const std::vector<long>& parents() const noexcept { return parent_; }
  /// Children in ascending id order.
  [[nodiscard]] const std::vector<Node>& children(Node t) const { return children_.at(t); }
  [[nodiscard]] std::size_t depth(Node t) const { return depth_.at(t); }
  /// t is an ancestor of (or equal to) u.
  [[nodiscard]] bool ancestor_or_self(Node t, Node u) const;

  friend bool operator==(const KTree& a, const KTree& b) {
    return a.parent_ == b.parent_ && a.labels_ == b.labels_;
  }

 private:
  std::vector<long> parent_;
  std::vector<Nat> labels_;
  std::vector<std::vector<Node>> children_;
  std::vector<std::size_t> depth_;
  Node root_ = 0;
};

/// Deepest common ancestor. Throws InvalidNode.
Node tree_meet(const KTree& tree, Node t, Node u);

/// Order-independent structural form; equal iff the labelled trees are
/// isomorphic.
std::string canonical_form(const KTree& tree);

/// Whether sigma embeds in tau by a strictly increasing index map with
/// pointwise domination. Greedy leftmost matching is exact for this.
template <class T, class Leq>
bool higman_leq(std::span<const T> sigma, std::span<const T> tau, Leq&& leq) {
  std::size_t j = 0;
  for (const T& item : sigma) {
    while (j < tau.size() && !leq(item, tau[j])) ++j;
    if (j == tau.size()) return false;
    ++j;
  }
  return true;
}

/// Throws UnknownElement for entries outside Q.
bool higman_leq(std::span<const Nat> sigma, std::span<const Nat> tau, const QuasiOrder& q);

/// Injective meet-preserving map with f(t) <= f'(map(t)) for every node.
/// Throws UnknownElement.
bool ktree_leq(const KTree& s, const KTree& t, const QuasiOrder& q);

/// Size order used for minimal bad sequences of trees: fewer nodes is below.
inline bool ktree_size_less(const KTree& s, const KTree& t) noexcept { return s.size() < t.size(); }

/// Lexicographically first pair i < j with sigma(i) <= sigma(j); nullopt iff
/// the sequence is bad.
template <class T, class Leq>
std::optional<std::pair<std::size_t, std::size_t>> first_good_pair(std::span<const T> sigma, Leq&& leq) {
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    for (std::size_t j = i + 1; j < sigma.size(); ++j) {
      if (leq(sigma[i], sigma[j])) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

std::optional<std::pair<std::size_t, std::size_t>> is_bad(std::span<const Nat> sigma, const QuasiOrder& q);

/// Among bad sequences of the given length over Q's universe below `bound`,
/// one that no other such sequence is seq_less than under `size_less`
/// (a strict partial order on elements). Depth-first with incumbent pruning.
std::optional<Seq> min_bad_sequence(const QuasiOrder& q, const std::function<bool(Nat, Nat)>& size_less,
                                    Nat bound, std::size_t length);

/// The improvement step of the minimal-bad-sequence argument for sequences:
/// entries before the first index of `subset` are kept, and from there the
/// truncations (last entry dropped) of the entries at `subset`, in order.
/// Throws PreconditionViolation naming the failed clause.
std::vector<Seq> nash_williams_step(std::span<const Seq> seqs, std::span<const std::size_t> subset,
                                    const QuasiOrder& q);

/// The length order on Q^{<omega}: sigma below tau iff |sigma| < |tau|.
inline bool length_less(const Seq& a, const Seq& b) noexcept { return a.size() < b.size(); }

struct RootDecomposition {
  Nat root_label = 0;
  std::vector<KTree> subtrees;
};

/// Root label and the subtrees at the root's children (ascending child id).
/// Node ids in each subtree keep their relative order.
RootDecomposition decompose_ktree(const KTree& tree);

/// Inverse of decompose_ktree up to renumbering: root 0, subtrees appended in
/// order.
KTree compose_ktree(Nat root_label, std::span<const KTree> subtrees);

struct Homogeneous {
  std::vector<Nat> subset;
  /// Colour taken on the subset's pairs; nullopt when it has no pairs.
  std::optional<int> color;
};

/// Exhaustive search, in lexicographic subset order, for `target` points of
/// [0, n) on whose pairs the colouring is constant.
std::optional<Homogeneous> ramsey_pairs_homogeneous(std::size_t n, const std::function<int(Nat, Nat)>& color,
                                                    std::size_t target);

}  // namespace ordwork
