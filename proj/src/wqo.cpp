#include "ordwork/wqo.hpp"

#include <algorithm>
#include <string>

#include "ordwork/error.hpp"

namespace ordwork {

KTree KTree::from_parents(std::vector<long> parent, std::vector<Nat> labels) {
  const std::size_t n = parent.size();
  if (n == 0) throw Error(ErrorCode::InvalidInput, "tree has no nodes");
  if (labels.size() != n) throw Error(ErrorCode::InvalidInput, "parent/label length mismatch");
  KTree t;
  t.children_.resize(n);
  t.depth_.assign(n, SIZE_MAX);
  std::size_t roots = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (parent[i] == -1) {
      ++roots;
      t.root_ = i;
    } else if (parent[i] < 0 || static_cast<std::size_t>(parent[i]) >= n) {
      throw Error(ErrorCode::InvalidInput, "parent of node " + std::to_string(i) + " out of range");
    } else {
      t.children_[static_cast<std::size_t>(parent[i])].push_back(i);
    }
  }
  if (roots != 1) throw Error(ErrorCode::InvalidInput, "tree must have exactly one root");
  // Breadth-first from the root; anything unreached sits on a cycle.
  std::vector<Node> queue{t.root_};
  t.depth_[t.root_] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (Node c : t.children_[queue[head]]) {
      t.depth_[c] = t.depth_[queue[head]] + 1;
      queue.push_back(c);
    }
  }
  if (queue.size() != n) throw Error(ErrorCode::InvalidInput, "parent links contain a cycle");
  t.parent_ = std::move(parent);
  t.labels_ = std::move(labels);
  return t;
}

bool KTree::ancestor_or_self(Node t, Node u) const {
  if (t >= size() || u >= size()) throw Error(ErrorCode::InvalidNode, "node out of range");
  while (depth_[u] > depth_[t]) u = static_cast<Node>(parent_[u]);
  return t == u;
}

Node tree_meet(const KTree& tree, Node t, Node u) {
  if (t >= tree.size() || u >= tree.size()) {
    throw Error(ErrorCode::InvalidNode, "node out of range");
  }
  const auto& parent = tree.parents();
  while (tree.depth(t) > tree.depth(u)) t = static_cast<Node>(parent[t]);
  while (tree.depth(u) > tree.depth(t)) u = static_cast<Node>(parent[u]);
  while (t != u) {
    t = static_cast<Node>(parent[t]);
    u = static_cast<Node>(parent[u]);
  }
  return t;
}

namespace {

std::string canonical_at(const KTree& tree, Node t) {
  std::vector<std::string> parts;
  for (Node c : tree.children(t)) parts.push_back(canonical_at(tree, c));
  std::sort(parts.begin(), parts.end());
  std::string out = std::to_string(tree.label(t)) + "(";
  for (const auto& p : parts) out += p;
  return out + ")";
}

void check_labels(const KTree& tree, const QuasiOrder& q) {
  for (Nat l : tree.labels()) {
    if (!q.contains(l)) throw Error(ErrorCode::UnknownElement, "label " + std::to_string(l));
  }
}

// Kuhn's augmenting-path matching of every left vertex.
bool match_all(const std::vector<std::vector<std::size_t>>& adj, std::size_t right_count) {
  std::vector<long> owner(right_count, -1);
  for (std::size_t l = 0; l < adj.size(); ++l) {
    std::vector<bool> visited(right_count, false);
    auto augment = [&](auto&& self, std::size_t v) -> bool {
      for (std::size_t r : adj[v]) {
        if (visited[r]) continue;
        visited[r] = true;
        if (owner[r] < 0 || self(self, static_cast<std::size_t>(owner[r]))) {
          owner[r] = static_cast<long>(v);
          return true;
        }
      }
      return false;
    };
    if (!augment(augment, l)) return false;
  }
  return true;
}

std::vector<Node> post_order(const KTree& tree) {
  std::vector<Node> order;
  std::vector<std::pair<Node, bool>> stack{{tree.root(), false}};
  while (!stack.empty()) {
    auto [t, expanded] = stack.back();
    stack.pop_back();
    if (expanded) {
      order.push_back(t);
      continue;
    }
    stack.emplace_back(t, true);
    for (Node c : tree.children(t)) stack.emplace_back(c, false);
  }
  return order;
}

}  // namespace

std::string canonical_form(const KTree& tree) { return canonical_at(tree, tree.root()); }

bool higman_leq(std::span<const Nat> sigma, std::span<const Nat> tau, const QuasiOrder& q) {
  for (Nat x : sigma) {
    if (!q.contains(x)) throw Error(ErrorCode::UnknownElement, "element " + std::to_string(x));
  }
  for (Nat x : tau) {
    if (!q.contains(x)) throw Error(ErrorCode::UnknownElement, "element " + std::to_string(x));
  }
  return higman_leq(sigma, tau, [&](Nat a, Nat b) { return q.leq(a, b); });
}

bool ktree_leq(const KTree& s, const KTree& t, const QuasiOrder& q) {
  check_labels(s, q);
  check_labels(t, q);
  if (s.size() > t.size()) return false;
  const std::size_t ns = s.size();
  const std::size_t nt = t.size();
  // within[a][v]: the subtree of s at a embeds into the subtree of t at v.
  // A map preserves meets iff distinct children of a land under distinct
  // children of the image of a, which is what the matching enforces.
  std::vector<std::vector<char>> within(ns, std::vector<char>(nt, 0));
  const auto t_order = post_order(t);
  for (Node a : post_order(s)) {
    const auto& kids = s.children(a);
    for (Node v : t_order) {
      bool ok = q.leq(s.label(a), t.label(v)) && kids.size() <= t.children(v).size();
      if (ok && !kids.empty()) {
        const auto& vkids = t.children(v);
        std::vector<std::vector<std::size_t>> adj(kids.size());
        for (std::size_t i = 0; i < kids.size(); ++i) {
          for (std::size_t j = 0; j < vkids.size(); ++j) {
            if (within[kids[i]][vkids[j]]) adj[i].push_back(j);
          }
        }
        ok = match_all(adj, vkids.size());
      }
      bool w = ok;
      for (Node c : t.children(v)) w = w || within[a][c];
      within[a][v] = w;
    }
  }
  return within[s.root()][t.root()] != 0;
}

std::optional<std::pair<std::size_t, std::size_t>> is_bad(std::span<const Nat> sigma, const QuasiOrder& q) {
  for (Nat x : sigma) {
    if (!q.contains(x)) throw Error(ErrorCode::UnknownElement, "element " + std::to_string(x));
  }
  return first_good_pair(sigma, [&](Nat a, Nat b) { return q.leq(a, b); });
}

std::optional<Seq> min_bad_sequence(const QuasiOrder& q, const std::function<bool(Nat, Nat)>& size_less,
                                    Nat bound, std::size_t length) {
  if (length == 0) throw Error(ErrorCode::PreconditionViolation, "length must be at least 1");
  const std::vector<Nat> universe = q.universe_below(bound);
  std::optional<Seq> best;
  Seq cur;

  // Returns false when no completion of cur can be seq_less than the
  // incumbent.
  auto can_improve = [&]() {
    if (!best) return true;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (cur[i] != (*best)[i]) return size_less(cur[i], (*best)[i]);
    }
    return true;
  };
  auto dfs = [&](auto&& self) -> void {
    if (cur.size() == length) {
      if (!best || seq_less(std::span<const Nat>(cur), std::span<const Nat>(*best), size_less)) best = cur;
      return;
    }
    for (Nat x : universe) {
      bool stays_bad = std::none_of(cur.begin(), cur.end(), [&](Nat p) { return q.leq(p, x); });
      if (!stays_bad) continue;
      cur.push_back(x);
      if (can_improve()) self(self);
      cur.pop_back();
    }
  };
  dfs(dfs);
  return best;
}

std::vector<Seq> nash_williams_step(std::span<const Seq> seqs, std::span<const std::size_t> subset,
                                    const QuasiOrder& q) {
  auto violation = [](const std::string& clause) {
    return Error(ErrorCode::PreconditionViolation, clause);
  };
  if (subset.empty()) throw violation("subset is empty");
  for (std::size_t r = 0; r < subset.size(); ++r) {
    if (subset[r] >= seqs.size()) throw violation("subset index out of range");
    if (r > 0 && subset[r] <= subset[r - 1]) throw violation("subset not strictly increasing");
  }
  for (const auto& s : seqs) {
    if (s.empty()) throw violation("sequence entries must be non-empty");
    for (Nat x : s) {
      if (!q.contains(x)) throw Error(ErrorCode::UnknownElement, "element " + std::to_string(x));
    }
  }
  auto hleq = [&](const Seq& a, const Seq& b) { return higman_leq(std::span<const Nat>(a), std::span<const Nat>(b), q); };
  if (first_good_pair(seqs, hleq)) throw violation("input sequence is not bad");
  for (std::size_t r = 0; r < subset.size(); ++r) {
    for (std::size_t u = r + 1; u < subset.size(); ++u) {
      if (!q.leq(seqs[subset[r]].back(), seqs[subset[u]].back())) {
        throw violation("last entries are not perfect on the subset");
      }
    }
  }
  const std::size_t first = subset.front();
  std::vector<Seq> out(seqs.begin(), seqs.begin() + static_cast<std::ptrdiff_t>(first));
  for (std::size_t idx : subset) {
    Seq truncated = seqs[idx];
    truncated.pop_back();
    out.push_back(std::move(truncated));
  }
  return out;
}

RootDecomposition decompose_ktree(const KTree& tree) {
  RootDecomposition out;
  out.root_label = tree.label(tree.root());
  for (Node c : tree.children(tree.root())) {
    // Collect the subtree at c, numbered by ascending original id.
    std::vector<Node> nodes;
    for (Node v = 0; v < tree.size(); ++v) {
      if (tree.ancestor_or_self(c, v)) nodes.push_back(v);
    }
    std::vector<long> parent(nodes.size());
    std::vector<Nat> labels(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      labels[i] = tree.label(nodes[i]);
      if (nodes[i] == c) {
        parent[i] = -1;
      } else {
        const auto p = static_cast<Node>(tree.parents()[nodes[i]]);
        parent[i] = std::lower_bound(nodes.begin(), nodes.end(), p) - nodes.begin();
      }
    }
    out.subtrees.push_back(KTree::from_parents(std::move(parent), std::move(labels)));
  }
  return out;
}

KTree compose_ktree(Nat root_label, std::span<const KTree> subtrees) {
  std::vector<long> parent{-1};
  std::vector<Nat> labels{root_label};
  for (const auto& sub : subtrees) {
    const long offset = static_cast<long>(parent.size());
    for (std::size_t v = 0; v < sub.size(); ++v) {
      const long p = sub.parents()[v];
      parent.push_back(p == -1 ? 0 : p + offset);
      labels.push_back(sub.label(v));
    }
  }
  return KTree::from_parents(std::move(parent), std::move(labels));
}

std::optional<Homogeneous> ramsey_pairs_homogeneous(std::size_t n, const std::function<int(Nat, Nat)>& color,
                                                    std::size_t target) {
  if (target > n) return std::nullopt;
  std::vector<Nat> pick;
  std::optional<Homogeneous> found;
  auto dfs = [&](auto&& self, Nat from, std::optional<int> col) -> bool {
    if (pick.size() == target) {
      found = Homogeneous{pick, col};
      return true;
    }
    for (Nat x = from; x < n; ++x) {
      std::optional<int> next = col;
      bool ok = true;
      for (Nat p : pick) {
        const int c = color(p, x);
        if (!next) next = c;
        if (c != *next) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      pick.push_back(x);
      if (self(self, x + 1, next)) return true;
      pick.pop_back();
    }
    return false;
  };
  dfs(dfs, 0, std::nullopt);
  return found;
}

}  // namespace ordwork
