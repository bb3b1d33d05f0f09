#include "ordwork/order.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "ordwork/error.hpp"

namespace ordwork {

namespace {

std::vector<Nat> sorted_unique(std::vector<Nat> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::size_t position(const std::vector<Nat>& sorted, Nat x) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
  if (it == sorted.end() || *it != x) {
    throw Error(ErrorCode::UnknownElement, "element " + std::to_string(x));
  }
  return static_cast<std::size_t>(it - sorted.begin());
}

// Warshall closure on an n x n row-major matrix.
void close_transitively(std::vector<unsigned char>& m, std::size_t n) {
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!m[i * n + k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (m[k * n + j]) m[i * n + j] = 1;
      }
    }
  }
}

}  // namespace

Poset Poset::antichain(std::vector<Nat> elements) {
  return validate_poset({}, std::move(elements));
}

Poset Poset::chain(std::size_t n) {
  std::vector<Nat> elems(n);
  std::vector<Pair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    elems[i] = static_cast<Nat>(i);
    if (i + 1 < n) pairs.emplace_back(static_cast<Nat>(i), static_cast<Nat>(i + 1));
  }
  return validate_poset(pairs, std::move(elems));
}

bool Poset::contains(Nat x) const noexcept {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

std::size_t Poset::index_of(Nat x) const { return position(elements_, x); }

bool Poset::less(Nat x, Nat y) const { return less_at(index_of(x), index_of(y)); }

std::vector<Pair> Poset::pairs() const {
  std::vector<Pair> out;
  const std::size_t n = elements_.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (less_at(i, j)) out.emplace_back(elements_[i], elements_[j]);
    }
  }
  return out;
}

Poset validate_poset(std::span<const Pair> raw_pairs, std::vector<Nat> elements) {
  Poset p;
  p.elements_ = sorted_unique(std::move(elements));
  const std::size_t n = p.elements_.size();
  p.lt_.assign(n * n, 0);
  for (const auto& [x, y] : raw_pairs) {
    p.lt_[position(p.elements_, x) * n + position(p.elements_, y)] = 1;
  }
  close_transitively(p.lt_, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (p.lt_[i * n + i]) {
      throw Error(ErrorCode::CycleError,
                  "closure relates element " + std::to_string(p.elements_[i]) + " to itself");
    }
  }
  return p;
}

QuasiOrder QuasiOrder::natural_leq() { return QuasiOrder(Family::NaturalLeq); }
QuasiOrder QuasiOrder::natural_eq() { return QuasiOrder(Family::NaturalEq); }
QuasiOrder QuasiOrder::divisibility() { return QuasiOrder(Family::Divisibility); }

QuasiOrder QuasiOrder::closure_of(std::vector<Nat> universe, std::span<const Pair> leq_pairs) {
  QuasiOrder q(Family::Explicit);
  q.universe_ = sorted_unique(std::move(universe));
  const std::size_t n = q.universe_.size();
  q.leq_.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) q.leq_[i * n + i] = 1;
  for (const auto& [a, b] : leq_pairs) {
    q.leq_[position(q.universe_, a) * n + position(q.universe_, b)] = 1;
  }
  close_transitively(q.leq_, n);
  return q;
}

QuasiOrder QuasiOrder::from_matrix(std::vector<Nat> universe, std::vector<unsigned char> leq) {
  QuasiOrder q(Family::Explicit);
  const std::size_t n = universe.size();
  if (leq.size() != n * n || !std::is_sorted(universe.begin(), universe.end()) ||
      std::adjacent_find(universe.begin(), universe.end()) != universe.end()) {
    throw Error(ErrorCode::PreconditionViolation, "matrix shape or universe order");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!leq[i * n + i]) throw Error(ErrorCode::PreconditionViolation, "relation not reflexive");
    for (std::size_t j = 0; j < n; ++j) {
      if (!leq[i * n + j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (leq[j * n + k] && !leq[i * n + k]) {
          throw Error(ErrorCode::PreconditionViolation, "relation not transitive");
        }
      }
    }
  }
  q.universe_ = std::move(universe);
  q.leq_ = std::move(leq);
  return q;
}

QuasiOrder QuasiOrder::from_poset(const Poset& order) {
  return closure_of(order.elements(), order.pairs());
}

QuasiOrder QuasiOrder::antichain(std::size_t n) {
  std::vector<Nat> u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = static_cast<Nat>(i);
  return closure_of(std::move(u), {});
}

bool QuasiOrder::contains(Nat x) const noexcept {
  if (family_ != Family::Explicit) return true;
  return std::binary_search(universe_.begin(), universe_.end(), x);
}

bool QuasiOrder::leq(Nat a, Nat b) const {
  switch (family_) {
    case Family::NaturalLeq: return a <= b;
    case Family::NaturalEq: return a == b;
    case Family::Divisibility:
      if (a == 0) return b == 0;
      return b % a == 0;
    case Family::Explicit: break;
  }
  return leq_[position(universe_, a) * universe_.size() + position(universe_, b)] != 0;
}

std::vector<Nat> QuasiOrder::universe_below(Nat bound) const {
  std::vector<Nat> out;
  if (family_ == Family::Explicit) {
    for (Nat x : universe_) {
      if (x < bound) out.push_back(x);
    }
  } else {
    for (Nat x = 0; x < bound; ++x) out.push_back(x);
  }
  return out;
}

std::optional<Seq> descending_chain_search(const QuasiOrder& order, std::span<const Nat> start,
                                           std::size_t max_len, Nat universe_bound) {
  if (max_len == 0) throw Error(ErrorCode::PreconditionViolation, "max_len must be at least 1");
  const std::vector<Nat> universe = order.universe_below(universe_bound);
  const std::size_t n = universe.size();

  // height[i]: length of the longest strictly descending chain starting at
  // universe[i]. The strict part of a quasi-order is acyclic, so processing
  // elements in an order where every strictly-lower element comes first is
  // possible; a memoised recursion does that implicitly.
  std::vector<std::size_t> height(n, 0);
  std::vector<std::vector<std::size_t>> below(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && order.less(universe[j], universe[i])) below[i].push_back(j);
    }
  }
  auto compute = [&](auto&& self, std::size_t i) -> std::size_t {
    if (height[i] != 0) return height[i];
    std::size_t best = 0;
    for (std::size_t j : below[i]) best = std::max(best, self(self, j));
    return height[i] = best + 1;
  };

  std::vector<Nat> starts(start.begin(), start.end());
  std::sort(starts.begin(), starts.end());
  for (Nat s : starts) {
    auto it = std::lower_bound(universe.begin(), universe.end(), s);
    if (it == universe.end() || *it != s) continue;
    std::size_t cur = static_cast<std::size_t>(it - universe.begin());
    if (compute(compute, cur) < max_len) continue;
    Seq chain{s};
    while (chain.size() < max_len) {
      const std::size_t need = max_len - chain.size();
      std::optional<std::size_t> pick;
      for (std::size_t j : below[cur]) {
        if (compute(compute, j) >= need && (!pick || universe[j] > universe[*pick])) pick = j;
      }
      cur = *pick;
      chain.push_back(universe[cur]);
    }
    return chain;
  }
  return std::nullopt;
}

bool seq_less(std::span<const Nat> sigma, std::span<const Nat> tau, const Poset& order) {
  for (Nat x : sigma) (void)order.index_of(x);
  for (Nat x : tau) (void)order.index_of(x);
  return seq_less(sigma, tau, [&](Nat a, Nat b) { return order.less(a, b); });
}

bool seq_less_natural(std::span<const Nat> sigma, std::span<const Nat> tau) noexcept {
  return seq_less(sigma, tau, [](Nat a, Nat b) { return a < b; });
}

bool lex_less(std::span<const Nat> a, std::span<const Nat> b) noexcept {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool is_prefix(std::span<const Nat> prefix, std::span<const Nat> seq) noexcept {
  return prefix.size() <= seq.size() && std::equal(prefix.begin(), prefix.end(), seq.begin());
}

}  // namespace ordwork
