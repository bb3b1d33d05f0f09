// Randomized invariants. Each generator is seeded, so failures reproduce.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "ordwork/barrier.hpp"
#include "ordwork/lexcode.hpp"
#include "ordwork/menger.hpp"
#include "ordwork/oracles.hpp"
#include "ordwork/regular_tree.hpp"
#include "ordwork/wqo.hpp"

using namespace ordwork;

namespace {

using oracle::Rng;

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Seq word(Rng& rng, std::size_t k, std::size_t max_len) {
  Seq s(pick(rng, 0, max_len));
  for (auto& x : s) x = static_cast<Nat>(pick(rng, 0, k - 1));
  return s;
}

// Reflexive-transitive closure of a few random pairs on 0..n-1.
QuasiOrder random_quasi(Rng& rng, std::size_t n) {
  std::vector<Pair> pairs;
  for (std::size_t t = pick(rng, 0, n + 1); t > 0; --t)
    pairs.emplace_back(static_cast<Nat>(pick(rng, 0, n - 1)), static_cast<Nat>(pick(rng, 0, n - 1)));
  std::vector<Nat> u(n);
  for (Nat i = 0; i < n; ++i) u[i] = i;
  return QuasiOrder::closure_of(u, pairs);
}

KTree random_tree(Rng& rng, std::size_t n, Nat labels) {
  std::vector<long> parent{-1};
  std::vector<Nat> lab{static_cast<Nat>(pick(rng, 0, labels - 1))};
  for (std::size_t v = 1; v < n; ++v) {
    parent.push_back(static_cast<long>(pick(rng, 0, v - 1)));
    lab.push_back(static_cast<Nat>(pick(rng, 0, labels - 1)));
  }
  return KTree::from_parents(parent, lab);
}

std::vector<Nat> random_subset(Rng& rng, Nat window) {
  std::vector<Nat> x;
  for (Nat i = 0; i < window; ++i)
    if (pick(rng, 0, 1) == 1) x.push_back(i);
  return x;
}

}  // namespace

TEST_CASE("higman_leq agrees with brute force on random words and orders") {
  Rng rng(101);
  for (int t = 0; t < 3000; ++t) {
    const std::size_t n = pick(rng, 1, 4);
    const auto q = random_quasi(rng, n);
    const Seq s = word(rng, n, 6), u = word(rng, n, 6);
    REQUIRE(higman_leq(s, u, q) == oracle::higman_brute(s, u, [&](Nat x, Nat y) { return q.leq(x, y); }));
  }
}

TEST_CASE("tree_meet is associative and a lower bound") {
  Rng rng(102);
  for (int t = 0; t < 300; ++t) {
    const auto tree = random_tree(rng, pick(rng, 1, 12), 1);
    for (int k = 0; k < 20; ++k) {
      const auto x = static_cast<Node>(pick(rng, 0, tree.size() - 1));
      const auto y = static_cast<Node>(pick(rng, 0, tree.size() - 1));
      const auto z = static_cast<Node>(pick(rng, 0, tree.size() - 1));
      CHECK(tree_meet(tree, tree_meet(tree, x, y), z) == tree_meet(tree, x, tree_meet(tree, y, z)));
      const Node m = tree_meet(tree, x, y);
      CHECK(tree.ancestor_or_self(m, x));
      CHECK(tree.ancestor_or_self(m, y));
    }
  }
}

TEST_CASE("ktree_leq agrees with brute force on random six-node trees") {
  Rng rng(103);
  const auto q = QuasiOrder::closure_of({0, 1}, std::vector<Pair>{{0, 1}});
  auto leq = [&](Nat x, Nat y) { return q.leq(x, y); };
  for (int t = 0; t < 400; ++t) {
    const auto s = random_tree(rng, pick(rng, 1, 5), 2);
    const auto u = random_tree(rng, pick(rng, 1, 6), 2);
    REQUIRE(ktree_leq(s, u, q) == oracle::kruskal_brute(s, u, leq));
  }
}

TEST_CASE("sequence codes are monotone and invertible on random posets") {
  Rng rng(104);
  for (int t = 0; t < 200; ++t) {
    const auto p = oracle::random_poset(rng, pick(rng, 1, 6));
    const auto code = encode_order(p);
    for (int k = 0; k < 50; ++k) {
      const Seq s = word(rng, p.size(), 6), u = word(rng, p.size(), 6);
      REQUIRE(decode_path(code, encode_seq(code, s)) == s);
      if (seq_less(s, u, p)) CHECK(seq_less_natural(encode_seq(code, s), encode_seq(code, u)));
    }
  }
}

TEST_CASE("minimal paths survive the code roundtrip") {
  Rng rng(105);
  const auto lassos = oracle::all_lassos(2, 5);
  for (int t = 0; t < 300; ++t) {
    const auto aut = oracle::automaton_from_code(3, 2, pick(rng, 0, oracle::automaton_class_size(3, 2) - 1));
    if (!live_states(aut)[0]) continue;
    const auto order = oracle::random_poset(rng, 2);
    const auto mp = minimal_path(aut, order);
    REQUIRE(lasso_is_path(aut, mp));
    const auto code = encode_order(order);
    const LassoPath coded{encode_seq(code, mp.prefix), encode_seq(code, mp.cycle)};
    CHECK(decode_lasso(code, coded) == canonical(mp));
    const auto report = challenger_check(aut, mp, lassos, order);
    CHECK(report.relatively_minimal);
  }
}

TEST_CASE("restrict is monotone and idempotent on random fragments") {
  Rng rng(106);
  for (int t = 0; t < 500; ++t) {
    const Nat window = static_cast<Nat>(pick(rng, 1, 8));
    const auto full = BarrierFragment::uniform(window, pick(rng, 1, 3));
    std::vector<Block> some;
    for (const auto& b : full.blocks())
      if (pick(rng, 0, 2) > 0) some.push_back(b);
    const BarrierFragment frag(window, some);
    CHECK(restrict(frag, base_of(frag)) == frag);
    const auto x = random_subset(rng, window);
    std::vector<Nat> y = x;
    for (Nat i = 0; i < window; ++i)
      if (pick(rng, 0, 3) == 0) y.push_back(i);
    std::sort(y.begin(), y.end());
    y.erase(std::unique(y.begin(), y.end()), y.end());
    const auto rx = restrict(frag, x);
    const auto ry = restrict(frag, y);
    CHECK(restrict(rx, x) == rx);
    for (const auto& b : rx.blocks()) CHECK(ry.contains(b));
  }
}

TEST_CASE("is_separator matches the brute-force separator test") {
  Rng rng(107);
  for (int t = 0; t < 300; ++t) {
    const auto g = oracle::random_graph(rng, 7);
    for (int k = 0; k < 10; ++k) {
      const auto c = random_subset(rng, static_cast<Nat>(g.size()));
      REQUIRE(is_separator(g, c) == oracle::separates(g, c));
    }
  }
}

TEST_CASE("random waves encode, validate and decode") {
  Rng rng(108);
  for (int t = 0; t < 200; ++t) {
    const auto g = oracle::random_graph(rng, 6);
    const auto e = default_enumeration(g);
    const auto waves = enumerate_waves(g, 20000);
    REQUIRE_FALSE(waves.truncated);
    for (const auto& w : waves.waves) {
      const auto seq = encode_wave(g, e, w);
      REQUIRE(seq.size() == e.complete_length());
      CHECK(wave_seq_valid(g, e, seq));
      CHECK(oracle::wave_seq_valid_brute(g, e, seq));
      CHECK(decode_wave(g, e, seq) == w);
    }
    const auto top = maximal_wave(g);
    for (const auto& w : waves.waves) CHECK((w == top || !wave_leq(top, w)));
  }
}
