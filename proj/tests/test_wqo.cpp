#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ordwork/error.hpp"
#include "ordwork/oracles.hpp"
#include "ordwork/wqo.hpp"

using namespace ordwork;

namespace {

constexpr Nat a = 0, b = 1;

bool raises(ErrorCode code, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

QuasiOrder of_relation(const oracle::Relation& rel, std::size_t n) {
  std::vector<Nat> u(n);
  for (Nat i = 0; i < n; ++i) u[i] = i;
  return QuasiOrder::from_matrix(u, std::vector<unsigned char>(rel.begin(), rel.end()));
}

bool hleq(const Seq& s, const Seq& t, const QuasiOrder& q) { return higman_leq(s, t, q); }

}  // namespace

TEST_CASE("higman_leq examples") {
  const auto anti = QuasiOrder::antichain(2);
  CHECK(hleq({}, {a, b}, anti));
  CHECK(hleq({a, b}, {b, a, b}, anti));
  CHECK_FALSE(hleq({a, a}, {a, b}, anti));
  CHECK(raises(ErrorCode::UnknownElement, [&] { (void)hleq({5}, {5}, anti); }));
}

TEST_CASE("higman_leq is reflexive and transitive") {
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto ws = oracle::all_words(n, n == 3 ? 3 : 4);
    for (const auto& rel : oracle::all_quasi_orders(n)) {
      const auto q = of_relation(rel, n);
      std::vector<std::vector<char>> m(ws.size(), std::vector<char>(ws.size()));
      for (std::size_t i = 0; i < ws.size(); ++i)
        for (std::size_t j = 0; j < ws.size(); ++j) m[i][j] = hleq(ws[i], ws[j], q);
      for (std::size_t i = 0; i < ws.size(); ++i) {
        REQUIRE(m[i][i]);
        for (std::size_t j = 0; j < ws.size(); ++j) {
          if (!m[i][j]) continue;
          for (std::size_t k = 0; k < ws.size(); ++k)
            if (m[j][k]) REQUIRE(m[i][k]);
        }
      }
    }
  }
}

TEST_CASE("higman_leq is preserved by order-preserving relabelling") {
  oracle::Rng rng(5);
  const auto target = QuasiOrder::natural_leq();
  const auto source = QuasiOrder::closure_of({0, 1, 2}, std::vector<Pair>{{0, 1}, {0, 2}});
  // g(0)=0, g(1)=3, g(2)=2 keeps 0 <= 1 and 0 <= 2.
  const std::vector<Nat> g{0, 3, 2};
  std::uniform_int_distribution<Nat> letter(0, 2);
  std::uniform_int_distribution<std::size_t> len(0, 5);
  for (int t = 0; t < 2000; ++t) {
    Seq s(len(rng)), u(len(rng));
    for (auto& x : s) x = letter(rng);
    for (auto& x : u) x = letter(rng);
    if (!hleq(s, u, source)) continue;
    Seq gs, gu;
    for (Nat x : s) gs.push_back(g[x]);
    for (Nat x : u) gu.push_back(g[x]);
    CHECK(hleq(gs, gu, target));
  }
}

TEST_CASE("tree_meet") {
  const auto t = KTree::from_parents({-1, 0, 0, 1, 1}, {0, 0, 0, 0, 0});
  CHECK(tree_meet(t, 1, 2) == 0);
  CHECK(tree_meet(t, 3, 4) == 1);
  CHECK(tree_meet(t, 3, 2) == 0);
  CHECK(tree_meet(t, 0, 4) == 0);
  CHECK(tree_meet(t, 3, 3) == 3);
  CHECK(raises(ErrorCode::InvalidNode, [&] { (void)tree_meet(t, 0, 9); }));
  for (Node x = 0; x < t.size(); ++x)
    for (Node y = 0; y < t.size(); ++y) {
      const Node m = tree_meet(t, x, y);
      CHECK(m == tree_meet(t, y, x));
      CHECK(t.ancestor_or_self(m, x));
      CHECK(t.ancestor_or_self(m, y));
    }
}

TEST_CASE("KTree validation") {
  CHECK(raises(ErrorCode::InvalidInput, [] { (void)KTree::from_parents({-1, -1}, {0, 0}); }));
  CHECK(raises(ErrorCode::InvalidInput, [] { (void)KTree::from_parents({-1, 2, 1}, {0, 0, 0}); }));
}

TEST_CASE("ktree_leq examples") {
  const auto one = QuasiOrder::antichain(1);
  const auto leaf = KTree::leaf(a);
  const auto chain2 = KTree::from_parents({-1, 0}, {a, a});
  const auto chain3 = KTree::from_parents({-1, 0, 1}, {a, a, a});
  const auto star3 = KTree::from_parents({-1, 0, 0}, {a, a, a});
  CHECK(ktree_leq(leaf, leaf, one));
  CHECK(ktree_leq(star3, star3, one));
  CHECK(ktree_leq(chain2, star3, one));
  // A 3-node tree cannot map injectively into 2 nodes.
  CHECK_FALSE(ktree_leq(star3, chain2, one));
  CHECK_FALSE(ktree_leq(chain3, star3, one));
  // The two leaves of the star meet at the root, which no chain provides.
  CHECK_FALSE(ktree_leq(star3, chain3, one));
  auto leq = [&](Nat x, Nat y) { return one.leq(x, y); };
  CHECK(oracle::kruskal_brute(chain2, star3, leq));
  CHECK_FALSE(oracle::kruskal_brute(star3, chain2, leq));
  CHECK_FALSE(oracle::kruskal_brute(chain3, star3, leq));
}

TEST_CASE("ktree_leq against brute force with a three-element order") {
  const auto trees = oracle::all_trees(4, 3);
  const auto q = QuasiOrder::closure_of({0, 1, 2}, std::vector<Pair>{{0, 1}, {0, 2}});
  auto leq = [&](Nat x, Nat y) { return q.leq(x, y); };
  for (const auto& s : trees)
    for (const auto& t : trees) REQUIRE(ktree_leq(s, t, q) == oracle::kruskal_brute(s, t, leq));
}

TEST_CASE("is_bad") {
  CHECK_FALSE(is_bad(Seq{}, QuasiOrder::natural_leq()));
  CHECK(is_bad(Seq{4, 4}, QuasiOrder::natural_eq()) == std::pair<std::size_t, std::size_t>{0, 1});
  CHECK_FALSE(is_bad(Seq{3, 2, 1}, QuasiOrder::natural_leq()));
  CHECK(is_bad(Seq{3, 1, 2}, QuasiOrder::natural_leq()) == std::pair<std::size_t, std::size_t>{1, 2});
}

TEST_CASE("min_bad_sequence examples") {
  auto by_value = [](Nat x, Nat y) { return x < y; };
  CHECK(min_bad_sequence(QuasiOrder::natural_eq(), by_value, 3, 3) == Seq{0, 1, 2});
  CHECK_FALSE(min_bad_sequence(QuasiOrder::natural_leq(), by_value, 3, 4));
  CHECK(min_bad_sequence(QuasiOrder::divisibility(), by_value, 5, 1) == Seq{0});
  CHECK(min_bad_sequence(QuasiOrder::natural_leq(), by_value, 3, 3) == Seq{2, 1, 0});
}

TEST_CASE("min_bad_sequence is bad and minimal") {
  const auto by_value = [](Nat x, Nat y) { return x < y; };
  const auto by_value_desc = [](Nat x, Nat y) { return x > y; };
  for (const auto& q : {QuasiOrder::natural_leq(), QuasiOrder::natural_eq(), QuasiOrder::divisibility()}) {
    for (const std::function<bool(Nat, Nat)>& size : {std::function<bool(Nat, Nat)>(by_value),
                                                       std::function<bool(Nat, Nat)>(by_value_desc)}) {
      for (Nat bound = 1; bound <= 4; ++bound) {
        for (std::size_t len = 1; len <= 4; ++len) {
          const auto got = min_bad_sequence(q, size, bound, len);
          bool any = false;
          for (const auto& w : oracle::all_words(bound, len)) {
            if (w.size() != len || is_bad(w, q)) continue;
            any = true;
            if (got) CHECK_FALSE(seq_less(std::span<const Nat>(w), std::span<const Nat>(*got), size));
          }
          CHECK(any == got.has_value());
          if (got) CHECK_FALSE(is_bad(*got, q));
        }
      }
    }
  }
}

TEST_CASE("nash_williams_step") {
  const auto anti = QuasiOrder::antichain(2);
  const std::vector<Seq> lam{{b, a}, {a}};
  const std::vector<std::size_t> both{0, 1};
  CHECK(nash_williams_step(lam, both, anti) == std::vector<Seq>{{b}, {}});

  const std::vector<Seq> two{{a}, {b}};
  const std::vector<std::size_t> first{0};
  CHECK(nash_williams_step(two, first, anti) == std::vector<Seq>{{}});

  const std::vector<Seq> single{{a, b, a}};
  CHECK(nash_williams_step(single, first, anti) == std::vector<Seq>{{a, b}});

  const std::vector<Seq> kept{{b, b}, {a, a}, {b, a}};
  const std::vector<std::size_t> tail{1, 2};
  CHECK(nash_williams_step(kept, tail, anti) == std::vector<Seq>{{b, b}, {a}, {b}});

  CHECK(raises(ErrorCode::PreconditionViolation, [&] { (void)nash_williams_step(two, both, anti); }));
  const std::vector<Seq> good{{a}, {a, b}};
  CHECK(raises(ErrorCode::PreconditionViolation, [&] { (void)nash_williams_step(good, first, anti); }));
  CHECK(raises(ErrorCode::PreconditionViolation, [&] { (void)nash_williams_step(two, {}, anti); }));
}

TEST_CASE("root decomposition") {
  const auto leaf = KTree::leaf(3);
  const auto d0 = decompose_ktree(leaf);
  CHECK(d0.root_label == 3);
  CHECK(d0.subtrees.empty());

  const auto cherry = KTree::from_parents({-1, 0, 0}, {0, 1, 2});
  const auto d1 = decompose_ktree(cherry);
  CHECK(d1.root_label == 0);
  REQUIRE(d1.subtrees.size() == 2);
  CHECK(d1.subtrees[0] == KTree::leaf(1));
  CHECK(d1.subtrees[1] == KTree::leaf(2));

  for (const auto& t : oracle::all_trees(5, 2)) {
    const auto d = decompose_ktree(t);
    CHECK(canonical_form(compose_ktree(d.root_label, d.subtrees)) == canonical_form(t));
  }
}

TEST_CASE("ramsey_pairs_homogeneous") {
  const auto constant = ramsey_pairs_homogeneous(6, [](Nat, Nat) { return 1; }, 4);
  REQUIRE(constant);
  CHECK(constant->subset == std::vector<Nat>{0, 1, 2, 3});
  CHECK(constant->color == 1);

  const auto parity = ramsey_pairs_homogeneous(5, [](Nat i, Nat j) { return static_cast<int>((j - i) % 2); }, 3);
  REQUIRE(parity);
  CHECK(parity->subset == std::vector<Nat>{0, 2, 4});
  CHECK(parity->color == 0);

  CHECK_FALSE(ramsey_pairs_homogeneous(5, [](Nat, Nat) { return 0; }, 6));
  // R(3,3) = 6: the pentagon colouring has no monochromatic triangle.
  auto pentagon = [](Nat i, Nat j) { return (j - i == 1 || j - i == 4) ? 1 : 0; };
  CHECK_FALSE(ramsey_pairs_homogeneous(5, pentagon, 3));
}
