#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ordwork/error.hpp"
#include "ordwork/oracles.hpp"
#include "ordwork/regular_tree.hpp"

using namespace ordwork;

namespace {

TreeAutomaton full_binary() {
  TreeAutomaton a(2, 1, 0);
  a.add_transition(0, 0, 0);
  a.add_transition(0, 1, 0);
  return a;
}

Poset natural(std::size_t k) {
  std::vector<Pair> lt;
  for (Nat i = 0; i < k; ++i)
    for (Nat j = i + 1; j < k; ++j) lt.emplace_back(i, j);
  std::vector<Nat> el(k);
  for (Nat i = 0; i < k; ++i) el[i] = i;
  return validate_poset(lt, el);
}

bool raises(ErrorCode code, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

}  // namespace

TEST_CASE("node_in_tree") {
  TreeAutomaton a(2, 1, 0);
  a.add_transition(0, 1, 0);
  CHECK(node_in_tree(a, Seq{}));
  CHECK(node_in_tree(a, Seq{1, 1}));
  CHECK_FALSE(node_in_tree(a, Seq{0}));
  CHECK(raises(ErrorCode::BadLetter, [&] { (void)node_in_tree(a, Seq{2}); }));
  CHECK_FALSE(node_in_tree(TreeAutomaton(2, 1, std::nullopt), Seq{}));
}

TEST_CASE("live_states") {
  TreeAutomaton a(1, 4, 0);
  a.add_transition(0, 0, 1);
  a.add_transition(1, 0, 2);
  a.add_transition(2, 0, 2);
  const auto live = live_states(a);
  CHECK(live == std::vector<bool>{true, true, true, false});
}

TEST_CASE("live_states is the greatest closed set") {
  for (std::uint64_t c = 0; c < oracle::automaton_class_size(3, 2); c += 7) {
    const auto a = oracle::automaton_from_code(3, 2, c);
    const auto live = live_states(a);
    for (State s = 0; s < 3; ++s) {
      bool successor_live = false;
      for (Nat x = 0; x < 2; ++x) {
        const auto t = a.next(s, x);
        successor_live = successor_live || (t && live[*t]);
      }
      // Live states have a live successor; dead ones cannot be added back.
      CHECK(successor_live == live[s]);
      TreeAutomaton from_s(2, 3, s);
      for (const auto& [u, x, v] : a.transitions()) from_s.add_transition(u, x, v);
      CHECK(oracle::has_run_of_length(from_s, 3) == live[s]);
    }
  }
}

TEST_CASE("leftmost_path examples") {
  CHECK(leftmost_path(full_binary()) == LassoPath{{}, {0}});

  TreeAutomaton dead0(2, 2, 0);
  dead0.add_transition(0, 0, 1);
  dead0.add_transition(0, 1, 0);
  CHECK(leftmost_path(dead0) == LassoPath{{}, {1}});

  TreeAutomaton alt(2, 2, 0);
  alt.add_transition(0, 0, 1);
  alt.add_transition(1, 1, 0);
  CHECK(leftmost_path(alt) == LassoPath{{}, {0, 1}});

  CHECK(raises(ErrorCode::WellFounded, [] { (void)leftmost_path(TreeAutomaton(1, 1, 0)); }));
}

TEST_CASE("minimal_path examples") {
  const auto bin = full_binary();
  CHECK(minimal_path(bin, natural(2)) == leftmost_path(bin));
  const auto any = minimal_path(bin, Poset::antichain({0, 1}));
  CHECK(lasso_is_path(bin, any));
  const std::vector<Pair> rev{{1, 0}};
  CHECK(minimal_path(bin, validate_poset(rev, {0, 1})) == LassoPath{{}, {1}});
  CHECK(raises(ErrorCode::WellFounded, [] { (void)minimal_path(TreeAutomaton(1, 1, 0), natural(1)); }));
}

TEST_CASE("minimal_path under a total order is the leftmost path after relabelling") {
  // Order 2 < 0 < 1: letter x has rank rank[x].
  const std::vector<Nat> rank{1, 2, 0};
  const std::vector<Pair> lt{{2, 0}, {0, 1}, {2, 1}};
  const Poset order = validate_poset(lt, {0, 1, 2});
  for (std::uint64_t c = 0; c < oracle::automaton_class_size(3, 3); c += 1009) {
    const auto a = oracle::automaton_from_code(3, 3, c);
    if (!live_states(a)[0]) continue;
    TreeAutomaton ranked(3, 3, 0);
    for (const auto& [s, x, t] : a.transitions()) ranked.add_transition(s, rank[x], t);
    LassoPath back = leftmost_path(ranked);
    for (auto* part : {&back.prefix, &back.cycle})
      for (auto& x : *part) x = static_cast<Nat>(std::find(rank.begin(), rank.end(), x) - rank.begin());
    CHECK(minimal_path(a, order) == canonical(back));
  }
}

TEST_CASE("path_left_of") {
  const Poset lt = natural(2);
  const LassoPath zeros{{}, {0}}, ones{{}, {1}}, alt{{}, {0, 1}};
  CHECK_FALSE(path_left_of(zeros, zeros, lt));
  CHECK(path_left_of(zeros, ones, lt));
  CHECK_FALSE(path_left_of(alt, zeros, lt));
  CHECK(path_left_of(zeros, alt, lt));
  // Same sequence written two ways.
  CHECK_FALSE(path_left_of(LassoPath{{0}, {1, 0}}, alt, lt));
}

TEST_CASE("path_left_of is a strict order on small lassos") {
  const auto lassos = oracle::all_lassos(2, 4);
  for (const auto& order : {natural(2), Poset::antichain({0, 1})}) {
    for (const auto& a : lassos) {
      REQUIRE_FALSE(path_left_of(a, a, order));
      for (const auto& b : lassos) {
        CHECK(path_left_of(a, b, order) == oracle::lasso_below(a, b, order));
        if (!path_left_of(a, b, order)) continue;
        for (const auto& c : lassos)
          if (path_left_of(b, c, order)) REQUIRE(path_left_of(a, c, order));
      }
    }
  }
}

TEST_CASE("challenger_check") {
  const auto bin = full_binary();
  const auto lp = leftmost_path(bin);
  const Poset lt = natural(2);
  CHECK(challenger_check(bin, lp, {}, lt).relatively_minimal);
  const std::vector<LassoPath> self{lp};
  const auto r = challenger_check(bin, lp, self, lt);
  CHECK(r.relatively_minimal);
  CHECK_FALSE(r.results[0].left_of);

  const auto all = oracle::all_lassos(2, 4);
  CHECK(challenger_check(bin, lp, all, lt).relatively_minimal);
  const auto against_ones = challenger_check(bin, LassoPath{{}, {1}}, all, lt);
  CHECK_FALSE(against_ones.relatively_minimal);

  TreeAutomaton only1(2, 1, 0);
  only1.add_transition(0, 1, 0);
  CHECK(raises(ErrorCode::InvalidWitness, [&] { (void)challenger_check(only1, LassoPath{{}, {0}}, all, lt); }));
  // Challengers the tree does not contain are reported, not counted.
  const auto r2 = challenger_check(only1, LassoPath{{}, {1}}, all, lt);
  CHECK(r2.relatively_minimal);
}

TEST_CASE("lasso canonical form") {
  CHECK(canonical(LassoPath{{0, 1}, {0, 1}}) == LassoPath{{}, {0, 1}});
  CHECK(canonical(LassoPath{{}, {1, 1}}) == LassoPath{{}, {1}});
  CHECK(canonical(LassoPath{{2}, {0, 2}}) == LassoPath{{}, {2, 0}});
}
