#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "ordwork/error.hpp"
#include "ordwork/menger.hpp"
#include "ordwork/oracles.hpp"

using namespace ordwork;

namespace {

bool raises(ErrorCode code, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

// a=0, b=1
MengerGraph edge() { return MengerGraph(2, {{0, 1}}, {0}, {1}); }

// a=0, x=1, b=2, y=3 on the cycle a-x-b-y-a
MengerGraph square() { return MengerGraph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}, {0}, {2}); }

// a=0, x=1, b=2
MengerGraph line3() { return MengerGraph(3, {{0, 1}, {1, 2}}, {0}, {2}); }

}  // namespace

TEST_CASE("graph construction") {
  const MengerGraph g(3, {{1, 0}, {0, 1}, {2, 2}}, {0}, {2});
  CHECK(g.edges() == std::vector<std::pair<Vertex, Vertex>>{{0, 1}});
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(1, 2));
  CHECK(raises(ErrorCode::InvalidInput, [] { MengerGraph(2, {{0, 2}}, {0}, {1}); }));
  CHECK(raises(ErrorCode::InvalidInput, [] { MengerGraph(2, {}, {3}, {1}); }));
}

TEST_CASE("enumerate_ab_paths") {
  CHECK(enumerate_ab_paths(edge(), 10).paths == std::vector<Path>{{0, 1}});
  CHECK(enumerate_ab_paths(MengerGraph(2, {}, {0}, {1}), 10).paths.empty());
  CHECK(enumerate_ab_paths(square(), 10).paths == std::vector<Path>{{0, 1, 2}, {0, 3, 2}});
  const auto capped = enumerate_ab_paths(square(), 1);
  CHECK(capped.truncated);
  CHECK(capped.paths.size() == 1);
  // A shared terminal is a path of length one.
  CHECK(enumerate_ab_paths(MengerGraph(2, {{0, 1}}, {0}, {0, 1}), 10).paths == std::vector<Path>{{0}, {0, 1}});
}

TEST_CASE("is_separator") {
  const auto sq = square();
  CHECK(is_separator(sq, sq.a()));
  CHECK(is_separator(sq, std::vector<Vertex>{1, 3}));
  CHECK_FALSE(is_separator(sq, std::vector<Vertex>{1}));
  CHECK_FALSE(is_separator(sq, std::vector<Vertex>{}));
  CHECK(is_separator(MengerGraph(2, {}, {0}, {1}), std::vector<Vertex>{}));
}

TEST_CASE("warps and terminals") {
  const auto g = line3();
  CHECK(terminals(trivial_warp(g)) == std::vector<Vertex>{0});
  CHECK(terminals(make_warp(g, {{0, 1}})) == std::vector<Vertex>{1});
  const MengerGraph two(4, {{0, 2}, {1, 3}}, {0, 1}, {2, 3});
  CHECK(terminals(make_warp(two, {{1, 3}, {0, 2}})) == std::vector<Vertex>{2, 3});
  CHECK(make_warp(two, {{1, 3}, {0, 2}}).paths == std::vector<Path>{{0, 2}, {1, 3}});
  CHECK(raises(ErrorCode::InvalidWarp, [&] { (void)make_warp(g, {{0, 2}}); }));
  CHECK(raises(ErrorCode::InvalidWarp, [&] { (void)make_warp(g, {{1, 2}}); }));
  CHECK(raises(ErrorCode::InvalidWarp, [&] { (void)make_warp(two, {{0, 2}}); }));
}

TEST_CASE("is_wave") {
  const auto sq = square();
  CHECK(is_wave(sq, trivial_warp(sq)));
  // Stops at x while a-y-b bypasses it.
  CHECK_FALSE(is_wave(sq, make_warp(sq, {{0, 1}})));
  CHECK(is_wave(sq, make_warp(sq, {{0, 1, 2}})));
  const MengerGraph k22(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}, {0, 1}, {2, 3});
  const auto sys = menger_solve(k22);
  Warp cut;
  for (const auto& p : sys.m) {
    const auto at = std::find_if(p.begin(), p.end(), [&](Vertex v) { return std::count(sys.c.begin(), sys.c.end(), v) > 0; });
    cut.paths.emplace_back(p.begin(), at + 1);
  }
  CHECK(is_wave(k22, make_warp(k22, cut.paths)));
}

TEST_CASE("wave_leq") {
  const auto sq = square();
  const auto left = make_warp(sq, {{0, 1}});
  const auto right = make_warp(sq, {{0, 3}});
  CHECK(wave_leq(left, left));
  CHECK(wave_leq(trivial_warp(sq), left));
  CHECK(wave_leq(left, make_warp(sq, {{0, 1, 2}})));
  CHECK_FALSE(wave_leq(left, right));
  CHECK_FALSE(wave_leq(right, left));
}

TEST_CASE("enumerate_waves and maximal_wave") {
  const MengerGraph lone(1, {}, {0}, {0});
  CHECK(enumerate_waves(lone, 100).waves == std::vector<Warp>{trivial_warp(lone)});
  CHECK(maximal_wave(lone) == trivial_warp(lone));

  const auto e = enumerate_waves(edge(), 100).waves;
  CHECK(e == std::vector<Warp>{trivial_warp(edge()), make_warp(edge(), {{0, 1}})});
  CHECK(maximal_wave(edge()) == make_warp(edge(), {{0, 1}}));

  const MengerGraph no_a(2, {{0, 1}}, {}, {1});
  CHECK(enumerate_waves(no_a, 100).waves == std::vector<Warp>{Warp{}});

  // Without an A-B path every warp is a wave.
  const MengerGraph isolated(2, {}, {0}, {1});
  CHECK(enumerate_waves(isolated, 100).waves == std::vector<Warp>{trivial_warp(isolated)});
  const MengerGraph apart(3, {{0, 1}}, {0}, {2});
  CHECK(enumerate_waves(apart, 100).waves == std::vector<Warp>{trivial_warp(apart), make_warp(apart, {{0, 1}})});
  CHECK(maximal_wave(apart) == make_warp(apart, {{0, 1}}));

  const auto sq = square();
  CHECK(enumerate_waves(sq, 100).waves ==
        std::vector<Warp>{trivial_warp(sq), make_warp(sq, {{0, 1, 2}}), make_warp(sq, {{0, 3, 2}})});
  CHECK(maximal_wave(sq) == make_warp(sq, {{0, 3, 2}}));

  // a1=0, a2=1 reach b=4 through the branch points 2 and 3.
  const MengerGraph routes(5, {{0, 2}, {1, 3}, {2, 4}, {3, 4}}, {0, 1}, {4});
  const auto top = maximal_wave(routes);
  const auto vs = warp_vertices(top);
  CHECK(std::count(vs.begin(), vs.end(), 2) == 1);
  CHECK(std::count(vs.begin(), vs.end(), 3) == 1);
  for (const auto& w : enumerate_waves(routes, 1000).waves) CHECK((w == top || !wave_leq(top, w)));

  CHECK(raises(ErrorCode::PreconditionViolation, [&] { (void)maximal_wave(sq, 1); }));
}

TEST_CASE("menger_solve") {
  const auto one = menger_solve(edge());
  CHECK(one.m == std::vector<Path>{{0, 1}});
  CHECK(one.c == std::vector<Vertex>{0});

  const auto none = menger_solve(MengerGraph(2, {}, {0}, {1}));
  CHECK(none.m.empty());
  CHECK(none.c.empty());

  const MengerGraph k22(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}, {0, 1}, {2, 3});
  const auto two = menger_solve(k22);
  CHECK(two.m.size() == 2);
  CHECK(two.c.size() == 2);
  CHECK(is_separator(k22, two.c));

  // The cut is taken nearest to A: x, not b.
  const auto mid = menger_solve(MengerGraph(4, {{0, 1}, {3, 1}, {1, 2}}, {0, 3}, {2}));
  CHECK(mid.c == std::vector<Vertex>{1});

  const MengerGraph shared(2, {{0, 1}}, {0}, {0, 1});
  CHECK(menger_solve(shared).c == std::vector<Vertex>{0});
}

TEST_CASE("menger_solve against brute force on random graphs") {
  oracle::Rng rng(3);
  for (int t = 0; t < 200; ++t) {
    const auto g = oracle::random_graph(rng, 7);
    const auto sys = menger_solve(g);
    REQUIRE(sys.m.size() == oracle::max_disjoint_paths_brute(g));
    REQUIRE(sys.c.size() == oracle::min_separator_brute(g));
    REQUIRE(oracle::separates(g, sys.c));
    std::vector<int> seen(g.size(), 0);
    for (const auto& p : sys.m) {
      CHECK(g.in_a(p.front()));
      CHECK(g.in_b(p.back()));
      std::size_t hits = 0;
      for (Vertex v : p) {
        CHECK(seen[v]++ == 0);
        hits += static_cast<std::size_t>(std::count(sys.c.begin(), sys.c.end(), v));
      }
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("label_less") {
  const WaveLabel zero{0, {}};
  const WaveLabel qa{1, {0}};
  const WaveLabel qb{1, {1, 2}};
  CHECK(label_less(qa, zero));
  CHECK_FALSE(label_less(zero, qa));
  CHECK_FALSE(label_less(qa, qb));
  CHECK_FALSE(label_less(qb, qa));
  const WaveLabel x{3, {5}}, xy{3, {5, 6}};
  CHECK_FALSE(label_less(x, xy));
  CHECK(label_less(xy, x));
  CHECK_FALSE(label_less(xy, WaveLabel{4, {5}}));
  CHECK(raises(ErrorCode::MalformedLabel, [&] { (void)label_less(WaveLabel{0, {1}}, zero); }));
  CHECK(raises(ErrorCode::MalformedLabel, [&] { (void)label_less(WaveLabel{1, {}}, zero); }));
  CHECK(raises(ErrorCode::MalformedLabel, [&] { (void)label_less(WaveLabel{2, {3, 1}}, zero); }));
}

TEST_CASE("label_less is a strict order with short descending chains") {
  // Every label over tags 0..3 and payload sets or paths inside {0,1,2}.
  std::vector<WaveLabel> labels{{0, {}}};
  for (const auto& w : oracle::all_words(3, 3)) {
    if (w.empty()) continue;
    std::set<Nat> distinct(w.begin(), w.end());
    if (distinct.size() == w.size()) labels.push_back({1, w});
  }
  for (Nat tag = 2; tag <= 3; ++tag)
    for (unsigned mask = 0; mask < 8; ++mask) {
      WaveLabel l{tag, {}};
      for (Nat v = 0; v < 3; ++v)
        if (mask >> v & 1U) l.payload.push_back(v);
      labels.push_back(l);
    }
  std::map<std::size_t, std::size_t> depth;  // longest chain descending from a label
  for (std::size_t i = 0; i < labels.size(); ++i) {
    REQUIRE_FALSE(label_less(labels[i], labels[i]));
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (!label_less(labels[i], labels[j])) continue;
      for (std::size_t k = 0; k < labels.size(); ++k)
        if (label_less(labels[j], labels[k])) REQUIRE(label_less(labels[i], labels[k]));
    }
  }
  auto chain = [&](auto&& self, std::size_t i) -> std::size_t {
    if (auto it = depth.find(i); it != depth.end()) return it->second;
    std::size_t best = 1;
    for (std::size_t j = 0; j < labels.size(); ++j)
      if (label_less(labels[j], labels[i])) best = std::max(best, 1 + self(self, j));
    return depth[i] = best;
  };
  for (std::size_t i = 0; i < labels.size(); ++i) CHECK(chain(chain, i) <= std::max<std::size_t>(2, 3 + 1));
}

TEST_CASE("encode_wave on a three-vertex line") {
  const auto g = line3();
  const auto e = default_enumeration(g);
  REQUIRE(e.paths == std::vector<Path>{{0, 1, 2}});
  CHECK(e.complete_length() == 6);
  const auto seq = encode_wave(g, e, trivial_warp(g));
  const std::vector<WaveLabel> expect{{1, {0}}, {2, {0}}, {0, {}}, {3, {}}, {0, {}}, {4, {}}};
  CHECK(seq == expect);
  CHECK(wave_seq_valid(g, e, seq));
  CHECK(decode_wave(g, e, seq) == trivial_warp(g));

  const auto full = make_warp(g, {{0, 1, 2}});
  const auto fs = encode_wave(g, e, full);
  const std::vector<WaveLabel> fexpect{{1, {0}}, {2, {0, 1, 2}}, {1, {0, 1}}, {3, {}}, {1, {0, 1, 2}}, {4, {}}};
  CHECK(fs == fexpect);
  CHECK(decode_wave(g, e, fs) == full);
  // The longer wave encodes below the shorter one.
  CHECK(wave_seq_less(fs, seq));

  CHECK(raises(ErrorCode::NotAWave, [&] { (void)encode_wave(square(), default_enumeration(square()), make_warp(square(), {{0, 1}})); }));
}

TEST_CASE("wave_seq_valid") {
  const auto g = line3();
  const auto e = default_enumeration(g);
  CHECK(wave_seq_valid(g, e, std::vector<WaveLabel>{}));
  // g_0 = a is in A, so position 0 cannot be (0,0).
  CHECK_FALSE(wave_seq_valid(g, e, std::vector<WaveLabel>{{0, {}}}));
  CHECK_FALSE(wave_seq_valid(g, e, std::vector<WaveLabel>{{1, {0}}, {2, {}}}));
  CHECK(raises(ErrorCode::MalformedLabel, [&] { (void)wave_seq_valid(g, e, std::vector<WaveLabel>{{1, {}}}); }));
  CHECK(raises(ErrorCode::InvalidSequence, [&] { (void)decode_wave(g, e, std::vector<WaveLabel>{{1, {0}}}); }));

  const MengerGraph empty_a(2, {{0, 1}}, {}, {1});
  const auto ea = default_enumeration(empty_a);
  const std::vector<WaveLabel> zeros{{0, {}}, {2, {}}, {0, {}}, {3, {}}};
  CHECK(wave_seq_valid(empty_a, ea, zeros));
  CHECK(decode_wave(empty_a, ea, zeros) == Warp{});
}

TEST_CASE("hand-built two-path sequence decodes to both paths") {
  // a1=0 - x=2 - b1=4 and a2=1 - y=3 - b2=5, no cross edges.
  const MengerGraph g(6, {{0, 2}, {2, 4}, {1, 3}, {3, 5}}, {0, 1}, {4, 5});
  const auto e = default_enumeration(g);
  REQUIRE(e.paths == std::vector<Path>{{0, 2, 4}, {1, 3, 5}});
  const std::vector<WaveLabel> seq{{1, {0}}, {2, {0, 2}}, {1, {1}}, {3, {1, 3}}, {1, {0, 2}}, {4, {}},
                                   {1, {1, 3}}, {5, {}}, {0, {}}, {6, {}}, {0, {}}, {7, {}}};
  REQUIRE(wave_seq_valid(g, e, seq));
  CHECK(decode_wave(g, e, seq) == make_warp(g, {{0, 2}, {1, 3}}));
  CHECK(encode_wave(g, e, make_warp(g, {{0, 2}, {1, 3}})) == seq);
}

TEST_CASE("encoding is injective and monotone on a small graph") {
  const auto sq = square();
  const auto e = default_enumeration(sq);
  const auto waves = enumerate_waves(sq, 100).waves;
  for (const auto& w : waves) {
    const auto code = encode_wave(sq, e, w);
    CHECK(oracle::wave_seq_valid_brute(sq, e, code));
    CHECK(decode_wave(sq, e, code) == w);
    for (const auto& y : waves) {
      if (!(y == w)) CHECK(encode_wave(sq, e, y) != code);
      if (wave_leq(w, y) && !(y == w)) CHECK(wave_seq_less(encode_wave(sq, e, y), code));
    }
  }
}
