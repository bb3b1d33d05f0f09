#include "ordwork/suites.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "ordwork/barrier.hpp"
#include "ordwork/error.hpp"
#include "ordwork/lexcode.hpp"
#include "ordwork/menger.hpp"
#include "ordwork/oracles.hpp"
#include "ordwork/regular_tree.hpp"
#include "ordwork/wqo.hpp"

namespace ordwork::suites {

using nlohmann::json;
using oracle::Rng;

namespace {

// Records one verdict per instance and keeps the first counterexample.
struct Tally {
  SuiteResult& r;
  void check(bool ok, const std::function<json()>& witness) {
    ++r.checked;
    if (ok) return;
    ++r.failures;
    r.pass = false;
    if (r.counterexample.is_null()) r.counterexample = witness();
  }
};

json poset_json(const Poset& p) { return {{"elements", p.elements()}, {"lt", p.pairs()}}; }

json automaton_json(const TreeAutomaton& aut) {
  json delta = json::array();
  for (const auto& [s, a, t] : aut.transitions()) delta.push_back({s, a, t});
  return {{"alphabet", aut.alphabet_size()}, {"states", aut.state_count()}, {"start", 0}, {"delta", delta}};
}

json lasso_json(const LassoPath& l) { return {{"prefix", l.prefix}, {"cycle", l.cycle}}; }

json graph_json(const MengerGraph& g) {
  return {{"vertices", g.size()}, {"edges", g.edges()}, {"A", g.a()}, {"B", g.b()}};
}

// Exhaustive posets on up to 4 elements, then random ones on up to 8.
std::vector<Poset> poset_corpus(std::uint64_t seed) {
  std::vector<Poset> out;
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& r : oracle::all_strict_orders(n)) out.push_back(oracle::to_poset(r, n));
  }
  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> size(1, 8);
  for (int i = 0; i < 500; ++i) out.push_back(oracle::random_poset(rng, size(rng)));
  return out;
}

SuiteResult claim1(std::uint64_t seed) {
  SuiteResult r;
  r.name = "claim1";
  Tally t{r};
  const auto corpus = poset_corpus(seed);
  auto check = [&](const Poset& p, const LexCode& code, const char* policy) {
    for (const auto& [x, y] : p.pairs()) {
      t.check(oracle::lex_below(code.base_code(x), code.base_code(y)), [&] {
        return json{{"policy", policy}, {"poset", poset_json(p)}, {"x", x}, {"y", y},
                    {"code_x", code.base_code(x)}, {"code_y", code.base_code(y)}};
      });
    }
  };
  // Strict is the literal rule and only applies when the minimal candidate
  // is unique; the id-based policies are counted but not held to the claim.
  std::size_t strict_defined = 0;
  std::size_t smallest_broken = 0;
  std::size_t largest_broken = 0;
  for (const auto& p : corpus) {
    check(p, encode_order(p, TieBreak::LeastCode), "least-code");
    try {
      check(p, encode_order(p, TieBreak::Strict), "strict");
      ++strict_defined;
    } catch (const Error&) {
    }
    for (auto [tie, count] : {std::pair{TieBreak::SmallestId, &smallest_broken}, {TieBreak::LargestId, &largest_broken}}) {
      const auto code = encode_order(p, tie);
      for (const auto& [x, y] : p.pairs())
        if (!oracle::lex_below(code.base_code(x), code.base_code(y))) ++*count;
    }
  }
  r.stats = {{"posets", corpus.size()}, {"strict_defined", strict_defined},
             {"smallest_id_violations", smallest_broken}, {"largest_id_violations", largest_broken}};
  return r;
}

SuiteResult roundtrip(std::uint64_t seed) {
  SuiteResult r;
  r.name = "roundtrip";
  Tally t{r};
  const auto corpus = poset_corpus(seed);
  Rng rng(seed ^ 0x5eedULL);
  std::uniform_int_distribution<std::size_t> len(0, 6);
  for (const auto& p : corpus) {
    const auto code = encode_order(p);
    for (int i = 0; i < 1000; ++i) {
      Seq sigma;
      if (p.size() > 0) {
        std::uniform_int_distribution<std::size_t> pick(0, p.size() - 1);
        for (std::size_t k = len(rng); k > 0; --k) sigma.push_back(p.elements()[pick(rng)]);
      }
      const Seq coded = encode_seq(code, sigma);
      t.check(decode_path(code, coded) == sigma, [&] {
        return json{{"poset", poset_json(p)}, {"sequence", sigma}, {"coded", coded}};
      });
    }
  }
  r.stats = {{"posets", corpus.size()}, {"sequences_per_poset", 1000}};
  return r;
}

// Up to 2000 automata with a live start, spread evenly over the classes
// (states <= 5, alphabet <= 3) of the base-(states+1) code enumeration.
std::vector<TreeAutomaton> automaton_corpus() {
  constexpr std::size_t kTotal = 2000;
  constexpr std::uint64_t kScan = 20000;
  // Classes in increasing size so quota left over by small classes passes on.
  std::vector<std::pair<std::size_t, std::size_t>> classes;
  for (std::size_t states = 1; states <= 5; ++states)
    for (std::size_t k = 1; k <= 3; ++k) classes.emplace_back(states, k);
  std::stable_sort(classes.begin(), classes.end(), [](const auto& x, const auto& y) {
    return oracle::automaton_class_size(x.first, x.second) < oracle::automaton_class_size(y.first, y.second);
  });
  std::vector<TreeAutomaton> out;
  for (std::size_t c = 0; c < classes.size(); ++c) {
    const auto [states, k] = classes[c];
    const std::uint64_t size = oracle::automaton_class_size(states, k);
    const std::uint64_t scan = std::min(size, kScan);
    std::vector<TreeAutomaton> live;
    for (std::uint64_t i = 0; i < scan; ++i) {
      const auto code = static_cast<std::uint64_t>(static_cast<long double>(i) * size / scan);
      auto aut = oracle::automaton_from_code(states, k, code);
      if (oracle::has_run_of_length(aut, states)) live.push_back(std::move(aut));
    }
    const std::size_t quota = (kTotal - out.size()) / (classes.size() - c);
    if (live.size() <= quota) {
      out.insert(out.end(), live.begin(), live.end());
    } else {
      for (std::size_t i = 0; i < quota; ++i) out.push_back(live[i * live.size() / quota]);
    }
  }
  return out;
}

SuiteResult lpp_mpp(std::uint64_t) {
  SuiteResult r;
  r.name = "lpp-mpp";
  Tally t{r};
  const auto corpus = automaton_corpus();
  std::vector<std::vector<Poset>> orders(4);
  std::vector<std::vector<LassoPath>> lassos(4);
  for (std::size_t k = 1; k <= 3; ++k) {
    for (const auto& rel : oracle::all_strict_orders(k)) orders[k].push_back(oracle::to_poset(rel, k));
    lassos[k] = oracle::all_lassos(k, 6);
  }
  std::size_t runs = 0;
  for (const auto& aut : corpus) {
    const std::size_t k = aut.alphabet_size();
    std::vector<const LassoPath*> paths;
    for (const auto& l : lassos[k])
      if (oracle::lasso_runs(aut, l)) paths.push_back(&l);
    for (const auto& order : orders[k]) {
      ++runs;
      const LassoPath mp = minimal_path(aut, order);
      const LassoPath* beaten_by = nullptr;
      for (const auto* l : paths) {
        if (oracle::lasso_below(*l, mp, order)) {
          beaten_by = l;
          break;
        }
      }
      t.check(oracle::lasso_runs(aut, mp) && !beaten_by, [&] {
        json w = {{"automaton", automaton_json(aut)}, {"order", poset_json(order)}, {"minimal", lasso_json(mp)}};
        if (beaten_by) w["challenger"] = lasso_json(*beaten_by);
        return w;
      });
    }
  }
  r.stats = {{"automata", corpus.size()}, {"automaton_order_pairs", runs}, {"lasso_size", 6}};
  return r;
}

SuiteResult leftmost(std::uint64_t) {
  SuiteResult r;
  r.name = "leftmost";
  Tally t{r};
  const auto corpus = automaton_corpus();
  for (const auto& aut : corpus) {
    const Seq got = leftmost_path(aut).take(20);
    const auto want = oracle::least_extendable(aut, 20, aut.state_count());
    t.check(want && got == *want, [&] {
      return json{{"automaton", automaton_json(aut)}, {"leftmost", got}, {"brute_force", want ? json(*want) : json()}};
    });
  }
  r.stats = {{"automata", corpus.size()}, {"prefix_length", 20}};
  return r;
}

SuiteResult higman(std::uint64_t) {
  SuiteResult r;
  r.name = "higman";
  Tally t{r};
  std::size_t orders = 0;
  for (std::size_t n = 1; n <= 3; ++n) {
    const auto words = oracle::all_words(n, 6);
    for (const auto& rel : oracle::all_quasi_orders(n)) {
      ++orders;
      auto leq = [&](Nat a, Nat b) { return rel[a * n + b] != 0; };
      for (const auto& s : words) {
        for (const auto& w : words) {
          const bool got = higman_leq(std::span<const Nat>(s), std::span<const Nat>(w), leq);
          if (got == oracle::higman_brute(s, w, leq)) {
            ++r.checked;
            continue;
          }
          t.check(false, [&] { return json{{"n", n}, {"leq", rel}, {"sigma", s}, {"tau", w}, {"got", got}}; });
        }
      }
    }
  }
  r.stats = {{"quasi_orders", orders}, {"max_length", 6}};
  return r;
}

SuiteResult kruskal(std::uint64_t) {
  SuiteResult r;
  r.name = "kruskal";
  Tally t{r};
  const auto trees = oracle::all_trees(5, 2);
  const std::vector<std::pair<std::string, QuasiOrder>> orders = {
      {"chain", QuasiOrder::closure_of({0, 1}, std::vector<Pair>{{0, 1}})},
      {"antichain", QuasiOrder::antichain(2)}};
  for (const auto& [name, q] : orders) {
    auto leq = [&](Nat a, Nat b) { return q.leq(a, b); };
    for (const auto& s : trees) {
      for (const auto& u : trees) {
        const bool got = ktree_leq(s, u, q);
        if (got == oracle::kruskal_brute(s, u, leq)) {
          ++r.checked;
          continue;
        }
        t.check(false, [&] {
          return json{{"order", name}, {"lhs", {{"parent", s.parents()}, {"labels", s.labels()}}},
                      {"rhs", {{"parent", u.parents()}, {"labels", u.labels()}}}, {"got", got}};
        });
      }
    }
  }
  r.stats = {{"trees", trees.size()}, {"orders", 2}};
  return r;
}

// First differing entry is strictly shorter.
template <class T, class Len>
bool length_below(const std::vector<T>& out, const std::vector<T>& in, Len&& len) {
  for (std::size_t i = 0; i < std::min(out.size(), in.size()); ++i) {
    if (!(out[i] == in[i])) return len(out[i]) < len(in[i]);
  }
  return false;
}

SuiteResult nw_step(std::uint64_t seed) {
  SuiteResult r;
  r.name = "nw-step";
  Tally t{r};
  Rng rng(seed);
  std::vector<std::vector<oracle::Relation>> qos(4);
  for (std::size_t n = 1; n <= 3; ++n) qos[n] = oracle::all_quasi_orders(n);
  std::size_t generated = 0;
  while (generated < 200) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 3)(rng);
    const auto& rel = qos[n][std::uniform_int_distribution<std::size_t>(0, qos[n].size() - 1)(rng)];
    auto leq = [&](Nat a, Nat b) { return rel[a * n + b] != 0; };
    std::vector<Pair> pairs;
    for (Nat a = 0; a < n; ++a)
      for (Nat b = 0; b < n; ++b)
        if (leq(a, b)) pairs.emplace_back(a, b);
    std::vector<Nat> universe(n);
    for (Nat a = 0; a < n; ++a) universe[a] = a;
    const auto q = QuasiOrder::closure_of(universe, pairs);

    const std::size_t target = std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    std::vector<Seq> lambda;
    for (int tries = 0; tries < 200 && lambda.size() < target; ++tries) {
      Seq s(std::uniform_int_distribution<std::size_t>(1, 4)(rng));
      for (auto& x : s) x = std::uniform_int_distribution<Nat>(0, static_cast<Nat>(n - 1))(rng);
      if (std::none_of(lambda.begin(), lambda.end(), [&](const Seq& p) { return oracle::higman_brute(p, s, leq); })) {
        lambda.push_back(std::move(s));
      }
    }
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
      if (std::bernoulli_distribution(0.6)(rng) &&
          std::all_of(subset.begin(), subset.end(), [&](std::size_t j) { return leq(lambda[j].back(), lambda[i].back()); })) {
        subset.push_back(i);
      }
    }
    if (subset.empty()) continue;
    ++generated;
    const auto out = nash_williams_step(lambda, subset, q);
    bool bad = true;
    for (std::size_t i = 0; i < out.size(); ++i)
      for (std::size_t j = i + 1; j < out.size(); ++j)
        if (oracle::higman_brute(out[i], out[j], leq)) bad = false;
    const bool below = length_below(out, lambda, [](const Seq& s) { return s.size(); });
    t.check(bad && below, [&] {
      return json{{"n", n}, {"leq", pairs}, {"input", lambda}, {"subset", subset}, {"output", out},
                  {"bad", bad}, {"below", below}};
    });
  }
  return r;
}

// Oracle for the three bad-partial-array conditions.
bool bad_array_brute(const PartialArray<Seq>& a, const BarrierFragment& frag,
                     const std::function<bool(Nat, Nat)>& leq) {
  const auto& e = a.entries;
  const Nat limit = 2 * frag.window();
  for (std::size_t i = 0; i + 1 < e.size(); ++i)
    if (e[i].first.back() > e[i + 1].first.back()) return false;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = 0; j < e.size(); ++j)
      if (oracle::shift_brute(e[i].first, e[j].first, limit) && oracle::higman_brute(e[i].second, e[j].second, leq))
        return false;
  if (e.empty()) return true;
  std::set<Nat> base;
  for (const auto& [b, v] : e) base.insert(b.begin(), b.end());
  for (const auto& b : frag.blocks()) {
    if (b.back() >= e.back().first.back()) continue;
    if (!std::all_of(b.begin(), b.end(), [&](Nat x) { return base.count(x) > 0; })) continue;
    bool listed = false;
    for (std::size_t i = 0; i + 1 < e.size(); ++i) listed = listed || e[i].first == b;
    if (!listed) return false;
  }
  return true;
}

SuiteResult nwt_step(std::uint64_t seed) {
  SuiteResult r;
  r.name = "nwt-step";
  Tally t{r};
  Rng rng(seed);
  std::size_t generated = 0;
  std::size_t attempts = 0;
  while (generated < 100 && attempts < 100000) {
    ++attempts;
    const Nat window = std::uniform_int_distribution<Nat>(2, 6)(rng);
    const std::size_t k = std::bernoulli_distribution(0.5)(rng) ? 1 : 2;
    const auto frag = BarrierFragment::uniform(window, k);
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 3)(rng);
    auto leq = [](Nat a, Nat b) { return a == b; };

    // A complete listing of the fragment below some point: blocks inside X
    // ordered by maximum, cut off after a random count.
    std::vector<Nat> x;
    for (Nat v = 0; v < window; ++v)
      if (std::bernoulli_distribution(0.7)(rng)) x.push_back(v);
    std::vector<Block> inside;
    for (const auto& b : frag.blocks())
      if (std::all_of(b.begin(), b.end(), [&](Nat v) { return std::binary_search(x.begin(), x.end(), v); }))
        inside.push_back(b);
    if (inside.empty()) continue;
    std::stable_sort(inside.begin(), inside.end(), [](const Block& a, const Block& b) { return a.back() < b.back(); });
    inside.resize(std::uniform_int_distribution<std::size_t>(1, inside.size())(rng));

    PartialArray<Seq> array;
    bool ok = true;
    for (const auto& b : inside) {
      bool placed = false;
      for (int tries = 0; tries < 50 && !placed; ++tries) {
        Seq v(std::uniform_int_distribution<std::size_t>(1, 3)(rng));
        for (auto& y : v) y = std::uniform_int_distribution<Nat>(0, static_cast<Nat>(n - 1))(rng);
        placed = std::none_of(array.entries.begin(), array.entries.end(), [&](const auto& e) {
          return (oracle::shift_brute(e.first, b, 2 * window) && oracle::higman_brute(e.second, v, leq)) ||
                 (oracle::shift_brute(b, e.first, 2 * window) && oracle::higman_brute(v, e.second, leq));
        });
        if (placed) array.entries.emplace_back(b, std::move(v));
      }
      ok = ok && placed;
    }
    if (!ok || !bad_array_brute(array, frag, leq)) continue;

    std::vector<Nat> s;
    for (Nat v : x)
      if (std::bernoulli_distribution(0.6)(rng)) s.push_back(v);
    auto in_s = [&](const Block& b) {
      return std::all_of(b.begin(), b.end(), [&](Nat v) { return std::binary_search(s.begin(), s.end(), v); });
    };
    bool meets = false;
    bool perfect = true;
    for (const auto& [b, v] : array.entries) {
      meets = meets || in_s(b);
      for (const auto& [b2, v2] : array.entries)
        if (in_s(b) && in_s(b2) && oracle::shift_brute(b, b2, 2 * window) && !leq(v.back(), v2.back()))
          perfect = false;
    }
    if (!meets || !perfect) continue;

    ++generated;
    const auto q = QuasiOrder::antichain(n);
    const auto out = nwt_improvement_step(array, s, frag, q);
    const bool bad = bad_array_brute(out, frag, leq);
    const bool below = length_below(out.entries, array.entries, [](const auto& e) { return e.second.size(); });
    t.check(bad && below, [&] {
      json in = json::array(), res = json::array();
      for (const auto& [b, v] : array.entries) in.push_back({b, v});
      for (const auto& [b, v] : out.entries) res.push_back({b, v});
      return json{{"window", window}, {"uniform", k}, {"subset", s}, {"input", in}, {"output", res},
                  {"bad", bad}, {"below", below}};
    });
  }
  r.stats = {{"instances", generated}, {"attempts", attempts}};
  if (generated < 100) {
    r.pass = false;
    if (r.counterexample.is_null()) r.counterexample = {{"error", "generator produced too few instances"}};
  }
  return r;
}

SuiteResult bridge(std::uint64_t) {
  SuiteResult r;
  r.name = "bridge";
  Tally t{r};
  for (std::size_t n = 1; n <= 3; ++n) {
    for (const auto& rel : oracle::all_quasi_orders(n)) {
      std::vector<Pair> pairs;
      std::vector<Nat> universe;
      for (Nat a = 0; a < n; ++a) {
        universe.push_back(a);
        for (Nat b = 0; b < n; ++b)
          if (rel[a * n + b]) pairs.emplace_back(a, b);
      }
      const auto q = QuasiOrder::closure_of(universe, pairs);
      for (Nat window = 1; window <= 6; ++window) {
        const auto frag = BarrierFragment::uniform(window, 1);
        for (const auto& f : oracle::all_words(n, window)) {
          if (f.size() != window) continue;
          PartialArray<Nat> array;
          for (Nat i = 0; i < window; ++i) array.entries.push_back({{i}, f[i]});
          const auto cls = classify_array(array, frag, q);
          bool good = false;
          bool perfect = true;
          for (std::size_t i = 0; i < f.size(); ++i)
            for (std::size_t j = i + 1; j < f.size(); ++j) {
              if (rel[f[i] * n + f[j]]) good = true;
              else perfect = false;
            }
          const bool seq_good = is_bad(f, q).has_value();
          t.check(cls.good == good && cls.perfect == perfect && seq_good == good, [&] {
            return json{{"n", n}, {"leq", pairs}, {"values", f}, {"class", cls.label()}};
          });
        }
      }
    }
  }
  return r;
}

SuiteResult star(std::uint64_t) {
  SuiteResult r;
  r.name = "star";
  Tally t{r};
  for (Nat window = 1; window <= 8; ++window) {
    for (std::size_t k = 1; k <= 3; ++k) {
      const auto got = star_fragment(BarrierFragment::uniform(window, k));
      const auto want = BarrierFragment::uniform(window, k + 1);
      t.check(got == want, [&] {
        return json{{"window", window}, {"k", k}, {"star", got.blocks()}, {"expected", want.blocks()}};
      });
    }
  }
  const auto blocks = oracle::all_blocks(8);
  for (const auto& b : blocks) {
    for (const auto& b2 : blocks) {
      const bool got = block_tri(b, b2);
      if (got == oracle::shift_brute(b, b2, 16)) {
        ++r.checked;
        continue;
      }
      t.check(false, [&] { return json{{"b", b}, {"b2", b2}, {"got", got}}; });
    }
  }
  r.stats = {{"blocks", blocks.size()}};
  return r;
}

bool is_graph_path(const MengerGraph& g, const Path& p) {
  if (p.empty() || !g.in_a(p.front()) || !g.in_b(p.back())) return false;
  for (std::size_t i = 1; i < p.size(); ++i) {
    const auto& nb = g.neighbours(p[i - 1]);
    if (!std::binary_search(nb.begin(), nb.end(), p[i])) return false;
  }
  return std::set<Vertex>(p.begin(), p.end()).size() == p.size();
}

void check_menger(Tally& t, const MengerGraph& g) {
  const auto sys = menger_solve(g);
  const std::size_t sep = oracle::min_separator_brute(g);
  const std::size_t paths = oracle::max_disjoint_paths_brute(g);
  bool ok = sys.c.size() == sep && sep == paths && sys.m.size() == sys.c.size() && oracle::separates(g, sys.c);
  std::set<Vertex> used;
  for (const auto& p : sys.m) {
    ok = ok && is_graph_path(g, p);
    for (Vertex v : p) ok = ok && used.insert(v).second;
    ok = ok && std::count_if(p.begin(), p.end(), [&](Vertex v) {
                 return std::binary_search(sys.c.begin(), sys.c.end(), v);
               }) == 1;
  }
  t.check(ok, [&] {
    return json{{"graph", graph_json(g)}, {"M", sys.m}, {"C", sys.c}, {"min_separator", sep}, {"max_paths", paths}};
  });
}

std::vector<Vertex> subset_of(std::uint32_t mask, std::size_t n) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (mask >> v & 1) out.push_back(v);
  return out;
}

SuiteResult menger(std::uint64_t seed) {
  SuiteResult r;
  r.name = "menger";
  Tally t{r};
  std::size_t exhaustive = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto mask : oracle::graph_classes(n)) {
      const auto edges = oracle::edges_of_mask(n, mask);
      if (!oracle::connected(n, edges)) continue;
      for (std::uint32_t a = 1; a < (1u << n); ++a) {
        for (std::uint32_t b = 1; b < (1u << n); ++b) {
          ++exhaustive;
          check_menger(t, MengerGraph(n, edges, subset_of(a, n), subset_of(b, n)));
        }
      }
    }
  }
  Rng rng(seed);
  for (int i = 0; i < 500; ++i) check_menger(t, oracle::random_graph(rng, 8));
  r.stats = {{"exhaustive_instances", exhaustive}, {"random_instances", 500}};
  return r;
}

struct WaveInfo {
  std::uint32_t vmask = 0;
  std::uint32_t emask = 0;
  std::vector<WaveLabel> code;
};

bool labels_less(const std::vector<WaveLabel>& x, const std::vector<WaveLabel>& y) {
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), [](const WaveLabel& a, const WaveLabel& b) {
    return std::tie(a.tag, a.payload) < std::tie(b.tag, b.payload);
  });
}

SuiteResult waves(std::uint64_t seed) {
  SuiteResult r;
  r.name = "waves";
  Tally t{r};
  Rng rng(seed);
  std::size_t instances = 0;
  std::size_t wave_total = 0;
  std::size_t leq_pairs = 0;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto mask : oracle::graph_classes(n)) {
      const auto edges = oracle::edges_of_mask(n, mask);
      std::map<std::pair<Vertex, Vertex>, int> edge_bit;
      for (std::size_t i = 0; i < edges.size(); ++i) edge_bit[edges[i]] = static_cast<int>(i);
      for (std::uint32_t a = 0; a < (1u << n); ++a) {
        for (std::uint32_t b = 0; b < (1u << n); ++b) {
          ++instances;
          const MengerGraph g(n, edges, subset_of(a, n), subset_of(b, n));
          const auto e = default_enumeration(g);
          const auto list = enumerate_waves(g, 1000000);
          const auto& ws = list.waves;
          wave_total += ws.size();
          auto witness = [&](json extra) {
            extra["graph"] = graph_json(g);
            return extra;
          };

          std::vector<WaveInfo> info(ws.size());
          std::set<std::vector<WaveLabel>, decltype(&labels_less)> codes(&labels_less);
          for (std::size_t i = 0; i < ws.size(); ++i) {
            for (const auto& p : ws[i].paths) {
              for (std::size_t k = 0; k < p.size(); ++k) {
                info[i].vmask |= 1u << p[k];
                if (k > 0) info[i].emask |= 1u << edge_bit[{std::min(p[k - 1], p[k]), std::max(p[k - 1], p[k])}];
              }
            }
            info[i].code = encode_wave(g, e, ws[i]);
            codes.insert(info[i].code);
            const bool valid = wave_seq_valid(g, e, info[i].code) && oracle::wave_seq_valid_brute(g, e, info[i].code);
            const bool back = decode_wave(g, e, info[i].code) == ws[i];
            t.check(valid && back, [&] { return witness({{"wave", ws[i].paths}, {"valid", valid}, {"roundtrip", back}}); });

            // A random odd-position mutation must be judged alike by both checkers.
            if (e.paths.empty()) continue;
            auto mutated = info[i].code;
            const std::size_t j = std::uniform_int_distribution<std::size_t>(0, e.paths.size() - 1)(rng);
            std::vector<Vertex> pv(e.paths[j].begin(), e.paths[j].end());
            std::sort(pv.begin(), pv.end());
            std::vector<Vertex> sub;
            for (Vertex v : pv)
              if (std::bernoulli_distribution(0.5)(rng)) sub.push_back(v);
            mutated[2 * j + 1].payload = sub;
            const bool lhs = wave_seq_valid(g, e, mutated);
            const bool rhs = oracle::wave_seq_valid_brute(g, e, mutated);
            t.check(lhs == rhs, [&] { return witness({{"mutated_from", ws[i].paths}, {"path", j}, {"subset", sub}}); });
          }
          t.check(codes.size() == ws.size(), [&] { return witness({{"error", "encoding not injective"}}); });

          for (std::size_t i = 0; i < ws.size(); ++i) {
            for (std::size_t j = 0; j < ws.size(); ++j) {
              if ((info[i].vmask & ~info[j].vmask) || (info[i].emask & ~info[j].emask)) continue;
              ++leq_pairs;
              const bool ok = wave_leq(ws[i], ws[j]) &&
                              (info[i].code == info[j].code || wave_seq_less(info[j].code, info[i].code));
              t.check(ok, [&] { return witness({{"lower", ws[i].paths}, {"upper", ws[j].paths}}); });
            }
          }

          // Valid complete sequences are exactly the completions of even
          // configurations; each must decode to an enumerated wave.
          std::size_t completable = 0;
          for (const auto& config : oracle::valid_even_configurations(g, e)) {
            std::vector<WaveLabel> seq;
            const std::size_t total = e.complete_length() / 2;
            bool complete = true;
            for (std::size_t i = 0; i < total; ++i) {
              if (i < n && !config[i].empty()) seq.push_back({1, config[i]});
              else seq.push_back({0, {}});
              WaveLabel odd{static_cast<Nat>(i + 2), {}};
              if (i < e.paths.size()) {
                // Smallest vertex of p_i ending a maximal q.
                std::vector<Vertex> pv(e.paths[i].begin(), e.paths[i].end());
                std::sort(pv.begin(), pv.end());
                for (Vertex v : pv) {
                  const auto& qv = config[v];
                  if (qv.empty()) continue;
                  const bool extended = std::any_of(config.begin(), config.end(), [&](const Path& o) {
                    return o.size() > qv.size() && std::equal(qv.begin(), qv.end(), o.begin());
                  });
                  if (!extended) {
                    odd.payload = {v};
                    break;
                  }
                }
                complete = complete && !odd.payload.empty();
              }
              seq.push_back(std::move(odd));
            }
            if (!complete) continue;
            ++completable;
            const bool valid = wave_seq_valid(g, e, seq) && oracle::wave_seq_valid_brute(g, e, seq);
            bool known = false;
            if (valid) {
              const auto w = decode_wave(g, e, seq);
              known = oracle::separates(g, terminals(w)) && std::find(ws.begin(), ws.end(), w) != ws.end();
            }
            t.check(valid && known, [&] { return witness({{"configuration", config}}); });
          }
          t.check(completable == ws.size(), [&] {
            return witness({{"waves", ws.size()}, {"valid_configurations", completable}});
          });

          const auto top = maximal_wave(g);
          const std::size_t ti = static_cast<std::size_t>(std::find(ws.begin(), ws.end(), top) - ws.begin());
          bool maximal = ti < ws.size();
          for (std::size_t j = 0; maximal && j < ws.size(); ++j) {
            if (j != ti && !(info[ti].vmask & ~info[j].vmask) && !(info[ti].emask & ~info[j].emask)) maximal = false;
          }
          t.check(maximal, [&] { return witness({{"maximal_wave", top.paths}}); });
        }
      }
    }
  }
  r.stats = {{"instances", instances}, {"waves", wave_total}, {"ordered_pairs", leq_pairs}};
  return r;
}

using Runner = SuiteResult (*)(std::uint64_t);

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> r = {
      {"claim1", claim1}, {"roundtrip", roundtrip}, {"lpp-mpp", lpp_mpp}, {"leftmost", leftmost},
      {"higman", higman}, {"kruskal", kruskal},     {"nw-step", nw_step}, {"nwt-step", nwt_step},
      {"bridge", bridge}, {"star", star},           {"menger", menger},   {"waves", waves},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& names() {
  static const std::vector<std::string> out = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return out;
}

SuiteResult run(const std::string& name, std::uint64_t seed) {
  for (const auto& [n, fn] : registry()) {
    if (n == name) return fn(seed);
  }
  throw std::invalid_argument("unknown suite " + name);
}

}  // namespace ordwork::suites
