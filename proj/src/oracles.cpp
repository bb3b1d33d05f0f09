#include "ordwork/oracles.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace ordwork::oracle {

namespace {

bool transitive(const Relation& r, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (r[i * n + j] && r[j * n + k] && !r[i * n + k]) return false;
  return true;
}

std::vector<Relation> relations(std::size_t n, bool reflexive) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);
  std::vector<Relation> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    Relation r(n * n, 0);
    if (reflexive)
      for (std::size_t i = 0; i < n; ++i) r[i * n + i] = 1;
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1) r[slots[s].first * n + slots[s].second] = 1;
    // Without the diagonal, a cycle closes to some (i,i), which transitivity
    // would demand and the matrix lacks.
    if (transitive(r, n)) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

std::vector<Relation> all_strict_orders(std::size_t n) { return relations(n, false); }
std::vector<Relation> all_quasi_orders(std::size_t n) { return relations(n, true); }

Poset to_poset(const Relation& lt, std::size_t n) {
  std::vector<Pair> pairs;
  std::vector<Nat> elems(n);
  std::iota(elems.begin(), elems.end(), 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (lt[i * n + j]) pairs.emplace_back(static_cast<Nat>(i), static_cast<Nat>(j));
  return validate_poset(pairs, elems);
}

Poset random_poset(Rng& rng, std::size_t n) {
  std::vector<Nat> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double p = 0.1 + 0.5 * unit(rng);
  Relation r(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (unit(rng) < p) r[perm[i] * n + perm[j]] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (r[i * n + k] && r[k * n + j]) r[i * n + j] = 1;
  return to_poset(r, n);
}

bool lex_below(const Seq& a, const Seq& b) { return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end()); }

bool higman_brute(const Seq& s, const Seq& t, const std::function<bool(Nat, Nat)>& leq) {
  if (s.size() > t.size()) return false;
  std::vector<std::size_t> idx(s.size());
  auto search = [&](auto&& self, std::size_t k, std::size_t from) -> bool {
    if (k == s.size()) {
      for (std::size_t i = 0; i < s.size(); ++i)
        if (!leq(s[i], t[idx[i]])) return false;
      return true;
    }
    for (std::size_t j = from; j < t.size(); ++j) {
      idx[k] = j;
      if (self(self, k + 1, j + 1)) return true;
    }
    return false;
  };
  return search(search, 0, 0);
}

std::vector<Seq> all_words(std::size_t k, std::size_t max_len) {
  std::vector<Seq> out{{}};
  std::size_t begin = 0;
  for (std::size_t len = 1; len <= max_len; ++len) {
    const std::size_t end = out.size();
    for (std::size_t i = begin; i < end; ++i) {
      for (Nat a = 0; a < k; ++a) {
        Seq w = out[i];
        w.push_back(a);
        out.push_back(std::move(w));
      }
    }
    begin = end;
  }
  return out;
}

namespace {

std::string shape_key(const std::vector<long>& parent, const std::vector<Nat>& labels, std::size_t v) {
  std::vector<std::string> kids;
  for (std::size_t c = 0; c < parent.size(); ++c)
    if (parent[c] == static_cast<long>(v)) kids.push_back(shape_key(parent, labels, c));
  std::sort(kids.begin(), kids.end());
  std::string s = "[" + std::to_string(labels[v]);
  for (const auto& k : kids) s += k;
  return s + "]";
}

std::vector<std::size_t> ancestors(const KTree& t, std::size_t v) {
  std::vector<std::size_t> up{v};
  while (t.parents()[up.back()] >= 0) up.push_back(static_cast<std::size_t>(t.parents()[up.back()]));
  return up;
}

std::vector<std::size_t> meet_table(const KTree& t) {
  const std::size_t n = t.size();
  std::vector<std::size_t> m(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto ua = ancestors(t, a);
    for (std::size_t b = 0; b < n; ++b) {
      const auto ub = ancestors(t, b);
      // Deepest shared ancestor: first of a's ancestors that b also has.
      for (std::size_t x : ua) {
        if (std::find(ub.begin(), ub.end(), x) != ub.end()) {
          m[a * n + b] = x;
          break;
        }
      }
    }
  }
  return m;
}

}  // namespace

std::vector<KTree> all_trees(std::size_t max_nodes, Nat labels) {
  std::vector<KTree> out;
  std::set<std::string> seen;
  for (std::size_t n = 1; n <= max_nodes; ++n) {
    std::vector<long> parent(n, -1);
    auto shapes = [&](auto&& self, std::size_t i) -> void {
      if (i == n) {
        std::vector<Nat> lab(n, 0);
        auto label = [&](auto&& rec, std::size_t v) -> void {
          if (v == n) {
            if (seen.insert(shape_key(parent, lab, 0)).second) out.push_back(KTree::from_parents(parent, lab));
            return;
          }
          for (Nat l = 0; l < labels; ++l) {
            lab[v] = l;
            rec(rec, v + 1);
          }
        };
        label(label, 0);
        return;
      }
      for (std::size_t p = 0; p < i; ++p) {
        parent[i] = static_cast<long>(p);
        self(self, i + 1);
      }
    };
    shapes(shapes, 1);
  }
  return out;
}

bool kruskal_brute(const KTree& s, const KTree& t, const std::function<bool(Nat, Nat)>& leq) {
  const std::size_t ns = s.size();
  const std::size_t nt = t.size();
  if (ns > nt) return false;
  const auto ms = meet_table(s);
  const auto mt = meet_table(t);
  std::vector<std::size_t> img(ns);
  std::vector<char> used(nt, 0);
  auto search = [&](auto&& self, std::size_t v) -> bool {
    if (v == ns) {
      for (std::size_t a = 0; a < ns; ++a)
        for (std::size_t b = 0; b < ns; ++b)
          if (img[ms[a * ns + b]] != mt[img[a] * nt + img[b]]) return false;
      for (std::size_t a = 0; a < ns; ++a)
        if (!leq(s.label(a), t.label(img[a]))) return false;
      return true;
    }
    for (std::size_t w = 0; w < nt; ++w) {
      if (used[w]) continue;
      used[w] = 1;
      img[v] = w;
      const bool ok = self(self, v + 1);
      used[w] = 0;
      if (ok) return true;
    }
    return false;
  };
  return search(search, 0);
}

std::uint64_t automaton_class_size(std::size_t states, std::size_t alphabet) {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < states * alphabet; ++i) total *= states + 1;
  return total;
}

TreeAutomaton automaton_from_code(std::size_t states, std::size_t alphabet, std::uint64_t code) {
  TreeAutomaton aut(alphabet, states, 0);
  for (State s = 0; s < states; ++s) {
    for (Nat a = 0; a < alphabet; ++a) {
      const auto digit = code % (states + 1);
      code /= states + 1;
      if (digit != 0) aut.add_transition(s, a, static_cast<State>(digit - 1));
    }
  }
  return aut;
}

namespace {

// can[d][s]: some word of length d runs from s.
std::vector<std::vector<char>> run_table(const TreeAutomaton& aut, std::size_t depth) {
  const std::size_t n = aut.state_count();
  std::vector<std::vector<char>> can(depth + 1, std::vector<char>(n, 0));
  std::fill(can[0].begin(), can[0].end(), 1);
  for (std::size_t d = 1; d <= depth; ++d)
    for (State s = 0; s < n; ++s)
      for (Nat a = 0; a < aut.alphabet_size(); ++a) {
        auto t = aut.next(s, a);
        if (t && can[d - 1][*t]) can[d][s] = 1;
      }
  return can;
}

}  // namespace

bool has_run_of_length(const TreeAutomaton& aut, std::size_t len) {
  if (!aut.start()) return false;
  return run_table(aut, len)[len][*aut.start()] != 0;
}

std::optional<Seq> least_extendable(const TreeAutomaton& aut, std::size_t len, std::size_t extra) {
  if (!aut.start()) return std::nullopt;
  const auto can = run_table(aut, len + extra);
  Seq word;
  auto dfs = [&](auto&& self, State s) -> bool {
    if (word.size() == len) return can[extra][s] != 0;
    for (Nat a = 0; a < aut.alphabet_size(); ++a) {
      auto t = aut.next(s, a);
      if (!t) continue;
      word.push_back(a);
      if (self(self, *t)) return true;
      word.pop_back();
    }
    return false;
  };
  if (!dfs(dfs, *aut.start())) return std::nullopt;
  return word;
}

std::vector<LassoPath> all_lassos(std::size_t alphabet, std::size_t max_size) {
  const auto words = all_words(alphabet, max_size);
  std::vector<LassoPath> out;
  for (const auto& p : words)
    for (const auto& c : words)
      if (!c.empty() && p.size() + c.size() <= max_size) out.push_back({p, c});
  return out;
}

bool lasso_runs(const TreeAutomaton& aut, const LassoPath& l) {
  if (!aut.start() || l.cycle.empty()) return false;
  const std::size_t steps = l.prefix.size() + (aut.state_count() + 1) * l.cycle.size();
  State s = *aut.start();
  for (std::size_t i = 0; i < steps; ++i) {
    const Nat a = l.at(i);
    if (a >= aut.alphabet_size()) return false;
    auto t = aut.next(s, a);
    if (!t) return false;
    s = *t;
  }
  return true;
}

bool lasso_below(const LassoPath& a, const LassoPath& b, const Poset& order) {
  const std::size_t window = a.prefix.size() + b.prefix.size() + a.cycle.size() * b.cycle.size();
  for (std::size_t i = 0; i < window; ++i) {
    if (a.at(i) != b.at(i)) return order.less(a.at(i), b.at(i));
  }
  return false;
}

bool shift_brute(const Block& b, const Block& b2, Nat limit) {
  const std::size_t len = std::max(b.size(), b2.size() + 1);
  Block star = b;
  auto dfs = [&](auto&& self) -> bool {
    if (star.size() == len) {
      return std::equal(b2.begin(), b2.end(), star.begin() + 1);
    }
    const Nat from = star.empty() ? 0 : star.back() + 1;
    for (Nat x = from; x < limit; ++x) {
      star.push_back(x);
      const bool ok = self(self);
      star.pop_back();
      if (ok) return true;
    }
    return false;
  };
  return dfs(dfs);
}

std::vector<Block> all_blocks(Nat window) {
  std::vector<Block> out;
  for (std::uint32_t mask = 0; mask < (1u << window); ++mask) {
    Block b;
    for (Nat x = 0; x < window; ++x)
      if (mask >> x & 1) b.push_back(x);
    out.push_back(std::move(b));
  }
  return out;
}

namespace {

std::vector<std::pair<Vertex, Vertex>> vertex_pairs(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

}  // namespace

std::vector<std::uint32_t> graph_classes(std::size_t n) {
  const auto pairs = vertex_pairs(n);
  std::map<std::pair<Vertex, Vertex>, std::size_t> slot;
  for (std::size_t s = 0; s < pairs.size(); ++s) slot[pairs[s]] = s;
  std::vector<std::vector<std::size_t>> perm_slots;
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<std::size_t> m;
    for (const auto& [u, v] : pairs) m.push_back(slot[{std::min(perm[u], perm[v]), std::max(perm[u], perm[v])}]);
    perm_slots.push_back(std::move(m));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<std::uint32_t> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    bool least = true;
    for (const auto& m : perm_slots) {
      std::uint32_t image = 0;
      for (std::size_t s = 0; s < pairs.size(); ++s)
        if (mask >> s & 1) image |= 1u << m[s];
      if (image < mask) {
        least = false;
        break;
      }
    }
    if (least) out.push_back(mask);
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> edges_of_mask(std::size_t n, std::uint32_t mask) {
  const auto pairs = vertex_pairs(n);
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t s = 0; s < pairs.size(); ++s)
    if (mask >> s & 1) out.push_back(pairs[s]);
  return out;
}

bool connected(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  if (n == 0) return true;
  std::vector<std::size_t> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](std::size_t x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (const auto& [u, v] : edges) comp[find(u)] = find(v);
  for (std::size_t v = 1; v < n; ++v)
    if (find(v) != find(0)) return false;
  return true;
}

MengerGraph random_graph(Rng& rng, std::size_t max_vertices) {
  std::uniform_int_distribution<std::size_t> size(1, max_vertices);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t n = size(rng);
  const double p = 0.2 + 0.6 * unit(rng);
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : vertex_pairs(n))
    if (unit(rng) < p) edges.push_back(e);
  std::vector<Vertex> a, b;
  for (Vertex v = 0; v < n; ++v) {
    if (unit(rng) < 0.3) a.push_back(v);
    if (unit(rng) < 0.3) b.push_back(v);
  }
  return MengerGraph(n, std::move(edges), std::move(a), std::move(b));
}

bool separates(const MengerGraph& g, const std::vector<Vertex>& c) {
  const std::size_t n = g.size();
  std::vector<char> cut(n, 0), reach(n, 0);
  for (Vertex v : c) cut[v] = 1;
  for (Vertex a : g.a())
    if (!cut[a]) reach[a] = 1;
  // Relax edges until nothing changes.
  for (bool grew = true; grew;) {
    grew = false;
    for (const auto& [u, v] : g.edges()) {
      if (reach[u] && !reach[v] && !cut[v]) reach[v] = grew = true;
      if (reach[v] && !reach[u] && !cut[u]) reach[u] = grew = true;
    }
  }
  for (Vertex b : g.b())
    if (reach[b]) return false;
  return true;
}

std::size_t min_separator_brute(const MengerGraph& g) {
  const std::size_t n = g.size();
  std::size_t best = n;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const auto k = static_cast<std::size_t>(__builtin_popcount(mask));
    if (k >= best) continue;
    std::vector<Vertex> c;
    for (Vertex v = 0; v < n; ++v)
      if (mask >> v & 1) c.push_back(v);
    if (separates(g, c)) best = k;
  }
  return best;
}

std::size_t max_disjoint_paths_brute(const MengerGraph& g) {
  const std::size_t n = g.size();
  const auto& a = g.a();
  std::vector<std::vector<std::uint32_t>> options(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<char> on(n, 0);
    auto walk = [&](auto&& self, Vertex v, std::uint32_t mask) -> void {
      if (g.in_b(v)) {
        options[i].push_back(mask);
        return;
      }
      for (Vertex w : g.neighbours(v)) {
        if (on[w] || g.in_a(w)) continue;
        on[w] = 1;
        self(self, w, mask | 1u << w);
        on[w] = 0;
      }
    };
    on[a[i]] = 1;
    walk(walk, a[i], 1u << a[i]);
  }
  std::size_t best = 0;
  auto pick = [&](auto&& self, std::size_t i, std::uint32_t used, std::size_t count) -> void {
    best = std::max(best, count);
    if (i == a.size() || count + (a.size() - i) <= best) return;
    for (auto m : options[i])
      if (!(m & used)) self(self, i + 1, used | m, count + 1);
    self(self, i + 1, used, count);
  };
  pick(pick, 0, 0, 0);
  return best;
}

namespace {

bool is_a_path_to(const MengerGraph& g, const Path& q, Vertex end) {
  if (q.empty() || q.back() != end || !g.in_a(q.front())) return false;
  std::set<Vertex> seen;
  for (std::size_t j = 0; j < q.size(); ++j) {
    if (q[j] >= g.size() || !seen.insert(q[j]).second) return false;
    if (j > 0 && g.in_a(q[j])) return false;
    if (j > 0 && std::find(g.neighbours(q[j - 1]).begin(), g.neighbours(q[j - 1]).end(), q[j]) ==
                     g.neighbours(q[j - 1]).end())
      return false;
  }
  return true;
}

bool extends(const Path& longer, const Path& shorter) {
  return longer.size() >= shorter.size() && std::equal(shorter.begin(), shorter.end(), longer.begin());
}

bool compatible(const Path& x, const Path& y) {
  std::set<Vertex> sx(x.begin(), x.end());
  const bool meet = std::any_of(y.begin(), y.end(), [&](Vertex v) { return sx.count(v) > 0; });
  return !meet || extends(x, y) || extends(y, x);
}

}  // namespace

bool wave_seq_valid_brute(const MengerGraph& g, const WaveEnumeration& e, const std::vector<WaveLabel>& seq) {
  const std::size_t n = e.vertices.size();
  const std::size_t m = e.paths.size();
  const std::size_t full = 2 * std::max(n, m);
  if (seq.size() > full) return false;
  std::map<Vertex, std::size_t> where;
  for (std::size_t i = 0; i < n; ++i) where[e.vertices[i]] = i;

  std::map<std::size_t, Path> q;      // vertex position -> q_i
  std::map<std::size_t, Path> s_set;  // path index -> S_j
  std::set<std::size_t> zero;         // vertex positions holding (0,0)
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const std::size_t i = k / 2;
    const auto& l = seq[k];
    if (k % 2 == 0) {
      if (l.tag == 0 && l.payload.empty()) {
        if (i < n) zero.insert(i);
        continue;
      }
      if (l.tag != 1 || i >= n || !is_a_path_to(g, l.payload, e.vertices[i])) return false;
      q[i] = l.payload;
    } else {
      if (l.tag != i + 2) return false;
      if (i >= m) {
        if (!l.payload.empty()) return false;
        continue;
      }
      const std::set<Vertex> vp(e.paths[i].begin(), e.paths[i].end());
      if (l.payload.empty()) return false;
      for (Vertex v : l.payload)
        if (!vp.count(v)) return false;
      s_set[i] = l.payload;
    }
  }
  for (const auto& [i, qi] : q)
    for (const auto& [j, qj] : q)
      if (i < j && !compatible(qi, qj)) return false;
  for (const auto& [j, qj] : q)
    for (Vertex v : qj)
      if (zero.count(where[v])) return false;
  for (Vertex a : g.a())
    if (zero.count(where[a])) return false;
  for (const auto& [j, s] : s_set)
    for (Vertex v : s)
      if (zero.count(where[v])) return false;
  if (seq.size() < full) return true;
  for (const auto& [j, s] : s_set) {
    bool found = false;
    for (Vertex v : s) {
      auto it = q.find(where[v]);
      if (it == q.end()) continue;
      bool extended = false;
      for (const auto& [k, qk] : q)
        if (qk.size() > it->second.size() && extends(qk, it->second)) extended = true;
      if (!extended) found = true;
    }
    if (!found) return false;
  }
  return true;
}

std::vector<std::vector<Path>> valid_even_configurations(const MengerGraph& g, const WaveEnumeration& e) {
  const std::size_t n = e.vertices.size();
  std::vector<std::vector<Path>> to(n);
  // All simple paths from A that meet A only at their start, filed by end.
  std::map<Vertex, std::size_t> where;
  for (std::size_t i = 0; i < n; ++i) where[e.vertices[i]] = i;
  for (Vertex a : g.a()) {
    Path cur{a};
    auto walk = [&](auto&& self) -> void {
      to[where[cur.back()]].push_back(cur);
      for (Vertex w : g.neighbours(cur.back())) {
        if (g.in_a(w) || std::find(cur.begin(), cur.end(), w) != cur.end()) continue;
        cur.push_back(w);
        self(self);
        cur.pop_back();
      }
    };
    walk(walk);
  }
  std::vector<std::vector<Path>> out;
  std::vector<Path> chosen(n);
  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      for (std::size_t j = 0; j < n; ++j)
        for (Vertex v : chosen[j])
          if (chosen[where[v]].empty()) return;
      for (Vertex a : g.a())
        if (chosen[where[a]].empty()) return;
      out.push_back(chosen);
      return;
    }
    if (!g.in_a(e.vertices[i])) {
      chosen[i].clear();
      self(self, i + 1);
    }
    for (const auto& p : to[i]) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) ok = chosen[j].empty() || compatible(chosen[j], p);
      if (!ok) continue;
      chosen[i] = p;
      self(self, i + 1);
    }
    chosen[i].clear();
  };
  dfs(dfs, 0);
  return out;
}

}  // namespace ordwork::oracle
