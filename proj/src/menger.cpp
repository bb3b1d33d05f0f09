#include "ordwork/menger.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <string>

#include "ordwork/error.hpp"

namespace ordwork {

namespace {

std::vector<Vertex> sorted_unique(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool contains_sorted(std::span<const Vertex> set, Vertex v) {
  return std::binary_search(set.begin(), set.end(), v);
}

}  // namespace

MengerGraph::MengerGraph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges, std::vector<Vertex> a,
                         std::vector<Vertex> b)
    : a_(sorted_unique(std::move(a))), b_(sorted_unique(std::move(b))), in_a_(n, false), in_b_(n, false), adj_(n) {
  for (auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::InvalidInput, "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
    }
    if (u > v) std::swap(u, v);
  }
  std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  for (Vertex x : a_) {
    if (x >= n) throw Error(ErrorCode::InvalidInput, "A vertex " + std::to_string(x) + " out of range");
    in_a_[x] = true;
  }
  for (Vertex x : b_) {
    if (x >= n) throw Error(ErrorCode::InvalidInput, "B vertex " + std::to_string(x) + " out of range");
    in_b_[x] = true;
  }
}

bool MengerGraph::adjacent(Vertex u, Vertex v) const {
  if (u >= size() || v >= size()) return false;
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

PathList enumerate_ab_paths(const MengerGraph& g, std::size_t cap) {
  PathList out;
  std::vector<char> on_path(g.size(), 0);
  Path cur;
  // Depth-first per length keeps each length class in lexicographic order.
  auto dfs = [&](auto&& self, std::size_t len) -> bool {
    const Vertex v = cur.back();
    if (cur.size() == len) {
      if (!g.in_b(v)) return true;
      if (out.paths.size() == cap) {
        out.truncated = true;
        return false;
      }
      out.paths.push_back(cur);
      return true;
    }
    for (Vertex w : g.neighbours(v)) {
      if (on_path[w]) continue;
      on_path[w] = 1;
      cur.push_back(w);
      const bool go_on = self(self, len);
      cur.pop_back();
      on_path[w] = 0;
      if (!go_on) return false;
    }
    return true;
  };
  for (std::size_t len = 1; len <= g.size(); ++len) {
    for (Vertex a : g.a()) {
      cur = {a};
      on_path[a] = 1;
      const bool go_on = dfs(dfs, len);
      on_path[a] = 0;
      if (!go_on) return out;
    }
  }
  return out;
}

bool is_separator(const MengerGraph& g, std::span<const Vertex> c) {
  std::vector<char> blocked(g.size(), 0);
  std::vector<char> seen(g.size(), 0);
  for (Vertex v : c) {
    if (v < g.size()) blocked[v] = 1;
  }
  std::vector<Vertex> stack;
  for (Vertex a : g.a()) {
    if (!blocked[a]) {
      seen[a] = 1;
      stack.push_back(a);
    }
  }
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (g.in_b(v)) return false;
    for (Vertex w : g.neighbours(v)) {
      if (!blocked[w] && !seen[w]) {
        seen[w] = 1;
        stack.push_back(w);
      }
    }
  }
  return true;
}

void validate_warp(const MengerGraph& g, const Warp& w) {
  auto bad = [](const std::string& why) { return Error(ErrorCode::InvalidWarp, why); };
  std::vector<char> used(g.size(), 0);
  for (const auto& p : w.paths) {
    if (p.empty()) throw bad("empty path");
    for (std::size_t i = 0; i < p.size(); ++i) {
      const Vertex v = p[i];
      if (v >= g.size()) throw bad("vertex " + std::to_string(v) + " out of range");
      if (used[v]) throw bad("vertex " + std::to_string(v) + " used twice");
      used[v] = 1;
      if (i == 0 && !g.in_a(v)) throw bad("path starts at " + std::to_string(v) + ", not in A");
      if (i > 0 && g.in_a(v)) throw bad("A vertex " + std::to_string(v) + " inside a path");
      if (i > 0 && !g.adjacent(p[i - 1], v)) {
        throw bad("no edge " + std::to_string(p[i - 1]) + "-" + std::to_string(v));
      }
    }
  }
  for (Vertex a : g.a()) {
    if (!used[a]) throw bad("A vertex " + std::to_string(a) + " not covered");
  }
}

Warp make_warp(const MengerGraph& g, std::vector<Path> paths) {
  Warp w{std::move(paths)};
  validate_warp(g, w);
  std::sort(w.paths.begin(), w.paths.end(), [](const Path& x, const Path& y) { return x.front() < y.front(); });
  return w;
}

Warp trivial_warp(const MengerGraph& g) {
  Warp w;
  for (Vertex a : g.a()) w.paths.push_back({a});
  return w;
}

std::vector<Vertex> terminals(const Warp& w) {
  std::vector<Vertex> out;
  for (const auto& p : w.paths) {
    if (!p.empty()) out.push_back(p.back());
  }
  return sorted_unique(std::move(out));
}

std::vector<Vertex> warp_vertices(const Warp& w) {
  std::vector<Vertex> out;
  for (const auto& p : w.paths) out.insert(out.end(), p.begin(), p.end());
  return sorted_unique(std::move(out));
}

bool is_wave(const MengerGraph& g, const Warp& w) {
  validate_warp(g, w);
  return is_separator(g, terminals(w));
}

namespace {

std::vector<std::pair<Vertex, Vertex>> warp_edges(const Warp& w) {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (const auto& p : w.paths) {
    for (std::size_t i = 1; i < p.size(); ++i) out.emplace_back(std::min(p[i - 1], p[i]), std::max(p[i - 1], p[i]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Simple paths from a that meet A only at a, by length then lexicographically.
std::vector<Path> paths_from(const MengerGraph& g, Vertex a) {
  std::vector<Path> out;
  std::vector<char> on_path(g.size(), 0);
  Path cur{a};
  on_path[a] = 1;
  auto dfs = [&](auto&& self) -> void {
    out.push_back(cur);
    for (Vertex w : g.neighbours(cur.back())) {
      if (on_path[w] || g.in_a(w)) continue;
      on_path[w] = 1;
      cur.push_back(w);
      self(self);
      cur.pop_back();
      on_path[w] = 0;
    }
  };
  dfs(dfs);
  std::stable_sort(out.begin(), out.end(), [](const Path& x, const Path& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

}  // namespace

bool wave_leq(const Warp& w, const Warp& y) {
  const auto vw = warp_vertices(w);
  const auto vy = warp_vertices(y);
  if (!std::includes(vy.begin(), vy.end(), vw.begin(), vw.end())) return false;
  const auto ew = warp_edges(w);
  const auto ey = warp_edges(y);
  return std::includes(ey.begin(), ey.end(), ew.begin(), ew.end());
}

WaveList enumerate_waves(const MengerGraph& g, std::size_t cap) {
  WaveList out;
  const auto& a = g.a();
  std::vector<std::vector<Path>> options;
  for (Vertex x : a) options.push_back(paths_from(g, x));
  std::vector<char> used(g.size(), 0);
  Warp cur;
  std::size_t visited = 0;
  auto dfs = [&](auto&& self, std::size_t k) -> bool {
    if (k == a.size()) {
      if (visited == cap) {
        out.truncated = true;
        return false;
      }
      ++visited;
      if (is_separator(g, terminals(cur))) out.waves.push_back(cur);
      return true;
    }
    for (const auto& p : options[k]) {
      if (std::any_of(p.begin(), p.end(), [&](Vertex v) { return used[v] != 0; })) continue;
      for (Vertex v : p) used[v] = 1;
      cur.paths.push_back(p);
      const bool go_on = self(self, k + 1);
      cur.paths.pop_back();
      for (Vertex v : p) used[v] = 0;
      if (!go_on) return false;
    }
    return true;
  };
  dfs(dfs, 0);
  return out;
}

Warp maximal_wave(const MengerGraph& g, std::size_t cap) {
  const auto list = enumerate_waves(g, cap);
  if (list.truncated) throw Error(ErrorCode::PreconditionViolation, "more than " + std::to_string(cap) + " warps");
  const auto& waves = list.waves;
  for (std::size_t i = waves.size(); i-- > 0;) {
    const bool dominated = std::any_of(waves.begin(), waves.end(), [&](const Warp& y) {
      return !(y == waves[i]) && wave_leq(waves[i], y);
    });
    if (!dominated) return waves[i];
  }
  // The trivial warp is always a wave, so the list is never empty.
  throw Error(ErrorCode::PreconditionViolation, "no wave found");
}

namespace {

// Residual network for the vertex-split flow: v_in = 2v, v_out = 2v + 1.
struct FlowNet {
  struct Arc {
    std::size_t to;
    long cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<std::size_t>> out;

  explicit FlowNet(std::size_t nodes) : out(nodes) {}

  void add(std::size_t u, std::size_t v, long cap) {
    out[u].push_back(arcs.size());
    arcs.push_back({v, cap});
    out[v].push_back(arcs.size());
    arcs.push_back({u, 0});
  }

  std::vector<char> reachable(std::size_t s) const {
    std::vector<char> seen(out.size(), 0);
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const auto u = stack.back();
      stack.pop_back();
      for (auto id : out[u]) {
        if (arcs[id].cap > 0 && !seen[arcs[id].to]) {
          seen[arcs[id].to] = 1;
          stack.push_back(arcs[id].to);
        }
      }
    }
    return seen;
  }

  bool augment(std::size_t s, std::size_t t) {
    std::vector<long> via(out.size(), -1);
    std::vector<char> seen(out.size(), 0);
    std::queue<std::size_t> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty() && !seen[t]) {
      const auto u = q.front();
      q.pop();
      for (auto id : out[u]) {
        const auto v = arcs[id].to;
        if (arcs[id].cap > 0 && !seen[v]) {
          seen[v] = 1;
          via[v] = static_cast<long>(id);
          q.push(v);
        }
      }
    }
    if (!seen[t]) return false;
    // Every path crosses some unit vertex arc, so the bottleneck is 1.
    for (auto v = t; v != s;) {
      const auto id = static_cast<std::size_t>(via[v]);
      arcs[id].cap -= 1;
      arcs[id ^ 1].cap += 1;
      v = arcs[id ^ 1].to;
    }
    return true;
  }
};

}  // namespace

MengerSystem menger_solve(const MengerGraph& g) {
  const std::size_t n = g.size();
  const long inf = static_cast<long>(n) + 1;
  const std::size_t s = 2 * n;
  const std::size_t t = 2 * n + 1;
  FlowNet net(2 * n + 2);
  for (Vertex v = 0; v < n; ++v) net.add(2 * v, 2 * v + 1, 1);
  for (const auto& [u, v] : g.edges()) {
    net.add(2 * u + 1, 2 * v, inf);
    net.add(2 * v + 1, 2 * u, inf);
  }
  std::vector<std::size_t> source_arc(n);
  for (Vertex a : g.a()) {
    source_arc[a] = net.arcs.size();
    net.add(s, 2 * a, inf);
  }
  for (Vertex b : g.b()) net.add(2 * b + 1, t, inf);
  while (net.augment(s, t)) {
  }

  // Flow on an arc is the capacity gained by its reverse.
  auto flow = [&](std::size_t id) { return net.arcs[id ^ 1].cap; };
  std::vector<long> edge_flow(net.arcs.size(), 0);
  for (std::size_t id = 0; id < net.arcs.size(); id += 2) edge_flow[id] = flow(id);

  MengerSystem sys;
  // Each vertex carries at most one unit, so following flow out of an A
  // vertex visits distinct vertices and ends in B.
  for (Vertex a : g.a()) {
    if (edge_flow[source_arc[a]] == 0) continue;
    Path walk{a};
    Vertex v = a;
    while (true) {
      std::optional<Vertex> next;
      for (auto id : net.out[2 * v + 1]) {
        if (id % 2 == 0 && net.arcs[id].to != t && edge_flow[id] > 0) {
          --edge_flow[id];
          next = static_cast<Vertex>(net.arcs[id].to / 2);
          break;
        }
      }
      if (!next) break;
      v = *next;
      walk.push_back(v);
    }
    // Trim to start at the last A vertex and stop at the first B vertex after it.
    std::size_t lo = 0;
    for (std::size_t i = 0; i < walk.size(); ++i) {
      if (g.in_a(walk[i])) lo = i;
    }
    std::size_t hi = lo;
    while (!g.in_b(walk[hi])) ++hi;
    sys.m.emplace_back(walk.begin() + static_cast<std::ptrdiff_t>(lo),
                       walk.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
  }
  std::sort(sys.m.begin(), sys.m.end());

  const auto seen = net.reachable(s);
  for (Vertex v = 0; v < n; ++v) {
    if (seen[2 * v] && !seen[2 * v + 1]) sys.c.push_back(v);
  }
  return sys;
}

void check_label(const WaveLabel& l) {
  auto bad = [](const std::string& why) { return Error(ErrorCode::MalformedLabel, why); };
  if (l.tag == 0 && !l.payload.empty()) throw bad("(0,0) carries a payload");
  if (l.tag == 1 && l.payload.empty()) throw bad("(1,q) with an empty path");
  if (l.tag >= 2) {
    for (std::size_t i = 1; i < l.payload.size(); ++i) {
      if (l.payload[i - 1] >= l.payload[i]) throw bad("set payload is not strictly increasing");
    }
  }
}

bool label_less(const WaveLabel& x, const WaveLabel& y) {
  check_label(x);
  check_label(y);
  if (x.tag == 1 && y.tag == 0) return true;
  if (x.tag >= 2 && x.tag == y.tag) {
    return y.payload.size() < x.payload.size() &&
           std::includes(x.payload.begin(), x.payload.end(), y.payload.begin(), y.payload.end());
  }
  return false;
}

bool wave_seq_less(std::span<const WaveLabel> x, std::span<const WaveLabel> y) {
  return seq_less(x, y, [](const WaveLabel& a, const WaveLabel& b) { return label_less(a, b); });
}

WaveEnumeration default_enumeration(const MengerGraph& g, std::size_t cap) {
  WaveEnumeration e;
  for (Vertex v = 0; v < g.size(); ++v) e.vertices.push_back(v);
  auto list = enumerate_ab_paths(g, cap);
  if (list.truncated) throw Error(ErrorCode::PreconditionViolation, "more than " + std::to_string(cap) + " A-B paths");
  e.paths = std::move(list.paths);
  return e;
}

namespace {

// Position of each vertex in the enumeration. Throws InvalidInput unless the
// enumeration lists every vertex once.
std::vector<std::size_t> vertex_positions(const MengerGraph& g, const WaveEnumeration& e) {
  std::vector<std::size_t> pos(g.size(), SIZE_MAX);
  if (e.vertices.size() != g.size()) throw Error(ErrorCode::InvalidInput, "vertex enumeration has the wrong size");
  for (std::size_t i = 0; i < e.vertices.size(); ++i) {
    const Vertex v = e.vertices[i];
    if (v >= g.size() || pos[v] != SIZE_MAX) {
      throw Error(ErrorCode::InvalidInput, "vertex enumeration is not a permutation");
    }
    pos[v] = i;
  }
  return pos;
}

bool is_prefix_of(const Path& p, const Path& q) {
  return p.size() <= q.size() && std::equal(p.begin(), p.end(), q.begin());
}

}  // namespace

std::vector<WaveLabel> encode_wave(const MengerGraph& g, const WaveEnumeration& e, const Warp& w) {
  vertex_positions(g, e);
  if (!is_wave(g, w)) throw Error(ErrorCode::NotAWave, "terminals do not separate A from B");
  // Path in W from its A vertex to each vertex of W.
  std::vector<std::optional<Path>> reach(g.size());
  for (const auto& p : w.paths) {
    for (std::size_t i = 0; i < p.size(); ++i) reach[p[i]] = Path(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(i) + 1);
  }
  const auto vw = warp_vertices(w);
  const std::size_t total = e.complete_length() / 2;
  std::vector<WaveLabel> out;
  out.reserve(2 * total);
  for (std::size_t i = 0; i < total; ++i) {
    if (i < e.vertices.size() && reach[e.vertices[i]]) {
      out.push_back({1, *reach[e.vertices[i]]});
    } else {
      out.push_back({0, {}});
    }
    WaveLabel odd{static_cast<Nat>(i + 2), {}};
    if (i < e.paths.size()) {
      for (Vertex v : sorted_unique(e.paths[i])) {
        if (contains_sorted(vw, v)) odd.payload.push_back(v);
      }
    }
    out.push_back(std::move(odd));
  }
  return out;
}

bool wave_seq_valid(const MengerGraph& g, const WaveEnumeration& e, std::span<const WaveLabel> seq) {
  for (const auto& l : seq) check_label(l);
  const auto pos = vertex_positions(g, e);
  const std::size_t n = e.vertices.size();
  const std::size_t m = e.paths.size();
  if (seq.size() > e.complete_length()) return false;

  // q[i] for each present (1, q_i).
  std::vector<const Path*> q(n, nullptr);
  for (std::size_t k = 0; k < seq.size(); ++k) {
    const auto& l = seq[k];
    const std::size_t i = k / 2;
    if (k % 2 == 0) {
      if (l.tag == 0) continue;
      if (l.tag != 1 || i >= n) return false;
      const Path& p = l.payload;
      if (p.back() != e.vertices[i] || !g.in_a(p.front())) return false;
      std::vector<char> seen(g.size(), 0);
      for (std::size_t j = 0; j < p.size(); ++j) {
        if (p[j] >= g.size() || seen[p[j]]) return false;
        seen[p[j]] = 1;
        if (j > 0 && (g.in_a(p[j]) || !g.adjacent(p[j - 1], p[j]))) return false;
      }
      q[i] = &p;
    } else {
      if (l.tag != i + 2) return false;
      if (i >= m) {
        if (!l.payload.empty()) return false;
        continue;
      }
      if (l.payload.empty()) return false;
      const auto vp = sorted_unique(e.paths[i]);
      if (!std::includes(vp.begin(), vp.end(), l.payload.begin(), l.payload.end())) return false;
    }
  }

  auto absent = [&](Vertex v) {
    const std::size_t k = 2 * pos[v];
    return k < seq.size() && seq[k].tag == 0;
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (!q[i]) continue;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!q[j]) continue;
      const bool meet = std::any_of(q[i]->begin(), q[i]->end(), [&](Vertex v) {
        return std::find(q[j]->begin(), q[j]->end(), v) != q[j]->end();
      });
      if (meet && !is_prefix_of(*q[i], *q[j]) && !is_prefix_of(*q[j], *q[i])) return false;
    }
    if (std::any_of(q[i]->begin(), q[i]->end(), absent)) return false;
  }
  for (Vertex a : g.a()) {
    if (absent(a)) return false;
  }
  for (std::size_t k = 1; k < seq.size(); k += 2) {
    if (std::any_of(seq[k].payload.begin(), seq[k].payload.end(), absent)) return false;
  }

  if (seq.size() < e.complete_length()) return true;
  auto terminal = [&](Vertex v) {
    const Path* qi = q[pos[v]];
    if (!qi) return false;
    for (std::size_t k = 0; k < n; ++k) {
      if (q[k] && q[k]->size() > qi->size() && is_prefix_of(*qi, *q[k])) return false;
    }
    return true;
  };
  for (std::size_t j = 0; j < m; ++j) {
    const auto& s = seq[2 * j + 1].payload;
    if (std::none_of(s.begin(), s.end(), terminal)) return false;
  }
  return true;
}

Warp decode_wave(const MengerGraph& g, const WaveEnumeration& e, std::span<const WaveLabel> seq) {
  if (seq.size() != e.complete_length()) {
    throw Error(ErrorCode::InvalidSequence, "sequence has length " + std::to_string(seq.size()) + ", expected " +
                                                std::to_string(e.complete_length()));
  }
  if (!wave_seq_valid(g, e, seq)) throw Error(ErrorCode::InvalidSequence, "sequence violates the tree conditions");
  // The q_i starting at a form a chain under end-extension; W takes the
  // longest one.
  std::vector<Path> paths;
  for (Vertex a : g.a()) {
    const Path* best = nullptr;
    for (std::size_t k = 0; k < seq.size(); k += 2) {
      const auto& l = seq[k];
      if (l.tag == 1 && l.payload.front() == a && (!best || l.payload.size() > best->size())) best = &l.payload;
    }
    paths.push_back(*best);
  }
  return make_warp(g, std::move(paths));
}

}  // namespace ordwork
