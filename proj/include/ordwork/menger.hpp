#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ordwork/order.hpp"

namespace ordwork {

using Vertex = Nat;
using Path = std::vector<Vertex>;

/// Finite undirected simple graph with terminal sets A and B.
class MengerGraph {
 public:
  MengerGraph() = default;
  /// Self-loops are dropped, duplicate edges merged. Throws InvalidInput for
  /// out-of-range endpoints or terminals.
  MengerGraph(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges, std::vector<Vertex> a,
              std::vector<Vertex> b);

  [[nodiscard]] std::size_t size() const noexcept { return adj_.size(); }
  /// Normalized (u < v), sorted.
  [[nodiscard]] const std::vector<std::pair<Vertex, Vertex>>& edges() const noexcept { return edges_; }
  [[nodiscard]] const std::vector<Vertex>& a() const noexcept { return a_; }
  [[nodiscard]] const std::vector<Vertex>& b() const noexcept { return b_; }
  [[nodiscard]] bool in_a(Vertex v) const noexcept { return v < in_a_.size() && in_a_[v]; }
  [[nodiscard]] bool in_b(Vertex v) const noexcept { return v < in_b_.size() && in_b_[v]; }
  /// Neighbours ascending.
  [[nodiscard]] const std::vector<Vertex>& neighbours(Vertex v) const { return adj_.at(v); }
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;

  friend bool operator==(const MengerGraph& x, const MengerGraph& y) {
    return x.size() == y.size() && x.edges_ == y.edges_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<Vertex> a_, b_;
  std::vector<bool> in_a_, in_b_;
  std::vector<std::vector<Vertex>> adj_;
};

struct PathList {
  std::vector<Path> paths;
  bool truncated = false;
};

/// Simple A-B paths ordered by length, then lexicographically; at most cap.
PathList enumerate_ab_paths(const MengerGraph& g, std::size_t cap);

/// Every A-B path meets c.
bool is_separator(const MengerGraph& g, std::span<const Vertex> c);

/// A union of disjoint paths, one starting at each A vertex. Canonical form
/// lists the paths by ascending first vertex.
struct Warp {
  std::vector<Path> paths;
  friend bool operator==(const Warp&, const Warp&) = default;
};

/// Throws InvalidWarp naming the broken condition.
void validate_warp(const MengerGraph& g, const Warp& w);
/// Validates and sorts the paths.
Warp make_warp(const MengerGraph& g, std::vector<Path> paths);
/// V(W)=A, no edges.
Warp trivial_warp(const MengerGraph& g);

/// Last vertex of each path, ascending.
std::vector<Vertex> terminals(const Warp& w);
/// Vertices of the warp, ascending.
std::vector<Vertex> warp_vertices(const Warp& w);

/// Throws InvalidWarp.
bool is_wave(const MengerGraph& g, const Warp& w);

/// W is a subgraph of Y.
bool wave_leq(const Warp& w, const Warp& y);

struct WaveList {
  std::vector<Warp> waves;
  bool truncated = false;
};

/// All waves, canonical order: A vertices ascending, and for each the path
/// choices by length then lexicographically. Warps are enumerated before
/// filtering, so `cap` bounds the warps visited.
WaveList enumerate_waves(const MengerGraph& g, std::size_t cap);

/// Last wave in canonical order that no other wave strictly exceeds.
/// Throws PreconditionViolation if the graph has more than `cap` warps.
Warp maximal_wave(const MengerGraph& g, std::size_t cap = 200000);

struct MengerSystem {
  std::vector<Path> m;
  std::vector<Vertex> c;
};

/// Maximum disjoint A-B path family with a separator taking one vertex from
/// each path: vertex-split max flow, with the cut nearest to A.
MengerSystem menger_solve(const MengerGraph& g);

/// Tag 0: (0,0), empty payload. Tag 1: (1,q), payload the path q.
/// Tag i+2: (i+2,S), payload S ascending.
struct WaveLabel {
  Nat tag = 0;
  std::vector<Vertex> payload;
  friend bool operator==(const WaveLabel&, const WaveLabel&) = default;
};

/// Throws MalformedLabel.
void check_label(const WaveLabel& l);

/// (1,q) below (0,0); (i+2,S) below (i+2,S') iff S' is a proper subset of S.
bool label_less(const WaveLabel& x, const WaveLabel& y);

/// The vertex enumeration g_0, g_1, ... and A-B path enumeration p_0, p_1, ...
struct WaveEnumeration {
  std::vector<Vertex> vertices;
  std::vector<Path> paths;
  /// Length of a complete sequence: 2 max(n, m).
  [[nodiscard]] std::size_t complete_length() const noexcept {
    return 2 * std::max(vertices.size(), paths.size());
  }
};

/// Vertices by id, paths in enumerate_ab_paths order. Throws
/// PreconditionViolation if there are more than `cap` A-B paths.
WaveEnumeration default_enumeration(const MengerGraph& g, std::size_t cap = 100000);

/// Complete sequence for a wave. Positions 2i with i >= n hold (0,0) and
/// positions 2i+1 with i >= m hold (i+2, {}). Throws InvalidWarp, NotAWave.
std::vector<WaveLabel> encode_wave(const MengerGraph& g, const WaveEnumeration& e, const Warp& w);

/// The tree conditions on a (possibly partial) sequence. The terminal
/// condition is only checked once the sequence is complete. Throws
/// MalformedLabel.
bool wave_seq_valid(const MengerGraph& g, const WaveEnumeration& e, std::span<const WaveLabel> seq);

/// Union of the q_i. Throws InvalidSequence unless the sequence is complete
/// and valid.
Warp decode_wave(const MengerGraph& g, const WaveEnumeration& e, std::span<const WaveLabel> seq);

/// seq_less over label_less.
bool wave_seq_less(std::span<const WaveLabel> x, std::span<const WaveLabel> y);

}  // namespace ordwork
