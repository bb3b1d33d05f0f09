#pragma once

// Brute-force reference implementations and instance generators. Nothing in
// here calls the operation it is used to check; the only shared pieces are
// the plain data types.

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "ordwork/automaton.hpp"
#include "ordwork/barrier.hpp"
#include "ordwork/menger.hpp"
#include "ordwork/order.hpp"
#include "ordwork/wqo.hpp"

namespace ordwork::oracle {

using Rng = std::mt19937_64;

/// Strict orders as n x n matrices over 0..n-1.
using Relation = std::vector<unsigned char>;

/// Every strict partial order on 0..n-1, by enumerating all off-diagonal
/// relations and discarding the ones that are not transitive or have a cycle.
std::vector<Relation> all_strict_orders(std::size_t n);
/// Every reflexive-transitive relation on 0..n-1.
std::vector<Relation> all_quasi_orders(std::size_t n);
Poset to_poset(const Relation& lt, std::size_t n);
/// Random strict order on 0..n-1: random edges along a random linear order,
/// closed transitively.
Poset random_poset(Rng& rng, std::size_t n);

/// Lexicographic order with a proper prefix first.
bool lex_below(const Seq& a, const Seq& b);

/// Exhaustive search over strictly increasing index maps.
bool higman_brute(const Seq& s, const Seq& t, const std::function<bool(Nat, Nat)>& leq);

/// Every sequence over 0..k-1 of length <= max_len, shortest first.
std::vector<Seq> all_words(std::size_t k, std::size_t max_len);

/// Rooted labelled trees with at most max_nodes nodes and labels below
/// `labels`, one per isomorphism class, as parent arrays with parent[i] < i.
std::vector<KTree> all_trees(std::size_t max_nodes, Nat labels);
/// Exhaustive search over injective maps, checking meets and labels.
bool kruskal_brute(const KTree& s, const KTree& t, const std::function<bool(Nat, Nat)>& leq);

/// Deterministic automata with `states` states over `alphabet` letters and
/// start 0, decoded from index `code` in base (states + 1).
TreeAutomaton automaton_from_code(std::size_t states, std::size_t alphabet, std::uint64_t code);
/// Number of automata in the class above.
std::uint64_t automaton_class_size(std::size_t states, std::size_t alphabet);
/// True iff some word of length `len` runs from the start.
bool has_run_of_length(const TreeAutomaton& aut, std::size_t len);
/// Lexicographically least word of length len that extends to a word of
/// length len + extra. nullopt if none.
std::optional<Seq> least_extendable(const TreeAutomaton& aut, std::size_t len, std::size_t extra);
/// All lassos with non-empty cycle and |prefix| + |cycle| <= max_size.
std::vector<LassoPath> all_lassos(std::size_t alphabet, std::size_t max_size);
/// Whether the lasso is a path: runs the automaton along the sequence for
/// |prefix| + states * |cycle| + |cycle| letters.
bool lasso_runs(const TreeAutomaton& aut, const LassoPath& l);
/// seq_less on the infinite sequences, compared over a long enough window.
bool lasso_below(const LassoPath& a, const LassoPath& b, const Poset& order);

/// Whether some b* extending b, with entries below `limit`, has b2 as a
/// prefix of its tail.
bool shift_brute(const Block& b, const Block& b2, Nat limit);
/// All increasing sequences with entries below window (including the empty one).
std::vector<Block> all_blocks(Nat window);

/// Graphs on n vertices as edge masks over the pairs (i, j), i < j, in
/// lexicographic order; one mask per isomorphism class (the least under
/// vertex permutation).
std::vector<std::uint32_t> graph_classes(std::size_t n);
std::vector<std::pair<Vertex, Vertex>> edges_of_mask(std::size_t n, std::uint32_t mask);
bool connected(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);
MengerGraph random_graph(Rng& rng, std::size_t max_vertices);

/// No A-B walk avoids c.
bool separates(const MengerGraph& g, const std::vector<Vertex>& c);
/// Smallest size of a separating vertex set, by subsets of increasing size.
std::size_t min_separator_brute(const MengerGraph& g);
/// Largest family of disjoint A-B paths, searched over paths whose inner
/// vertices avoid A and B.
std::size_t max_disjoint_paths_brute(const MengerGraph& g);

/// The seven tree conditions, written out directly.
bool wave_seq_valid_brute(const MengerGraph& g, const WaveEnumeration& e, const std::vector<WaveLabel>& seq);
/// Every choice of (0,0) or (1,q) at the even positions satisfying the even
/// conditions, as the list of q per vertex position (empty = (0,0)).
std::vector<std::vector<Path>> valid_even_configurations(const MengerGraph& g, const WaveEnumeration& e);

}  // namespace ordwork::oracle
