#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "ordwork/automaton.hpp"
#include "ordwork/barrier.hpp"
#include "ordwork/menger.hpp"
#include "ordwork/order.hpp"
#include "ordwork/wqo.hpp"

namespace ordwork::io {

using nlohmann::json;

/// Malformed JSON or a document that does not match the expected shape.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads a JSON argument: inline when it starts with '[', '{' or '"',
/// otherwise a file path. Throws ParseError.
json load(const std::string& arg, const std::string& what);

/// Element names interned to dense ids in declaration order. An empty table
/// means ids are written as plain numbers.
class Names {
 public:
  Names() = default;
  explicit Names(std::vector<std::string> names);

  [[nodiscard]] bool empty() const noexcept { return names_.empty(); }
  [[nodiscard]] std::size_t size() const noexcept { return names_.size(); }
  [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }

  /// A string is looked up; a non-negative integer is taken as an id.
  /// Throws ParseError.
  [[nodiscard]] Nat id(const json& token) const;
  [[nodiscard]] json token(Nat id) const;
  [[nodiscard]] Seq seq(const json& arr) const;
  [[nodiscard]] json tokens(std::span<const Nat> ids) const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, Nat> index_;
};

struct PosetFile {
  Names names;
  std::vector<Pair> raw;
  std::vector<Nat> elements;
};
/// {"elements": [...], "lt": [[x, y], ...]}. Elements may be names or
/// numbers; validation (closure, cycles) is left to validate_poset.
PosetFile parse_poset(const json& j);

struct QuasiFile {
  Names names;
  QuasiOrder order = QuasiOrder::natural_eq();
};
/// {"elements": [...], "leq": [[x, y], ...]} closed reflexively and
/// transitively, or {"builtin": "natural-leq" | "natural-eq" | "divisibility"}.
QuasiFile parse_quasi(const json& j);

/// {"alphabet": k, "states": n, "start": s | null, "delta": [[s, a, t], ...]}.
TreeAutomaton parse_automaton(const json& j);
json to_json(const TreeAutomaton& aut);

/// {"prefix": [...], "cycle": [...]}.
LassoPath parse_lasso(const json& j, const Names& names);
json to_json(const LassoPath& path, const Names& names);

/// {"parent": [-1, 0, ...], "labels": [...]}.
KTree parse_ktree(const json& j, const Names& names);

/// {"window": N, "blocks": [[...], ...]} or {"window": N, "uniform": k}.
BarrierFragment parse_fragment(const json& j);
json to_json(const BarrierFragment& frag);

/// {"entries": [[block, value], ...]} where a value is one element (read as a
/// length-one sequence) or an array of elements.
PartialArray<Seq> parse_array(const json& j, const Names& names);
json to_json(const PartialArray<Seq>& array, const Names& names);

struct GraphFile {
  Names names;
  MengerGraph graph;
};
/// {"vertices": n | [names], "edges": [[u, v], ...], "A": [...], "B": [...]}.
GraphFile parse_graph(const json& j);

/// A list of paths.
Warp parse_warp(const json& j, const GraphFile& g);
json to_json(const Warp& w, const Names& names);

/// [tag, payload] with payload vertices.
std::vector<WaveLabel> parse_labels(const json& j, const Names& names);
json to_json(std::span<const WaveLabel> seq, const Names& names);

/// Non-negative integer list.
std::vector<Nat> parse_nats(const json& j, const std::string& what);

/// 64-bit FNV-1a of the compact dump, as 16 hex digits.
std::string digest(const json& j);

}  // namespace ordwork::io
