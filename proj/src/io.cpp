#include "ordwork/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace ordwork::io {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw ParseError(msg); }

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) fail(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where + ": missing \"" + key + "\"");
  return *it;
}

const json& array_of(const json& j, const std::string& where) {
  if (!j.is_array()) fail(where + ": expected an array");
  return j;
}

Nat nat(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0 || j.get<long long>() > 0xffffffffLL) {
    fail(where + ": expected a non-negative integer");
  }
  return static_cast<Nat>(j.get<long long>());
}

}  // namespace

json load(const std::string& arg, const std::string& what) {
  const auto start = arg.find_first_not_of(" \t\r\n");
  const bool inline_text = start != std::string::npos && (arg[start] == '[' || arg[start] == '{' || arg[start] == '"');
  std::string text = arg;
  if (!inline_text) {
    std::ifstream in(arg, std::ios::binary);
    if (!in) fail(what + ": cannot read " + arg);
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    fail(what + ": " + e.what());
  }
}

Names::Names(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!index_.emplace(names_[i], static_cast<Nat>(i)).second) fail("duplicate name \"" + names_[i] + "\"");
  }
}

Nat Names::id(const json& token) const {
  if (token.is_string()) {
    auto it = index_.find(token.get<std::string>());
    if (it == index_.end()) fail("unknown name \"" + token.get<std::string>() + "\"");
    return it->second;
  }
  return nat(token, "element");
}

json Names::token(Nat id) const {
  if (id < names_.size()) return names_[id];
  return id;
}

Seq Names::seq(const json& arr) const {
  Seq out;
  for (const auto& t : array_of(arr, "sequence")) out.push_back(id(t));
  return out;
}

json Names::tokens(std::span<const Nat> ids) const {
  json out = json::array();
  for (Nat x : ids) out.push_back(token(x));
  return out;
}

namespace {

Names names_of(const json& elements) {
  std::vector<std::string> names;
  bool any_string = false;
  for (const auto& e : array_of(elements, "elements")) any_string = any_string || e.is_string();
  if (!any_string) return {};
  for (const auto& e : elements) {
    if (!e.is_string()) fail("elements: mix of names and numbers");
    names.push_back(e.get<std::string>());
  }
  return Names(std::move(names));
}

std::vector<Nat> element_ids(const Names& names, const json& elements) {
  std::vector<Nat> ids;
  for (const auto& e : elements) ids.push_back(names.id(e));
  return ids;
}

std::vector<Pair> pairs_of(const Names& names, const json& j, const std::string& where) {
  std::vector<Pair> out;
  for (const auto& p : array_of(j, where)) {
    if (!p.is_array() || p.size() != 2) fail(where + ": expected [x, y] pairs");
    out.emplace_back(names.id(p[0]), names.id(p[1]));
  }
  return out;
}

}  // namespace

PosetFile parse_poset(const json& j) {
  PosetFile f;
  const auto& elements = field(j, "elements", "poset");
  f.names = names_of(elements);
  f.elements = element_ids(f.names, elements);
  f.raw = pairs_of(f.names, j.contains("lt") ? j["lt"] : json::array(), "poset lt");
  return f;
}

QuasiFile parse_quasi(const json& j) {
  QuasiFile f;
  if (j.is_object() && j.contains("builtin")) {
    const auto& b = j["builtin"];
    if (b == "natural-leq") {
      f.order = QuasiOrder::natural_leq();
    } else if (b == "natural-eq") {
      f.order = QuasiOrder::natural_eq();
    } else if (b == "divisibility") {
      f.order = QuasiOrder::divisibility();
    } else {
      fail("quasi-order: unknown builtin " + b.dump());
    }
    return f;
  }
  const auto& elements = field(j, "elements", "quasi-order");
  f.names = names_of(elements);
  auto universe = element_ids(f.names, elements);
  const auto pairs = pairs_of(f.names, j.contains("leq") ? j["leq"] : json::array(), "quasi-order leq");
  f.order = QuasiOrder::closure_of(std::move(universe), pairs);
  return f;
}

TreeAutomaton parse_automaton(const json& j) {
  const Nat k = nat(field(j, "alphabet", "automaton"), "automaton alphabet");
  const Nat n = nat(field(j, "states", "automaton"), "automaton states");
  std::optional<State> start;
  if (j.contains("start") && !j["start"].is_null()) start = nat(j["start"], "automaton start");
  TreeAutomaton aut(k, n, start);
  const json delta = j.value("delta", json::array());
  for (const auto& t : array_of(delta, "automaton delta")) {
    if (!t.is_array() || t.size() != 3) fail("automaton delta: expected [state, letter, state]");
    aut.add_transition(nat(t[0], "delta"), nat(t[1], "delta"), nat(t[2], "delta"));
  }
  return aut;
}

json to_json(const TreeAutomaton& aut) {
  json delta = json::array();
  for (const auto& [s, a, t] : aut.transitions()) delta.push_back({s, a, t});
  json out = {{"alphabet", aut.alphabet_size()}, {"states", aut.state_count()}, {"delta", delta}};
  out["start"] = aut.start() ? json(*aut.start()) : json(nullptr);
  return out;
}

LassoPath parse_lasso(const json& j, const Names& names) {
  return LassoPath{names.seq(field(j, "prefix", "lasso")), names.seq(field(j, "cycle", "lasso"))};
}

json to_json(const LassoPath& path, const Names& names) {
  return {{"prefix", names.tokens(path.prefix)}, {"cycle", names.tokens(path.cycle)}};
}

KTree parse_ktree(const json& j, const Names& names) {
  std::vector<long> parent;
  for (const auto& p : array_of(field(j, "parent", "tree"), "tree parent")) {
    if (!p.is_number_integer()) fail("tree parent: expected integers");
    parent.push_back(p.get<long>());
  }
  return KTree::from_parents(std::move(parent), names.seq(field(j, "labels", "tree")));
}

BarrierFragment parse_fragment(const json& j) {
  const Nat window = nat(field(j, "window", "fragment"), "fragment window");
  if (j.contains("uniform")) return BarrierFragment::uniform(window, nat(j["uniform"], "fragment uniform"));
  std::vector<Block> blocks;
  for (const auto& b : array_of(field(j, "blocks", "fragment"), "fragment blocks")) {
    blocks.push_back(parse_nats(b, "block"));
  }
  return BarrierFragment(window, std::move(blocks));
}

json to_json(const BarrierFragment& frag) {
  return {{"window", frag.window()}, {"blocks", frag.blocks()}};
}

PartialArray<Seq> parse_array(const json& j, const Names& names) {
  PartialArray<Seq> out;
  for (const auto& e : array_of(field(j, "entries", "array"), "array entries")) {
    if (!e.is_array() || e.size() != 2) fail("array entries: expected [block, value]");
    Seq value = e[1].is_array() ? names.seq(e[1]) : Seq{names.id(e[1])};
    out.entries.emplace_back(parse_nats(e[0], "array block"), std::move(value));
  }
  return out;
}

json to_json(const PartialArray<Seq>& array, const Names& names) {
  json entries = json::array();
  for (const auto& [b, v] : array.entries) entries.push_back({b, names.tokens(v)});
  return {{"entries", entries}};
}

GraphFile parse_graph(const json& j) {
  GraphFile f;
  const auto& v = field(j, "vertices", "graph");
  std::size_t n = 0;
  if (v.is_array()) {
    std::vector<std::string> names;
    for (const auto& x : v) {
      if (!x.is_string()) fail("graph vertices: expected names");
      names.push_back(x.get<std::string>());
    }
    f.names = Names(std::move(names));
    n = f.names.size();
  } else {
    n = nat(v, "graph vertices");
  }
  std::vector<std::pair<Vertex, Vertex>> edges;
  const json edge_list = j.value("edges", json::array());
  for (const auto& e : array_of(edge_list, "graph edges")) {
    if (!e.is_array() || e.size() != 2) fail("graph edges: expected [u, v]");
    edges.emplace_back(f.names.id(e[0]), f.names.id(e[1]));
  }
  f.graph = MengerGraph(n, std::move(edges), f.names.seq(field(j, "A", "graph")), f.names.seq(field(j, "B", "graph")));
  return f;
}

Warp parse_warp(const json& j, const GraphFile& g) {
  std::vector<Path> paths;
  for (const auto& p : array_of(j, "wave")) paths.push_back(g.names.seq(p));
  return make_warp(g.graph, std::move(paths));
}

json to_json(const Warp& w, const Names& names) {
  json out = json::array();
  for (const auto& p : w.paths) out.push_back(names.tokens(p));
  return out;
}

std::vector<WaveLabel> parse_labels(const json& j, const Names& names) {
  std::vector<WaveLabel> out;
  for (const auto& l : array_of(j, "label sequence")) {
    if (!l.is_array() || l.size() != 2) fail("label: expected [tag, payload]");
    out.push_back({nat(l[0], "label tag"), names.seq(l[1])});
  }
  return out;
}

json to_json(std::span<const WaveLabel> seq, const Names& names) {
  json out = json::array();
  for (const auto& l : seq) out.push_back({l.tag, names.tokens(l.payload)});
  return out;
}

std::vector<Nat> parse_nats(const json& j, const std::string& what) {
  std::vector<Nat> out;
  for (const auto& x : array_of(j, what)) out.push_back(nat(x, what));
  return out;
}

std::string digest(const json& j) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace ordwork::io
