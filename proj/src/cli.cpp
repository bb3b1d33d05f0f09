#include "ordwork/cli.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

#include "CLI11.hpp"
#include "ordwork/barrier.hpp"
#include "ordwork/error.hpp"
#include "ordwork/io.hpp"
#include "ordwork/lexcode.hpp"
#include "ordwork/menger.hpp"
#include "ordwork/regular_tree.hpp"
#include "ordwork/suites.hpp"
#include "ordwork/wqo.hpp"

namespace ordwork::cli {

using nlohmann::json;

namespace {

struct Outcome {
  std::string verdict = "pass";
  json details = json::object();
  std::size_t checked = 1;
  std::size_t failures = 0;
};

Outcome pass(json details) { return {"pass", std::move(details)}; }
Outcome fail(json details) { return {"fail", std::move(details), 1, 1}; }
Outcome verdict(bool ok, json details) { return ok ? pass(std::move(details)) : fail(std::move(details)); }

enum class Kind { Json, Int, Text };

struct Opt {
  Opt(std::string n, Kind k = Kind::Json, bool req = true, std::string h = {})
      : name(std::move(n)), kind(k), required(req), help(std::move(h)) {}
  std::string name;
  Kind kind;
  bool required;
  std::string help;
};

// Parsed arguments: JSON documents and integers are loaded before dispatch
// and keyed by option name without dashes.
struct Ctx {
  json inputs = json::object();
  std::uint64_t seed = 1;
  [[nodiscard]] const json& operator[](const std::string& key) const { return inputs.at(key); }
  [[nodiscard]] bool has(const std::string& key) const { return inputs.contains(key); }
};

using Handler = std::function<Outcome(const Ctx&)>;

struct Command {
  std::string group;
  std::string name;
  std::string help;
  std::vector<Opt> opts;
  Handler fn;
};

std::string kebab(std::string_view camel) {
  std::string out;
  for (char c : camel) {
    if (std::isupper(static_cast<unsigned char>(c)) && !out.empty()) out += '-';
    out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  }
  return out;
}

std::string key_of(const json& token) { return token.is_string() ? token.get<std::string>() : token.dump(); }

json pair_json(const std::optional<std::pair<std::size_t, std::size_t>>& p) {
  return p ? json{p->first, p->second} : json(nullptr);
}

struct LoadedPoset {
  io::PosetFile file;
  Poset poset;
};

LoadedPoset load_poset(const json& j) {
  auto f = io::parse_poset(j);
  auto p = validate_poset(f.raw, f.elements);
  return {std::move(f), std::move(p)};
}

TieBreak tie_of(const Ctx& c) {
  const std::string t = c.has("tie") ? c["tie"].get<std::string>() : "least";
  if (t == "smallest") return TieBreak::SmallestId;
  if (t == "largest") return TieBreak::LargestId;
  if (t == "strict") return TieBreak::Strict;
  if (t != "least") throw io::ParseError("--tie: expected least|smallest|largest|strict");
  return TieBreak::LeastCode;
}

// ---- order -----------------------------------------------------------------

Outcome order_validate(const Ctx& c) {
  auto [f, p] = load_poset(c["poset"]);
  json lt = json::array();
  for (const auto& [x, y] : p.pairs()) lt.push_back({f.names.token(x), f.names.token(y)});
  return pass({{"elements", f.names.tokens(p.elements())}, {"lt", lt}});
}

Outcome order_seq_less(const Ctx& c) {
  auto [f, p] = load_poset(c["poset"]);
  const Seq a = f.names.seq(c["lhs"]);
  const Seq b = f.names.seq(c["rhs"]);
  return pass({{"less", seq_less(a, b, p)}});
}

// ---- lexcode ---------------------------------------------------------------

Outcome lexcode_encode(const Ctx& c) {
  auto [f, p] = load_poset(c["poset"]);
  const auto code = encode_order(p, tie_of(c));
  json table = json::object();
  for (Nat x : p.elements()) table[key_of(f.names.token(x))] = code.base_code(x);
  return pass({{"codes", table}});
}

Outcome lexcode_decode(const Ctx& c) {
  auto [f, p] = load_poset(c["poset"]);
  const auto code = encode_order(p, tie_of(c));
  const Seq coded = io::parse_nats(c["coded"], "coded");
  return pass({{"sequence", f.names.tokens(decode_path(code, coded))}});
}

Outcome lexcode_check_claims(const Ctx& c) {
  auto [f, p] = load_poset(c["poset"]);
  const auto code = encode_order(p, tie_of(c));
  Outcome out;
  out.checked = 0;
  json first;
  auto record = [&](bool ok, const char* claim, Nat x, Nat y) {
    ++out.checked;
    if (ok) return;
    ++out.failures;
    if (first.is_null()) {
      first = {{"claim", claim}, {"x", f.names.token(x)}, {"y", f.names.token(y)},
               {"code_x", code.base_code(x)}, {"code_y", code.base_code(y)}};
    }
  };
  for (Nat x : p.elements()) {
    const Seq& cx = code.base_code(x);
    bool shape = !cx.empty() && cx.back() % 2 == 1;
    std::size_t evens = 0;
    for (std::size_t i = 0; i + 1 < cx.size(); ++i) {
      shape = shape && cx[i] % 2 == 0;
      evens += cx[i] % 2 == 0 ? 1 : 0;
    }
    record(shape, "shape", x, x);
    record(evens <= p.size(), "even-prefix-bound", x, x);
    for (Nat y : p.elements()) {
      const Seq& cy = code.base_code(y);
      if (p.less(x, y)) record(lex_less(cx, cy), "order-embedding", x, y);
      if (x != y) {
        const Seq px = encode_element(code, x);
        const Seq py = encode_element(code, y);
        record(!is_prefix(px, py) && cx != cy, "prefix-free", x, y);
        // y extends sigma^<n-1> where code(x) = sigma^<n>
        Seq stem(cx.begin(), cx.end());
        stem.back() -= 1;
        if (cy.size() > stem.size() && is_prefix(stem, cy)) record(p.less(y, x), "converse-witness", x, y);
      }
    }
  }
  out.verdict = out.failures == 0 ? "pass" : "fail";
  out.details = {{"counterexample", first}};
  return out;
}

// ---- wqo -------------------------------------------------------------------

bool seqs_bad(const std::vector<Seq>& s, const QuasiOrder& q) {
  return !first_good_pair(std::span<const Seq>(s), [&](const Seq& a, const Seq& b) { return higman_leq(a, b, q); });
}

Outcome wqo_higman(const Ctx& c) {
  const auto q = io::parse_quasi(c["order"]);
  return pass({{"leq", higman_leq(q.names.seq(c["lhs"]), q.names.seq(c["rhs"]), q.order)}});
}

Outcome wqo_kruskal(const Ctx& c) {
  const auto q = io::parse_quasi(c["order"]);
  return pass({{"leq", ktree_leq(io::parse_ktree(c["lhs"], q.names), io::parse_ktree(c["rhs"], q.names), q.order)}});
}

Outcome wqo_bad(const Ctx& c) {
  const auto q = io::parse_quasi(c["order"]);
  const auto good = is_bad(q.names.seq(c["seq"]), q.order);
  if (good) return fail({{"good_pair", pair_json(good)}});
  return pass({{"good_pair", nullptr}});
}

Outcome wqo_min_bad(const Ctx& c) {
  const auto q = io::parse_quasi(c["order"]);
  const auto s = min_bad_sequence(q.order, [](Nat a, Nat b) { return a < b; }, c["bound"].get<Nat>(),
                                  c["length"].get<std::size_t>());
  if (!s) return {"inconclusive", {{"sequence", nullptr}}, 1, 0};
  return pass({{"sequence", q.names.tokens(*s)}});
}

Outcome wqo_nw_step(const Ctx& c) {
  const auto q = io::parse_quasi(c["order"]);
  std::vector<Seq> in;
  for (const auto& s : c["seqs"]) in.push_back(q.names.seq(s));
  std::vector<std::size_t> subset;
  for (Nat i : io::parse_nats(c["subset"], "subset")) subset.push_back(i);
  const auto out = nash_williams_step(in, subset, q.order);
  json seqs = json::array();
  for (const auto& s : out) seqs.push_back(q.names.tokens(s));
  const bool bad = seqs_bad(out, q.order);
  const bool below = seq_less(std::span<const Seq>(out), std::span<const Seq>(in), length_less);
  return verdict(bad && below, {{"output", seqs}, {"bad", bad}, {"below", below}});
}

// ---- barrier ---------------------------------------------------------------

Outcome barrier_check(const Ctx& c) {
  const auto fc = check_fragment(io::parse_fragment(c["frag"]));
  Outcome o = pass({{"covered", fc.covered}, {"exited", fc.exited},
                    {"first_exit", fc.first_exit ? json(*fc.first_exit) : json(nullptr)}});
  o.verdict = std::string(to_string(fc.verdict));
  o.failures = fc.verdict == Verdict::Fail ? 1 : 0;
  return o;
}

Outcome barrier_tri(const Ctx& c) {
  return pass({{"tri", block_tri(io::parse_nats(c["lhs"], "lhs"), io::parse_nats(c["rhs"], "rhs"))}});
}

Outcome barrier_star(const Ctx& c) {
  return pass({{"fragment", io::to_json(star_fragment(io::parse_fragment(c["frag"])))}});
}

Outcome barrier_classify(const Ctx& c) {
  const auto q = io::parse_quasi(c["order"]);
  const auto cls = classify_array(io::parse_array(c["array"], q.names), io::parse_fragment(c["frag"]), q.order);
  return pass({{"class", cls.label()}, {"good", cls.good}, {"perfect", cls.perfect}, {"pairs", cls.pairs},
               {"good_pair", pair_json(cls.good_pair)}, {"bad_pair", pair_json(cls.bad_pair)}});
}

Outcome barrier_array_check(const Ctx& c) {
  const auto q = io::parse_quasi(c["order"]);
  const auto r = check_bad_partial_array(io::parse_array(c["array"], q.names), io::parse_fragment(c["frag"]), q.order);
  if (r.ok) return pass({{"condition", nullptr}});
  return fail({{"condition", r.failed_condition}, {"detail", r.detail}});
}

Outcome barrier_nwt_step(const Ctx& c) {
  const auto q = io::parse_quasi(c["order"]);
  const auto frag = io::parse_fragment(c["frag"]);
  const auto in = io::parse_array(c["array"], q.names);
  const auto out = nwt_improvement_step(in, io::parse_nats(c["subset"], "subset"), frag, q.order);
  const bool bad = check_bad_partial_array(out, frag, q.order).ok;
  const bool below = array_length_less(out, in);
  return verdict(bad && below, {{"output", io::to_json(out, q.names)}, {"bad", bad}, {"below", below}});
}

// ---- tree ------------------------------------------------------------------

Outcome tree_live(const Ctx& c) {
  const auto aut = io::parse_automaton(c["aut"]);
  const auto live = live_states(aut);
  json states = json::array();
  for (std::size_t s = 0; s < live.size(); ++s)
    if (live[s]) states.push_back(s);
  const bool start_live = aut.start() && live[*aut.start()];
  return pass({{"live", states}, {"start_live", start_live}});
}

Outcome tree_leftmost(const Ctx& c) {
  return pass({{"path", io::to_json(leftmost_path(io::parse_automaton(c["aut"])), io::Names{})}});
}

Outcome tree_minimal(const Ctx& c) {
  const auto aut = io::parse_automaton(c["aut"]);
  auto [f, p] = load_poset(c["order"]);
  return pass({{"path", io::to_json(minimal_path(aut, p), f.names)}});
}

Outcome tree_challenge(const Ctx& c) {
  const auto aut = io::parse_automaton(c["aut"]);
  auto [f, p] = load_poset(c["order"]);
  const auto candidate = io::parse_lasso(c["candidate"], f.names);
  std::vector<LassoPath> challengers;
  for (const auto& l : c["challengers"]) challengers.push_back(io::parse_lasso(l, f.names));
  const auto report = challenger_check(aut, candidate, challengers, p);
  json results = json::array();
  json counterexample;
  for (const auto& r : report.results) {
    results.push_back({{"challenger", io::to_json(r.challenger, f.names)}, {"is_path", r.is_path}, {"left_of", r.left_of}});
    if (r.is_path && r.left_of && counterexample.is_null()) counterexample = results.back()["challenger"];
  }
  Outcome o = verdict(report.relatively_minimal, {{"relatively_minimal", report.relatively_minimal},
                                                  {"results", results}, {"counterexample", counterexample}});
  o.checked = challengers.size();
  return o;
}

// ---- menger ----------------------------------------------------------------

Outcome menger_solve_cmd(const Ctx& c) {
  const auto g = io::parse_graph(c["graph"]);
  const auto sys = menger_solve(g.graph);
  json m = json::array();
  for (const auto& path : sys.m) m.push_back(g.names.tokens(path));
  return pass({{"M", m}, {"C", g.names.tokens(sys.c)}});
}

Outcome menger_waves(const Ctx& c) {
  const auto g = io::parse_graph(c["graph"]);
  const auto list = enumerate_waves(g.graph, c.has("cap") ? c["cap"].get<std::size_t>() : 100000);
  json waves = json::array();
  for (const auto& w : list.waves) waves.push_back(io::to_json(w, g.names));
  Outcome o = pass({{"waves", waves}, {"truncated", list.truncated}});
  if (list.truncated) o.verdict = "inconclusive";
  return o;
}

Outcome menger_max_wave(const Ctx& c) {
  const auto g = io::parse_graph(c["graph"]);
  const auto w = maximal_wave(g.graph);
  return pass({{"wave", io::to_json(w, g.names)}, {"terminals", g.names.tokens(terminals(w))}});
}

Outcome menger_encode(const Ctx& c) {
  const auto g = io::parse_graph(c["graph"]);
  const auto e = default_enumeration(g.graph);
  const auto seq = encode_wave(g.graph, e, io::parse_warp(c["wave"], g));
  return pass({{"sequence", io::to_json(seq, g.names)}});
}

Outcome menger_decode(const Ctx& c) {
  const auto g = io::parse_graph(c["graph"]);
  const auto e = default_enumeration(g.graph);
  const auto seq = io::parse_labels(c["sequence"], g.names);
  if (!wave_seq_valid(g.graph, e, seq)) return fail({{"valid", false}, {"sequence", c["sequence"]}});
  return pass({{"valid", true}, {"wave", io::to_json(decode_wave(g.graph, e, seq), g.names)}});
}

// ---- oracle ----------------------------------------------------------------

Outcome oracle_suite(const Ctx& c) {
  const auto r = suites::run(c["suite"].get<std::string>(), c.seed);
  return {r.pass ? "pass" : "fail",
          {{"suite", r.name}, {"stats", r.stats}, {"counterexample", r.counterexample}},
          r.checked,
          r.failures};
}

const Opt kTie{"--tie", Kind::Text, false, "choice among incomparable candidates: least|smallest|largest|strict"};

std::vector<Command> commands() {
  return {
      {"order", "validate", "close a relation and check it is a strict order", {{"--poset"}}, order_validate},
      {"order", "seq-less", "compare two sequences at their first difference", {{"--poset"}, {"--lhs"}, {"--rhs"}},
       order_seq_less},
      {"lexcode", "encode", "code table of a finite poset", {{"--poset"}, kTie}, lexcode_encode},
      {"lexcode", "decode", "decode a concatenation of element codes", {{"--poset"}, {"--coded"}, kTie},
       lexcode_decode},
      {"lexcode", "check-claims", "verify the code table properties", {{"--poset"}, kTie}, lexcode_check_claims},
      {"wqo", "higman", "subsequence embedding", {{"--order"}, {"--lhs"}, {"--rhs"}}, wqo_higman},
      {"wqo", "kruskal", "labelled tree embedding", {{"--order"}, {"--lhs"}, {"--rhs"}}, wqo_kruskal},
      {"wqo", "bad", "pass iff the sequence is bad", {{"--order"}, {"--seq"}}, wqo_bad},
      {"wqo", "min-bad", "least bad sequence under the natural size order",
       {{"--order"}, {"--bound", Kind::Int}, {"--length", Kind::Int}}, wqo_min_bad},
      {"wqo", "nw-step", "one minimal-bad-sequence improvement step", {{"--order"}, {"--seqs"}, {"--subset"}},
       wqo_nw_step},
      {"barrier", "check", "barrier conditions on a finite fragment", {{"--frag"}}, barrier_check},
      {"barrier", "tri", "shift relation between two blocks", {{"--lhs"}, {"--rhs"}}, barrier_tri},
      {"barrier", "star", "fragment of unions of shift pairs", {{"--frag"}}, barrier_star},
      {"barrier", "classify", "good/bad/perfect classification", {{"--frag"}, {"--array"}, {"--order"}},
       barrier_classify},
      {"barrier", "array-check", "pass iff the array is a bad partial array", {{"--frag"}, {"--array"}, {"--order"}},
       barrier_array_check},
      {"barrier", "nwt-step", "one bad-partial-array improvement step",
       {{"--frag"}, {"--array"}, {"--order"}, {"--subset"}}, barrier_nwt_step},
      {"tree", "live", "states with an infinite run", {{"--aut"}}, tree_live},
      {"tree", "leftmost", "leftmost infinite path", {{"--aut"}}, tree_leftmost},
      {"tree", "minimal", "minimal infinite path under a letter order", {{"--aut"}, {"--order"}}, tree_minimal},
      {"tree", "challenge", "pass iff no challenger is a path left of the candidate",
       {{"--aut"}, {"--order"}, {"--candidate"}, {"--challengers"}}, tree_challenge},
      {"menger", "solve", "disjoint paths and a separator of equal size", {{"--graph"}}, menger_solve_cmd},
      {"menger", "waves", "every wave", {{"--graph"}, {"--cap", Kind::Int, false}}, menger_waves},
      {"menger", "max-wave", "a maximal wave", {{"--graph"}}, menger_max_wave},
      {"menger", "encode", "label sequence of a wave", {{"--graph"}, {"--wave"}}, menger_encode},
      {"menger", "decode", "wave of a complete label sequence", {{"--graph"}, {"--sequence"}}, menger_decode},
  };
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite order-theory workbench"};
  app.require_subcommand(1);
  Ctx ctx;
  app.add_option("--seed", ctx.seed, "seed for randomized suites")->capture_default_str();

  auto table = commands();
  std::map<std::string, CLI::App*> groups;
  std::vector<std::pair<CLI::App*, const Command*>> leaves;
  std::map<std::string, std::string> raw_text;
  std::map<std::string, long long> raw_int;
  for (const auto& cmd : table) {
    auto& group = groups[cmd.group];
    if (!group) {
      group = app.add_subcommand(cmd.group);
      group->require_subcommand(1);
      group->fallthrough();
    }
    auto* leaf = group->add_subcommand(cmd.name, cmd.help);
    leaf->fallthrough();
    for (const auto& o : cmd.opts) {
      const std::string key = cmd.group + "." + cmd.name + "." + o.name;
      CLI::Option* opt = o.kind == Kind::Int ? leaf->add_option(o.name, raw_int[key], o.help)
                                             : leaf->add_option(o.name, raw_text[key], o.help);
      if (o.required) opt->required();
    }
    leaves.emplace_back(leaf, &cmd);
  }
  std::string suite;
  auto* oracle = app.add_subcommand("oracle", "run a named acceptance suite");
  oracle->fallthrough();
  oracle->add_option("suite", suite, "suite name")->required()->check(CLI::IsMember(suites::names()));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kPass : kUsage;
  }

  const Command* chosen = nullptr;
  std::string command;
  Handler fn;
  if (oracle->parsed()) {
    command = "oracle";
    ctx.inputs["suite"] = suite;
    ctx.inputs["seed"] = ctx.seed;
    fn = oracle_suite;
  } else {
    for (const auto& [leaf, cmd] : leaves) {
      if (leaf->parsed()) chosen = cmd;
    }
    command = chosen->group + " " + chosen->name;
    fn = chosen->fn;
  }

  Outcome outcome;
  try {
    if (chosen) {
      for (const auto& o : chosen->opts) {
        const std::string key = chosen->group + "." + chosen->name + "." + o.name;
        const std::string field = o.name.substr(2);
        auto* leaf = std::find_if(leaves.begin(), leaves.end(), [&](const auto& l) { return l.second == chosen; })->first;
        if (leaf->count(o.name) == 0) continue;
        if (o.kind == Kind::Int) {
          if (raw_int[key] < 0) throw io::ParseError(o.name + ": expected a non-negative integer");
          ctx.inputs[field] = raw_int[key];
        } else if (o.kind == Kind::Text) {
          ctx.inputs[field] = raw_text[key];
        } else {
          ctx.inputs[field] = io::load(raw_text[key], o.name);
        }
      }
    }
    outcome = fn(ctx);
  } catch (const io::ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const json::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const Error& e) {
    outcome = fail({{"error", std::string(to_string(e.code()))}, {"reason", kebab(to_string(e.code()))},
                    {"message", e.what()}});
  }

  const json report = {{"command", command},
                       {"inputs", io::digest(ctx.inputs)},
                       {"verdict", outcome.verdict},
                       {"details", outcome.details},
                       {"counters", {{"checked", outcome.checked}, {"failures", outcome.failures}}}};
  out << report.dump(2) << "\n";
  err << command << ": " << outcome.verdict << " (checked " << outcome.checked << ", failures " << outcome.failures
      << ")\n";
  if (outcome.verdict == "pass") return kPass;
  if (outcome.verdict == "inconclusive") return kInconclusive;
  return kFail;
}

}  // namespace ordwork::cli
