// Python module _core: the main operations over plain lists and tuples.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ordwork/barrier.hpp"
#include "ordwork/error.hpp"
#include "ordwork/lexcode.hpp"
#include "ordwork/menger.hpp"
#include "ordwork/regular_tree.hpp"
#include "ordwork/wqo.hpp"

namespace py = pybind11;
using namespace ordwork;

namespace {

using Delta = std::vector<std::tuple<State, Nat, State>>;
using Edges = std::vector<std::pair<Vertex, Vertex>>;

TieBreak tie_of(const std::string& t) {
  if (t == "least") return TieBreak::LeastCode;
  if (t == "smallest") return TieBreak::SmallestId;
  if (t == "largest") return TieBreak::LargestId;
  if (t == "strict") return TieBreak::Strict;
  throw py::value_error("tie must be least, smallest, largest or strict");
}

LexCode code_of(const std::vector<Nat>& elements, const std::vector<Pair>& lt, const std::string& tie) {
  return encode_order(validate_poset(lt, elements), tie_of(tie));
}

TreeAutomaton automaton(std::size_t alphabet, std::size_t states, std::optional<State> start, const Delta& delta) {
  TreeAutomaton a(alphabet, states, start);
  for (const auto& [s, x, t] : delta) a.add_transition(s, x, t);
  return a;
}

std::pair<Seq, Seq> lasso(const LassoPath& p) { return {p.prefix, p.cycle}; }

using Labels = std::vector<std::pair<Nat, std::vector<Vertex>>>;

Labels labels_out(const std::vector<WaveLabel>& seq) {
  Labels out;
  for (const auto& l : seq) out.emplace_back(l.tag, l.payload);
  return out;
}

std::vector<WaveLabel> labels_in(const Labels& seq) {
  std::vector<WaveLabel> out;
  for (const auto& [tag, payload] : seq) out.push_back({tag, payload});
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite order-theory workbench";
  static py::exception<Error> error(m, "OrdworkError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("seq_less", [](const std::vector<Nat>& elements, const std::vector<Pair>& lt, const Seq& a, const Seq& b) {
    return seq_less(a, b, validate_poset(lt, elements));
  }, py::arg("elements"), py::arg("lt"), py::arg("lhs"), py::arg("rhs"));

  m.def("encode_order", [](const std::vector<Nat>& elements, const std::vector<Pair>& lt, const std::string& tie) {
    const auto code = code_of(elements, lt, tie);
    std::map<Nat, Seq> out;
    for (Nat x : elements) out[x] = code.base_code(x);
    return out;
  }, py::arg("elements"), py::arg("lt"), py::arg("tie") = "least", "Code of each element (without the element suffix).");

  m.def("encode_seq", [](const std::vector<Nat>& elements, const std::vector<Pair>& lt, const Seq& s,
                         const std::string& tie) { return encode_seq(code_of(elements, lt, tie), s); },
        py::arg("elements"), py::arg("lt"), py::arg("seq"), py::arg("tie") = "least");

  m.def("decode_path", [](const std::vector<Nat>& elements, const std::vector<Pair>& lt, const Seq& coded,
                          const std::string& tie) { return decode_path(code_of(elements, lt, tie), coded); },
        py::arg("elements"), py::arg("lt"), py::arg("coded"), py::arg("tie") = "least");

  m.def("higman_leq", [](const Seq& s, const Seq& t, const std::vector<Nat>& elements, const std::vector<Pair>& leq) {
    return higman_leq(s, t, QuasiOrder::closure_of(elements, leq));
  }, py::arg("lhs"), py::arg("rhs"), py::arg("elements"), py::arg("leq"));

  m.def("is_bad", [](const Seq& s, const std::vector<Nat>& elements, const std::vector<Pair>& leq) {
    return is_bad(s, QuasiOrder::closure_of(elements, leq));
  }, py::arg("seq"), py::arg("elements"), py::arg("leq"), "None when bad, else the first good pair.");

  m.def("ktree_leq", [](const std::vector<long>& parent_s, const std::vector<Nat>& labels_s,
                        const std::vector<long>& parent_t, const std::vector<Nat>& labels_t,
                        const std::vector<Nat>& elements, const std::vector<Pair>& leq) {
    return ktree_leq(KTree::from_parents(parent_s, labels_s), KTree::from_parents(parent_t, labels_t),
                     QuasiOrder::closure_of(elements, leq));
  }, py::arg("parent_s"), py::arg("labels_s"), py::arg("parent_t"), py::arg("labels_t"), py::arg("elements"),
        py::arg("leq"));

  m.def("block_tri", [](const Block& b, const Block& b2) { return block_tri(b, b2); });

  m.def("star_fragment", [](Nat window, const std::vector<Block>& blocks) {
    return star_fragment(BarrierFragment(window, blocks)).blocks();
  }, py::arg("window"), py::arg("blocks"));

  m.def("leftmost_path", [](std::size_t alphabet, std::size_t states, std::optional<State> start, const Delta& delta) {
    return lasso(leftmost_path(automaton(alphabet, states, start, delta)));
  }, py::arg("alphabet"), py::arg("states"), py::arg("start"), py::arg("delta"), "(prefix, cycle)");

  m.def("minimal_path", [](std::size_t alphabet, std::size_t states, std::optional<State> start, const Delta& delta,
                           const std::vector<Pair>& lt) {
    std::vector<Nat> letters(alphabet);
    for (Nat i = 0; i < alphabet; ++i) letters[i] = i;
    return lasso(minimal_path(automaton(alphabet, states, start, delta), validate_poset(lt, letters)));
  }, py::arg("alphabet"), py::arg("states"), py::arg("start"), py::arg("delta"), py::arg("lt"));

  m.def("menger_solve", [](std::size_t n, const Edges& edges, const std::vector<Vertex>& a,
                           const std::vector<Vertex>& b) {
    const auto sys = menger_solve(MengerGraph(n, edges, a, b));
    return std::make_pair(sys.m, sys.c);
  }, py::arg("n"), py::arg("edges"), py::arg("A"), py::arg("B"), "(paths, separator)");

  m.def("maximal_wave", [](std::size_t n, const Edges& edges, const std::vector<Vertex>& a,
                           const std::vector<Vertex>& b) { return maximal_wave(MengerGraph(n, edges, a, b)).paths; },
        py::arg("n"), py::arg("edges"), py::arg("A"), py::arg("B"));

  m.def("encode_wave", [](std::size_t n, const Edges& edges, const std::vector<Vertex>& a,
                          const std::vector<Vertex>& b, const std::vector<Path>& wave) {
    const MengerGraph g(n, edges, a, b);
    return labels_out(encode_wave(g, default_enumeration(g), make_warp(g, wave)));
  }, py::arg("n"), py::arg("edges"), py::arg("A"), py::arg("B"), py::arg("wave"));

  m.def("decode_wave", [](std::size_t n, const Edges& edges, const std::vector<Vertex>& a,
                          const std::vector<Vertex>& b, const Labels& seq) {
    const MengerGraph g(n, edges, a, b);
    return decode_wave(g, default_enumeration(g), labels_in(seq)).paths;
  }, py::arg("n"), py::arg("edges"), py::arg("A"), py::arg("B"), py::arg("sequence"));
}
