#include "rerail/automaton.hpp"
#include "rerail/chain.hpp"
#include "rerail/cli.hpp"
#include "rerail/error.hpp"
#include "rerail/lasso.hpp"
#include "rerail/membership.hpp"
#include "rerail/rerailing_build.hpp"
#include "rerail/synthesis.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>
#include <tuple>

namespace py = pybind11;
using namespace rerail;

namespace {

LassoWord lasso_of(const Automaton& a, const std::string& text) { return parse_lasso(text, a.alphabet()); }

std::vector<std::tuple<StateId, std::string, StateId, Color>> transitions_of(const Automaton& a) {
    std::vector<std::tuple<StateId, std::string, StateId, Color>> out;
    for (const auto& t : a.transitions()) out.emplace_back(t.src, a.alphabet().name(t.symbol), t.dst, t.color);
    return out;
}

} // namespace

PYBIND11_MODULE(_rerail, m) {
    m.doc() = "Rerailing automata: membership, minimization, verification and realizability.";

    auto error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", error.ptr());

    py::class_<Automaton>(m, "Automaton")
        .def_static("parse", &parse_raf, py::arg("text"))
        .def_static("load", &load_raf, py::arg("path"))
        .def("to_text", &write_raf)
        .def_property_readonly("state_count", &Automaton::state_count)
        .def_property_readonly("initial", &Automaton::initial)
        .def_property_readonly("max_color", &Automaton::max_color)
        .def_property_readonly("alphabet", [](const Automaton& a) { return a.alphabet().symbols(); })
        .def_property_readonly("transitions", &transitions_of)
        .def("state_name", &Automaton::state_name, py::arg("state"))
        .def("is_complete", &Automaton::is_complete)
        .def("is_deterministic", &Automaton::is_deterministic)
        .def("is_color_homogeneous", &Automaton::is_color_homogeneous)
        .def("__eq__", [](const Automaton& a, const Automaton& b) { return a == b; })
        .def("__repr__", [](const Automaton& a) {
            return "<Automaton states=" + std::to_string(a.state_count()) +
                   " transitions=" + std::to_string(a.transitions().size()) + ">";
        });

    m.def(
        "member",
        [](const Automaton& a, const std::string& lasso, const std::string& semantics) {
            return member(a, parse_semantics(semantics), lasso_of(a, lasso));
        },
        py::arg("automaton"), py::arg("lasso"), py::arg("semantics") = "rerailing",
        "Membership of a lasso word written as \"stem;cycle\" with '.'-separated symbols.");

    m.def(
        "equivalent",
        [](const Automaton& a, const Automaton& b, const std::string& sem_a, const std::string& sem_b,
           std::size_t stem, std::size_t cycle) -> std::optional<std::string> {
            if (a.alphabet() != b.alphabet()) throw Error("automata have different alphabets");
            const auto r = bounded_equivalence(a.alphabet().size(), oracle_for(a, parse_semantics(sem_a)),
                                               oracle_for(b, parse_semantics(sem_b)), {stem, cycle});
            if (r.equivalent) return std::nullopt;
            return format_lasso(*r.counterexample, a.alphabet());
        },
        py::arg("a"), py::arg("b"), py::arg("sem_a") = "rerailing", py::arg("sem_b") = "rerailing",
        py::arg("bound_stem") = 4, py::arg("bound_cycle") = 4,
        "None if no lasso within the bounds separates the two automata, otherwise the first such lasso.");

    m.def(
        "minimize",
        [](const Automaton& a, bool optimized_jloop) { return minimize_rerailing(a, {optimized_jloop}); },
        py::arg("automaton"), py::arg("optimized_jloop") = false);

    m.def(
        "verify",
        [](const Automaton& a, std::size_t stem, std::size_t cycle) -> std::optional<py::dict> {
            const VerifyResult r = verify_rerailing_bounded(a, {stem, cycle});
            if (r.ok) return std::nullopt;
            py::dict d;
            d["lasso"] = format_lasso(r.violation->word, a.alphabet());
            d["state"] = r.violation->state;
            d["position"] = r.violation->position;
            d["color"] = r.violation->color;
            d["kind"] = r.violation->kind;
            return d;
        },
        py::arg("automaton"), py::arg("bound_stem") = 4, py::arg("bound_cycle") = 4,
        "None if the rerailing property holds on all lassos within the bounds, otherwise the first violation.");

    m.def(
        "decompose", [](const Automaton& a) { return write_chain(decompose_rerailing(a)); }, py::arg("automaton"),
        "Chain of co-Buchi automata for the automaton, in the text format read by the command line tool.");

    m.def(
        "realizable",
        [](const Automaton& a, std::vector<std::string> inputs, std::vector<std::string> outputs) {
            return realizability(a, IoAlphabet(std::move(inputs), std::move(outputs))).realizable;
        },
        py::arg("automaton"), py::arg("inputs"), py::arg("outputs"));

    m.def(
        "run_cli",
        [](const std::vector<std::string>& args) {
            std::ostringstream out, err;
            const int code = cli::run(args, out, err);
            return std::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs the command line tool in process and returns (exit code, stdout, stderr).");
}
