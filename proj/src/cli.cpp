#include "rerail/cli.hpp"

#include "rerail/automaton.hpp"
#include "rerail/chain.hpp"
#include "rerail/error.hpp"
#include "rerail/floating.hpp"
#include "rerail/membership.hpp"
#include "rerail/rerailing_build.hpp"
#include "rerail/synthesis.hpp"
#include "text_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

namespace rerail::cli {

namespace {

// A language loaded from a file under one of the supported semantics.
struct Language {
    Alphabet alphabet;
    MembershipOracle oracle;
};

Language load_language(const std::string& path, const std::string& sem_name) {
    const Semantics sem = parse_semantics(sem_name);
    const std::string text = detail::read_file(path);
    if (sem == Semantics::Chain) {
        auto c = std::make_shared<Chain>(parse_chain(text));
        return {c->alphabet, [c](const LassoWord& w) { return chain_member(*c, w); }};
    }
    if (sem == Semantics::Floating) {
        auto c = std::make_shared<FloatingChain>(parse_floating_chain(text));
        return {c->rlta->alphabet, [c](const LassoWord& w) { return floating_chain_member(*c, w); }};
    }
    auto a = std::make_shared<Automaton>(parse_raf(text));
    if (sem != Semantics::ParityDet && !a->is_complete())
        throw Error("'" + path + "' is not complete");
    oracle_for(*a, sem); // validates the semantics preconditions
    return {a->alphabet(), [a, sem](const LassoWord& w) { return member(*a, sem, w); }};
}

void emit(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error("cannot write '" + path + "'");
    f << text;
}

// Either a "cocoa 1" chain or an "fchain 1" floating chain.
FloatingChain load_any_chain(const std::string& path) {
    const std::string text = detail::read_file(path);
    auto lines = detail::tokenize(text);
    if (!lines.empty() && lines.front().tokens.front() == "cocoa") return floating_chain_of(parse_chain(text));
    return parse_floating_chain(text);
}

std::string dot_of(const Automaton& a) {
    std::ostringstream s;
    s << "digraph rerail {\n  rankdir=LR;\n  init [shape=point];\n  init -> q" << a.initial() << ";\n";
    for (StateId q = 0; q < a.state_count(); ++q)
        s << "  q" << q << " [label=\"" << a.state_name(q) << "\"];\n";
    for (const auto& t : a.transitions())
        s << "  q" << t.src << " -> q" << t.dst << " [label=\"" << a.alphabet().name(t.symbol) << ":" << t.color
          << "\"];\n";
    s << "}\n";
    return s.str();
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rerailing automata toolkit", "rerail"};
    app.require_subcommand(1);

    std::string input, output, chain_path, file_a, file_b, sem = "rerailing", sem_a = "rerailing",
                                                          sem_b = "rerailing", lasso, inputs, outputs, dump_game;
    std::size_t bound_stem = 4, bound_cycle = 4;
    bool optimized = false, dot = false;
    auto bounds = [&](CLI::App* cmd) {
        cmd->add_option("--bound-stem", bound_stem, "Maximal stem length")->check(CLI::PositiveNumber);
        cmd->add_option("--bound-cycle", bound_cycle, "Maximal cycle length")->check(CLI::PositiveNumber);
    };

    auto* membership = app.add_subcommand("membership", "Decide membership of a lasso word");
    membership->add_option("-i", input, "Automaton or chain file")->required();
    membership->add_option("--sem", sem, "rerailing|parity-exists|parity-det|cobuchi|chain|floating");
    membership->add_option("--lasso", lasso, "Lasso 'stem;cycle', symbols separated by '.'")->required();

    auto* decompose = app.add_subcommand("decompose", "Decompose a rerailing automaton into a chain");
    decompose->add_option("-i", input, "RAF file")->required();
    decompose->add_option("-o", output, "Chain output file");

    auto* rlta = app.add_subcommand("rlta", "Build the residual language tracking automaton");
    auto* rlta_in = rlta->add_option("-i", input, "RAF file (decomposed first)");
    rlta->add_option("--chain", chain_path, "Chain file")->excludes(rlta_in);
    rlta->add_option("-o", output, "RLTA output file");

    auto* build = app.add_subcommand("build-min", "Build a rerailing automaton from a (floating) chain");
    build->add_option("--chain", chain_path, "Chain or floating-chain file")->required();
    build->add_option("-o", output, "RAF output file");
    build->add_flag("--optimized-jloop", optimized, "Start the level loop at the recursion depth");

    auto* minimize = app.add_subcommand("minimize", "Minimize a rerailing automaton");
    minimize->add_option("-i", input, "RAF file")->required();
    minimize->add_option("-o", output, "RAF output file");
    minimize->add_flag("--optimized-jloop", optimized, "Start the level loop at the recursion depth");

    auto* equiv = app.add_subcommand("equiv", "Compare two languages on bounded lassos");
    equiv->add_option("-a", file_a, "First file")->required();
    equiv->add_option("-b", file_b, "Second file")->required();
    equiv->add_option("--sem-a", sem_a, "Semantics of the first file");
    equiv->add_option("--sem-b", sem_b, "Semantics of the second file");
    bounds(equiv);

    auto* verify = app.add_subcommand("verify", "Check the rerailing property on bounded lassos");
    verify->add_option("-i", input, "RAF file")->required();
    bounds(verify);

    auto* realize = app.add_subcommand("realizability", "Decide realizability of a specification");
    realize->add_option("-i", input, "RAF file over symbols 'in|out'")->required();
    realize->add_option("--inputs", inputs, "Comma-separated input symbols")->required();
    realize->add_option("--outputs", outputs, "Comma-separated output symbols")->required();
    realize->add_option("--dump-game", dump_game, "Write the parity game to this file");

    auto* stats = app.add_subcommand("stats", "Print automaton statistics");
    stats->add_option("-i", input, "RAF file")->required();
    stats->add_flag("--dot", dot, "Print a Graphviz rendering instead");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitError;
    }

    try {
        const LassoBounds lb{bound_stem, bound_cycle};
        if (membership->parsed()) {
            Language lang = load_language(input, sem);
            const LassoWord w = parse_lasso(lasso, lang.alphabet);
            if (lang.oracle(w)) {
                out << "accept\n";
                return kExitOk;
            }
            out << "reject\nwitness lasso=" << format_lasso(canonicalize(w), lang.alphabet) << "\n";
            return kExitNegative;
        }
        if (decompose->parsed()) {
            emit(write_chain(decompose_rerailing(load_raf(input))), output, out);
            return kExitOk;
        }
        if (rlta->parsed()) {
            if (input.empty() && chain_path.empty()) throw Error("rlta needs -i or --chain");
            const Chain c = input.empty() ? parse_chain(detail::read_file(chain_path))
                                          : decompose_rerailing(trim_unreachable(load_raf(input)));
            emit(write_rlta(build_rlta_chain(c).rlta), output, out);
            return kExitOk;
        }
        if (build->parsed()) {
            const Automaton a = build_minimal(load_any_chain(chain_path), {optimized});
            emit(write_raf(a), output, out);
            if (!output.empty() && output != "-") out << "states: " << a.state_count() << "\n";
            return kExitOk;
        }
        if (minimize->parsed()) {
            const Automaton in = load_raf(input);
            const Automaton a = minimize_rerailing(in, {optimized});
            emit(write_raf(a), output, out);
            if (!output.empty() && output != "-")
                out << "states: " << in.state_count() << " -> " << a.state_count() << "\n";
            return kExitOk;
        }
        if (equiv->parsed()) {
            Language la = load_language(file_a, sem_a);
            Language lb2 = load_language(file_b, sem_b);
            if (la.alphabet != lb2.alphabet) throw Error("alphabets differ");
            auto r = bounded_equivalence(la.alphabet.size(), la.oracle, lb2.oracle, lb);
            if (r.equivalent) {
                out << "equivalent (within bounds)\n";
                return kExitOk;
            }
            const bool in_a = la.oracle(*r.counterexample);
            out << "not equivalent\ncounterexample lasso=" << format_lasso(*r.counterexample, la.alphabet)
                << " a=" << (in_a ? "accept" : "reject") << " b=" << (in_a ? "reject" : "accept") << "\n";
            return kExitNegative;
        }
        if (verify->parsed()) {
            const Automaton a = load_raf(input);
            auto r = verify_rerailing_bounded(a, lb);
            if (r.ok) {
                out << "rerailing on all " << r.lassos_checked << " lassos (within bounds)\n";
                return kExitOk;
            }
            const auto& v = *r.violation;
            out << "violation\nlasso=" << format_lasso(v.word, a.alphabet()) << " state=" << a.state_name(v.state)
                << " pos=" << v.position << " color=" << v.color << " kind=" << v.kind << "\n";
            return kExitNegative;
        }
        if (realize->parsed()) {
            const Automaton a = load_raf(input);
            if (!a.is_color_homogeneous()) err << "warning: specification is not color-homogeneous\n";
            auto r = realizability(a, IoAlphabet(split_list(inputs), split_list(outputs)));
            if (!dump_game.empty()) {
                std::ofstream f(dump_game, std::ios::binary);
                if (!f) throw Error("cannot write '" + dump_game + "'");
                f << r.game.arena.dump();
                for (Vertex v = 0; v < r.game.labels.size(); ++v) f << "# " << v << " " << r.game.labels[v] << "\n";
            }
            if (r.realizable) {
                out << "realizable\n";
                return kExitOk;
            }
            out << "unrealizable\nvertex=" << r.game.initial << " winner=1\n";
            return kExitNegative;
        }
        if (stats->parsed()) {
            const Automaton a = load_raf(input);
            if (dot) {
                out << dot_of(a);
                return kExitOk;
            }
            out << "states: " << a.state_count() << "\n"
                << "symbols: " << a.alphabet().size() << "\n"
                << "transitions: " << a.transitions().size() << "\n"
                << "max color: " << a.max_color() << "\n"
                << "complete: " << (a.is_complete() ? "yes" : "no") << "\n"
                << "deterministic: " << (a.is_deterministic() ? "yes" : "no") << "\n"
                << "color-homogeneous: " << (a.is_color_homogeneous() ? "yes" : "no") << "\n";
            return kExitOk;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}

} // namespace rerail::cli
