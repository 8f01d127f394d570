#include "rerail/synthesis.hpp"

#include "rerail/error.hpp"

#include <map>
#include <set>

namespace rerail {

IoAlphabet::IoAlphabet(std::vector<std::string> inputs, std::vector<std::string> outputs)
    : inputs_(std::move(inputs)), outputs_(std::move(outputs)) {
    if (inputs_.empty() || outputs_.empty()) throw Error("inputs and outputs must be non-empty");
    for (const auto* side : {&inputs_, &outputs_}) {
        std::set<std::string> seen;
        for (const auto& s : *side) {
            if (s.empty() || s.find('|') != std::string::npos) throw Error("invalid io symbol '" + s + "'");
            if (!seen.insert(s).second) throw Error("duplicate io symbol '" + s + "'");
        }
    }
}

std::vector<std::vector<SymbolId>> IoAlphabet::bind(const Alphabet& alphabet) const {
    if (alphabet.size() != inputs_.size() * outputs_.size())
        throw Error("alphabet is not the product of inputs and outputs");
    std::vector<std::vector<SymbolId>> table(inputs_.size(), std::vector<SymbolId>(outputs_.size()));
    for (std::size_t x = 0; x < inputs_.size(); ++x)
        for (std::size_t y = 0; y < outputs_.size(); ++y) {
            auto id = alphabet.find(combined_name(inputs_[x], outputs_[y]));
            if (!id) throw Error("alphabet lacks symbol '" + combined_name(inputs_[x], outputs_[y]) + "'");
            table[x][y] = *id;
        }
    return table;
}

RealizabilityGame build_realizability_game(const Automaton& r, const IoAlphabet& io) {
    const auto sym = io.bind(r.alphabet());
    const std::size_t n = r.state_count(), ni = io.inputs().size(), no = io.outputs().size();
    const Color neutral = r.max_color();

    RealizabilityGame game;
    GameArena& g = game.arena;
    for (StateId q = 0; q < n; ++q) {
        g.add_vertex(0, neutral);
        game.labels.push_back("state " + r.state_name(q));
    }
    for (StateId q = 0; q < n; ++q)
        for (std::size_t y = 0; y < no; ++y) {
            g.add_vertex(1, neutral);
            game.labels.push_back("output " + r.state_name(q) + " " + io.outputs()[y]);
        }
    auto output_vertex = [&](StateId q, std::size_t y) { return static_cast<Vertex>(n + q * no + y); };

    // Class vertices are shared by every (q, x, y) that realizes the same (set, color).
    std::map<std::pair<std::vector<StateId>, Color>, Vertex> classes;
    for (StateId q = 0; q < n; ++q)
        for (std::size_t y = 0; y < no; ++y) {
            g.add_edge(q, output_vertex(q, y));
            for (std::size_t x = 0; x < ni; ++x) {
                std::map<Color, std::vector<StateId>> by_color;
                for (const auto& t : r.successors(q, sym[x][y])) by_color[t.color].push_back(t.dst);
                if (by_color.empty())
                    throw Error("empty successor class at state " + r.state_name(q) + " on " +
                                r.alphabet().name(sym[x][y]));
                for (auto& [c, targets] : by_color) {
                    auto [it, fresh] = classes.try_emplace({targets, c}, 0);
                    if (fresh) {
                        it->second = g.add_vertex(c % 2 == 1 ? 0 : 1, c);
                        std::string label = "class {";
                        for (std::size_t i = 0; i < targets.size(); ++i)
                            label += (i ? "," : "") + r.state_name(targets[i]);
                        game.labels.push_back(label + "} color " + std::to_string(c));
                        for (StateId t : targets) g.add_edge(it->second, t);
                    }
                    g.add_edge(output_vertex(q, y), it->second);
                }
            }
        }
    game.initial = r.initial();
    return game;
}

RealizabilityResult realizability(const Automaton& r, const IoAlphabet& io) {
    RealizabilityGame game = build_realizability_game(r, io);
    GameSolution sol = solve(game.arena);
    const bool ok = sol.wins0(game.initial);
    return {ok, std::move(game), std::move(sol)};
}

} // namespace rerail
