#pragma once

#include "rerail/automaton.hpp"
#include "rerail/parity_game.hpp"

#include <string>
#include <vector>

namespace rerail {

// Input/output split of a combined alphabet whose symbols are named "in|out".
class IoAlphabet {
public:
    IoAlphabet(std::vector<std::string> inputs, std::vector<std::string> outputs);

    const std::vector<std::string>& inputs() const { return inputs_; }
    const std::vector<std::string>& outputs() const { return outputs_; }
    static std::string combined_name(const std::string& in, const std::string& out) { return in + "|" + out; }

    // symbol(x, y) = index of "x|y" in the automaton alphabet; throws unless the
    // alphabet is exactly the product.
    std::vector<std::vector<SymbolId>> bind(const Alphabet& alphabet) const;

private:
    std::vector<std::string> inputs_;
    std::vector<std::string> outputs_;
};

struct RealizabilityGame {
    GameArena arena;
    Vertex initial;
    std::vector<std::string> labels; // human-readable vertex names
};

RealizabilityGame build_realizability_game(const Automaton& r, const IoAlphabet& io);

struct RealizabilityResult {
    bool realizable;
    RealizabilityGame game;
    GameSolution solution;
};

RealizabilityResult realizability(const Automaton& r, const IoAlphabet& io);

} // namespace rerail
