#pragma once

#include "rerail/automaton.hpp"
#include "rerail/lasso.hpp"

#include <string>
#include <vector>

namespace rerail {

// Deterministic complete automaton whose states stand for residual languages.
struct Rlta {
    Alphabet alphabet;
    std::size_t state_count = 1;
    StateId initial = 0;
    std::vector<StateId> delta; // state * |alphabet| + symbol
    std::vector<std::string> names;

    StateId next(StateId s, SymbolId x) const { return delta[s * alphabet.size() + x]; }
    std::string state_name(StateId s) const;
    void validate() const;

    bool operator==(const Rlta&) const = default;
};

Rlta single_state_rlta(const Alphabet& alphabet);

// "rlta 1" followed by a RAF body whose transitions carry no color.
std::string write_rlta(const Rlta& r);
Rlta parse_rlta(const std::string& text);

namespace detail {
struct Line;
Rlta parse_rlta_lines(std::span<const Line> lines, std::size_t header_line);
void write_rlta_body(std::string& out, const Rlta& r);
} // namespace detail

} // namespace rerail
