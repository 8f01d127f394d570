#pragma once

// Line-oriented tokenizer shared by the RAF, chain and floating-chain readers.

#include "rerail/automaton.hpp"

#include <span>
#include <string>
#include <vector>

namespace rerail::detail {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

// Drops blank lines and lines whose first non-space character is '#'.
// Double-quoted tokens may contain spaces.
std::vector<Line> tokenize(const std::string& text);

std::uint64_t parse_index(const Line& line, std::size_t token, const char* what);
void expect_arity(const Line& line, std::size_t n);

std::string quote(const std::string& s);
std::string read_file(const std::string& path);

struct RafBody {
    Alphabet alphabet;
    std::size_t states = 0;
    StateId initial = 0;
    std::vector<std::string> names;
    std::vector<Transition> transitions;
    std::vector<std::size_t> transition_lines;
};

// Parses the keyword lines of a RAF body (everything after the header line).
// With colors == false transitions take the form "trans src sym dst".
RafBody parse_raf_body(std::span<const Line> lines, bool colors, std::size_t header_line);

Automaton build_automaton(const RafBody& body);

void write_raf_body(std::string& out, const Alphabet& alphabet, std::size_t states, StateId initial,
                    const std::vector<std::string>& names);

} // namespace rerail::detail
