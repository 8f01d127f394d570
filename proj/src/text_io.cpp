#include "text_io.hpp"

#include "rerail/error.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <tuple>

namespace rerail::detail {

std::vector<Line> tokenize(const std::string& text) {
    std::vector<Line> lines;
    std::istringstream in(text);
    std::string raw;
    std::size_t number = 0;
    while (std::getline(in, raw)) {
        ++number;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            if (raw[i] == ' ' || raw[i] == '\t') {
                ++i;
            } else if (raw[i] == '"') {
                auto close = raw.find('"', i + 1);
                if (close == std::string::npos) throw ParseError(number, "unterminated string");
                line.tokens.push_back(raw.substr(i + 1, close - i - 1));
                i = close + 1;
            } else {
                auto end = raw.find_first_of(" \t", i);
                if (end == std::string::npos) end = raw.size();
                line.tokens.push_back(raw.substr(i, end - i));
                i = end;
            }
        }
        if (line.tokens.empty() || line.tokens.front().starts_with('#')) continue;
        lines.push_back(std::move(line));
    }
    return lines;
}

std::uint64_t parse_index(const Line& line, std::size_t token, const char* what) {
    const std::string& s = line.tokens.at(token);
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw ParseError(line.number, std::string("expected non-negative integer for ") + what +
                                          ", got '" + s + "'");
    return value;
}

void expect_arity(const Line& line, std::size_t n) {
    if (line.tokens.size() != n)
        throw ParseError(line.number, "'" + line.tokens.front() + "' expects " +
                                          std::to_string(n - 1) + " argument(s)");
}

std::string quote(const std::string& s) { return "\"" + s + "\""; }

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

RafBody parse_raf_body(std::span<const Line> lines, bool colors, std::size_t header_line) {
    RafBody body;
    bool have_alphabet = false, have_states = false, have_initial = false;
    std::vector<std::pair<std::size_t, std::string>> pending_names;
    std::size_t initial_line = header_line;

    for (const Line& line : lines) {
        const std::string& kw = line.tokens.front();
        if (kw == "alphabet") {
            if (have_alphabet) throw ParseError(line.number, "duplicate 'alphabet'");
            std::vector<std::string> syms(line.tokens.begin() + 1, line.tokens.end());
            if (syms.empty()) throw ParseError(line.number, "empty alphabet");
            try {
                body.alphabet = Alphabet(std::move(syms));
            } catch (const Error& e) {
                throw ParseError(line.number, e.what());
            }
            have_alphabet = true;
        } else if (kw == "states") {
            expect_arity(line, 2);
            if (have_states) throw ParseError(line.number, "duplicate 'states'");
            body.states = parse_index(line, 1, "state count");
            have_states = true;
        } else if (kw == "initial") {
            expect_arity(line, 2);
            if (have_initial) throw ParseError(line.number, "duplicate 'initial'");
            body.initial = static_cast<StateId>(parse_index(line, 1, "initial state"));
            initial_line = line.number;
            have_initial = true;
        } else if (kw == "name") {
            expect_arity(line, 3);
            pending_names.emplace_back(parse_index(line, 1, "state"), line.tokens[2]);
            if (have_states && pending_names.back().first >= body.states)
                throw ParseError(line.number, "state index out of range");
        } else if (kw == "trans") {
            expect_arity(line, colors ? 5 : 4);
            if (!have_alphabet || !have_states)
                throw ParseError(line.number, "'trans' before 'alphabet' and 'states'");
            auto src = parse_index(line, 1, "source state");
            auto sym = body.alphabet.find(line.tokens[2]);
            auto dst = parse_index(line, 3, "target state");
            if (src >= body.states || dst >= body.states)
                throw ParseError(line.number, "state index out of range");
            if (!sym) throw ParseError(line.number, "unknown symbol '" + line.tokens[2] + "'");
            Color c = colors ? static_cast<Color>(parse_index(line, 4, "color")) : 0;
            body.transitions.push_back({static_cast<StateId>(src), *sym, static_cast<StateId>(dst), c});
            body.transition_lines.push_back(line.number);
        } else {
            throw ParseError(line.number, "unknown keyword '" + kw + "'");
        }
    }
    if (!have_alphabet) throw ParseError(header_line, "missing 'alphabet'");
    if (!have_states) throw ParseError(header_line, "missing 'states'");
    if (!have_initial) throw ParseError(header_line, "missing 'initial'");
    if (body.states == 0) throw ParseError(header_line, "automaton needs at least one state");
    if (body.initial >= body.states) throw ParseError(initial_line, "initial state out of range");
    if (!pending_names.empty()) {
        body.names.resize(body.states);
        for (std::size_t q = 0; q < body.states; ++q) body.names[q] = std::to_string(q);
        for (auto& [q, n] : pending_names) {
            if (q >= body.states) throw ParseError(header_line, "named state out of range");
            body.names[q] = n;
        }
    }
    return body;
}

Automaton build_automaton(const RafBody& body) {
    // Conflicts are reported against the later of the two lines.
    std::vector<std::size_t> order(body.transitions.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const auto& x = body.transitions[a];
        const auto& y = body.transitions[b];
        return std::tie(x.src, x.symbol, x.dst) < std::tie(y.src, y.symbol, y.dst);
    });
    for (std::size_t k = 1; k < order.size(); ++k) {
        const auto& x = body.transitions[order[k - 1]];
        const auto& y = body.transitions[order[k]];
        if (x.src == y.src && x.symbol == y.symbol && x.dst == y.dst && x.color != y.color)
            throw ParseError(std::max(body.transition_lines[order[k - 1]], body.transition_lines[order[k]]),
                             "conflicting colors for transition " + std::to_string(x.src) + " " +
                                 body.alphabet.name(x.symbol) + " " + std::to_string(x.dst));
    }
    return Automaton(body.alphabet, body.states, body.initial, body.transitions, body.names);
}

void write_raf_body(std::string& out, const Alphabet& alphabet, std::size_t states, StateId initial,
                    const std::vector<std::string>& names) {
    out += "alphabet";
    for (const auto& s : alphabet.symbols()) out += " " + s;
    out += "\nstates " + std::to_string(states) + "\ninitial " + std::to_string(initial) + "\n";
    for (std::size_t q = 0; q < names.size(); ++q)
        out += "name " + std::to_string(q) + " " + quote(names[q]) + "\n";
}

} // namespace rerail::detail
