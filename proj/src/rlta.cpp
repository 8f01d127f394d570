#include "rerail/rlta.hpp"

#include "rerail/error.hpp"
#include "text_io.hpp"

namespace rerail {

std::string Rlta::state_name(StateId s) const { return names.empty() ? std::to_string(s) : names.at(s); }

void Rlta::validate() const {
    if (state_count == 0) throw Error("RLTA needs at least one state");
    if (initial >= state_count) throw Error("RLTA initial state out of range");
    if (delta.size() != state_count * alphabet.size()) throw Error("RLTA must be complete and deterministic");
    for (auto t : delta)
        if (t >= state_count) throw Error("RLTA transition target out of range");
    if (!names.empty() && names.size() != state_count) throw Error("RLTA name table size mismatch");
}

Rlta single_state_rlta(const Alphabet& alphabet) {
    Rlta r;
    r.alphabet = alphabet;
    r.state_count = 1;
    r.delta.assign(alphabet.size(), 0);
    return r;
}

namespace detail {

Rlta parse_rlta_lines(std::span<const Line> lines, std::size_t header_line) {
    RafBody body = parse_raf_body(lines, false, header_line);
    Rlta r;
    r.alphabet = body.alphabet;
    r.state_count = body.states;
    r.initial = body.initial;
    r.names = body.names;
    r.delta.assign(r.state_count * r.alphabet.size(), kNoState);
    for (std::size_t k = 0; k < body.transitions.size(); ++k) {
        const auto& t = body.transitions[k];
        auto& slot = r.delta[t.src * r.alphabet.size() + t.symbol];
        if (slot != kNoState && slot != t.dst)
            throw ParseError(body.transition_lines[k], "RLTA must be deterministic");
        slot = t.dst;
    }
    for (std::size_t s = 0; s < r.state_count; ++s)
        for (std::size_t x = 0; x < r.alphabet.size(); ++x)
            if (r.delta[s * r.alphabet.size() + x] == kNoState)
                throw ParseError(header_line, "RLTA is not complete: state " + std::to_string(s) +
                                                  " lacks symbol '" + r.alphabet.name(x) + "'");
    return r;
}

void write_rlta_body(std::string& out, const Rlta& r) {
    write_raf_body(out, r.alphabet, r.state_count, r.initial, r.names);
    for (StateId s = 0; s < r.state_count; ++s)
        for (SymbolId x = 0; x < r.alphabet.size(); ++x)
            out += "trans " + std::to_string(s) + " " + r.alphabet.name(x) + " " + std::to_string(r.next(s, x)) + "\n";
}

} // namespace detail

std::string write_rlta(const Rlta& r) {
    std::string out = "rlta 1\n";
    detail::write_rlta_body(out, r);
    return out;
}

Rlta parse_rlta(const std::string& text) {
    auto lines = detail::tokenize(text);
    if (lines.empty() || lines.front().tokens != std::vector<std::string>{"rlta", "1"})
        throw ParseError(lines.empty() ? 1 : lines.front().number, "expected header 'rlta 1'");
    return detail::parse_rlta_lines(std::span<const detail::Line>(lines).subspan(1), lines.front().number);
}

} // namespace rerail
