#include "rerail/automaton.hpp"

#include "rerail/error.hpp"
#include "text_io.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <tuple>

namespace rerail {

Alphabet::Alphabet(std::vector<std::string> symbols) : symbols_(std::move(symbols)) {
    std::set<std::string> seen;
    for (const auto& s : symbols_) {
        if (s.empty()) throw Error("empty symbol name");
        if (!seen.insert(s).second) throw Error("duplicate symbol '" + s + "'");
    }
}

std::optional<SymbolId> Alphabet::find(const std::string& name) const {
    auto it = std::find(symbols_.begin(), symbols_.end(), name);
    if (it == symbols_.end()) return std::nullopt;
    return static_cast<SymbolId>(it - symbols_.begin());
}

SymbolId Alphabet::index_of(const std::string& name) const {
    auto x = find(name);
    if (!x) throw Error("unknown symbol '" + name + "'");
    return *x;
}

Automaton::Automaton(Alphabet alphabet, std::size_t state_count, StateId initial,
                     std::vector<Transition> transitions, std::vector<std::string> names)
    : alphabet_(std::move(alphabet)), state_count_(state_count), initial_(initial),
      transitions_(std::move(transitions)), names_(std::move(names)) {
    if (state_count_ == 0) throw Error("automaton needs at least one state");
    if (initial_ >= state_count_) throw Error("initial state out of range");
    if (!names_.empty() && names_.size() != state_count_) throw Error("name table size mismatch");
    const std::size_t k = alphabet_.size();
    for (const auto& t : transitions_) {
        if (t.src >= state_count_ || t.dst >= state_count_) throw Error("state index out of range");
        if (t.symbol >= k) throw Error("symbol index out of range");
    }
    std::sort(transitions_.begin(), transitions_.end(), [](const Transition& a, const Transition& b) {
        return std::tie(a.src, a.symbol, a.dst, a.color) < std::tie(b.src, b.symbol, b.dst, b.color);
    });
    transitions_.erase(std::unique(transitions_.begin(), transitions_.end()), transitions_.end());
    for (std::size_t i = 1; i < transitions_.size(); ++i) {
        const auto& a = transitions_[i - 1];
        const auto& b = transitions_[i];
        if (a.src == b.src && a.symbol == b.symbol && a.dst == b.dst)
            throw Error("conflicting colors for transition " + std::to_string(a.src) + " " +
                        alphabet_.name(a.symbol) + " " + std::to_string(a.dst));
    }
    offsets_.assign(state_count_ * k + 1, 0);
    for (const auto& t : transitions_) {
        ++offsets_[t.src * k + t.symbol + 1];
        max_color_ = std::max(max_color_, t.color);
    }
    for (std::size_t i = 1; i < offsets_.size(); ++i) offsets_[i] += offsets_[i - 1];
}

std::span<const Transition> Automaton::successors(StateId q, SymbolId x) const {
    const std::size_t slot = q * alphabet_.size() + x;
    return std::span<const Transition>(transitions_).subspan(offsets_[slot], offsets_[slot + 1] - offsets_[slot]);
}

std::span<const Transition> Automaton::outgoing(StateId q) const {
    const std::size_t k = alphabet_.size();
    return std::span<const Transition>(transitions_).subspan(offsets_[q * k], offsets_[(q + 1) * k] - offsets_[q * k]);
}

std::optional<Color> Automaton::color_of(StateId src, SymbolId x, StateId dst) const {
    for (const auto& t : successors(src, x))
        if (t.dst == dst) return t.color;
    return std::nullopt;
}

std::string Automaton::state_name(StateId q) const {
    return names_.empty() ? std::to_string(q) : names_.at(q);
}

bool Automaton::is_complete() const {
    for (std::size_t slot = 0; slot + 1 < offsets_.size(); ++slot)
        if (offsets_[slot] == offsets_[slot + 1]) return false;
    return true;
}

std::vector<std::pair<StateId, SymbolId>> Automaton::missing_transitions() const {
    std::vector<std::pair<StateId, SymbolId>> out;
    const std::size_t k = alphabet_.size();
    for (std::size_t slot = 0; slot + 1 < offsets_.size(); ++slot)
        if (offsets_[slot] == offsets_[slot + 1])
            out.emplace_back(static_cast<StateId>(slot / k), static_cast<SymbolId>(slot % k));
    return out;
}

bool Automaton::is_deterministic() const {
    for (std::size_t slot = 0; slot + 1 < offsets_.size(); ++slot)
        if (offsets_[slot + 1] - offsets_[slot] > 1) return false;
    return true;
}

bool Automaton::is_color_homogeneous() const {
    for (std::size_t slot = 0; slot + 1 < offsets_.size(); ++slot)
        for (std::size_t i = offsets_[slot] + 1; i < offsets_[slot + 1]; ++i)
            if (transitions_[i].color != transitions_[offsets_[slot]].color) return false;
    return true;
}

std::vector<bool> Automaton::reachable() const {
    std::vector<bool> seen(state_count_, false);
    std::vector<StateId> stack{initial_};
    seen[initial_] = true;
    while (!stack.empty()) {
        StateId q = stack.back();
        stack.pop_back();
        for (const auto& t : outgoing(q))
            if (!seen[t.dst]) {
                seen[t.dst] = true;
                stack.push_back(t.dst);
            }
    }
    return seen;
}

Automaton trim_unreachable(const Automaton& a) {
    std::vector<StateId> renumber(a.state_count(), kNoState);
    std::deque<StateId> queue{a.initial()};
    std::vector<StateId> order;
    renumber[a.initial()] = 0;
    while (!queue.empty()) {
        StateId q = queue.front();
        queue.pop_front();
        order.push_back(q);
        for (const auto& t : a.outgoing(q))
            if (renumber[t.dst] == kNoState) {
                renumber[t.dst] = static_cast<StateId>(order.size() + queue.size());
                queue.push_back(t.dst);
            }
    }
    std::vector<Transition> ts;
    for (const auto& t : a.transitions())
        if (renumber[t.src] != kNoState) ts.push_back({renumber[t.src], t.symbol, renumber[t.dst], t.color});
    std::vector<std::string> names;
    if (a.has_names())
        for (StateId q : order) names.push_back(a.state_name(q));
    return Automaton(a.alphabet(), order.size(), 0, std::move(ts), std::move(names));
}

Automaton parse_raf(const std::string& text) {
    auto lines = detail::tokenize(text);
    if (lines.empty() || lines.front().tokens != std::vector<std::string>{"raf", "1"})
        throw ParseError(lines.empty() ? 1 : lines.front().number, "expected header 'raf 1'");
    auto body = detail::parse_raf_body(std::span<const detail::Line>(lines).subspan(1), true,
                                       lines.front().number);
    return detail::build_automaton(body);
}

std::string write_raf(const Automaton& a) {
    std::string out = "raf 1\n";
    detail::write_raf_body(out, a.alphabet(), a.state_count(), a.initial(), a.names());
    for (const auto& t : a.transitions())
        out += "trans " + std::to_string(t.src) + " " + a.alphabet().name(t.symbol) + " " +
               std::to_string(t.dst) + " " + std::to_string(t.color) + "\n";
    return out;
}

Automaton load_raf(const std::string& path) { return parse_raf(detail::read_file(path)); }

} // namespace rerail
