#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace rerail {

using StateId = std::uint32_t;
using SymbolId = std::uint32_t;
using Color = std::uint32_t;

inline constexpr StateId kNoState = static_cast<StateId>(-1);

class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> symbols);

    std::size_t size() const { return symbols_.size(); }
    const std::string& name(SymbolId x) const { return symbols_.at(x); }
    const std::vector<std::string>& symbols() const { return symbols_; }
    std::optional<SymbolId> find(const std::string& name) const;
    SymbolId index_of(const std::string& name) const; // throws on unknown symbol

    bool operator==(const Alphabet&) const = default;

private:
    std::vector<std::string> symbols_;
};

struct Transition {
    StateId src;
    SymbolId symbol;
    StateId dst;
    Color color;

    bool operator==(const Transition&) const = default;
};

// Transition structure with parity colors. The same structure is read under
// several acceptance semantics (see membership.hpp).
class Automaton {
public:
    Automaton() = default;

    // Validates indices, removes exact duplicates and rejects a (src, sym, dst)
    // triple that carries two different colors.
    Automaton(Alphabet alphabet, std::size_t state_count, StateId initial,
              std::vector<Transition> transitions, std::vector<std::string> names = {});

    const Alphabet& alphabet() const { return alphabet_; }
    std::size_t state_count() const { return state_count_; }
    StateId initial() const { return initial_; }

    // Sorted by (src, symbol, dst).
    std::span<const Transition> transitions() const { return transitions_; }
    std::span<const Transition> successors(StateId q, SymbolId x) const;
    std::span<const Transition> outgoing(StateId q) const;
    std::optional<Color> color_of(StateId src, SymbolId x, StateId dst) const;

    Color max_color() const { return max_color_; }
    bool has_names() const { return !names_.empty(); }
    std::string state_name(StateId q) const;
    const std::vector<std::string>& names() const { return names_; }

    bool is_complete() const;
    // (state, symbol) pairs without any transition.
    std::vector<std::pair<StateId, SymbolId>> missing_transitions() const;
    bool is_deterministic() const;
    // Every (q, x) carries one color on all its x-transitions.
    bool is_color_homogeneous() const;
    std::vector<bool> reachable() const;

    bool operator==(const Automaton& o) const {
        return alphabet_ == o.alphabet_ && state_count_ == o.state_count_ &&
               initial_ == o.initial_ && transitions_ == o.transitions_;
    }

private:
    Alphabet alphabet_;
    std::size_t state_count_ = 0;
    StateId initial_ = 0;
    std::vector<Transition> transitions_;
    std::vector<std::size_t> offsets_; // state * |alphabet| + symbol -> first transition
    std::vector<std::string> names_;
    Color max_color_ = 0;
};

// Restricts to the states reachable from the initial state, renumbering them
// in breadth-first order.
Automaton trim_unreachable(const Automaton& a);

Automaton parse_raf(const std::string& text);
std::string write_raf(const Automaton& a);
Automaton load_raf(const std::string& path);

} // namespace rerail
