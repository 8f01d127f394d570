#pragma once

#include "rerail/automaton.hpp"
#include "rerail/lasso.hpp"
#include "rerail/parity_game.hpp"
#include "rerail/rlta.hpp"

#include <array>
#include <set>
#include <string>
#include <vector>

namespace rerail {

// Chain of co-Buchi automata (colors {1, 2}) with weakly falling languages.
// The color of a word is the largest index whose level accepts it, 0 if none.
struct Chain {
    Alphabet alphabet;
    std::vector<Automaton> levels; // levels[0] is the first automaton of the chain

    std::size_t size() const { return levels.size(); }
};

Chain decompose_rerailing(const Automaton& r);

std::size_t chain_color(const Chain& c, const LassoWord& w);
bool chain_member(const Chain& c, const LassoWord& w);

std::string write_chain(const Chain& c);
Chain parse_chain(const std::string& text);

// Single-state automata standing for the implicit levels below and above a chain.
Automaton universal_cobuchi(const Alphabet& alphabet);
Automaton empty_cobuchi(const Alphabet& alphabet);

// Answers L(A_q) ⊆ L(B_p) for all state pairs, assuming B is history-deterministic.
class InclusionTable {
public:
    InclusionTable(std::size_t rows, std::size_t cols) : cols_(cols), bits_(rows * cols, false) {}
    bool included(StateId q, StateId p) const { return bits_[q * cols_ + p]; }
    void set(StateId q, StateId p, bool v) { bits_[q * cols_ + p] = v; }

private:
    std::size_t cols_;
    std::vector<bool> bits_;
};

GameArena inclusion_game(const Automaton& a, const Automaton& b);
InclusionTable inclusion_hd_cobuchi(const Automaton& a, const Automaton& b);
bool inclusion_hd_cobuchi(const Automaton& a, StateId q, const Automaton& b, StateId p);

struct ResidualTracker {
    Rlta rlta;
    std::vector<StateId> state_map; // automaton state -> tracker state
};

ResidualTracker residual_tracking_single(const Automaton& a);

using TrackerTuple = std::array<StateId, 4>;

// Per-level data shared by compute_rij and build_rlta_chain. Index 0 is the
// implicit universal level, index n + 1 the implicit empty level.
struct ExtendedChain {
    std::vector<Automaton> levels;
    std::vector<ResidualTracker> trackers;

    std::size_t n() const { return levels.size() - 2; }
};

ExtendedChain extend_chain(const Chain& c);

// Tuples (s^i, s^{i+1}, s^j, s^{j+1}) of tracker states such that some suffix
// has color i after the first pair's prefix and color j after the second's.
// Valid indices are 0 <= i, j <= n.
std::set<TrackerTuple> compute_rij(const ExtendedChain& ext, std::size_t i, std::size_t j);

struct RltaChainResult {
    Rlta rlta;
    std::vector<std::vector<StateId>> tuples; // per RLTA state: tracker states of levels 0..n
};

RltaChainResult build_rlta_chain(const Chain& c);

} // namespace rerail
