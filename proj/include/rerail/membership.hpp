#pragma once

#include "rerail/automaton.hpp"
#include "rerail/lasso.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace rerail {

// Product of an automaton with the positions of a canonical lasso, restricted
// to nodes reachable from (initial, 0). Node 0 is the root.
class LassoProduct {
public:
    struct Edge {
        std::uint32_t src;
        std::uint32_t dst;
        Color color;
    };

    LassoProduct(const Automaton& a, const LassoWord& w);

    const LassoWord& word() const { return word_; }
    std::size_t node_count() const { return nodes_.size(); }
    StateId state(std::uint32_t node) const { return nodes_[node].first; }
    std::size_t position(std::uint32_t node) const { return nodes_[node].second; }
    const std::vector<Edge>& edges() const { return edges_; }

    // Dominating colors of the infinite paths starting at the node, ascending.
    std::vector<Color> achievable_colors(std::uint32_t node) const;
    // Same as achievable_colors but as a bit set over color_ranks().
    std::uint64_t achievable_mask(std::uint32_t node) const { return masks_[node]; }
    // Rank r of a mask stands for color_ranks()[r]. Ranks preserve order and parity.
    const std::vector<Color>& color_ranks() const { return ranks_; }

private:
    LassoWord word_;
    std::vector<std::pair<StateId, std::uint32_t>> nodes_;
    std::vector<Edge> edges_;
    std::vector<Color> ranks_;
    std::vector<std::uint64_t> masks_;
};

enum class Semantics { Rerailing, ParityExists, ParityDet, CoBuchi, Chain, Floating };

Semantics parse_semantics(const std::string& name);
std::string to_string(Semantics s);

// A word is accepted iff the largest dominating color over all runs is even.
bool member_rerailing(const Automaton& a, const LassoWord& w);
// Some run has an even dominating color.
bool member_parity_exists(const Automaton& a, const LassoWord& w);
// Requires a deterministic automaton.
bool member_parity_det(const Automaton& a, const LassoWord& w);
// Colors must lie in {1, 2}; 2 marks accepting transitions.
bool member_cobuchi(const Automaton& a, const LassoWord& w);

bool member(const Automaton& a, Semantics s, const LassoWord& w);

using MembershipOracle = std::function<bool(const LassoWord&)>;
MembershipOracle oracle_for(const Automaton& a, Semantics s);

struct EquivalenceResult {
    bool equivalent = true;
    std::optional<LassoWord> counterexample; // first differing lasso in shortlex order
    std::size_t lassos_checked = 0;
};

EquivalenceResult bounded_equivalence(std::size_t alphabet_size, const MembershipOracle& a,
                                      const MembershipOracle& b, LassoBounds bounds);

// Square boolean relation over the states of one automaton.
class StateRelation {
public:
    explicit StateRelation(std::size_t n = 0) : n_(n), bits_(n * n, false) {}
    std::size_t size() const { return n_; }
    bool contains(StateId p, StateId q) const { return bits_[p * n_ + q]; }
    void insert(StateId p, StateId q) { bits_[p * n_ + q] = true; }

private:
    std::size_t n_;
    std::vector<bool> bits_;
};

// Pairs of states reachable from (initial, initial) by reading the same word.
StateRelation equireach_relation(const Automaton& a);

} // namespace rerail
