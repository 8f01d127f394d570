#include "rerail/membership.hpp"

#include "rerail/error.hpp"
#include "rerail/scc.hpp"

#include <algorithm>
#include <bit>

namespace rerail {

namespace {

struct RankedEdge {
    std::uint32_t src, dst, rank;
};

// Dominating colors (as rank bits) of all cycles within a strongly connected
// edge set: the minimum is realised by the whole set, larger ones live in the
// components left after dropping every edge carrying the minimum.
std::uint64_t cycle_mask(const std::vector<RankedEdge>& edges) {
    std::uint32_t m = edges.front().rank;
    for (const auto& e : edges) m = std::min(m, e.rank);
    std::uint64_t mask = std::uint64_t{1} << m;

    std::vector<RankedEdge> rest;
    for (const auto& e : edges)
        if (e.rank > m) rest.push_back(e);
    if (rest.empty()) return mask;

    std::vector<std::uint32_t> ids;
    for (const auto& e : rest) {
        ids.push_back(e.src);
        ids.push_back(e.dst);
    }
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    auto local = [&](std::uint32_t v) {
        return static_cast<std::uint32_t>(std::lower_bound(ids.begin(), ids.end(), v) - ids.begin());
    };
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (auto& e : rest) {
        e.src = local(e.src);
        e.dst = local(e.dst);
        pairs.emplace_back(e.src, e.dst);
    }
    auto scc = strongly_connected_components(Graph::from_edges(ids.size(), pairs));
    std::vector<std::vector<RankedEdge>> groups(scc.count);
    for (const auto& e : rest)
        if (scc.component[e.src] == scc.component[e.dst]) groups[scc.component[e.src]].push_back(e);
    for (const auto& g : groups)
        if (!g.empty()) mask |= cycle_mask(g);
    return mask;
}

} // namespace

LassoProduct::LassoProduct(const Automaton& a, const LassoWord& w) : word_(canonicalize(w)) {
    for (auto x : word_.stem)
        if (x >= a.alphabet().size()) throw Error("lasso symbol outside alphabet");
    for (auto x : word_.cycle)
        if (x >= a.alphabet().size()) throw Error("lasso symbol outside alphabet");

    // Order- and parity-preserving compression of the colors in use.
    std::vector<Color> colors;
    for (const auto& t : a.transitions()) colors.push_back(t.color);
    std::sort(colors.begin(), colors.end());
    colors.erase(std::unique(colors.begin(), colors.end()), colors.end());
    std::vector<std::uint32_t> rank_of(colors.size());
    for (std::size_t i = 0; i < colors.size(); ++i) {
        std::uint32_t r = colors[i] % 2;
        if (i > 0) {
            r = rank_of[i - 1] + 1;
            if (r % 2 != colors[i] % 2) ++r;
        }
        rank_of[i] = r;
    }
    if (!rank_of.empty() && rank_of.back() >= 64) throw Error("too many distinct colors");
    ranks_.assign(rank_of.empty() ? 0 : rank_of.back() + 1, 0);
    for (std::size_t i = 0; i < colors.size(); ++i) ranks_[rank_of[i]] = colors[i];
    auto rank = [&](Color c) {
        return rank_of[std::lower_bound(colors.begin(), colors.end(), c) - colors.begin()];
    };

    const std::size_t len = word_.length();
    std::vector<std::uint32_t> id(a.state_count() * len, UINT32_MAX);
    auto node = [&](StateId q, std::size_t pos) {
        auto& slot = id[pos * a.state_count() + q];
        if (slot == UINT32_MAX) {
            slot = static_cast<std::uint32_t>(nodes_.size());
            nodes_.emplace_back(q, static_cast<std::uint32_t>(pos));
        }
        return slot;
    };
    node(a.initial(), 0);
    std::vector<RankedEdge> ranked;
    for (std::uint32_t v = 0; v < nodes_.size(); ++v) {
        auto [q, pos] = nodes_[v];
        const std::size_t next = word_.next(pos);
        for (const auto& t : a.successors(q, word_.at(pos))) {
            std::uint32_t u = node(t.dst, next);
            edges_.push_back({v, u, t.color});
            ranked.push_back({v, u, rank(t.color)});
        }
    }

    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    pairs.reserve(edges_.size());
    for (const auto& e : edges_) pairs.emplace_back(e.src, e.dst);
    const Graph g = Graph::from_edges(nodes_.size(), pairs);
    const auto scc = strongly_connected_components(g);

    std::vector<std::vector<RankedEdge>> internal(scc.count);
    for (const auto& e : ranked)
        if (scc.component[e.src] == scc.component[e.dst]) internal[scc.component[e.src]].push_back(e);
    std::vector<std::uint64_t> comp_mask(scc.count, 0);
    for (std::size_t c = 0; c < scc.count; ++c)
        if (!internal[c].empty()) comp_mask[c] = cycle_mask(internal[c]);

    // Successor components carry smaller numbers, so one ascending sweep suffices.
    std::vector<std::vector<std::uint32_t>> members(scc.count);
    for (std::uint32_t v = 0; v < nodes_.size(); ++v) members[scc.component[v]].push_back(v);
    for (std::size_t c = 0; c < scc.count; ++c)
        for (auto v : members[c])
            for (auto it = g.begin(v); it != g.end(v); ++it)
                if (scc.component[*it] != c) comp_mask[c] |= comp_mask[scc.component[*it]];
    masks_.resize(nodes_.size());
    for (std::uint32_t v = 0; v < nodes_.size(); ++v) masks_[v] = comp_mask[scc.component[v]];
}

std::vector<Color> LassoProduct::achievable_colors(std::uint32_t node) const {
    std::vector<Color> out;
    for (std::uint64_t m = masks_.at(node); m; m &= m - 1) out.push_back(ranks_[std::countr_zero(m)]);
    return out;
}

Semantics parse_semantics(const std::string& name) {
    if (name == "rerailing") return Semantics::Rerailing;
    if (name == "parity-exists") return Semantics::ParityExists;
    if (name == "parity-det") return Semantics::ParityDet;
    if (name == "cobuchi") return Semantics::CoBuchi;
    if (name == "chain") return Semantics::Chain;
    if (name == "floating") return Semantics::Floating;
    throw Error("unknown semantics '" + name + "'");
}

std::string to_string(Semantics s) {
    switch (s) {
    case Semantics::Rerailing: return "rerailing";
    case Semantics::ParityExists: return "parity-exists";
    case Semantics::ParityDet: return "parity-det";
    case Semantics::CoBuchi: return "cobuchi";
    case Semantics::Chain: return "chain";
    case Semantics::Floating: return "floating";
    }
    return "?";
}

namespace {
void require_complete(const Automaton& a) {
    if (!a.is_complete()) throw Error("automaton is not complete");
}
} // namespace

bool member_rerailing(const Automaton& a, const LassoWord& w) {
    require_complete(a);
    std::uint64_t m = LassoProduct(a, w).achievable_mask(0);
    if (m == 0) return false; // no infinite run
    return (63 - std::countl_zero(m)) % 2 == 0;
}

bool member_parity_exists(const Automaton& a, const LassoWord& w) {
    constexpr std::uint64_t even_ranks = 0x5555555555555555ULL;
    require_complete(a);
    return (LassoProduct(a, w).achievable_mask(0) & even_ranks) != 0;
}

bool member_parity_det(const Automaton& a, const LassoWord& w) {
    if (!a.is_deterministic()) throw Error("parity-det semantics needs a deterministic automaton");
    const LassoWord c = canonicalize(w);
    const std::size_t len = c.length();
    std::vector<std::uint32_t> visited(a.state_count() * len, UINT32_MAX);
    std::vector<Color> colors;
    StateId q = a.initial();
    std::size_t pos = 0;
    while (visited[pos * a.state_count() + q] == UINT32_MAX) {
        visited[pos * a.state_count() + q] = static_cast<std::uint32_t>(colors.size());
        auto succ = a.successors(q, c.at(pos));
        if (succ.empty()) return false;
        colors.push_back(succ.front().color);
        q = succ.front().dst;
        pos = c.next(pos);
    }
    Color m = *std::min_element(colors.begin() + visited[pos * a.state_count() + q], colors.end());
    return m % 2 == 0;
}

bool member_cobuchi(const Automaton& a, const LassoWord& w) {
    for (const auto& t : a.transitions())
        if (t.color != 1 && t.color != 2) throw Error("co-Buchi automaton uses color outside {1,2}");
    // Over {1, 2} "largest dominating color is even" means "some run is eventually accepting".
    return member_rerailing(a, w);
}

bool member(const Automaton& a, Semantics s, const LassoWord& w) {
    switch (s) {
    case Semantics::Rerailing: return member_rerailing(a, w);
    case Semantics::ParityExists: return member_parity_exists(a, w);
    case Semantics::ParityDet: return member_parity_det(a, w);
    case Semantics::CoBuchi: return member_cobuchi(a, w);
    default: throw Error("semantics '" + to_string(s) + "' does not apply to a single automaton");
    }
}

MembershipOracle oracle_for(const Automaton& a, Semantics s) {
    if (s == Semantics::ParityDet && !a.is_deterministic())
        throw Error("parity-det semantics needs a deterministic automaton");
    if (s == Semantics::CoBuchi)
        for (const auto& t : a.transitions())
            if (t.color != 1 && t.color != 2) throw Error("co-Buchi automaton uses color outside {1,2}");
    if (s == Semantics::Chain || s == Semantics::Floating)
        throw Error("semantics '" + to_string(s) + "' does not apply to a single automaton");
    return [&a, s](const LassoWord& w) { return member(a, s, w); };
}

EquivalenceResult bounded_equivalence(std::size_t alphabet_size, const MembershipOracle& a,
                                      const MembershipOracle& b, LassoBounds bounds) {
    EquivalenceResult r;
    for_each_lasso(alphabet_size, bounds, [&](const LassoWord& w) {
        ++r.lassos_checked;
        if (a(w) != b(w)) {
            r.equivalent = false;
            r.counterexample = w;
            return false;
        }
        return true;
    });
    return r;
}

StateRelation equireach_relation(const Automaton& a) {
    const std::size_t n = a.state_count();
    StateRelation rel(n);
    std::vector<std::pair<StateId, StateId>> stack{{a.initial(), a.initial()}};
    rel.insert(a.initial(), a.initial());
    while (!stack.empty()) {
        auto [p, q] = stack.back();
        stack.pop_back();
        for (SymbolId x = 0; x < a.alphabet().size(); ++x)
            for (const auto& tp : a.successors(p, x))
                for (const auto& tq : a.successors(q, x))
                    if (!rel.contains(tp.dst, tq.dst)) {
                        rel.insert(tp.dst, tq.dst);
                        stack.emplace_back(tp.dst, tq.dst);
                    }
    }
    return rel;
}

} // namespace rerail
