#include "oracles.hpp"

#include "rerail/parity_game.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace rerail::testing {

namespace {

struct Unrolled {
    std::size_t positions;
    std::vector<std::vector<std::pair<std::size_t, Color>>> succ; // node = state * positions + pos
    std::size_t root;
};

// The automaton read along the lasso exactly as given, without normalization.
Unrolled unroll(const Automaton& a, const LassoWord& w) {
    const std::size_t len = w.stem.size() + w.cycle.size();
    Unrolled u{len, std::vector<std::vector<std::pair<std::size_t, Color>>>(a.state_count() * len),
               a.initial() * len};
    for (StateId q = 0; q < a.state_count(); ++q)
        for (std::size_t p = 0; p < len; ++p) {
            const SymbolId x = p < w.stem.size() ? w.stem[p] : w.cycle[p - w.stem.size()];
            const std::size_t np = p + 1 < len ? p + 1 : w.stem.size();
            for (const auto& t : a.transitions())
                if (t.src == q && t.symbol == x) u.succ[q * len + p].push_back({t.dst * len + np, t.color});
        }
    return u;
}

std::vector<bool> reach(const std::vector<std::vector<std::pair<std::size_t, Color>>>& succ, std::size_t from,
                        Color at_least) {
    std::vector<bool> seen(succ.size(), false);
    std::vector<std::size_t> stack{from};
    seen[from] = true;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (auto [w, c] : succ[v])
            if (c >= at_least && !seen[w]) {
                seen[w] = true;
                stack.push_back(w);
            }
    }
    return seen;
}

} // namespace

std::set<Color> brute_dominating_colors(const Automaton& a, const LassoWord& w) {
    const Unrolled u = unroll(a, w);
    const auto live = reach(u.succ, u.root, 0);
    std::set<Color> out;
    for (std::size_t v = 0; v < u.succ.size(); ++v) {
        if (!live[v]) continue;
        for (auto [t, c] : u.succ[v])
            if (!out.count(c) && reach(u.succ, t, c)[v]) out.insert(c);
    }
    return out;
}

bool brute_member_exists(const Automaton& a, const LassoWord& w) {
    for (Color c : brute_dominating_colors(a, w))
        if (c % 2 == 0) return true;
    return false;
}

bool brute_member_rerailing(const Automaton& a, const LassoWord& w) {
    const auto colors = brute_dominating_colors(a, w);
    return !colors.empty() && *colors.rbegin() % 2 == 0;
}

bool brute_member_cobuchi(const Automaton& a, const LassoWord& w) { return brute_dominating_colors(a, w).count(2) > 0; }

std::vector<int> brute_solve(const GameArena& g) {
    const std::size_t n = g.size();
    std::vector<Vertex> mine;
    for (Vertex v = 0; v < n; ++v)
        if (g.owner(v) == 0) mine.push_back(v);
    std::vector<std::size_t> choice(mine.size(), 0);
    std::vector<int> winner(n, 1);
    for (;;) {
        std::vector<std::vector<std::pair<std::size_t, Color>>> succ(n);
        for (Vertex v = 0; v < n; ++v)
            if (g.owner(v) == 1)
                for (Vertex s : g.successors(v)) succ[v].push_back({s, g.color(s)});
        for (std::size_t k = 0; k < mine.size(); ++k) {
            Vertex s = g.successors(mine[k])[choice[k]];
            succ[mine[k]].push_back({s, g.color(s)});
        }
        // u lies on a cycle whose smallest color is its own odd color.
        std::vector<bool> odd_cycle(n, false);
        for (Vertex u = 0; u < n; ++u) {
            if (g.color(u) % 2 == 0) continue;
            for (auto [t, c] : succ[u])
                if (c >= g.color(u) && reach(succ, t, g.color(u))[u]) odd_cycle[u] = true;
        }
        for (Vertex v = 0; v < n; ++v) {
            if (winner[v] == 0) continue;
            const auto r = reach(succ, v, 0);
            bool lost = false;
            for (Vertex u = 0; u < n; ++u) lost = lost || (r[u] && odd_cycle[u]);
            if (!lost) winner[v] = 0;
        }
        std::size_t k = 0;
        while (k < mine.size() && ++choice[k] == g.successors(mine[k]).size()) choice[k++] = 0;
        if (k == mine.size()) break;
    }
    return winner;
}

std::set<std::pair<StateId, StateId>> brute_equireach(const Automaton& a) {
    const std::size_t n = a.state_count(), bound = n * n;
    std::set<std::pair<StateId, StateId>> out;
    std::set<std::vector<StateId>> layer{{a.initial()}};
    for (std::size_t len = 0; len <= bound && !layer.empty(); ++len) {
        std::set<std::vector<StateId>> next;
        for (const auto& set : layer) {
            for (StateId p : set)
                for (StateId q : set) out.insert({p, q});
            for (SymbolId x = 0; x < a.alphabet().size(); ++x) {
                std::set<StateId> succ;
                for (StateId p : set)
                    for (const auto& t : a.successors(p, x)) succ.insert(t.dst);
                next.insert(std::vector<StateId>(succ.begin(), succ.end()));
            }
        }
        layer = std::move(next);
    }
    return out;
}

bool reference_realizable(const Automaton& spec, const std::vector<std::string>& inputs,
                          const std::vector<std::string>& outputs, bool input_first) {
    const auto& first = input_first ? inputs : outputs;
    const auto& second = input_first ? outputs : inputs;
    // Player 0 is the system; it owns the vertices where outputs are picked.
    const int first_owner = input_first ? 1 : 0, second_owner = 1 - first_owner;
    GameArena g;
    const Color neutral = spec.max_color();
    const std::size_t n = spec.state_count();
    for (StateId q = 0; q < n; ++q) g.add_vertex(first_owner, neutral);
    for (StateId q = 0; q < n; ++q)
        for (const auto& a : first) {
            const Vertex mid = g.add_vertex(second_owner, neutral);
            g.add_edge(q, mid);
            for (const auto& b : second) {
                const std::string& x = input_first ? a : b;
                const std::string& y = input_first ? b : a;
                const auto succ = spec.successors(q, spec.alphabet().index_of(x + "|" + y));
                const Vertex e = g.add_vertex(0, succ.front().color);
                g.add_edge(mid, e);
                g.add_edge(e, succ.front().dst);
            }
        }
    return solve(g).wins0(spec.initial());
}

Automaton with_initial(const Automaton& a, StateId q) {
    return Automaton(a.alphabet(), a.state_count(), q, {a.transitions().begin(), a.transitions().end()}, a.names());
}

Alphabet letters(std::size_t k) {
    std::vector<std::string> s;
    for (std::size_t i = 0; i < k; ++i) s.push_back(std::string(1, static_cast<char>('a' + i)));
    return Alphabet(s);
}

Automaton random_dpw(std::mt19937& rng, std::size_t states, std::size_t symbols, Color max_color) {
    std::uniform_int_distribution<StateId> st(0, static_cast<StateId>(states - 1));
    std::uniform_int_distribution<Color> col(0, max_color);
    std::vector<Transition> ts;
    for (StateId q = 0; q < states; ++q)
        for (SymbolId x = 0; x < symbols; ++x) ts.push_back({q, x, st(rng), col(rng)});
    return Automaton(letters(symbols), states, 0, ts);
}

Automaton random_nfa(std::mt19937& rng, std::size_t states, std::size_t symbols, Color min_color, Color max_color) {
    std::uniform_int_distribution<StateId> st(0, static_cast<StateId>(states - 1));
    std::uniform_int_distribution<Color> col(min_color, max_color);
    std::uniform_int_distribution<int> fan(1, 3);
    std::vector<Transition> ts;
    for (StateId q = 0; q < states; ++q)
        for (SymbolId x = 0; x < symbols; ++x) {
            std::map<StateId, Color> out;
            for (int k = fan(rng); k > 0; --k) out.emplace(st(rng), col(rng));
            for (auto [d, c] : out) ts.push_back({q, x, d, c});
        }
    return Automaton(letters(symbols), states, 0, ts);
}

LassoWord random_lasso(std::mt19937& rng, std::size_t symbols, std::size_t max_stem, std::size_t max_cycle) {
    std::uniform_int_distribution<SymbolId> sym(0, static_cast<SymbolId>(symbols - 1));
    LassoWord w;
    w.stem.resize(std::uniform_int_distribution<std::size_t>(0, max_stem)(rng));
    w.cycle.resize(std::uniform_int_distribution<std::size_t>(1, max_cycle)(rng));
    for (auto& x : w.stem) x = sym(rng);
    for (auto& x : w.cycle) x = sym(rng);
    return w;
}

GameArena random_arena(std::mt19937& rng, std::size_t vertices, Color colors) {
    std::uniform_int_distribution<Vertex> vx(0, static_cast<Vertex>(vertices - 1));
    std::uniform_int_distribution<Color> col(0, colors - 1);
    std::uniform_int_distribution<int> owner(0, 1), fan(1, 3);
    GameArena g;
    for (std::size_t v = 0; v < vertices; ++v) g.add_vertex(owner(rng), col(rng));
    for (Vertex v = 0; v < vertices; ++v) {
        std::set<Vertex> succ;
        for (int k = fan(rng); k > 0; --k) succ.insert(vx(rng));
        for (Vertex s : succ) g.add_edge(v, s);
    }
    return g;
}

} // namespace rerail::testing
