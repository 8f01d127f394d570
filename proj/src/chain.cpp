#include "rerail/chain.hpp"

#include "rerail/error.hpp"
#include "rerail/membership.hpp"
#include "text_io.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

namespace rerail {

namespace {

void require_cobuchi(const Automaton& a, const char* what) {
    for (const auto& t : a.transitions())
        if (t.color != 1 && t.color != 2)
            throw Error(std::string(what) + ": co-Buchi automaton uses color outside {1,2}");
}

Automaton single_state(const Alphabet& alphabet, Color color) {
    std::vector<Transition> ts;
    for (SymbolId x = 0; x < alphabet.size(); ++x) ts.push_back({0, x, 0, color});
    return Automaton(alphabet, 1, 0, std::move(ts));
}

// Pairs (p, q) reachable from the initial pair when both automata read the same word.
std::vector<std::pair<StateId, StateId>> joint_pairs(const Automaton& a, const Automaton& b) {
    std::vector<char> seen(a.state_count() * b.state_count(), 0);
    std::vector<std::pair<StateId, StateId>> out{{a.initial(), b.initial()}};
    seen[a.initial() * b.state_count() + b.initial()] = 1;
    for (std::size_t head = 0; head < out.size(); ++head) {
        auto [p, q] = out[head];
        for (SymbolId x = 0; x < a.alphabet().size(); ++x)
            for (const auto& tp : a.successors(p, x))
                for (const auto& tq : b.successors(q, x)) {
                    auto& s = seen[tp.dst * b.state_count() + tq.dst];
                    if (!s) {
                        s = 1;
                        out.emplace_back(tp.dst, tq.dst);
                    }
                }
    }
    return out;
}

struct ArrayHash {
    std::size_t operator()(const std::array<std::uint32_t, 6>& k) const {
        std::size_t h = 1469598103934665603ULL;
        for (auto v : k) h = (h ^ v) * 1099511628211ULL;
        return h;
    }
};

} // namespace

Automaton universal_cobuchi(const Alphabet& alphabet) { return single_state(alphabet, 2); }
Automaton empty_cobuchi(const Alphabet& alphabet) { return single_state(alphabet, 1); }

Chain decompose_rerailing(const Automaton& r) {
    if (!r.is_complete()) throw Error("decompose: automaton is not complete");
    auto reach = r.reachable();
    for (StateId q = 0; q < r.state_count(); ++q)
        if (!reach[q]) throw Error("decompose: state " + r.state_name(q) + " is unreachable");

    const StateRelation c = equireach_relation(r);
    Chain chain{r.alphabet(), {}};
    for (Color i = 1; i <= r.max_color(); ++i) {
        // A triple produced both ways keeps color 2; the rejecting copy adds no run.
        std::map<std::tuple<StateId, SymbolId, StateId>, Color> level;
        for (const auto& t : r.transitions()) {
            if (t.color >= i) {
                level[{t.src, t.symbol, t.dst}] = 2;
                continue;
            }
            for (StateId q = 0; q < r.state_count(); ++q)
                if (c.contains(q, t.dst)) level.try_emplace({t.src, t.symbol, q}, 1);
        }
        std::vector<Transition> ts;
        for (const auto& [k, col] : level) ts.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k), col});
        chain.levels.emplace_back(r.alphabet(), r.state_count(), r.initial(), std::move(ts), r.names());
    }
    return chain;
}

std::size_t chain_color(const Chain& c, const LassoWord& w) {
    for (std::size_t i = c.levels.size(); i > 0; --i)
        if (member_cobuchi(c.levels[i - 1], w)) return i;
    return 0;
}

bool chain_member(const Chain& c, const LassoWord& w) { return chain_color(c, w) % 2 == 0; }

std::string write_chain(const Chain& c) {
    std::string out = "cocoa 1\nalphabet";
    for (const auto& s : c.alphabet.symbols()) out += " " + s;
    out += "\ncount " + std::to_string(c.levels.size()) + "\n";
    for (std::size_t i = 0; i < c.levels.size(); ++i) {
        out += "automaton " + std::to_string(i + 1) + "\n";
        out += write_raf(c.levels[i]);
    }
    return out;
}

Chain parse_chain(const std::string& text) {
    auto lines = detail::tokenize(text);
    if (lines.empty() || lines.front().tokens != std::vector<std::string>{"cocoa", "1"})
        throw ParseError(lines.empty() ? 1 : lines.front().number, "expected header 'cocoa 1'");
    std::size_t k = 1;
    Chain chain;
    bool have_alphabet = false;
    if (k < lines.size() && lines[k].tokens.front() == "alphabet") {
        chain.alphabet = Alphabet({lines[k].tokens.begin() + 1, lines[k].tokens.end()});
        have_alphabet = true;
        ++k;
    }
    if (k >= lines.size() || lines[k].tokens.front() != "count")
        throw ParseError(k < lines.size() ? lines[k].number : lines.back().number, "expected 'count <n>'");
    detail::expect_arity(lines[k], 2);
    const std::size_t count = detail::parse_index(lines[k], 1, "level count");
    ++k;
    while (k < lines.size()) {
        const auto& head = lines[k];
        if (head.tokens.front() != "automaton") throw ParseError(head.number, "expected 'automaton <i>'");
        detail::expect_arity(head, 2);
        if (detail::parse_index(head, 1, "level") != chain.levels.size() + 1)
            throw ParseError(head.number, "levels must be numbered 1, 2, ... in order");
        std::size_t end = k + 1;
        while (end < lines.size() && lines[end].tokens.front() != "automaton") ++end;
        std::size_t begin = k + 1;
        if (begin < end && lines[begin].tokens == std::vector<std::string>{"raf", "1"}) ++begin;
        auto body = detail::parse_raf_body(std::span<const detail::Line>(lines).subspan(begin, end - begin), true,
                                           head.number);
        Automaton a = detail::build_automaton(body);
        try {
            require_cobuchi(a, "chain level");
        } catch (const Error& e) {
            throw ParseError(head.number, e.what());
        }
        if (!have_alphabet) {
            chain.alphabet = a.alphabet();
            have_alphabet = true;
        } else if (a.alphabet() != chain.alphabet) {
            throw ParseError(head.number, "chain levels must share one alphabet");
        }
        chain.levels.push_back(std::move(a));
        k = end;
    }
    if (chain.levels.size() != count)
        throw ParseError(lines.back().number, "count says " + std::to_string(count) + " levels, found " +
                                                  std::to_string(chain.levels.size()));
    if (!have_alphabet) throw ParseError(lines.front().number, "empty chain needs an 'alphabet' line");
    return chain;
}

GameArena inclusion_game(const Automaton& a, const Automaton& b_in) {
    if (a.alphabet() != b_in.alphabet()) throw Error("inclusion: alphabet mismatch");
    require_cobuchi(a, "inclusion");
    require_cobuchi(b_in, "inclusion");

    // A missing B-transition behaves like a rejecting move into a rejecting sink.
    Automaton b = b_in;
    if (!b_in.is_complete()) {
        const auto sink = static_cast<StateId>(b_in.state_count());
        std::vector<Transition> ts(b_in.transitions().begin(), b_in.transitions().end());
        for (StateId q = 0; q <= sink; ++q)
            for (SymbolId x = 0; x < b_in.alphabet().size(); ++x)
                if (q == sink || b_in.successors(q, x).empty()) ts.push_back({q, x, sink, 1});
        b = Automaton(b_in.alphabet(), sink + 1, b_in.initial(), std::move(ts));
    }

    const std::size_t na = a.state_count(), nb = b.state_count(), k = a.alphabet().size();
    GameArena g;
    // Spoiler vertices (a, b) come first so that their index is a * nb + b.
    for (std::size_t v = 0; v < na * nb; ++v) g.add_vertex(1, 2);
    const Vertex dup_base = static_cast<Vertex>(g.size());
    for (std::size_t v = 0; v < na * 2 * nb * k; ++v) g.add_vertex(0, 2);
    const Vertex mid_base = static_cast<Vertex>(g.size());
    for (std::size_t v = 0; v < na * nb; ++v)
        for (Color c = 0; c < 3; ++c) g.add_vertex(0, c);
    const Vertex win0 = g.add_vertex(0, 0);
    g.add_edge(win0, win0);

    auto dup = [&](StateId a2, Color ca, StateId bq, SymbolId x) {
        return static_cast<Vertex>(dup_base + ((a2 * 2 + (ca - 1)) * nb + bq) * k + x);
    };
    for (StateId p = 0; p < na; ++p)
        for (StateId q = 0; q < nb; ++q) {
            const Vertex s = static_cast<Vertex>(p * nb + q);
            if (a.outgoing(p).empty()) g.add_edge(s, win0);
            for (const auto& t : a.outgoing(p)) g.add_edge(s, dup(t.dst, t.color, q, t.symbol));
        }
    for (StateId a2 = 0; a2 < na; ++a2)
        for (Color ca = 1; ca <= 2; ++ca)
            for (StateId q = 0; q < nb; ++q)
                for (SymbolId x = 0; x < k; ++x)
                    for (const auto& t : b.successors(q, x)) {
                        const Color col = ca == 1 ? 0 : (t.color == 1 ? 1 : 2);
                        g.add_edge(dup(a2, ca, q, x), static_cast<Vertex>(mid_base + (a2 * nb + t.dst) * 3 + col));
                    }
    for (StateId a2 = 0; a2 < na; ++a2)
        for (StateId q = 0; q < nb; ++q)
            for (Color c = 0; c < 3; ++c)
                g.add_edge(static_cast<Vertex>(mid_base + (a2 * nb + q) * 3 + c), static_cast<Vertex>(a2 * nb + q));
    return g;
}

InclusionTable inclusion_hd_cobuchi(const Automaton& a, const Automaton& b) {
    const GameArena g = inclusion_game(a, b);
    const GameSolution sol = solve(g);
    const std::size_t nb = b.state_count() + (b.is_complete() ? 0 : 1);
    InclusionTable table(a.state_count(), b.state_count());
    for (StateId p = 0; p < a.state_count(); ++p)
        for (StateId q = 0; q < b.state_count(); ++q) table.set(p, q, sol.wins0(static_cast<Vertex>(p * nb + q)));
    return table;
}

bool inclusion_hd_cobuchi(const Automaton& a, StateId q, const Automaton& b, StateId p) {
    if (q >= a.state_count() || p >= b.state_count()) throw Error("inclusion: state out of range");
    return inclusion_hd_cobuchi(a, b).included(q, p);
}

ResidualTracker residual_tracking_single(const Automaton& a) {
    const InclusionTable incl = inclusion_hd_cobuchi(a, a);
    const std::size_t n = a.state_count(), k = a.alphabet().size();
    ResidualTracker out;
    out.state_map.assign(n, kNoState);
    std::size_t classes = 0;
    for (StateId q = 0; q < n; ++q) {
        if (out.state_map[q] != kNoState) continue;
        out.state_map[q] = static_cast<StateId>(classes);
        for (StateId p = q + 1; p < n; ++p)
            if (out.state_map[p] == kNoState && incl.included(q, p) && incl.included(p, q))
                out.state_map[p] = static_cast<StateId>(classes);
        ++classes;
    }
    Rlta& r = out.rlta;
    r.alphabet = a.alphabet();
    r.state_count = classes;
    r.initial = out.state_map[a.initial()];
    r.delta.assign(classes * k, kNoState);
    for (StateId q = 0; q < n; ++q)
        for (SymbolId x = 0; x < k; ++x) {
            auto succ = a.successors(q, x);
            if (succ.empty()) throw Error("residual tracking: automaton is not complete");
            auto& slot = r.delta[out.state_map[q] * k + x];
            for (const auto& t : succ) {
                const StateId target = out.state_map[t.dst];
                if (slot != kNoState && slot != target) throw Error("not language-deterministic");
                slot = target;
            }
        }
    return out;
}

ExtendedChain extend_chain(const Chain& c) {
    ExtendedChain ext;
    ext.levels.push_back(universal_cobuchi(c.alphabet));
    for (const auto& a : c.levels) {
        if (a.alphabet() != c.alphabet) throw Error("chain levels must share one alphabet");
        require_cobuchi(a, "chain level");
        ext.levels.push_back(a);
    }
    ext.levels.push_back(empty_cobuchi(c.alphabet));
    for (std::size_t i = 0; i < ext.levels.size(); ++i) {
        if (i == 0 || i + 1 == ext.levels.size())
            ext.trackers.push_back({single_state_rlta(c.alphabet), {0}});
        else
            ext.trackers.push_back(residual_tracking_single(ext.levels[i]));
    }
    return ext;
}

std::set<TrackerTuple> compute_rij(const ExtendedChain& ext, std::size_t i, std::size_t j) {
    if (i > ext.n() || j > ext.n()) throw Error("compute_rij: index out of range");
    const Automaton& ai = ext.levels[i];
    const Automaton& ai1 = ext.levels[i + 1];
    const Automaton& aj = ext.levels[j];
    const Automaton& aj1 = ext.levels[j + 1];
    const std::size_t k = ai.alphabet().size();

    const auto pairs_i = joint_pairs(ai, ai1);
    const auto pairs_j = joint_pairs(aj, aj1);
    std::vector<std::uint32_t> index_i(ai.state_count() * ai1.state_count(), UINT32_MAX);
    std::vector<std::uint32_t> index_j(aj.state_count() * aj1.state_count(), UINT32_MAX);
    for (std::size_t t = 0; t < pairs_i.size(); ++t)
        index_i[pairs_i[t].first * ai1.state_count() + pairs_i[t].second] = static_cast<std::uint32_t>(t);
    for (std::size_t t = 0; t < pairs_j.size(); ++t)
        index_j[pairs_j[t].first * aj1.state_count() + pairs_j[t].second] = static_cast<std::uint32_t>(t);

    GameArena g;
    // Player-0 vertex for (pair_i, pair_j, z) sits at (ki * |J_j| + kj) * 3 + z.
    for (std::size_t v = 0; v < pairs_i.size() * pairs_j.size(); ++v)
        for (Color z = 0; z < 3; ++z) g.add_vertex(0, z == 2 ? 0 : 1);
    auto state_vertex = [&](StateId qi, StateId qi1, StateId qj, StateId qj1, std::uint32_t z) {
        const auto ki = index_i[qi * ai1.state_count() + qi1];
        const auto kj = index_j[qj * aj1.state_count() + qj1];
        return static_cast<Vertex>((ki * pairs_j.size() + kj) * 3 + z);
    };
    const Vertex lose0 = g.add_vertex(1, 1);
    g.add_edge(lose0, lose0);
    const Vertex win0 = g.add_vertex(0, 0);
    g.add_edge(win0, win0);

    std::unordered_map<std::array<std::uint32_t, 6>, Vertex, ArrayHash> letter_vertex;
    std::vector<std::array<std::uint32_t, 6>> pending;
    for (const auto& [qi, qi1] : pairs_i)
        for (const auto& [qj, qj1] : pairs_j)
            for (std::uint32_t z = 0; z < 3; ++z) {
                const Vertex v = state_vertex(qi, qi1, qj, qj1, z);
                const std::uint32_t z0 = z == 2 ? 0 : z;
                bool moved = false;
                for (SymbolId x = 0; x < k; ++x)
                    for (const auto& ti : ai.successors(qi, x)) {
                        if (ti.color != 2) continue;
                        for (const auto& tj : aj.successors(qj, x)) {
                            if (tj.color != 2) continue;
                            std::array<std::uint32_t, 6> key{ti.dst, qi1, tj.dst, qj1, z0, x};
                            auto [it, fresh] = letter_vertex.try_emplace(key, 0);
                            if (fresh) {
                                // Letter vertices are neutral: color 1 never beats a visit to z = 2.
                                it->second = g.add_vertex(1, 1);
                                pending.push_back(key);
                            }
                            g.add_edge(v, it->second);
                            moved = true;
                        }
                    }
                if (!moved) g.add_edge(v, lose0);
            }
    for (const auto& key : pending) {
        const Vertex u = letter_vertex.at(key);
        const auto [qi2, qi1, qj2, qj1, z0, x] = key;
        bool moved = false;
        for (const auto& t1 : ai1.successors(qi1, x))
            for (const auto& t2 : aj1.successors(qj1, x)) {
                std::uint32_t z = z0;
                if (z0 == 0 && t1.color == 1) z = 1;
                else if (z0 == 1 && t2.color == 1) z = 2;
                g.add_edge(u, state_vertex(qi2, t1.dst, qj2, t2.dst, z));
                moved = true;
            }
        if (!moved) g.add_edge(u, win0);
    }

    const GameSolution sol = solve(g);
    const auto& fi = ext.trackers[i].state_map;
    const auto& fi1 = ext.trackers[i + 1].state_map;
    const auto& fj = ext.trackers[j].state_map;
    const auto& fj1 = ext.trackers[j + 1].state_map;
    std::set<TrackerTuple> rel;
    std::deque<TrackerTuple> work;
    for (const auto& [qi, qi1] : pairs_i)
        for (const auto& [qj, qj1] : pairs_j)
            for (std::uint32_t z = 0; z < 3; ++z)
                if (sol.wins0(state_vertex(qi, qi1, qj, qj1, z))) {
                    TrackerTuple t{fi[qi], fi1[qi1], fj[qj], fj1[qj1]};
                    if (rel.insert(t).second) work.push_back(t);
                }

    // Predecessor closure over the four trackers reading a common symbol.
    const std::array<const Rlta*, 4> tr{&ext.trackers[i].rlta, &ext.trackers[i + 1].rlta, &ext.trackers[j].rlta,
                                        &ext.trackers[j + 1].rlta};
    std::array<std::vector<std::vector<StateId>>, 4> inverse;
    for (std::size_t c = 0; c < 4; ++c) {
        inverse[c].assign(tr[c]->state_count * k, {});
        for (StateId s = 0; s < tr[c]->state_count; ++s)
            for (SymbolId x = 0; x < k; ++x) inverse[c][tr[c]->next(s, x) * k + x].push_back(s);
    }
    while (!work.empty()) {
        const TrackerTuple t = work.front();
        work.pop_front();
        for (SymbolId x = 0; x < k; ++x)
            for (StateId a : inverse[0][t[0] * k + x])
                for (StateId b : inverse[1][t[1] * k + x])
                    for (StateId c : inverse[2][t[2] * k + x])
                        for (StateId d : inverse[3][t[3] * k + x]) {
                            TrackerTuple p{a, b, c, d};
                            if (rel.insert(p).second) work.push_back(p);
                        }
    }
    return rel;
}

RltaChainResult build_rlta_chain(const Chain& c) {
    const ExtendedChain ext = extend_chain(c);
    const std::size_t n = ext.n(), k = c.alphabet.size();

    // Only pairs of different evenness are ever consulted; R^{j,i} mirrors R^{i,j}.
    std::map<std::pair<std::size_t, std::size_t>, std::set<TrackerTuple>> rij;
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; j += 2) {
            auto rel = compute_rij(ext, i, j);
            std::set<TrackerTuple> mirror;
            for (const auto& t : rel) mirror.insert({t[2], t[3], t[0], t[1]});
            rij[{i, j}] = std::move(rel);
            rij[{j, i}] = std::move(mirror);
        }

    auto separated = [&](const std::vector<StateId>& s1, const std::vector<StateId>& s2) {
        for (const auto& [ij, rel] : rij) {
            auto [i, j] = ij;
            if (rel.count({s1[i], s1[i + 1], s2[j], s2[j + 1]})) return true;
        }
        return false;
    };

    std::vector<std::vector<StateId>> states;
    std::vector<StateId> init(n + 2);
    for (std::size_t l = 0; l < n + 2; ++l) init[l] = ext.trackers[l].rlta.initial;
    states.push_back(init);
    std::vector<StateId> delta;
    for (std::size_t head = 0; head < states.size(); ++head) {
        delta.resize((head + 1) * k, kNoState);
        for (SymbolId x = 0; x < k; ++x) {
            std::vector<StateId> succ(n + 2);
            for (std::size_t l = 0; l < n + 2; ++l) succ[l] = ext.trackers[l].rlta.next(states[head][l], x);
            StateId target = kNoState;
            for (std::size_t s = 0; s < states.size() && target == kNoState; ++s)
                if (!separated(succ, states[s])) target = static_cast<StateId>(s);
            if (target == kNoState) {
                target = static_cast<StateId>(states.size());
                states.push_back(succ);
            }
            delta[head * k + x] = target;
        }
    }

    RltaChainResult out;
    out.rlta.alphabet = c.alphabet;
    out.rlta.state_count = states.size();
    out.rlta.initial = 0;
    out.rlta.delta = std::move(delta);
    for (std::size_t s = 0; s < states.size(); ++s) {
        out.rlta.names.push_back("r" + std::to_string(s));
        out.tuples.emplace_back(states[s].begin(), states[s].end() - 1);
    }
    return out;
}

} // namespace rerail
