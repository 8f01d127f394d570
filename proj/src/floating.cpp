#include "rerail/floating.hpp"

#include "rerail/error.hpp"
#include "rerail/scc.hpp"
#include "text_io.hpp"

#include <algorithm>
#include <map>

namespace rerail {

namespace {

void require_same_rlta(const FloatingAutomaton& a, const FloatingAutomaton& b) {
    if (a.rlta_ptr() != b.rlta_ptr() && !(a.rlta() == b.rlta())) throw Error("floating automata use different RLTAs");
}

Graph transition_graph(const FloatingAutomaton& f) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (StateId q = 0; q < f.state_count(); ++q)
        for (SymbolId x = 0; x < f.alphabet_size(); ++x)
            if (f.next(q, x) != kNoState) edges.emplace_back(q, f.next(q, x));
    return Graph::from_edges(f.state_count(), edges);
}

// Splits "a,{b,c},d" at commas outside braces.
std::vector<std::string> split_path(const std::string& name) {
    std::vector<std::string> parts;
    std::string cur;
    int depth = 0;
    for (char ch : name) {
        if (ch == ',' && depth == 0) {
            parts.push_back(cur);
            cur.clear();
            continue;
        }
        if (ch == '{') ++depth;
        if (ch == '}') --depth;
        cur += ch;
    }
    parts.push_back(cur);
    return parts;
}

std::string join_path(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (p.empty()) continue;
        if (!out.empty()) out += ",";
        out += p;
    }
    return out;
}

std::string strip_braces(const std::string& s) {
    return s.size() >= 2 && s.front() == '{' && s.back() == '}' ? s.substr(1, s.size() - 2) : s;
}

// "2,3" and "2,4" merge into "2,{3,4}".
std::string merged_name(const std::vector<std::string>& names) {
    std::vector<std::vector<std::string>> paths;
    for (const auto& n : names) paths.push_back(split_path(n));
    bool common_prefix = true;
    for (const auto& p : paths)
        if (p.size() != paths.front().size() || !std::equal(p.begin(), p.end() - 1, paths.front().begin()))
            common_prefix = false;
    std::vector<std::string> prefix;
    std::vector<std::string> lasts;
    if (common_prefix) {
        prefix.assign(paths.front().begin(), paths.front().end() - 1);
        for (const auto& p : paths) lasts.push_back(strip_braces(p.back()));
    } else {
        for (const auto& n : names) lasts.push_back(n);
    }
    std::string inner;
    for (const auto& l : lasts) inner += (inner.empty() ? "" : ",") + l;
    prefix.push_back("{" + inner + "}");
    return join_path(prefix);
}

// bits[q * n + p] iff Safe(q) ⊆ Safe(p). A pair fails when q reads a symbol p
// cannot, or when some common symbol leads to a failing pair.
std::vector<bool> safe_inclusion(const FloatingAutomaton& f) {
    const std::size_t n = f.state_count(), k = f.alphabet_size();
    std::vector<bool> ok(n * n, true);
    std::vector<std::vector<StateId>> inverse(n * k);
    for (StateId q = 0; q < n; ++q)
        for (SymbolId x = 0; x < k; ++x)
            if (f.next(q, x) != kNoState) inverse[f.next(q, x) * k + x].push_back(q);
    std::vector<std::pair<StateId, StateId>> work;
    for (StateId q = 0; q < n; ++q)
        for (StateId p = 0; p < n; ++p)
            for (SymbolId x = 0; x < k; ++x)
                if (f.next(q, x) != kNoState && f.next(p, x) == kNoState) {
                    ok[q * n + p] = false;
                    work.emplace_back(q, p);
                    break;
                }
    while (!work.empty()) {
        auto [c, d] = work.back();
        work.pop_back();
        for (SymbolId x = 0; x < k; ++x)
            for (StateId a : inverse[c * k + x])
                for (StateId b : inverse[d * k + x])
                    if (ok[a * n + b]) {
                        ok[a * n + b] = false;
                        work.emplace_back(a, b);
                    }
    }
    return ok;
}

} // namespace

FloatingAutomaton::FloatingAutomaton(std::shared_ptr<const Rlta> rlta, std::size_t states)
    : rlta_(std::move(rlta)) {
    if (!rlta_) throw Error("floating automaton needs an RLTA");
    delta_.assign(states * alphabet_size(), kNoState);
    label_.assign(states, 0);
    marker_.assign(states, kNoState);
    names_.resize(states);
    for (std::size_t q = 0; q < states; ++q) names_[q] = std::to_string(q);
}

StateId FloatingAutomaton::add_state(StateId label, StateId marker, std::string name) {
    delta_.resize(delta_.size() + alphabet_size(), kNoState);
    label_.push_back(label);
    marker_.push_back(marker);
    names_.push_back(std::move(name));
    return static_cast<StateId>(label_.size() - 1);
}

void FloatingAutomaton::validate() const {
    for (StateId q = 0; q < state_count(); ++q) {
        if (label_[q] >= rlta_->state_count) throw Error("floating state label out of range");
        for (SymbolId x = 0; x < alphabet_size(); ++x) {
            StateId t = next(q, x);
            if (t == kNoState) continue;
            if (t >= state_count()) throw Error("floating transition target out of range");
            if (label_[t] != rlta_->next(label_[q], x))
                throw Error("floating state " + names_[q] + ": label does not follow the RLTA on '" +
                            rlta_->alphabet.name(x) + "'");
        }
    }
}

bool floating_member(const FloatingAutomaton& f, const LassoWord& input) {
    const LassoWord w = canonicalize(input);
    const Rlta& r = f.rlta();
    // Track (RLTA state, position) until it repeats; t0 is where it loops back.
    std::vector<std::pair<StateId, std::size_t>> track;
    std::vector<std::uint32_t> seen(r.state_count * w.length(), UINT32_MAX);
    StateId s = r.initial;
    std::size_t pos = 0;
    while (seen[s * w.length() + pos] == UINT32_MAX) {
        seen[s * w.length() + pos] = static_cast<std::uint32_t>(track.size());
        track.emplace_back(s, pos);
        s = r.next(s, w.at(pos));
        pos = w.next(pos);
    }
    const std::size_t loop = seen[s * w.length() + pos];
    const std::size_t len = track.size();

    std::vector<std::vector<StateId>> by_label(r.state_count);
    for (StateId q = 0; q < f.state_count(); ++q) by_label[f.label(q)].push_back(q);

    // Node (q, t) exists iff label(q) matches the track; a cycle means acceptance.
    std::vector<std::uint32_t> node_of(f.state_count() * len, UINT32_MAX);
    std::uint32_t nodes = 0;
    for (std::size_t t = 0; t < len; ++t)
        for (StateId q : by_label[track[t].first]) node_of[q * len + t] = nodes++;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::size_t t = 0; t < len; ++t) {
        const std::size_t t2 = t + 1 < len ? t + 1 : loop;
        for (StateId q : by_label[track[t].first]) {
            StateId q2 = f.next(q, w.at(track[t].second));
            if (q2 != kNoState && node_of[q2 * len + t2] != UINT32_MAX)
                edges.emplace_back(node_of[q * len + t], node_of[q2 * len + t2]);
        }
    }
    auto scc = strongly_connected_components(Graph::from_edges(nodes, edges));
    return std::find(scc.nontrivial.begin(), scc.nontrivial.end(), true) != scc.nontrivial.end();
}

std::size_t floating_chain_color(const FloatingChain& c, const LassoWord& w) {
    for (std::size_t i = c.levels.size(); i > 0; --i)
        if (floating_member(c.levels[i - 1], w)) return i;
    return 0;
}

bool floating_chain_member(const FloatingChain& c, const LassoWord& w) { return floating_chain_color(c, w) % 2 == 0; }

FloatingAutomaton level_zero(const std::shared_ptr<const Rlta>& rlta) {
    FloatingAutomaton f(rlta, rlta->state_count);
    for (StateId s = 0; s < rlta->state_count; ++s) {
        f.set_label(s, s);
        f.set_name(s, rlta->state_count == 1 ? "" : rlta->state_name(s));
        for (SymbolId x = 0; x < rlta->alphabet.size(); ++x) f.set_next(s, x, rlta->next(s, x));
    }
    return f;
}

FloatingAutomaton residualize(const Automaton& a, const std::shared_ptr<const Rlta>& rlta) {
    if (a.alphabet() != rlta->alphabet) throw Error("residualize: alphabet mismatch");
    const std::size_t k = a.alphabet().size();

    std::vector<char> seen(a.state_count() * rlta->state_count, 0);
    std::vector<std::pair<StateId, StateId>> pairs{{a.initial(), rlta->initial}};
    seen[a.initial() * rlta->state_count + rlta->initial] = 1;
    for (std::size_t head = 0; head < pairs.size(); ++head) {
        auto [q, s] = pairs[head];
        for (SymbolId x = 0; x < k; ++x) {
            const StateId s2 = rlta->next(s, x);
            for (const auto& t : a.successors(q, x))
                if (!seen[t.dst * rlta->state_count + s2]) {
                    seen[t.dst * rlta->state_count + s2] = 1;
                    pairs.emplace_back(t.dst, s2);
                }
        }
    }

    using Key = std::pair<std::vector<StateId>, StateId>;
    std::map<Key, StateId> index;
    std::vector<Key> keys;
    auto intern = [&](Key key) {
        auto [it, fresh] = index.try_emplace(key, static_cast<StateId>(keys.size()));
        if (fresh) keys.push_back(std::move(key));
        return it->second;
    };
    for (auto [q, s] : pairs) intern({{q}, s});
    std::vector<std::vector<StateId>> delta;
    for (std::size_t head = 0; head < keys.size(); ++head) {
        delta.emplace_back(k, kNoState);
        for (SymbolId x = 0; x < k; ++x) {
            std::vector<StateId> target;
            for (StateId q : keys[head].first)
                for (const auto& t : a.successors(q, x))
                    if (t.color == 2) target.push_back(t.dst);
            if (target.empty()) continue;
            std::sort(target.begin(), target.end());
            target.erase(std::unique(target.begin(), target.end()), target.end());
            const StateId s2 = rlta->next(keys[head].second, x);
            delta[head][x] = intern({std::move(target), s2});
        }
    }

    FloatingAutomaton f(rlta, keys.size());
    for (StateId v = 0; v < keys.size(); ++v) {
        const auto& [set, s] = keys[v];
        f.set_label(v, s);
        std::string name;
        if (set.size() == 1) {
            name = a.state_name(set.front());
        } else {
            for (StateId q : set) name += (name.empty() ? "" : "/") + a.state_name(q);
            name = "{" + name + "}";
        }
        if (rlta->state_count > 1) name += "@" + rlta->state_name(s);
        f.set_name(v, name);
        for (SymbolId x = 0; x < k; ++x) f.set_next(v, x, delta[v][x]);
    }
    return f;
}

bool safe_subset(const FloatingAutomaton& f1, StateId q1, const FloatingAutomaton& f2, StateId q2) {
    if (f1.alphabet_size() != f2.alphabet_size()) throw Error("safe_subset: alphabet mismatch");
    const std::size_t n2 = f2.state_count(), k = f1.alphabet_size();
    std::vector<char> seen(f1.state_count() * n2, 0);
    std::vector<std::pair<StateId, StateId>> work{{q1, q2}};
    seen[q1 * n2 + q2] = 1;
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        for (SymbolId x = 0; x < k; ++x) {
            const StateId a2 = f1.next(a, x);
            if (a2 == kNoState) continue;
            const StateId b2 = f2.next(b, x);
            if (b2 == kNoState) return false;
            if (!seen[a2 * n2 + b2]) {
                seen[a2 * n2 + b2] = 1;
                work.emplace_back(a2, b2);
            }
        }
    }
    return true;
}

FloatingAutomaton restrict_floating(const FloatingAutomaton& f, const std::vector<StateId>& keep) {
    std::vector<StateId> renumber(f.state_count(), kNoState);
    for (std::size_t i = 0; i < keep.size(); ++i) renumber[keep[i]] = static_cast<StateId>(i);
    FloatingAutomaton out(f.rlta_ptr(), keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i) {
        const StateId q = keep[i];
        out.set_label(static_cast<StateId>(i), f.label(q));
        out.set_marker(static_cast<StateId>(i), f.marker(q));
        out.set_name(static_cast<StateId>(i), f.name(q));
        for (SymbolId x = 0; x < f.alphabet_size(); ++x) {
            const StateId t = f.next(q, x);
            if (t != kNoState && renumber[t] != kNoState) out.set_next(static_cast<StateId>(i), x, renumber[t]);
        }
    }
    return out;
}

std::vector<std::vector<StateId>> max_accepting_sccs(const FloatingAutomaton& f) {
    auto scc = strongly_connected_components(transition_graph(f));
    std::vector<std::vector<StateId>> groups(scc.count);
    for (StateId q = 0; q < f.state_count(); ++q)
        if (scc.nontrivial[scc.component[q]]) groups[scc.component[q]].push_back(q);
    std::vector<std::vector<StateId>> out;
    for (auto& g : groups)
        if (!g.empty()) out.push_back(std::move(g));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return out;
}

FloatingAutomaton minimize_floating(const FloatingAutomaton& input) {
    FloatingAutomaton f = input;
    while (true) {
        const std::size_t n = f.state_count();
        auto scc = strongly_connected_components(transition_graph(f));

        std::vector<StateId> on_cycle;
        for (StateId q = 0; q < n; ++q)
            if (scc.nontrivial[scc.component[q]]) on_cycle.push_back(q);
        if (on_cycle.size() < n) {
            f = restrict_floating(f, on_cycle);
            continue;
        }
        // Cut transitions between components first, so that deleting or merging
        // a state never shrinks the safe language of a state in another component.
        for (StateId q = 0; q < n; ++q)
            for (SymbolId x = 0; x < f.alphabet_size(); ++x) {
                const StateId t = f.next(q, x);
                if (t != kNoState && scc.component[t] != scc.component[q]) f.set_next(q, x, kNoState);
            }

        const auto incl = safe_inclusion(f);
        auto alike = [&](StateId q, StateId p) { return f.label(q) == f.label(p) && f.marker(q) == f.marker(p); };

        StateId dominated = kNoState;
        for (StateId q = 0; q < n && dominated == kNoState; ++q)
            for (StateId p = 0; p < n; ++p)
                if (p != q && alike(q, p) && scc.component[q] != scc.component[p] && incl[q * n + p] &&
                    !incl[p * n + q]) {
                    dominated = q;
                    break;
                }
        if (dominated != kNoState) {
            std::vector<StateId> keep;
            for (StateId q = 0; q < n; ++q)
                if (q != dominated) keep.push_back(q);
            f = restrict_floating(f, keep);
            continue;
        }

        // Merge the first class of equivalent states into its lowest member.
        std::vector<StateId> cls;
        for (StateId q = 0; q < n && cls.size() < 2; ++q) {
            cls = {q};
            for (StateId p = q + 1; p < n; ++p)
                if (alike(q, p) && incl[q * n + p] && incl[p * n + q]) cls.push_back(p);
        }
        if (cls.size() < 2) break;

        const StateId keeper = cls.front();
        std::vector<StateId> redirect(n);
        for (StateId q = 0; q < n; ++q) redirect[q] = q;
        std::vector<std::string> names;
        for (StateId q : cls) {
            redirect[q] = keeper;
            names.push_back(f.name(q));
        }
        FloatingAutomaton g = f;
        for (StateId q = 0; q < n; ++q)
            for (SymbolId x = 0; x < f.alphabet_size(); ++x)
                if (f.next(q, x) != kNoState) g.set_next(q, x, redirect[f.next(q, x)]);
        g.set_name(keeper, merged_name(names));
        std::vector<StateId> keep;
        for (StateId q = 0; q < n; ++q)
            if (redirect[q] == q) keep.push_back(q);
        f = restrict_floating(g, keep);
    }
    return f;
}

FloatingAutomaton product_floating(const FloatingAutomaton& f1, const FloatingAutomaton& f2) {
    require_same_rlta(f1, f2);
    const std::size_t n2 = f2.state_count(), k = f1.alphabet_size();
    std::vector<StateId> index(f1.state_count() * n2, kNoState);
    std::vector<std::pair<StateId, StateId>> pairs;
    for (StateId p = 0; p < f1.state_count(); ++p)
        for (StateId q = 0; q < n2; ++q)
            if (f1.label(p) == f2.label(q)) {
                index[p * n2 + q] = static_cast<StateId>(pairs.size());
                pairs.emplace_back(p, q);
            }
    FloatingAutomaton out(f1.rlta_ptr(), pairs.size());
    for (StateId v = 0; v < pairs.size(); ++v) {
        auto [p, q] = pairs[v];
        out.set_label(v, f1.label(p));
        out.set_marker(v, p);
        out.set_name(v, join_path({f1.name(p), f2.name(q)}));
        for (SymbolId x = 0; x < k; ++x) {
            const StateId p2 = f1.next(p, x), q2 = f2.next(q, x);
            if (p2 != kNoState && q2 != kNoState) out.set_next(v, x, index[p2 * n2 + q2]);
        }
    }
    return out;
}

FloatingAutomaton union_floating(const FloatingAutomaton& f1, const FloatingAutomaton& f2) {
    require_same_rlta(f1, f2);
    const auto n1 = static_cast<StateId>(f1.state_count());
    FloatingAutomaton out(f1.rlta_ptr(), f1.state_count() + f2.state_count());
    for (StateId q = 0; q < out.state_count(); ++q) {
        const bool first = q < n1;
        const FloatingAutomaton& src = first ? f1 : f2;
        const StateId p = first ? q : q - n1;
        out.set_label(q, src.label(p));
        out.set_marker(q, src.marker(p));
        out.set_name(q, src.name(p));
        for (SymbolId x = 0; x < f1.alphabet_size(); ++x) {
            const StateId t = src.next(p, x);
            if (t != kNoState) out.set_next(q, x, first ? t : t + n1);
        }
    }
    return out;
}

std::string write_floating_chain(const FloatingChain& c) {
    std::string out = "fchain 1\nrlta\n";
    detail::write_rlta_body(out, *c.rlta);
    for (std::size_t i = 0; i < c.levels.size(); ++i) {
        const auto& f = c.levels[i];
        out += "floating " + std::to_string(i + 1) + "\nstates " + std::to_string(f.state_count()) + "\n";
        for (StateId q = 0; q < f.state_count(); ++q)
            out += "name " + std::to_string(q) + " " + detail::quote(f.name(q)) + "\n";
        for (StateId q = 0; q < f.state_count(); ++q)
            out += "label " + std::to_string(q) + " " + std::to_string(f.label(q)) + "\n";
        for (StateId q = 0; q < f.state_count(); ++q)
            for (SymbolId x = 0; x < f.alphabet_size(); ++x)
                if (f.next(q, x) != kNoState)
                    out += "trans " + std::to_string(q) + " " + c.rlta->alphabet.name(x) + " " +
                           std::to_string(f.next(q, x)) + "\n";
    }
    return out;
}

FloatingChain parse_floating_chain(const std::string& text) {
    using detail::Line;
    auto lines = detail::tokenize(text);
    if (lines.empty() || lines.front().tokens != std::vector<std::string>{"fchain", "1"})
        throw ParseError(lines.empty() ? 1 : lines.front().number, "expected header 'fchain 1'");
    if (lines.size() < 2 || lines[1].tokens != std::vector<std::string>{"rlta"})
        throw ParseError(lines.size() < 2 ? lines.front().number : lines[1].number, "expected 'rlta' block");
    std::size_t end = 2;
    while (end < lines.size() && lines[end].tokens.front() != "floating") ++end;
    FloatingChain chain;
    auto rlta = std::make_shared<Rlta>(
        detail::parse_rlta_lines(std::span<const Line>(lines).subspan(2, end - 2), lines[1].number));
    chain.rlta = rlta;

    std::size_t pos = end;
    while (pos < lines.size()) {
        const Line& head = lines[pos];
        detail::expect_arity(head, 2);
        if (detail::parse_index(head, 1, "level") != chain.levels.size() + 1)
            throw ParseError(head.number, "levels must be numbered 1, 2, ... in order");
        std::size_t stop = pos + 1;
        while (stop < lines.size() && lines[stop].tokens.front() != "floating") ++stop;
        if (pos + 1 >= stop || lines[pos + 1].tokens.front() != "states")
            throw ParseError(head.number, "floating block must start with 'states <N>'");
        detail::expect_arity(lines[pos + 1], 2);
        const std::size_t n = detail::parse_index(lines[pos + 1], 1, "state count");
        FloatingAutomaton f(rlta, n);
        std::vector<bool> labelled(n, false);
        for (std::size_t l = pos + 2; l < stop; ++l) {
            const Line& line = lines[l];
            const std::string& kw = line.tokens.front();
            if (kw == "name") {
                detail::expect_arity(line, 3);
                auto q = detail::parse_index(line, 1, "state");
                if (q >= n) throw ParseError(line.number, "state index out of range");
                f.set_name(static_cast<StateId>(q), line.tokens[2]);
            } else if (kw == "label") {
                detail::expect_arity(line, 3);
                auto q = detail::parse_index(line, 1, "state");
                auto s = detail::parse_index(line, 2, "RLTA state");
                if (q >= n || s >= rlta->state_count) throw ParseError(line.number, "index out of range");
                f.set_label(static_cast<StateId>(q), static_cast<StateId>(s));
                labelled[q] = true;
            } else if (kw == "trans") {
                detail::expect_arity(line, 4);
                auto q = detail::parse_index(line, 1, "source state");
                auto x = rlta->alphabet.find(line.tokens[2]);
                auto t = detail::parse_index(line, 3, "target state");
                if (q >= n || t >= n) throw ParseError(line.number, "state index out of range");
                if (!x) throw ParseError(line.number, "unknown symbol '" + line.tokens[2] + "'");
                const StateId old = f.next(static_cast<StateId>(q), *x);
                if (old != kNoState && old != t) throw ParseError(line.number, "floating automaton must be deterministic");
                f.set_next(static_cast<StateId>(q), *x, static_cast<StateId>(t));
            } else {
                throw ParseError(line.number, "unknown keyword '" + kw + "'");
            }
        }
        if (n > 0 && rlta->state_count > 1)
            for (std::size_t q = 0; q < n; ++q)
                if (!labelled[q]) throw ParseError(head.number, "state " + std::to_string(q) + " has no label");
        try {
            f.validate();
        } catch (const Error& e) {
            throw ParseError(head.number, e.what());
        }
        chain.levels.push_back(std::move(f));
        pos = stop;
    }
    return chain;
}

} // namespace rerail
