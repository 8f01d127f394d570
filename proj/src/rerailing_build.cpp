#include "rerail/rerailing_build.hpp"

#include "rerail/error.hpp"
#include "rerail/membership.hpp"
#include "rerail/scc.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

namespace rerail {

namespace {

class Builder {
public:
    Builder(const FloatingChain& chain, BuildOptions options) : chain_(chain), options_(options) {
        for (const auto& level : chain.levels)
            if (level.rlta_ptr() != chain.rlta && !(level.rlta() == *chain.rlta))
                throw Error("build: chain levels use different RLTAs");
    }

    // Returns the states created for this context as (global state, context state).
    std::vector<std::pair<StateId, StateId>> recurse(const FloatingAutomaton& ctx, std::size_t i) {
        const std::size_t n = chain_.levels.size();
        FloatingAutomaton built(chain_.rlta, 0);
        for (std::size_t j = options_.optimized_jloop ? i : 1; j <= n; ++j) {
            FloatingAutomaton level = product_floating(ctx, chain_.levels[j - 1]);
            if (j % 2 == i % 2) {
                built = union_floating(built, level);
                continue;
            }
            std::vector<StateId> keep;
            for (StateId a = 0; a < built.state_count(); ++a) {
                bool covered = false;
                for (StateId p = 0; p < level.state_count() && !covered; ++p)
                    covered = level.marker(p) == built.marker(a) && level.label(p) == built.label(a) &&
                              safe_subset(built, a, level, p);
                if (!covered) keep.push_back(a);
            }
            if (keep.size() < built.state_count()) built = restrict_floating(built, keep);
        }
        built = minimize_floating(built);

        std::vector<std::pair<StateId, StateId>> created;
        for (const auto& scc : max_accepting_sccs(built)) {
            FloatingAutomaton sub = restrict_floating(built, scc);
            for (auto [g, s] : recurse(sub, i + 1)) created.emplace_back(g, sub.marker(s));
        }
        std::vector<bool> covered(ctx.state_count(), false);
        for (auto [g, c] : created) covered[c] = true;
        for (StateId c = 0; c < ctx.state_count(); ++c)
            if (!covered[c]) created.emplace_back(new_state(ctx.name(c).empty() ? "·" : ctx.name(c)), c);

        std::vector<std::vector<StateId>> by_ctx(ctx.state_count());
        for (auto [g, c] : created) by_ctx[c].push_back(g);
        const std::size_t k = chain_.rlta->alphabet.size();
        for (auto [g, c] : created)
            for (SymbolId x = 0; x < k; ++x) {
                const StateId c2 = ctx.next(c, x);
                if (c2 == kNoState || has_out_[g * k + x]) continue;
                for (StateId g2 : by_ctx[c2]) transitions_.push_back({g, x, g2, static_cast<Color>(i - 1)});
                has_out_[g * k + x] = !by_ctx[c2].empty();
            }
        return created;
    }

    Automaton finish(const std::vector<std::pair<StateId, StateId>>& top) const {
        StateId initial = kNoState;
        for (auto [g, s] : top)
            if (s == chain_.rlta->initial) initial = std::min(initial, g);
        if (initial == kNoState) throw Error("build: no state for the initial residual");
        return Automaton(chain_.rlta->alphabet, names_.size(), initial, transitions_, names_);
    }

private:
    StateId new_state(std::string name) {
        std::string unique = name;
        for (int suffix = 2; !used_names_.insert(unique).second; ++suffix) unique = name + "#" + std::to_string(suffix);
        names_.push_back(unique);
        has_out_.resize(names_.size() * chain_.rlta->alphabet.size(), false);
        return static_cast<StateId>(names_.size() - 1);
    }

    const FloatingChain& chain_;
    BuildOptions options_;
    std::vector<Transition> transitions_;
    std::vector<std::string> names_;
    std::set<std::string> used_names_;
    std::vector<bool> has_out_;
};

} // namespace

Automaton build_minimal(const FloatingChain& chain, BuildOptions options) {
    if (!chain.rlta) throw Error("build: chain has no RLTA");
    chain.rlta->validate();
    for (const auto& level : chain.levels) level.validate();
    Builder b(chain, options);
    const FloatingAutomaton top = level_zero(chain.rlta);
    const auto created = b.recurse(top, 1);
    return b.finish(created);
}

FloatingChain floating_chain_of(const Chain& chain) {
    FloatingChain out;
    out.rlta = std::make_shared<const Rlta>(build_rlta_chain(chain).rlta);
    for (const auto& level : chain.levels) out.levels.push_back(minimize_floating(residualize(level, out.rlta)));
    return out;
}

Automaton minimize_rerailing(const Automaton& r, BuildOptions options) {
    const Automaton trimmed = trim_unreachable(r);
    return build_minimal(floating_chain_of(decompose_rerailing(trimmed)), options);
}

std::optional<RerailingViolation> check_rerailing_on(const Automaton& a, const LassoWord& w) {
    const LassoProduct p(a, w);
    const std::size_t n = p.node_count();
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
    for (const auto& e : p.edges()) pairs.emplace_back(e.src, e.dst);
    const Graph g = Graph::from_edges(n, pairs);
    const auto scc = strongly_connected_components(g);

    // Colors c of uniform nodes (exactly one achievable color) reachable from each component.
    std::vector<std::uint64_t> uniform(scc.count, 0);
    std::vector<std::vector<std::uint32_t>> members(scc.count);
    for (std::uint32_t v = 0; v < n; ++v) {
        members[scc.component[v]].push_back(v);
        if (std::popcount(p.achievable_mask(v)) == 1) uniform[scc.component[v]] |= p.achievable_mask(v);
    }
    for (std::size_t c = 0; c < scc.count; ++c)
        for (auto v : members[c])
            for (auto it = g.begin(v); it != g.end(v); ++it) uniform[c] |= uniform[scc.component[*it]];

    auto top = [](std::uint64_t m) { return 63 - std::countl_zero(m); };
    const std::uint64_t root = p.achievable_mask(0);
    const bool accepted = root != 0 && top(root) % 2 == 0;
    for (std::uint32_t v = 0; v < n; ++v) {
        const std::uint64_t m = p.achievable_mask(v);
        if (m == 0) continue;
        const int d = top(m);
        const std::uint64_t u = uniform[scc.component[v]];
        std::string kind;
        if (!(u >> d & 1))
            kind = u == 0 ? "no-uniform-successor" : "color-decrease";
        else if ((d % 2 == 0) != accepted)
            kind = "parity-mismatch";
        if (!kind.empty()) return RerailingViolation{p.word(), p.state(v), p.position(v), p.color_ranks()[d], kind};
    }
    return std::nullopt;
}

VerifyResult verify_rerailing_bounded(const Automaton& a, LassoBounds bounds) {
    if (!a.is_complete()) throw Error("verify: automaton is not complete");
    VerifyResult r;
    for_each_lasso(a.alphabet().size(), bounds, [&](const LassoWord& w) {
        ++r.lassos_checked;
        if (auto v = check_rerailing_on(a, w)) {
            r.ok = false;
            r.violation = std::move(v);
            return false;
        }
        return true;
    });
    return r;
}

bool check_color_homogeneous(const Automaton& a) { return a.is_color_homogeneous(); }

} // namespace rerail
