#include "rerail/chain.hpp"
#include "rerail/error.hpp"
#include "rerail/membership.hpp"

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"

#include <doctest.h>

#include <numeric>

using namespace rerail;
using namespace rerail::testing;

namespace {

Automaton one_state(Color c, std::size_t symbols = 2) {
    std::vector<Transition> ts;
    for (SymbolId x = 0; x < symbols; ++x) ts.push_back({0, x, 0, c});
    return Automaton(letters(symbols), 1, 0, ts);
}

bool chain_agrees(const Chain& c, const Automaton& r, LassoBounds b) {
    return bounded_equivalence(r.alphabet().size(), oracle_for(r, Semantics::Rerailing),
                               [&](const LassoWord& w) { return chain_member(c, w); }, b)
        .equivalent;
}

// Residual classes of a deterministic automaton, told apart by bounded lassos.
std::size_t bounded_residual_count(const Automaton& d, LassoBounds b) {
    std::vector<StateId> rep;
    for (StateId q = 0; q < d.state_count(); ++q) {
        bool fresh = true;
        for (StateId r : rep) {
            const Automaton dq = with_initial(d, q), dr = with_initial(d, r);
            if (bounded_equivalence(d.alphabet().size(), oracle_for(dq, Semantics::ParityDet),
                                    oracle_for(dr, Semantics::ParityDet), b)
                    .equivalent) {
                fresh = false;
                break;
            }
        }
        if (fresh) rep.push_back(q);
    }
    return rep.size();
}

} // namespace

TEST_CASE("decomposition of single-state automata") {
    const Chain all = decompose_rerailing(one_state(2));
    REQUIRE(all.size() == 2);
    for (const auto& level : all.levels)
        for (const auto& t : level.transitions()) CHECK(t.color == 2);
    CHECK(chain_color(all, {{}, {0}}) == 2);

    const Chain none = decompose_rerailing(one_state(1));
    REQUIRE(none.size() == 1);
    // Color 1 everywhere: level one is universal and every word gets color 1.
    for (const auto& t : none.levels[0].transitions()) CHECK(t.color == 2);
    CHECK(chain_color(none, {{}, {1}}) == 1);
    CHECK_FALSE(chain_member(none, {{}, {1}}));

    const Chain empty{letters(2), {}};
    CHECK(chain_color(empty, {{}, {0, 1}}) == 0);
    CHECK(chain_member(empty, {{}, {0, 1}}));

    const Automaton partial(letters(2), 1, 0, {{0, 0, 0, 2}});
    CHECK_THROWS_AS(decompose_rerailing(partial), Error);
}

TEST_CASE("decomposition preserves the language") {
    const Automaton m = fixture_raf("minimal_five_state.raf");
    const Chain c = decompose_rerailing(m);
    CHECK(c.size() == 3);
    CHECK(chain_agrees(c, m, {4, 4}));

    std::mt19937 rng(31);
    for (int round = 0; round < 20; ++round) {
        const Automaton d = trim_unreachable(random_dpw(rng, 4, 2, 4));
        CHECK(chain_agrees(decompose_rerailing(d), d, {3, 3}));
    }
}

TEST_CASE("chain files round trip") {
    const Chain c = decompose_rerailing(fixture_raf("minimal_five_state.raf"));
    const std::string text = write_chain(c);
    CHECK(write_chain(parse_chain(text)) == text);
    CHECK(parse_chain("cocoa 1\nalphabet a b\ncount 0\n").size() == 0);
    CHECK_THROWS_AS(parse_chain("cocoa 1\ncount 1\n"), ParseError);
    CHECK_THROWS_AS(parse_chain("cocoa 1\ncount 1\nautomaton 1\nalphabet a\nstates 1\ninitial 0\ntrans 0 a 0 3\n"),
                    ParseError);
    CHECK(parse_chain(fixture_text("same_length_levels.cocoa")).size() == 2);
}

TEST_CASE("history-deterministic inclusion") {
    const Automaton a = fixture_raf("even_odd_cobuchi.raf");
    const InclusionTable t = inclusion_hd_cobuchi(a, a);
    for (StateId q = 0; q < 5; ++q) CHECK(t.included(q, q));
    CHECK(t.included(0, 2));
    CHECK(t.included(2, 0));

    // Mutual inclusion classes.
    const std::vector<int> cls{0, 1, 0, 1, 0};
    for (StateId p = 0; p < 5; ++p)
        for (StateId q = 0; q < 5; ++q) CHECK((t.included(p, q) && t.included(q, p)) == (cls[p] == cls[q]));

    // q0 and q1 differ, and the game answer is backed by a lasso.
    CHECK_FALSE((t.included(0, 1) && t.included(1, 0)));
    auto r = bounded_equivalence(3, oracle_for(with_initial(a, 0), Semantics::CoBuchi),
                                 oracle_for(with_initial(a, 1), Semantics::CoBuchi), {4, 4});
    CHECK_FALSE(r.equivalent);
}

TEST_CASE("inclusion answers agree with bounded lassos") {
    std::mt19937 rng(17);
    for (int round = 0; round < 10; ++round) {
        const Chain c = decompose_rerailing(trim_unreachable(random_dpw(rng, 3, 2, 3)));
        for (const auto& a : c.levels)
            for (const auto& b : c.levels) {
                const InclusionTable t = inclusion_hd_cobuchi(a, b);
                for (StateId q = 0; q < a.state_count(); ++q)
                    for (StateId p = 0; p < b.state_count(); ++p) {
                        if (!t.included(q, p)) continue;
                        const Automaton aq = with_initial(a, q), bp = with_initial(b, p);
                        for_each_lasso(2, {3, 3}, [&](const LassoWord& w) {
                            CHECK_FALSE((member_cobuchi(aq, w) && !member_cobuchi(bp, w)));
                            return true;
                        });
                    }
            }
    }
}

TEST_CASE("residual tracking per automaton") {
    CHECK(residual_tracking_single(universal_cobuchi(letters(2))).rlta.state_count == 1);
    const ResidualTracker even_odd = residual_tracking_single(fixture_raf("even_odd_cobuchi.raf"));
    CHECK(even_odd.rlta.state_count == 2);
    CHECK(even_odd.state_map == std::vector<StateId>{0, 1, 0, 1, 0});

    const Chain c = decompose_rerailing(fixture_raf("minimal_five_state.raf"));
    CHECK(residual_tracking_single(c.levels[0]).rlta.state_count == 1);
}

TEST_CASE("separating tuples") {
    const Alphabet ab = letters(2);
    const ExtendedChain universal = extend_chain(Chain{ab, {universal_cobuchi(ab)}});
    CHECK(compute_rij(universal, 0, 0).empty());

    const ExtendedChain empty = extend_chain(Chain{ab, {empty_cobuchi(ab)}});
    CHECK(compute_rij(empty, 0, 0) == std::set<TrackerTuple>{{0, 0, 0, 0}});
    CHECK_THROWS_AS(compute_rij(empty, 2, 0), Error);
}

TEST_CASE("separating tuples are closed under predecessors") {
    std::mt19937 rng(41);
    for (int round = 0; round < 6; ++round) {
        const ExtendedChain ext = extend_chain(decompose_rerailing(trim_unreachable(random_dpw(rng, 4, 2, 3))));
        for (std::size_t i = 0; i <= ext.n(); ++i)
            for (std::size_t j = 0; j <= ext.n(); ++j) {
                const auto rel = compute_rij(ext, i, j);
                const std::array<const Rlta*, 4> r{&ext.trackers[i].rlta, &ext.trackers[i + 1].rlta,
                                                   &ext.trackers[j].rlta, &ext.trackers[j + 1].rlta};
                TrackerTuple t{};
                for (t[0] = 0; t[0] < r[0]->state_count; ++t[0])
                    for (t[1] = 0; t[1] < r[1]->state_count; ++t[1])
                        for (t[2] = 0; t[2] < r[2]->state_count; ++t[2])
                            for (t[3] = 0; t[3] < r[3]->state_count; ++t[3])
                                for (SymbolId x = 0; x < 2; ++x) {
                                    TrackerTuple s{r[0]->next(t[0], x), r[1]->next(t[1], x), r[2]->next(t[2], x),
                                                   r[3]->next(t[3], x)};
                                    if (rel.count(s)) CHECK(rel.count(t) == 1);
                                }
            }
    }
}

TEST_CASE("tracking automaton of a chain") {
    const Alphabet ab = letters(2);
    CHECK(build_rlta_chain(Chain{ab, {universal_cobuchi(ab)}}).rlta.state_count == 1);

    const Chain c = parse_chain(fixture_text("same_length_levels.cocoa"));
    for (const auto& level : c.levels) CHECK(residual_tracking_single(level).rlta.state_count == 3);
    const RltaChainResult r = build_rlta_chain(c);
    CHECK(r.rlta.state_count == 1);
    r.rlta.validate();

    std::mt19937 rng(53);
    for (int round = 0; round < 15; ++round) {
        const Automaton d = trim_unreachable(random_dpw(rng, 4, 2, 3));
        const Rlta t = build_rlta_chain(decompose_rerailing(d)).rlta;
        t.validate();
        CHECK(t.state_count == bounded_residual_count(d, {4, 4}));
    }
}
