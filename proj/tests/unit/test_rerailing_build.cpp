#include "rerail/chain.hpp"
#include "rerail/floating.hpp"
#include "rerail/membership.hpp"
#include "rerail/rerailing_build.hpp"

#include "../support/fixtures.hpp"
#include "../support/oracles.hpp"

#include <doctest.h>

using namespace rerail;
using namespace rerail::testing;

namespace {

FloatingChain three_levels() { return parse_floating_chain(fixture_text("three_level_floating.fchain")); }

bool equivalent(const Automaton& a, Semantics sa, const Automaton& b, Semantics sb, LassoBounds bounds) {
    return bounded_equivalence(a.alphabet().size(), oracle_for(a, sa), oracle_for(b, sb), bounds).equivalent;
}

} // namespace

TEST_CASE("construction from the three-level floating chain") {
    const FloatingChain c = three_levels();
    const Automaton built = build_minimal(c);
    CHECK(write_raf(built) == write_raf(fixture_raf("minimal_five_state.raf")));
    CHECK(built.is_complete());
    CHECK(check_color_homogeneous(built));
    CHECK(write_raf(build_minimal(c)) == write_raf(built));

    const Alphabet& ab = c.rlta->alphabet;
    CHECK(bounded_equivalence(ab.size(), oracle_for(built, Semantics::Rerailing),
                              [&](const LassoWord& w) { return floating_chain_member(c, w); }, {4, 4})
              .equivalent);

    const Automaton quick = build_minimal(c, {true});
    CHECK(equivalent(quick, Semantics::Rerailing, built, Semantics::Rerailing, {3, 3}));
}

TEST_CASE("degenerate chains") {
    const FloatingChain c = three_levels();
    const Automaton all = build_minimal(FloatingChain{c.rlta, {}});
    CHECK(all.state_count() == c.rlta->state_count);
    for (const auto& t : all.transitions()) CHECK(t.color == 0);

    const Alphabet ab = letters(2);
    const Chain universal{ab, {universal_cobuchi(ab)}};
    const Automaton none = build_minimal(floating_chain_of(universal));
    for_each_lasso(2, {4, 4}, [&](const LassoWord& w) {
        CHECK_FALSE(member_rerailing(none, w));
        CHECK(member_rerailing(none, w) == chain_member(universal, w));
        return true;
    });
}

TEST_CASE("minimization pipeline") {
    const Automaton m = fixture_raf("minimal_five_state.raf");
    const Automaton again = minimize_rerailing(m);
    CHECK(again.state_count() == 5);
    CHECK(equivalent(again, Semantics::Rerailing, m, Semantics::Rerailing, {3, 3}));

    const Automaton one(letters(2), 1, 0, {{0, 0, 0, 2}, {0, 1, 0, 2}});
    CHECK(minimize_rerailing(one).state_count() == 1);

    std::mt19937 rng(97);
    for (int round = 0; round < 25; ++round) {
        const Automaton d = random_dpw(rng, 5, 2, 4);
        const Automaton out = minimize_rerailing(d);
        CHECK(out.state_count() <= trim_unreachable(d).state_count());
        CHECK(out.is_complete());
        CHECK(equivalent(out, Semantics::Rerailing, d, Semantics::ParityDet, {3, 3}));
    }
}

TEST_CASE("rerailing verifier") {
    std::mt19937 rng(101);
    for (int round = 0; round < 10; ++round) CHECK(verify_rerailing_bounded(random_dpw(rng, 4, 2, 4), {3, 3}).ok);
    CHECK(verify_rerailing_bounded(fixture_raf("even_odd_cobuchi.raf"), {4, 4}).ok);
    CHECK(verify_rerailing_bounded(fixture_raf("minimal_five_state.raf"), {3, 3}).ok);

    // Lowering the color of the b loop on the initial state breaks the property.
    const Automaton broken = fixture_raf("perturbed_five_state.raf");
    const VerifyResult r = verify_rerailing_bounded(broken, {3, 3});
    REQUIRE_FALSE(r.ok);
    CHECK(check_rerailing_on(broken, r.violation->word).has_value());
}

TEST_CASE("color homogeneity") {
    std::mt19937 rng(103);
    CHECK(check_color_homogeneous(random_dpw(rng, 3, 2, 3)));
    CHECK(check_color_homogeneous(fixture_raf("minimal_five_state.raf")));
    const Automaton mixed(letters(1), 2, 0, {{0, 0, 0, 1}, {0, 0, 1, 2}, {1, 0, 1, 2}});
    CHECK_FALSE(check_color_homogeneous(mixed));
}
