#include "rerail/error.hpp"
#include "rerail/rerailing_build.hpp"
#include "rerail/synthesis.hpp"

#include "../support/oracles.hpp"
#include "../support/specs.hpp"

#include <doctest.h>

using namespace rerail;
using namespace rerail::testing;

namespace {

const NamedSpec& spec_named(const std::vector<NamedSpec>& family, const std::string& name) {
    for (const auto& s : family)
        if (s.name == name) return s;
    throw Error("unknown spec " + name);
}

} // namespace

TEST_CASE("realizability game shape") {
    const IoAlphabet io(kInputs, kOutputs);
    const Alphabet ab({"r|g", "r|w", "n|g", "n|w"});
    std::vector<Transition> ts;
    for (SymbolId z = 0; z < 4; ++z) ts.push_back({0, z, 0, 2});
    const RealizabilityGame g = build_realizability_game(Automaton(ab, 1, 0, ts), io);
    CHECK(g.arena.size() == 1 + 2 + 1);
    CHECK(solve(g.arena).wins0(g.initial));

    CHECK_THROWS_AS(IoAlphabet({"r"}, {"g|x"}), Error);
    CHECK_THROWS_AS(build_realizability_game(Automaton(letters(4), 1, 0, ts), io), Error);
}

TEST_CASE("trivial specifications") {
    const auto family = request_grant_family();
    const IoAlphabet io(kInputs, kOutputs);
    CHECK(realizability(spec_named(family, "infinitely many grants").spec, io).realizable);
    CHECK_FALSE(realizability(spec_named(family, "infinitely many requests").spec, io).realizable);
}

TEST_CASE("game agrees with the split reference game") {
    const IoAlphabet io(kInputs, kOutputs);
    for (const auto& s : request_grant_family()) {
        CAPTURE(s.name);
        const bool verdict = realizability(s.spec, io).realizable;
        CHECK(verdict == reference_realizable(s.spec, kInputs, kOutputs));
        if (s.realizable) CHECK(verdict == *s.realizable);
    }
}

TEST_CASE("verdict survives minimization") {
    const IoAlphabet io(kInputs, kOutputs);
    for (const auto& s : request_grant_family()) {
        if (s.spec.state_count() > 6) continue;
        CAPTURE(s.name);
        const Automaton m = minimize_rerailing(s.spec);
        CHECK(m.is_color_homogeneous());
        CHECK(realizability(m, io).realizable == realizability(s.spec, io).realizable);
    }
}
