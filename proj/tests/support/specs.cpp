#include "specs.hpp"

#include <functional>

namespace rerail::testing {

namespace {

struct Step {
    StateId dst;
    Color color;
};

// step(q, request, grant) for every state; symbol order follows the alphabet.
Automaton make_spec(std::size_t states, const std::function<Step(StateId, bool, bool)>& step) {
    const Alphabet ab({"r|g", "r|w", "n|g", "n|w"});
    std::vector<Transition> ts;
    for (StateId q = 0; q < states; ++q)
        for (SymbolId z = 0; z < 4; ++z) {
            const Step s = step(q, z < 2, z % 2 == 0);
            ts.push_back({q, z, s.dst, s.color});
        }
    return Automaton(ab, states, 0, ts);
}

// Grant within k steps of an open request. State 0 idle, a in 1..k pending for a steps, k+1 failed.
Automaton bounded_response(std::size_t k) {
    const auto sink = static_cast<StateId>(k + 1);
    return make_spec(k + 2, [=](StateId q, bool r, bool g) -> Step {
        if (q == sink) return {sink, 1};
        if (g) return {0, 0};
        if (!r && q == 0) return {0, 0};
        const StateId age = q + 1;
        if (age > k) return {sink, 1};
        return {age, 0};
    });
}

// g at time t iff r at time t - k; state = the last k requests as bits, plus a sink.
Automaton delayed_echo(std::size_t k) {
    const auto sink = static_cast<StateId>(1u << k);
    return make_spec(sink + 1, [=](StateId q, bool r, bool g) -> Step {
        if (q == sink) return {sink, 1};
        const bool oldest = (q >> (k - 1)) & 1;
        if (g != oldest) return {sink, 1};
        return {static_cast<StateId>(((q << 1) | (r ? 1 : 0)) & (sink - 1)), 0};
    });
}

// r at time t iff g at time t - k, checked once k outputs are known.
// State = (last k grants, number of steps seen up to k), plus a sink.
Automaton clairvoyant(std::size_t k) {
    const std::size_t bits = 1u << k;
    const auto sink = static_cast<StateId>(bits * (k + 1));
    return make_spec(sink + 1, [=](StateId q, bool r, bool g) -> Step {
        if (q == sink) return {sink, 1};
        const StateId hist = q % bits, seen = q / bits;
        if (seen == k && r != (((hist >> (k - 1)) & 1) != 0)) return {sink, 1};
        const StateId next_hist = ((hist << 1) | (g ? 1 : 0)) & (bits - 1);
        const StateId next_seen = seen < k ? seen + 1 : seen;
        return {static_cast<StateId>(next_seen * bits + next_hist), 0};
    });
}

// At most k consecutive steps without a grant.
Automaton bounded_silence(std::size_t k) {
    const auto sink = static_cast<StateId>(k + 1);
    return make_spec(k + 2, [=](StateId q, bool, bool g) -> Step {
        if (q == sink) return {sink, 1};
        if (g) return {0, 2};
        return q + 1 > k ? Step{sink, 1} : Step{q + 1, 2};
    });
}

} // namespace

std::vector<NamedSpec> request_grant_family() {
    std::vector<NamedSpec> out;
    out.push_back({"infinitely many grants", make_spec(1, [](StateId, bool, bool g) { return Step{0, g ? 2u : 1u}; }),
                   true});
    out.push_back({"infinitely many requests",
                   make_spec(1, [](StateId, bool r, bool) { return Step{0, r ? 2u : 1u}; }), false});
    out.push_back({"every request answered eventually", make_spec(2, [](StateId q, bool r, bool g) -> Step {
                       if (g) return {0, 2};
                       return (r || q == 1) ? Step{1, 1} : Step{0, 2};
                   }),
                   true});
    out.push_back({"grants only on request, infinitely often", make_spec(2, [](StateId q, bool r, bool g) -> Step {
                       if (q == 1 || (g && !r)) return {1, 1};
                       return {0, g ? 2u : 1u};
                   }),
                   false});
    out.push_back({"grants exactly on requests", make_spec(2, [](StateId q, bool r, bool g) -> Step {
                       if (q == 1 || g != r) return {1, 1};
                       return {0, 0};
                   }),
                   false});
    out.push_back({"fair requests imply fair grants",
                   make_spec(1, [](StateId, bool r, bool g) { return Step{0, g ? 0u : (r ? 1u : 2u)}; }), true});
    out.push_back({"fair grants imply fair requests",
                   make_spec(1, [](StateId, bool r, bool g) { return Step{0, r ? 0u : (g ? 1u : 2u)}; }), true});
    out.push_back({"empty language", make_spec(1, [](StateId, bool, bool) { return Step{0, 1}; }), false});
    out.push_back({"universal language", make_spec(1, [](StateId, bool, bool) { return Step{0, 0}; }), true});
    out.push_back({"finitely many grants",
                   make_spec(1, [](StateId, bool, bool g) { return Step{0, g ? 1u : 2u}; }), true});
    out.push_back({"requests answered, idle grants rare", make_spec(2, [](StateId q, bool r, bool g) -> Step {
                       // Unrequested grants are odd.
                       if (g) return {0, (r || q == 1) ? 2u : 3u};
                       return (r || q == 1) ? Step{1, 1} : Step{0, 4};
                   }),
                   std::nullopt});
    for (std::size_t k = 0; k <= 4; ++k)
        out.push_back({"response within " + std::to_string(k), bounded_response(k), true});
    for (std::size_t k = 1; k <= 3; ++k) out.push_back({"grant echoes request after " + std::to_string(k), delayed_echo(k), true});
    for (std::size_t k = 1; k <= 3; ++k)
        out.push_back({"request echoes grant after " + std::to_string(k), clairvoyant(k), false});
    for (std::size_t k = 1; k <= 3; ++k)
        out.push_back({"silence at most " + std::to_string(k), bounded_silence(k), true});
    return out;
}

} // namespace rerail::testing
