#pragma once

#include "rerail/automaton.hpp"
#include "rerail/chain.hpp"
#include "rerail/floating.hpp"
#include "rerail/lasso.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rerail {

struct BuildOptions {
    // Start the inner level loop at the current recursion depth instead of 1.
    bool optimized_jloop = false;
};

// Recursive construction of a rerailing automaton from a floating chain.
// Composite state names are the comma-joined nesting paths ("1,3,6").
Automaton build_minimal(const FloatingChain& chain, BuildOptions options = {});

// Tuple RLTA, residualized and minimized floating levels.
FloatingChain floating_chain_of(const Chain& chain);

Automaton minimize_rerailing(const Automaton& r, BuildOptions options = {});

struct RerailingViolation {
    LassoWord word;
    StateId state;
    std::size_t position;
    Color color;      // dominating color that cannot be rerailed
    std::string kind; // "no-uniform-successor", "color-decrease" or "parity-mismatch"
};

struct VerifyResult {
    bool ok = true;
    std::optional<RerailingViolation> violation; // first failing lasso in shortlex order
    std::size_t lassos_checked = 0;
};

std::optional<RerailingViolation> check_rerailing_on(const Automaton& a, const LassoWord& w);
VerifyResult verify_rerailing_bounded(const Automaton& a, LassoBounds bounds);

bool check_color_homogeneous(const Automaton& a);

} // namespace rerail
