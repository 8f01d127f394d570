#pragma once

#include "rerail/automaton.hpp"
#include "rerail/lasso.hpp"
#include "rerail/rlta.hpp"

#include <memory>
#include <string>
#include <vector>

namespace rerail {

// Partial deterministic automaton whose states carry a residual label (an
// RLTA state) and optionally a marker. A word is accepted if from some
// position on, a state labelled with the residual of the prefix read so far
// has an infinite run.
class FloatingAutomaton {
public:
    FloatingAutomaton() = default;
    FloatingAutomaton(std::shared_ptr<const Rlta> rlta, std::size_t states);

    const Rlta& rlta() const { return *rlta_; }
    const std::shared_ptr<const Rlta>& rlta_ptr() const { return rlta_; }
    std::size_t alphabet_size() const { return rlta_->alphabet.size(); }
    std::size_t state_count() const { return label_.size(); }

    StateId next(StateId q, SymbolId x) const { return delta_[q * alphabet_size() + x]; }
    void set_next(StateId q, SymbolId x, StateId target) { delta_[q * alphabet_size() + x] = target; }

    StateId label(StateId q) const { return label_[q]; }
    void set_label(StateId q, StateId s) { label_[q] = s; }

    // kNoState when unmarked.
    StateId marker(StateId q) const { return marker_[q]; }
    void set_marker(StateId q, StateId m) { marker_[q] = m; }

    const std::string& name(StateId q) const { return names_[q]; }
    void set_name(StateId q, std::string n) { names_[q] = std::move(n); }

    // Appends a state with no transitions.
    StateId add_state(StateId label, StateId marker, std::string name);

    // Labels follow the RLTA along every transition.
    void validate() const;

private:
    std::shared_ptr<const Rlta> rlta_;
    std::vector<StateId> delta_;
    std::vector<StateId> label_;
    std::vector<StateId> marker_;
    std::vector<std::string> names_;
};

struct FloatingChain {
    std::shared_ptr<const Rlta> rlta;
    std::vector<FloatingAutomaton> levels; // levels[0] is level 1

    std::size_t size() const { return levels.size(); }
};

bool floating_member(const FloatingAutomaton& f, const LassoWord& w);
std::size_t floating_chain_color(const FloatingChain& c, const LassoWord& w);
bool floating_chain_member(const FloatingChain& c, const LassoWord& w);

// The RLTA read as a total floating automaton (the implicit level 0).
FloatingAutomaton level_zero(const std::shared_ptr<const Rlta>& rlta);

// Accepting part of a co-Buchi automaton over the pairs (q, s) it shares
// with the RLTA; nondeterminism is removed by subset construction.
FloatingAutomaton residualize(const Automaton& a, const std::shared_ptr<const Rlta>& rlta);

// Safe(q1) ⊆ Safe(q2): every finite word readable from q1 is readable from q2.
bool safe_subset(const FloatingAutomaton& f1, StateId q1, const FloatingAutomaton& f2, StateId q2);

FloatingAutomaton minimize_floating(const FloatingAutomaton& f);
FloatingAutomaton product_floating(const FloatingAutomaton& f1, const FloatingAutomaton& f2);
FloatingAutomaton union_floating(const FloatingAutomaton& f1, const FloatingAutomaton& f2);

// Keeps the listed states (in the given order) and the transitions among them.
FloatingAutomaton restrict_floating(const FloatingAutomaton& f, const std::vector<StateId>& keep);

// Maximal SCCs containing at least one transition, each sorted, ordered by smallest state.
std::vector<std::vector<StateId>> max_accepting_sccs(const FloatingAutomaton& f);

std::string write_floating_chain(const FloatingChain& c);
FloatingChain parse_floating_chain(const std::string& text);

} // namespace rerail
