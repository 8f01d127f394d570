#pragma once

#include "rerail/automaton.hpp"

#include <functional>
#include <string>
#include <vector>

namespace rerail {

// The ultimately periodic word stem . cycle^omega.
struct LassoWord {
    std::vector<SymbolId> stem;
    std::vector<SymbolId> cycle; // non-empty

    std::size_t length() const { return stem.size() + cycle.size(); }
    SymbolId at(std::size_t pos) const { return pos < stem.size() ? stem[pos] : cycle[pos - stem.size()]; }
    std::size_t next(std::size_t pos) const { return pos + 1 < length() ? pos + 1 : stem.size(); }

    bool operator==(const LassoWord&) const = default;
};

// Shortest stem and primitive cycle; two lassos denote the same word iff their
// canonical forms are equal.
LassoWord canonicalize(const LassoWord& w);
bool is_canonical(const LassoWord& w);

// "a.b;b.a": dot-separated symbols, stem before the semicolon. The stem may be
// empty (";a.d"), the cycle may not.
LassoWord parse_lasso(const std::string& text, const Alphabet& alphabet);
std::string format_lasso(const LassoWord& w, const Alphabet& alphabet);

struct LassoBounds {
    std::size_t stem = 4;
    std::size_t cycle = 4;
};

// Visits canonical lassos in shortlex order: total length, then stem length,
// then stem and cycle lexicographically. Stops early when visit returns false.
void for_each_lasso(std::size_t alphabet_size, LassoBounds bounds,
                    const std::function<bool(const LassoWord&)>& visit);

} // namespace rerail
