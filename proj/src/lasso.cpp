#include "rerail/lasso.hpp"

#include "rerail/error.hpp"

#include <algorithm>

namespace rerail {

namespace {

std::vector<SymbolId> primitive_root(const std::vector<SymbolId>& v) {
    const std::size_t n = v.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p != 0) continue;
        bool periodic = true;
        for (std::size_t i = p; i < n && periodic; ++i) periodic = v[i] == v[i - p];
        if (periodic) return {v.begin(), v.begin() + p};
    }
    return v;
}

std::vector<SymbolId> parse_word(const std::string& text, const Alphabet& alphabet) {
    std::vector<SymbolId> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        auto dot = text.find('.', start);
        std::string sym = text.substr(start, dot == std::string::npos ? std::string::npos : dot - start);
        auto x = alphabet.find(sym);
        if (!x) throw Error("unknown symbol '" + sym + "' in lasso");
        out.push_back(*x);
        if (dot == std::string::npos) break;
        start = dot + 1;
    }
    return out;
}

// Odometer increment over alphabet_size symbols; false on wrap-around.
bool increment(std::vector<SymbolId>& word, std::size_t alphabet_size) {
    for (std::size_t i = word.size(); i-- > 0;) {
        if (++word[i] < alphabet_size) return true;
        word[i] = 0;
    }
    return false;
}

} // namespace

LassoWord canonicalize(const LassoWord& w) {
    if (w.cycle.empty()) throw Error("lasso cycle must be non-empty");
    LassoWord c{w.stem, primitive_root(w.cycle)};
    while (!c.stem.empty() && c.stem.back() == c.cycle.back()) {
        c.stem.pop_back();
        std::rotate(c.cycle.rbegin(), c.cycle.rbegin() + 1, c.cycle.rend());
    }
    return c;
}

bool is_canonical(const LassoWord& w) {
    if (w.cycle.empty()) return false;
    if (!w.stem.empty() && w.stem.back() == w.cycle.back()) return false;
    return primitive_root(w.cycle).size() == w.cycle.size();
}

LassoWord parse_lasso(const std::string& text, const Alphabet& alphabet) {
    auto semi = text.find(';');
    if (semi == std::string::npos) throw Error("lasso needs 'stem;cycle'");
    LassoWord w{parse_word(text.substr(0, semi), alphabet), parse_word(text.substr(semi + 1), alphabet)};
    if (w.cycle.empty()) throw Error("lasso cycle must be non-empty");
    return w;
}

std::string format_lasso(const LassoWord& w, const Alphabet& alphabet) {
    std::string out;
    for (std::size_t i = 0; i < w.stem.size(); ++i) out += (i ? "." : "") + alphabet.name(w.stem[i]);
    out += ";";
    for (std::size_t i = 0; i < w.cycle.size(); ++i) out += (i ? "." : "") + alphabet.name(w.cycle[i]);
    return out;
}

void for_each_lasso(std::size_t alphabet_size, LassoBounds bounds,
                    const std::function<bool(const LassoWord&)>& visit) {
    if (alphabet_size == 0 || bounds.cycle == 0) return;
    for (std::size_t total = 1; total <= bounds.stem + bounds.cycle; ++total) {
        for (std::size_t s = 0; s <= std::min(bounds.stem, total - 1); ++s) {
            const std::size_t c = total - s;
            if (c > bounds.cycle) continue;
            LassoWord w{std::vector<SymbolId>(s, 0), std::vector<SymbolId>(c, 0)};
            do {
                do {
                    if (is_canonical(w) && !visit(w)) return;
                } while (increment(w.cycle, alphabet_size));
            } while (increment(w.stem, alphabet_size));
        }
    }
}

} // namespace rerail
