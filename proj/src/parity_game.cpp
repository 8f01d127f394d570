#include "rerail/parity_game.hpp"

#include "rerail/error.hpp"

#include <algorithm>
#include <sstream>

namespace rerail {

Vertex GameArena::add_vertex(int owner, Color color) {
    if (owner != 0 && owner != 1) throw Error("vertex owner must be 0 or 1");
    owner_.push_back(owner);
    color_.push_back(color);
    succ_.emplace_back();
    return static_cast<Vertex>(owner_.size() - 1);
}

void GameArena::add_edge(Vertex from, Vertex to) {
    if (from >= size() || to >= size()) throw Error("edge endpoint out of range");
    succ_[from].push_back(to);
}

std::size_t GameArena::edge_count() const {
    std::size_t m = 0;
    for (const auto& s : succ_) m += s.size();
    return m;
}

void GameArena::check_total() const {
    for (Vertex v = 0; v < size(); ++v)
        if (succ_[v].empty()) throw Error("game vertex " + std::to_string(v) + " has no successor");
}

std::string GameArena::dump() const {
    std::ostringstream out;
    out << "game " << size() << "\n";
    for (Vertex v = 0; v < size(); ++v) {
        out << v << " owner " << owner_[v] << " color " << color_[v] << " ->";
        for (Vertex w : succ_[v]) out << " " << w;
        out << "\n";
    }
    return out.str();
}

namespace {

using Mask = std::vector<char>;

class Zielonka {
public:
    explicit Zielonka(const GameArena& g) : g_(g), pred_(g.size()), count_(g.size(), -1) {
        for (Vertex v = 0; v < g.size(); ++v)
            for (Vertex w : g.successors(v)) pred_[w].push_back(v);
        strategy_.assign(g.size(), GameSolution::kNoVertex);
    }

    // Returns the winning region of player 0 within the subgame.
    Mask run(Mask game) {
        const std::size_t n = g_.size();
        Mask win0(n, 0);
        while (true) {
            Color p = 0;
            bool empty = true;
            for (Vertex v = 0; v < n; ++v)
                if (game[v] && (empty || g_.color(v) < p)) {
                    p = g_.color(v);
                    empty = false;
                }
            if (empty) return win0;
            const int alpha = static_cast<int>(p % 2);

            std::vector<Vertex> top;
            for (Vertex v = 0; v < n; ++v)
                if (game[v] && g_.color(v) == p) top.push_back(v);
            Mask a = attractor(game, top, alpha);
            Mask rest = game;
            for (Vertex v = 0; v < n; ++v)
                if (a[v]) rest[v] = 0;
            Mask sub0 = run(rest);

            std::vector<Vertex> opponent;
            for (Vertex v = 0; v < n; ++v)
                if (rest[v] && (sub0[v] != 0) != (alpha == 0)) opponent.push_back(v);

            if (opponent.empty()) {
                for (Vertex v : top)
                    if (g_.owner(v) == alpha) strategy_[v] = first_inside(v, game);
                for (Vertex v = 0; v < n; ++v)
                    if (game[v] && alpha == 0) win0[v] = 1;
                return win0;
            }
            Mask b = attractor(game, opponent, 1 - alpha);
            for (Vertex v = 0; v < n; ++v)
                if (b[v]) {
                    if (alpha == 1) win0[v] = 1;
                    game[v] = 0;
                }
        }
    }

    std::vector<Vertex> strategy_;

private:
    Vertex first_inside(Vertex v, const Mask& game) const {
        for (Vertex w : g_.successors(v))
            if (game[w]) return w;
        return GameSolution::kNoVertex;
    }

    Mask attractor(const Mask& game, const std::vector<Vertex>& target, int player) {
        Mask attr(g_.size(), 0);
        std::vector<Vertex> queue(target.begin(), target.end());
        std::vector<Vertex> touched;
        for (Vertex v : queue) attr[v] = 1;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex v = queue[head];
            for (Vertex u : pred_[v]) {
                if (!game[u] || attr[u]) continue;
                if (g_.owner(u) == player) {
                    attr[u] = 1;
                    strategy_[u] = v;
                    queue.push_back(u);
                } else {
                    if (count_[u] < 0) {
                        count_[u] = 0;
                        for (Vertex w : g_.successors(u))
                            if (game[w]) ++count_[u];
                        touched.push_back(u);
                    }
                    if (--count_[u] == 0) {
                        attr[u] = 1;
                        queue.push_back(u);
                    }
                }
            }
        }
        for (Vertex u : touched) count_[u] = -1;
        return attr;
    }

    const GameArena& g_;
    std::vector<std::vector<Vertex>> pred_;
    std::vector<int> count_;
};

} // namespace

GameSolution solve(const GameArena& arena) {
    arena.check_total();
    Zielonka z(arena);
    Mask win0 = z.run(Mask(arena.size(), 1));
    GameSolution s;
    s.winner.resize(arena.size());
    s.strategy.assign(arena.size(), GameSolution::kNoVertex);
    for (Vertex v = 0; v < arena.size(); ++v) {
        s.winner[v] = win0[v] ? 0 : 1;
        if (arena.owner(v) == s.winner[v]) s.strategy[v] = z.strategy_[v];
    }
    return s;
}

} // namespace rerail
