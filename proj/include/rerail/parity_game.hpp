#pragma once

#include "rerail/automaton.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace rerail {

using Vertex = std::uint32_t;

// Two-player game with vertex colors. The smallest color seen infinitely
// often decides; player 0 wins iff it is even. Every vertex needs a successor.
class GameArena {
public:
    Vertex add_vertex(int owner, Color color);
    void add_edge(Vertex from, Vertex to);

    std::size_t size() const { return owner_.size(); }
    int owner(Vertex v) const { return owner_[v]; }
    Color color(Vertex v) const { return color_[v]; }
    const std::vector<Vertex>& successors(Vertex v) const { return succ_[v]; }
    std::size_t edge_count() const;

    // Throws if some vertex has no successor.
    void check_total() const;
    std::string dump() const;

private:
    std::vector<int> owner_;
    std::vector<Color> color_;
    std::vector<std::vector<Vertex>> succ_;
};

struct GameSolution {
    std::vector<int> winner;        // 0 or 1 per vertex
    std::vector<Vertex> strategy;   // a winning successor for the winner's own vertices, else kNoVertex
    static constexpr Vertex kNoVertex = static_cast<Vertex>(-1);

    bool wins0(Vertex v) const { return winner[v] == 0; }
};

// Zielonka's recursive algorithm; attractors are expanded in ascending vertex order.
GameSolution solve(const GameArena& arena);

} // namespace rerail
