#pragma once

#include <cstdint>
#include <vector>

namespace rerail {

// Compressed adjacency lists.
struct Graph {
    std::vector<std::uint32_t> offsets{0};
    std::vector<std::uint32_t> targets;

    std::size_t size() const { return offsets.size() - 1; }
    std::size_t degree(std::uint32_t v) const { return offsets[v + 1] - offsets[v]; }
    const std::uint32_t* begin(std::uint32_t v) const { return targets.data() + offsets[v]; }
    const std::uint32_t* end(std::uint32_t v) const { return targets.data() + offsets[v + 1]; }

    static Graph from_edges(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges);
};

struct SccDecomposition {
    // Components are numbered in reverse topological order: every edge leads
    // to a component with an equal or smaller number.
    std::vector<std::uint32_t> component;
    std::vector<bool> nontrivial; // contains at least one edge
    std::size_t count = 0;
};

SccDecomposition strongly_connected_components(const Graph& g);

} // namespace rerail
