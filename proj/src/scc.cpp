#include "rerail/scc.hpp"

#include <limits>

namespace rerail {

Graph Graph::from_edges(std::size_t n, const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
    Graph g;
    g.offsets.assign(n + 1, 0);
    for (auto [u, v] : edges) ++g.offsets[u + 1];
    for (std::size_t i = 1; i <= n; ++i) g.offsets[i] += g.offsets[i - 1];
    g.targets.resize(edges.size());
    std::vector<std::uint32_t> fill(g.offsets.begin(), g.offsets.end() - 1);
    for (auto [u, v] : edges) g.targets[fill[u]++] = v;
    return g;
}

// Iterative Tarjan.
SccDecomposition strongly_connected_components(const Graph& g) {
    constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
    const std::size_t n = g.size();
    SccDecomposition out;
    out.component.assign(n, kUnvisited);
    std::vector<std::uint32_t> index(n, kUnvisited), low(n, 0), stack, edge_pos(n, 0);
    std::vector<bool> on_stack(n, false);
    std::vector<std::uint32_t> call;
    std::uint32_t counter = 0;

    for (std::uint32_t root = 0; root < n; ++root) {
        if (index[root] != kUnvisited) continue;
        call.push_back(root);
        index[root] = low[root] = counter++;
        edge_pos[root] = g.offsets[root];
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            std::uint32_t v = call.back();
            if (edge_pos[v] < g.offsets[v + 1]) {
                std::uint32_t w = g.targets[edge_pos[v]++];
                if (index[w] == kUnvisited) {
                    index[w] = low[w] = counter++;
                    edge_pos[w] = g.offsets[w];
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back(w);
                } else if (on_stack[w] && index[w] < low[v]) {
                    low[v] = index[w];
                }
                continue;
            }
            call.pop_back();
            if (!call.empty() && low[v] < low[call.back()]) low[call.back()] = low[v];
            if (low[v] == index[v]) {
                const auto id = static_cast<std::uint32_t>(out.count++);
                std::uint32_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    out.component[w] = id;
                } while (w != v);
            }
        }
    }
    out.nontrivial.assign(out.count, false);
    for (std::uint32_t v = 0; v < n; ++v)
        for (auto it = g.begin(v); it != g.end(v); ++it)
            if (out.component[*it] == out.component[v]) out.nontrivial[out.component[v]] = true;
    return out;
}

} // namespace rerail
