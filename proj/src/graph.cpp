#include "superlocal/graph.hpp"

#include <algorithm>
#include <string>

#include "superlocal/errors.hpp"

namespace superlocal {

std::vector<int> to_vertices(VertexMask m) {
    std::vector<int> out;
    out.reserve(popcount(m));
    for_each_vertex(m, [&](int v) { out.push_back(v); });
    return out;
}

SimpleGraph::SimpleGraph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw DomainError("vertex count " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
    adj_.assign(n, 0);
}

SimpleGraph::SimpleGraph(int n, std::span<const std::pair<int, int>> edges) : SimpleGraph(n) {
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw DomainError("edge endpoint out of range");
        if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
        adj_[u] |= bit(v);
        adj_[v] |= bit(u);
    }
}

std::size_t SimpleGraph::size() const {
    std::size_t twice = 0;
    for (auto m : adj_) twice += popcount(m);
    return twice / 2;
}

int SimpleGraph::max_degree() const {
    int best = 0;
    for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
    return best;
}

std::vector<std::pair<int, int>> SimpleGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for_each_vertex(adj_[u] & ~prefix_mask(u + 1), [&](int v) { out.emplace_back(u, v); });
    return out;
}

SimpleGraph SimpleGraph::with_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) throw DomainError("invalid edge");
    SimpleGraph out = *this;
    out.adj_[u] |= bit(v);
    out.adj_[v] |= bit(u);
    return out;
}

SimpleGraph complement(const SimpleGraph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v)) edges.emplace_back(u, v);
    return SimpleGraph(g.order(), edges);
}

InducedSubgraph induced_subgraph(const SimpleGraph& g, VertexMask subset) {
    if (subset & ~g.vertices()) throw DomainError("subset contains a vertex outside the graph");
    InducedSubgraph out;
    out.original = to_vertices(subset);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < out.original.size(); ++i)
        for (std::size_t j = i + 1; j < out.original.size(); ++j)
            if (g.adjacent(out.original[i], out.original[j]))
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    out.graph = SimpleGraph(static_cast<int>(out.original.size()), edges);
    return out;
}

InducedSubgraph induced_subgraph(const SimpleGraph& g, std::span<const int> subset) {
    VertexMask mask = 0;
    for (int v : subset) {
        if (v < 0 || v >= g.order()) throw DomainError("invalid vertex id " + std::to_string(v));
        mask |= bit(v);
    }
    return induced_subgraph(g, mask);
}

bool is_connected(const SimpleGraph& g) {
    if (g.order() == 0) return true;
    VertexMask seen = bit(0), frontier = bit(0);
    while (frontier) {
        VertexMask next = 0;
        for_each_vertex(frontier, [&](int v) { next |= g.neighbours(v); });
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == g.vertices();
}

}  // namespace superlocal
