#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace superlocal {

/// Vertex sets of a SimpleGraph are bit masks; bit v is vertex v.
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;

constexpr VertexMask bit(int v) { return VertexMask{1} << v; }
constexpr int popcount(VertexMask m) { return std::popcount(m); }
constexpr VertexMask prefix_mask(int n) { return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1; }

template <typename F>
void for_each_vertex(VertexMask m, F&& f) {
    while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        f(v);
    }
}

std::vector<int> to_vertices(VertexMask m);

/// Immutable undirected simple graph on vertices 0..n-1.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int n);
    SimpleGraph(int n, std::span<const std::pair<int, int>> edges);

    int order() const { return n_; }
    std::size_t size() const;

    bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
    VertexMask neighbours(int v) const { return adj_[v]; }
    VertexMask closed_neighbourhood(int v) const { return adj_[v] | bit(v); }
    int degree(int v) const { return popcount(adj_[v]); }
    int max_degree() const;
    VertexMask vertices() const { return prefix_mask(n_); }

    /// N(u,v) = (N(u) ∪ N(v)) \ {u,v}.
    VertexMask joint_neighbourhood(int u, int v) const { return (adj_[u] | adj_[v]) & ~(bit(u) | bit(v)); }

    /// Edges as (u, v) with u < v, in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    /// Copy of this graph with uv added.
    SimpleGraph with_edge(int u, int v) const;

    friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

private:
    int n_ = 0;
    std::vector<VertexMask> adj_;
};

struct InducedSubgraph {
    SimpleGraph graph;
    std::vector<int> original;  // new id -> id in the parent graph
};

SimpleGraph complement(const SimpleGraph& g);

/// G|S, relabelled 0..|S|-1 in increasing order of the retained ids.
InducedSubgraph induced_subgraph(const SimpleGraph& g, std::span<const int> subset);
InducedSubgraph induced_subgraph(const SimpleGraph& g, VertexMask subset);

bool is_connected(const SimpleGraph& g);

}  // namespace superlocal
