#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "superlocal/graph.hpp"

namespace superlocal {

struct MultiEdge {
    int u = 0;  // u < v
    int v = 0;

    int other(int w) const { return w == u ? v : u; }
    friend bool operator==(const MultiEdge&, const MultiEdge&) = default;
};

struct PairMultiplicity {
    int u = 0;
    int v = 0;
    int m = 1;
};

/// Loopless multigraph. Every edge, including each of a group of parallel
/// edges, has its own id 0..edge_count()-1, fixed at construction.
class Multigraph {
public:
    Multigraph() = default;
    Multigraph(int n, std::vector<MultiEdge> edges);
    Multigraph(int n, std::span<const PairMultiplicity> pairs);

    int order() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const MultiEdge& edge(int id) const { return edges_[id]; }
    std::span<const MultiEdge> edges() const { return edges_; }

    int multiplicity(int u, int v) const { return mu_[static_cast<std::size_t>(u) * n_ + v]; }
    bool adjacent(int u, int v) const { return u != v && multiplicity(u, v) > 0; }
    int degree(int v) const { return static_cast<int>(incident_[v].size()); }
    std::span<const int> incident(int v) const { return incident_[v]; }

    /// Distinct neighbours in increasing order.
    std::vector<int> neighbours(int v) const;
    std::vector<int> common_neighbours(int u, int v) const;

    /// (u, v, μ(uv)) for every adjacent pair, u < v, lexicographic.
    std::vector<PairMultiplicity> pairs() const;

private:
    int n_ = 0;
    std::vector<MultiEdge> edges_;
    std::vector<int> mu_;
    std::vector<std::vector<int>> incident_;
};

/// Text format: a header line "n <count>" followed by lines "u v m"
/// (m ≥ 1 parallel edges between u and v). Lines may be separated by
/// newlines or '/'; blank lines and '#' comments are ignored. Edge ids are
/// assigned in line order.
Multigraph parse_multigraph(std::string_view text);
std::string encode_multigraph(const Multigraph& g);

/// One vertex per edge id; adjacent iff the edges share an endpoint.
SimpleGraph line_graph(const Multigraph& g);

}  // namespace superlocal
