#pragma once

#include <array>
#include <vector>

#include "superlocal/graph.hpp"
#include "superlocal/multigraph.hpp"
#include "superlocal/rational.hpp"

namespace superlocal {

struct VertexBounds {
    int degree = 0;
    int omega = 0;               // largest clique containing the vertex
    Rational gamma_local_prime;  // (d(v) + 1 + ω(v)) / 2
};

struct GraphBounds {
    int max_degree = 0;
    int omega = 0;
    Rational gamma_prime;  // (Δ + 1 + ω) / 2
    BigInt gamma;
    Rational gamma_local_prime;  // max over vertices
    BigInt gamma_local;
    Rational gamma_ll_prime;  // max over edges
    BigInt gamma_ll;
};

std::vector<VertexBounds> vertex_bounds(const SimpleGraph& g);

Rational gamma_local_prime(const SimpleGraph& g, int v);

/// γ'(G|Ñ(v)) computed on the induced closed neighbourhood. Equal to
/// gamma_local_prime since Δ(G|Ñ(v)) = d(v); kept as an independent route.
Rational gamma_local_prime_induced(const SimpleGraph& g, int v);

/// (d(u) + d(v) + ω(u) + ω(v) + 2) / 4 for an edge uv.
Rational gamma_ll_prime_edge(const SimpleGraph& g, int u, int v);

/// Max over edges of gamma_ll_prime_edge; 1 for an edgeless nonempty graph, 0 for the empty graph.
Rational gamma_ll_prime(const SimpleGraph& g);
BigInt gamma_ll(const SimpleGraph& g);

GraphBounds graph_bounds(const SimpleGraph& g);

/// max over w ∈ N(u) ∩ N(v) of μ(uv) + μ(uw) + μ(vw); 0 when there is no common neighbour.
int t_value(const Multigraph& g, int u, int v);

/// The nine edge-pair expressions for the pair (uv, vw) with midpoint v,
/// each multiplied by 4 so that they are integers.
std::array<long long, 9> edge_pair_expressions_x4(const Multigraph& g, int u, int v, int w);

/// ⌈½ · max over edge pairs (uv, vw) of the nine expressions⌉. Distinct
/// parallel edges count as a pair with u = w. 1 when no two edges meet.
int gamma_bar_ll(const Multigraph& g);

/// max over maximal cliques C of the mean of γ'ℓ over C. 0 for the empty graph.
Rational clique_average_bound(const SimpleGraph& g);

/// Mean of γ'ℓ over Ñ(v), all terms evaluated in G itself.
Rational closed_neighbourhood_average(const SimpleGraph& g, int v);
Rational neighbourhood_average_bound(const SimpleGraph& g);

inline constexpr int kSubgraphScanLimit = 12;

/// max over nonempty induced H and v ∈ H of the mean over Ñ_H(v) of γ'ℓ
/// computed inside H. Throws SizeLimitError above `limit` vertices.
Rational subgraph_neighbourhood_bound(const SimpleGraph& g, int limit = kSubgraphScanLimit);

}  // namespace superlocal
