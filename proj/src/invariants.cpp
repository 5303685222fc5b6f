#include "superlocal/invariants.hpp"

#include <algorithm>
#include <string>

#include "superlocal/cliques.hpp"
#include "superlocal/errors.hpp"

namespace superlocal {

namespace {

Rational half_sum(long long a, long long b, long long c) { return Rational(a + b + c, 2); }

// γ'ℓ of every vertex of G|mask, indexed by original vertex id.
std::vector<Rational> local_bounds_within(const SimpleGraph& g, VertexMask mask) {
    std::vector<Rational> out(g.order());
    for_each_vertex(mask, [&](int v) {
        VertexMask nbrs = g.neighbours(v) & mask;
        out[v] = half_sum(popcount(nbrs), 1, 1 + clique_number(g, nbrs));
    });
    return out;
}

}  // namespace

std::vector<VertexBounds> vertex_bounds(const SimpleGraph& g) {
    std::vector<VertexBounds> out(g.order());
    for (int v = 0; v < g.order(); ++v) {
        out[v].degree = g.degree(v);
        out[v].omega = omega_v(g, v);
        out[v].gamma_local_prime = half_sum(out[v].degree, 1, out[v].omega);
    }
    return out;
}

Rational gamma_local_prime(const SimpleGraph& g, int v) { return half_sum(g.degree(v), 1, omega_v(g, v)); }

Rational gamma_local_prime_induced(const SimpleGraph& g, int v) {
    auto closed = induced_subgraph(g, g.closed_neighbourhood(v));
    return half_sum(closed.graph.max_degree(), 1, clique_number(closed.graph));
}

Rational gamma_ll_prime_edge(const SimpleGraph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v))
        throw DomainError("gamma_ll_prime_edge needs an edge, got " + std::to_string(u) + "," + std::to_string(v));
    return Rational(g.degree(u) + g.degree(v) + omega_v(g, u) + omega_v(g, v) + 2, 4);
}

Rational gamma_ll_prime(const SimpleGraph& g) {
    if (g.order() == 0) return 0;
    auto edges = g.edges();
    if (edges.empty()) return 1;
    std::vector<int> omega(g.order());
    for (int v = 0; v < g.order(); ++v) omega[v] = omega_v(g, v);
    int best = 0;
    for (auto [u, v] : edges) best = std::max(best, g.degree(u) + g.degree(v) + omega[u] + omega[v] + 2);
    return Rational(best, 4);
}

BigInt gamma_ll(const SimpleGraph& g) { return ceil(gamma_ll_prime(g)); }

GraphBounds graph_bounds(const SimpleGraph& g) {
    GraphBounds b;
    if (g.order() == 0) return b;
    b.max_degree = g.max_degree();
    b.omega = clique_number(g);
    b.gamma_prime = half_sum(b.max_degree, 1, b.omega);
    b.gamma = ceil(b.gamma_prime);
    for (const auto& vb : vertex_bounds(g)) b.gamma_local_prime = std::max(b.gamma_local_prime, vb.gamma_local_prime);
    b.gamma_local = ceil(b.gamma_local_prime);
    b.gamma_ll_prime = gamma_ll_prime(g);
    b.gamma_ll = ceil(b.gamma_ll_prime);
    return b;
}

int t_value(const Multigraph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || !g.adjacent(u, v))
        throw DomainError("t_value needs adjacent vertices, got " + std::to_string(u) + "," + std::to_string(v));
    int best = 0;
    for (int w : g.common_neighbours(u, v))
        best = std::max(best, g.multiplicity(u, v) + g.multiplicity(u, w) + g.multiplicity(v, w));
    return best;
}

std::array<long long, 9> edge_pair_expressions_x4(const Multigraph& g, int u, int v, int w) {
    const long long du = g.degree(u), dv = g.degree(v), dw = g.degree(w);
    const long long muv = g.multiplicity(u, v), mvw = g.multiplicity(v, w);
    const long long tuv = t_value(g, u, v), tvw = t_value(g, v, w);
    // Written out term by term; every expression is scaled by 4.
    return {
        4 * du + 2 * (dv - muv) + 4 * dv + 2 * (dw - mvw),
        4 * du + 2 * (dv - muv) + 4 * dw + 2 * (dv - mvw),
        4 * du + 2 * (dv - muv) + 2 * (dv + dw - mvw + tvw),
        4 * dv + 2 * (du - muv) + 4 * dv + 2 * (dw - mvw),
        4 * dv + 2 * (du - muv) + 4 * dw + 2 * (dv - mvw),
        4 * dv + 2 * (du - muv) + 2 * (dv + dw - mvw + tvw),
        2 * (du + dv - muv + tuv) + 4 * dv + 2 * (dw - mvw),
        2 * (du + dv - muv + tuv) + 4 * dw + 2 * (dv - mvw),
        2 * (du + 2 * dv + dw - muv + tuv - mvw + tvw),
    };
}

int gamma_bar_ll(const Multigraph& g) {
    if (g.edge_count() == 0) throw DomainError("gamma_bar_ll of an edgeless multigraph");
    long long best_x4 = -1;
    for (int v = 0; v < g.order(); ++v) {
        auto nbrs = g.neighbours(v);
        for (int u : nbrs) {
            for (int w : nbrs) {
                if (u == w && g.multiplicity(u, v) < 2) continue;
                for (long long value : edge_pair_expressions_x4(g, u, v, w)) best_x4 = std::max(best_x4, value);
            }
        }
    }
    if (best_x4 < 0) return 1;
    return static_cast<int>((best_x4 + 7) / 8);  // ⌈(best_x4 / 4) / 2⌉
}

Rational clique_average_bound(const SimpleGraph& g) {
    auto local = local_bounds_within(g, g.vertices());
    Rational best = 0;
    for_each_maximal_clique(g, g.vertices(), [&](VertexMask clique) {
        Rational sum = 0;
        for_each_vertex(clique, [&](int v) { sum += local[v]; });
        best = std::max(best, Rational(sum / popcount(clique)));
    });
    return best;
}

Rational closed_neighbourhood_average(const SimpleGraph& g, int v) {
    if (v < 0 || v >= g.order()) throw DomainError("invalid vertex id " + std::to_string(v));
    Rational sum = 0;
    for_each_vertex(g.closed_neighbourhood(v), [&](int u) { sum += gamma_local_prime(g, u); });
    return sum / (g.degree(v) + 1);
}

Rational neighbourhood_average_bound(const SimpleGraph& g) {
    auto local = local_bounds_within(g, g.vertices());
    Rational best = 0;
    for (int v = 0; v < g.order(); ++v) {
        Rational sum = 0;
        for_each_vertex(g.closed_neighbourhood(v), [&](int u) { sum += local[u]; });
        best = std::max(best, Rational(sum / (g.degree(v) + 1)));
    }
    return best;
}

Rational subgraph_neighbourhood_bound(const SimpleGraph& g, int limit) {
    if (g.order() > limit)
        throw SizeLimitError("subgraph scan limited to " + std::to_string(limit) + " vertices, got " +
                             std::to_string(g.order()));
    Rational best = 0;
    for (VertexMask h = 1; h <= g.vertices() && h != 0; ++h) {
        auto local = local_bounds_within(g, h);
        for_each_vertex(h, [&](int v) {
            VertexMask closed = g.closed_neighbourhood(v) & h;
            Rational sum = 0;
            for_each_vertex(closed, [&](int u) { sum += local[u]; });
            best = std::max(best, Rational(sum / popcount(closed)));
        });
    }
    return best;
}

}  // namespace superlocal
