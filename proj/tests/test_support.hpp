#pragma once

// Brute-force reference computations. Each works straight from the
// definition over all subsets / assignments and shares no code with the
// library beyond the graph containers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "superlocal/graph.hpp"
#include "superlocal/multigraph.hpp"
#include "superlocal/rational.hpp"

namespace testsupport {

using superlocal::bit;
using superlocal::Multigraph;
using superlocal::PairMultiplicity;
using superlocal::Rational;
using superlocal::SimpleGraph;
using superlocal::VertexMask;

inline SimpleGraph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    std::vector<std::pair<int, int>> e(edges);
    return SimpleGraph(n, e);
}

inline Multigraph make_multigraph(int n, std::initializer_list<PairMultiplicity> pairs) {
    std::vector<PairMultiplicity> p(pairs);
    return Multigraph(n, p);
}

inline bool brute_is_clique(const SimpleGraph& g, VertexMask s) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if ((s >> u & 1) && (s >> v & 1) && !g.adjacent(u, v)) return false;
    return true;
}

inline bool brute_is_stable(const SimpleGraph& g, VertexMask s) {
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if ((s >> u & 1) && (s >> v & 1) && g.adjacent(u, v)) return false;
    return true;
}

inline int size_of(VertexMask s) { return static_cast<int>(std::popcount(s)); }

inline VertexMask all_vertices(const SimpleGraph& g) { return g.order() == 64 ? ~VertexMask{0} : (VertexMask{1} << g.order()) - 1; }

// Largest clique among subsets containing `required`.
inline int brute_omega(const SimpleGraph& g, VertexMask required = 0) {
    int best = 0;
    for (VertexMask s = 0; s <= all_vertices(g); ++s)
        if ((s & required) == required && brute_is_clique(g, s)) best = std::max(best, size_of(s));
    return best;
}

inline int brute_alpha(const SimpleGraph& g) {
    int best = 0;
    for (VertexMask s = 0; s <= all_vertices(g); ++s)
        if (brute_is_stable(g, s)) best = std::max(best, size_of(s));
    return best;
}

inline std::vector<VertexMask> brute_maximum_stable_sets(const SimpleGraph& g) {
    int a = brute_alpha(g);
    std::vector<VertexMask> out;
    for (VertexMask s = 0; s <= all_vertices(g); ++s)
        if (size_of(s) == a && brute_is_stable(g, s)) out.push_back(s);
    return out;
}

inline std::vector<VertexMask> brute_maximal_stable_sets(const SimpleGraph& g) {
    std::vector<VertexMask> out;
    for (VertexMask s = 0; s <= all_vertices(g); ++s) {
        if (!brute_is_stable(g, s)) continue;
        bool maximal = true;
        for (int v = 0; v < g.order() && maximal; ++v)
            if (!(s >> v & 1) && brute_is_stable(g, s | bit(v))) maximal = false;
        if (maximal) out.push_back(s);
    }
    return out;
}

// Tries every assignment of k colours, k = 1, 2, ...
inline int brute_chromatic(const SimpleGraph& g) {
    const int n = g.order();
    if (n == 0) return 0;
    for (int k = 1;; ++k) {
        std::vector<int> c(n, 0);
        while (true) {
            bool proper = true;
            for (int u = 0; u < n && proper; ++u)
                for (int v = u + 1; v < n && proper; ++v)
                    if (g.adjacent(u, v) && c[u] == c[v]) proper = false;
            if (proper) return k;
            int i = 0;
            while (i < n && ++c[i] == k) c[i++] = 0;
            if (i == n) break;
        }
    }
}

inline Rational brute_local(const SimpleGraph& g, int v) {
    return Rational(g.degree(v) + 1 + brute_omega(g, bit(v)), 2);
}

inline Rational brute_gamma_ll_prime(const SimpleGraph& g) {
    if (g.order() == 0) return 0;
    Rational best = 1;
    bool any = false;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            if (!g.adjacent(u, v)) continue;
            Rational val = Rational(g.degree(u) + g.degree(v) + brute_omega(g, bit(u)) + brute_omega(g, bit(v)) + 2, 4);
            best = any ? std::max(best, val) : val;
            any = true;
        }
    return best;
}

inline int brute_t(const Multigraph& g, int u, int v) {
    int best = 0;
    for (int w = 0; w < g.order(); ++w)
        if (w != u && w != v && g.multiplicity(u, w) > 0 && g.multiplicity(v, w) > 0)
            best = std::max(best, g.multiplicity(u, v) + g.multiplicity(u, w) + g.multiplicity(v, w));
    return best;
}

inline long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

// Max of the nine expressions over ordered pairs of distinct edges (uv, vw),
// halved and rounded up. Each expression is kept ×2 to stay integral.
inline int brute_gamma_bar_ll(const Multigraph& g) {
    long long best2 = -1;  // twice an expression, i.e. 4 × half of it
    auto d = [&](int x) { return static_cast<long long>(g.degree(x)); };
    for (int a = 0; a < g.edge_count(); ++a)
        for (int b = 0; b < g.edge_count(); ++b) {
            if (a == b) continue;
            const auto& e = g.edge(a);
            const auto& f = g.edge(b);
            for (int v : {e.u, e.v}) {
                if (f.u != v && f.v != v) continue;
                int u = e.other(v);
                int w = f.other(v);
                long long muv = g.multiplicity(u, v), mvw = g.multiplicity(v, w);
                long long tuv = brute_t(g, u, v), tvw = brute_t(g, v, w);
                // all values doubled
                long long A[3] = {2 * d(u) + d(v) - muv, 2 * d(v) + d(u) - muv, d(u) + d(v) - muv + tuv};
                long long B[3] = {2 * d(w) + d(v) - mvw, 2 * d(v) + d(w) - mvw, d(w) + d(v) - mvw + tvw};
                for (long long x : A)
                    for (long long y : B) best2 = std::max(best2, x + y);
            }
        }
    if (best2 < 0) return 1;
    return static_cast<int>(ceil_div(best2, 4));
}

// χ' by trying every colouring of the edges with 1..k colours.
inline int brute_chi_prime(const Multigraph& g) {
    const int m = g.edge_count();
    if (m == 0) return 0;
    std::vector<int> colour(m, -1);
    for (int k = 1;; ++k) {
        std::function<bool(int, int)> go = [&](int e, int used) {
            if (e == m) return true;
            for (int c = 0; c < std::min(k, used + 1); ++c) {
                bool ok = true;
                for (int f = 0; f < e && ok; ++f) {
                    const auto& x = g.edge(e);
                    const auto& y = g.edge(f);
                    bool touch = x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
                    if (touch && colour[f] == c) ok = false;
                }
                if (!ok) continue;
                colour[e] = c;
                if (go(e + 1, std::max(used, c + 1))) return true;
            }
            return false;
        };
        if (go(0, 0)) return k;
    }
}

inline int brute_matching(const SimpleGraph& g) {
    std::function<int(VertexMask)> best = [&](VertexMask left) -> int {
        if (!left) return 0;
        int v = std::countr_zero(left);
        VertexMask rest = left & ~bit(v);
        int out = best(rest);
        for (int u = 0; u < g.order(); ++u)
            if ((rest >> u & 1) && g.adjacent(u, v)) out = std::max(out, 1 + best(rest & ~bit(u)));
        return out;
    };
    return best(all_vertices(g));
}

// graph6 written from the format description: N(n), then the upper triangle
// column by column, six bits per byte, plus 63.
inline std::string reference_graph6(const SimpleGraph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else {
        out += static_cast<char>(126);
        for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(((n >> shift) & 63) + 63);
    }
    std::vector<int> bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
    while (bits.size() % 6) bits.push_back(0);
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int x = 0;
        for (int b = 0; b < 6; ++b) x = (x << 1) | bits[i + b];
        out += static_cast<char>(x + 63);
    }
    return out;
}

// Minimum upper-triangle code over every permutation.
inline std::uint64_t brute_canonical_code(const SimpleGraph& g) {
    const int n = g.order();
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t code = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(p[i], p[j]) ? 1U : 0U);
        best = std::min(best, code);
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

inline bool brute_connected(const SimpleGraph& g) {
    if (g.order() == 0) return true;
    VertexMask seen = 1, frontier = 1;
    while (frontier) {
        VertexMask next = 0;
        for (int v = 0; v < g.order(); ++v)
            if (frontier >> v & 1) next |= g.neighbours(v);
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == all_vertices(g);
}

inline SimpleGraph random_graph(std::mt19937_64& rng, int n, int percent) {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (static_cast<int>(rng() % 100) < percent) e.emplace_back(u, v);
    return SimpleGraph(n, e);
}

inline Multigraph random_multigraph(std::mt19937_64& rng, int n, int percent, int mu_max) {
    std::vector<PairMultiplicity> p;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % 100) < percent) p.push_back({u, v, 1 + static_cast<int>(rng() % mu_max)});
    return Multigraph(n, p);
}

// Every vertex v in some set of the weighting? Exact coverage per vertex.
inline std::vector<Rational> coverage(int n, const std::vector<std::pair<VertexMask, Rational>>& weights) {
    std::vector<Rational> out(n);
    for (const auto& [s, w] : weights)
        for (int v = 0; v < n; ++v)
            if (s >> v & 1) out[v] += w;
    return out;
}

}  // namespace testsupport
