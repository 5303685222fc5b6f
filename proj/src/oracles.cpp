#include "superlocal/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "superlocal/cliques.hpp"
#include "superlocal/errors.hpp"

namespace superlocal {

namespace {

int count_colours(const std::vector<int>& colour) {
    std::vector<int> sorted = colour;
    std::sort(sorted.begin(), sorted.end());
    return static_cast<int>(std::unique(sorted.begin(), sorted.end()) - sorted.begin());
}

class DsaturSearch {
public:
    DsaturSearch(const SimpleGraph& g, int k) : g_(g), k_(k), colour_(g.order(), -1) {}

    bool run() { return extend(0, 0); }
    const std::vector<int>& colours() const { return colour_; }

private:
    int pick() const {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < g_.order(); ++v) {
            if (colour_[v] >= 0) continue;
            int sat = std::popcount(forbidden_sat(v));
            int deg = 0;
            for_each_vertex(g_.neighbours(v), [&](int u) { deg += colour_[u] < 0; });
            if (sat > best_sat || (sat == best_sat && deg > best_deg)) best = v, best_sat = sat, best_deg = deg;
        }
        return best;
    }

    std::uint64_t forbidden_sat(int v) const {
        std::uint64_t used = 0;
        for_each_vertex(g_.neighbours(v), [&](int u) {
            if (colour_[u] >= 0) used |= std::uint64_t{1} << colour_[u];
        });
        return used;
    }

    bool extend(int coloured, int used) {
        if (coloured == g_.order()) return true;
        int v = pick();
        std::uint64_t blocked = forbidden_sat(v);
        for (int c = 0; c < std::min(k_, used + 1); ++c) {
            if ((blocked >> c) & 1) continue;
            colour_[v] = c;
            if (extend(coloured + 1, std::max(used, c + 1))) return true;
        }
        colour_[v] = -1;
        return false;
    }

    const SimpleGraph& g_;
    int k_;
    std::vector<int> colour_;
};

std::vector<int> greedy_dsatur(const SimpleGraph& g) {
    std::vector<int> colour(g.order(), -1);
    for (int step = 0; step < g.order(); ++step) {
        int best = -1, best_sat = -1, best_deg = -1;
        for (int v = 0; v < g.order(); ++v) {
            if (colour[v] >= 0) continue;
            std::uint64_t used = 0;
            for_each_vertex(g.neighbours(v), [&](int u) {
                if (colour[u] >= 0) used |= std::uint64_t{1} << colour[u];
            });
            int sat = std::popcount(used);
            if (sat > best_sat || (sat == best_sat && g.degree(v) > best_deg)) best = v, best_sat = sat, best_deg = g.degree(v);
        }
        std::uint64_t used = 0;
        for_each_vertex(g.neighbours(best), [&](int u) {
            if (colour[u] >= 0) used |= std::uint64_t{1} << colour[u];
        });
        colour[best] = std::countr_one(used);
    }
    return colour;
}

// Dense tableau for: maximise cᵀy subject to Ay ≤ 1, y ≥ 0 (origin feasible).
// Bland's rule: lowest-index improving column, ties in the ratio test broken
// by the lowest-index basic variable.
struct PackingSimplex {
    int rows, cols;
    std::vector<std::vector<Rational>> tableau;  // rows × (cols + rows)
    std::vector<Rational> rhs;
    std::vector<Rational> reduced;  // improving when positive
    std::vector<int> basis;
    Rational value = 0;

    PackingSimplex(const std::vector<std::vector<int>>& a, int structural)
        : rows(static_cast<int>(a.size())), cols(structural) {
        tableau.assign(rows, std::vector<Rational>(cols + rows, 0));
        rhs.assign(rows, 1);
        basis.resize(rows);
        for (int i = 0; i < rows; ++i) {
            for (int j : a[i]) tableau[i][j] = 1;
            tableau[i][cols + i] = 1;
            basis[i] = cols + i;
        }
        reduced.assign(cols + rows, 0);
        for (int j = 0; j < cols; ++j) reduced[j] = 1;
    }

    void solve() {
        for (;;) {
            int entering = -1;
            for (int j = 0; j < cols + rows; ++j)
                if (reduced[j] > 0) {
                    entering = j;
                    break;
                }
            if (entering < 0) return;
            int leaving = -1;
            Rational best_ratio;
            for (int i = 0; i < rows; ++i) {
                if (tableau[i][entering] <= 0) continue;
                Rational ratio = rhs[i] / tableau[i][entering];
                if (leaving < 0 || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leaving]))
                    leaving = i, best_ratio = ratio;
            }
            if (leaving < 0) throw InternalError("fractional clique LP unbounded");
            pivot(leaving, entering);
        }
    }

    void pivot(int r, int e) {
        Rational p = tableau[r][e];
        for (auto& x : tableau[r]) x /= p;
        rhs[r] /= p;
        for (int i = 0; i < rows; ++i) {
            if (i == r || tableau[i][e] == 0) continue;
            Rational f = tableau[i][e];
            for (int j = 0; j < cols + rows; ++j)
                if (tableau[r][j] != 0) tableau[i][j] -= f * tableau[r][j];
            rhs[i] -= f * rhs[r];
        }
        Rational f = reduced[e];
        for (int j = 0; j < cols + rows; ++j)
            if (tableau[r][j] != 0) reduced[j] -= f * tableau[r][j];
        value += f * rhs[r];
        basis[r] = e;
    }
};

}  // namespace

bool is_proper(const SimpleGraph& g, const VertexColouring& c) {
    if (static_cast<int>(c.colour.size()) != g.order()) return false;
    for (auto [u, v] : g.edges())
        if (c.colour[u] == c.colour[v]) return false;
    return true;
}

ChromaticResult chromatic_number(const SimpleGraph& g, int limit) {
    if (g.order() > limit)
        throw SizeLimitError("chromatic number limited to " + std::to_string(limit) + " vertices, got " +
                             std::to_string(g.order()));
    ChromaticResult out;
    if (g.order() == 0) return out;
    std::vector<int> best = greedy_dsatur(g);
    int upper = count_colours(best);
    for (int k = clique_number(g); k < upper; ++k) {
        DsaturSearch search(g, k);
        if (search.run()) {
            best = search.colours();
            upper = k;
            break;
        }
    }
    out.chi = upper;
    out.colouring = {best, count_colours(best)};
    return out;
}

FractionalChromaticResult solve_covering_lp(const RationalLP& lp) {
    // Dual: maximise Σ y_v subject to Σ_{v∈S} y_v ≤ 1 for every column S.
    std::vector<std::vector<int>> rows;
    rows.reserve(lp.columns.size());
    for (VertexMask s : lp.columns) rows.push_back(to_vertices(s));
    PackingSimplex simplex(rows, lp.vertices);
    simplex.solve();

    FractionalChromaticResult out;
    out.value = simplex.value;
    out.columns = lp.columns;
    out.clique_weights.assign(lp.vertices, 0);
    for (int i = 0; i < simplex.rows; ++i)
        if (simplex.basis[i] < lp.vertices) out.clique_weights[simplex.basis[i]] = simplex.rhs[i];
    out.stable_set_weights.resize(lp.columns.size());
    for (std::size_t i = 0; i < lp.columns.size(); ++i) out.stable_set_weights[i] = -simplex.reduced[lp.vertices + i];

    // Certificate: both solutions feasible with equal objective.
    Rational primal = 0, dual = 0;
    for (std::size_t i = 0; i < lp.columns.size(); ++i) {
        if (out.stable_set_weights[i] < 0) throw InternalError("negative stable-set weight in LP certificate");
        primal += out.stable_set_weights[i];
        Rational load = 0;
        for_each_vertex(lp.columns[i], [&](int v) { load += out.clique_weights[v]; });
        if (load > 1) throw InternalError("fractional clique violates a stable-set constraint");
    }
    for (int v = 0; v < lp.vertices; ++v) {
        if (out.clique_weights[v] < 0) throw InternalError("negative fractional clique weight");
        dual += out.clique_weights[v];
        Rational cover = 0;
        for (std::size_t i = 0; i < lp.columns.size(); ++i)
            if (lp.columns[i] & bit(v)) cover += out.stable_set_weights[i];
        if (cover < 1) throw InternalError("stable-set weighting leaves a vertex uncovered");
    }
    if (primal != dual || dual != out.value) throw InternalError("LP primal and dual values differ");
    return out;
}

FractionalChromaticResult fractional_chromatic_number(const SimpleGraph& g, int limit, std::size_t column_limit) {
    auto family = maximal_stable_sets(g, limit);
    if (family.sets.size() > column_limit)
        throw SizeLimitError("LP limited to " + std::to_string(column_limit) + " stable-set columns, got " +
                             std::to_string(family.sets.size()));
    if (g.order() == 0) return {};
    return solve_covering_lp({g.order(), family.sets});
}

int stability_number(const SimpleGraph& g, int limit) {
    if (g.order() > limit)
        throw SizeLimitError("stability number limited to " + std::to_string(limit) + " vertices");
    return clique_number(complement(g));
}

namespace {

struct MatchingTable {
    std::vector<unsigned char> best;

    explicit MatchingTable(const SimpleGraph& g) : best(std::size_t{1} << g.order(), 0) {
        for (VertexMask mask = 1; mask < best.size(); ++mask) {
            int v = std::countr_zero(mask);
            VertexMask rest = mask & ~bit(v);
            unsigned char value = best[rest];
            for_each_vertex(g.neighbours(v) & rest, [&](int u) {
                value = std::max<unsigned char>(value, 1 + best[rest & ~bit(u)]);
            });
            best[mask] = value;
        }
    }
};

void check_matching_limit(const SimpleGraph& g, int limit) {
    if (g.order() > limit)
        throw SizeLimitError("matching DP limited to " + std::to_string(limit) + " vertices, got " +
                             std::to_string(g.order()));
}

}  // namespace

int matching_number(const SimpleGraph& g, int limit) {
    check_matching_limit(g, limit);
    return MatchingTable(g).best[g.vertices()];
}

ComplementMatchingResult chi_via_complement_matching(const SimpleGraph& g, int limit) {
    check_matching_limit(g, limit);
    if (clique_number(complement(g)) > 2) throw DomainError("stability number exceeds 2");
    SimpleGraph co = complement(g);
    MatchingTable table(co);

    ComplementMatchingResult out;
    out.matching_size = table.best[co.vertices()];
    out.chi = g.order() - out.matching_size;
    out.colouring.colour.assign(g.order(), -1);
    int next = 0;
    VertexMask mask = co.vertices();
    while (mask) {
        int v = std::countr_zero(mask);
        VertexMask rest = mask & ~bit(v);
        int partner = -1;
        if (table.best[rest] != table.best[mask]) {
            for_each_vertex(co.neighbours(v) & rest, [&](int u) {
                if (partner < 0 && 1 + table.best[rest & ~bit(u)] == table.best[mask]) partner = u;
            });
        }
        out.colouring.colour[v] = next;
        if (partner >= 0) {
            out.colouring.colour[partner] = next;
            rest &= ~bit(partner);
        }
        ++next;
        mask = rest;
    }
    out.colouring.k = next;
    return out;
}

namespace {

std::vector<int> rolled_colours(int n, int omega, int offset, int pivot) {
    std::vector<int> colour(n);
    for (int p = 0; p < n; ++p) colour[p] = (p + (p >= pivot ? offset : 0)) % omega;
    return colour;
}

}  // namespace

int rollback_capacity(const LinearIntervalRepresentation& rep, int pivot) {
    SimpleGraph g = realize_linear_interval(rep);
    const int omega = clique_number(g);
    int capacity = -1;
    for (int r = 0; r < omega; ++r) {
        VertexColouring c{rolled_colours(g.order(), omega, r, pivot), 0};
        if (!is_proper(g, c)) break;
        capacity = r;
    }
    return capacity;
}

VertexColouring colour_linear_interval(const LinearIntervalRepresentation& rep, int offset, int pivot) {
    SimpleGraph g = realize_linear_interval(rep);
    if (g.order() == 0) return {};
    const int omega = clique_number(g);
    if (offset < 0 || offset >= omega) throw DomainError("roll-back offset outside 0..omega-1");
    if (pivot < 0 || pivot > g.order()) throw DomainError("roll-back pivot out of range");
    VertexColouring c{rolled_colours(g.order(), omega, offset, pivot), 0};
    c.k = count_colours(c.colour);
    if (!is_proper(g, c)) throw DomainError("offset exceeds the roll-back capacity at this pivot");
    return c;
}

}  // namespace superlocal
