#include "superlocal/cliques.hpp"

#include <algorithm>
#include <array>

namespace superlocal {

namespace {

class MaxCliqueSearch {
public:
    explicit MaxCliqueSearch(const SimpleGraph& g) : g_(g) {}

    int run(VertexMask within) {
        best_ = 0;
        if (within) expand(0, within);
        return best_;
    }

private:
    void expand(int size, VertexMask candidates) {
        std::array<int, kMaxVertices> order{};
        std::array<int, kMaxVertices> colour{};
        int count = 0;
        VertexMask uncoloured = candidates;
        for (int c = 1; uncoloured; ++c) {
            VertexMask free = uncoloured;
            while (free) {
                int v = std::countr_zero(free);
                free &= ~(bit(v) | g_.neighbours(v));
                uncoloured &= ~bit(v);
                order[count] = v;
                colour[count++] = c;
            }
        }
        for (int i = count - 1; i >= 0; --i) {
            if (size + colour[i] <= best_) return;
            int v = order[i];
            VertexMask next = candidates & g_.neighbours(v);
            if (next)
                expand(size + 1, next);
            else
                best_ = std::max(best_, size + 1);
            candidates &= ~bit(v);
        }
    }

    const SimpleGraph& g_;
    int best_ = 0;
};

void bron_kerbosch(const SimpleGraph& g, VertexMask r, VertexMask p, VertexMask x,
                   const std::function<void(VertexMask)>& visit) {
    if (!p && !x) {
        visit(r);
        return;
    }
    int pivot = -1, best = -1;
    for_each_vertex(p | x, [&](int u) {
        int score = popcount(p & g.neighbours(u));
        if (score > best) best = score, pivot = u;
    });
    VertexMask branch = p & ~g.neighbours(pivot);
    for_each_vertex(branch, [&](int v) {
        bron_kerbosch(g, r | bit(v), p & g.neighbours(v), x & g.neighbours(v), visit);
        p &= ~bit(v);
        x |= bit(v);
    });
}

}  // namespace

int clique_number(const SimpleGraph& g, VertexMask within) { return MaxCliqueSearch(g).run(within & g.vertices()); }

int clique_number(const SimpleGraph& g) { return clique_number(g, g.vertices()); }

int omega_v(const SimpleGraph& g, int v) { return 1 + clique_number(g, g.neighbours(v)); }

void for_each_maximal_clique(const SimpleGraph& g, VertexMask within, const std::function<void(VertexMask)>& visit) {
    within &= g.vertices();
    if (!within) return;
    bron_kerbosch(g, 0, within, 0, visit);
}

std::vector<VertexMask> maximal_cliques(const SimpleGraph& g) {
    std::vector<VertexMask> out;
    for_each_maximal_clique(g, g.vertices(), [&](VertexMask c) { out.push_back(c); });
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace superlocal
