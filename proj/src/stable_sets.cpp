#include "superlocal/stable_sets.hpp"

#include <algorithm>
#include <string>

#include "superlocal/cliques.hpp"
#include "superlocal/errors.hpp"

namespace superlocal {

namespace {

void check_limit(const SimpleGraph& g, int limit) {
    if (g.order() > limit)
        throw SizeLimitError("stable-set enumeration limited to " + std::to_string(limit) + " vertices, got " +
                             std::to_string(g.order()));
}

}  // namespace

bool is_stable(const SimpleGraph& g, VertexMask s) {
    bool stable = true;
    for_each_vertex(s, [&](int v) { stable = stable && !(g.neighbours(v) & s); });
    return stable;
}

StableSetFamily maximal_stable_sets(const SimpleGraph& g, int limit) {
    check_limit(g, limit);
    StableSetFamily family;
    family.kind = StableSetKind::maximal;
    SimpleGraph co = complement(g);
    for_each_maximal_clique(co, co.vertices(), [&](VertexMask s) {
        family.sets.push_back(s);
        family.alpha = std::max(family.alpha, popcount(s));
    });
    std::sort(family.sets.begin(), family.sets.end());
    return family;
}

StableSetFamily maximum_stable_sets(const SimpleGraph& g, int limit) {
    StableSetFamily family = maximal_stable_sets(g, limit);
    family.kind = StableSetKind::maximum;
    std::erase_if(family.sets, [&](VertexMask s) { return popcount(s) != family.alpha; });
    if (g.order() == 0) family.sets = {0};
    return family;
}

MembershipProbabilities membership_probabilities(const SimpleGraph& g, int limit) {
    auto family = maximum_stable_sets(g, limit);
    MembershipProbabilities out;
    out.alpha = family.alpha;
    out.maximum_set_count = BigInt(family.sets.size());
    std::vector<BigInt> hits(g.order(), 0);
    for (VertexMask s : family.sets) for_each_vertex(s, [&](int v) { ++hits[v]; });
    out.p.resize(g.order());
    for (int v = 0; v < g.order(); ++v) out.p[v] = Rational(hits[v], out.maximum_set_count);
    return out;
}

}  // namespace superlocal
