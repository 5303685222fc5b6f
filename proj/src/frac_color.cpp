#include "superlocal/frac_color.hpp"

#include <algorithm>
#include <optional>

#include "superlocal/errors.hpp"
#include "superlocal/invariants.hpp"

namespace superlocal {

Rational FractionalColouring::total() const {
    Rational sum = 0;
    for (const auto& [set, w] : weights) sum += w;
    return sum;
}

Rational FractionalColouring::coverage(int v) const {
    Rational sum = 0;
    for (const auto& [set, w] : weights)
        if (set & bit(v)) sum += w;
    return sum;
}

SuperlocalColouring superlocal_fractional_colour(const SimpleGraph& g, const Rational& bound, int limit) {
    if (g.order() > limit)
        throw SizeLimitError("fractional colouring limited to " + std::to_string(limit) + " vertices");
    if (bound < gamma_ll_prime(g))
        throw DomainError("bound " + to_string(bound) + " is below gamma_ll_prime " + to_string(gamma_ll_prime(g)));

    SuperlocalColouring out;
    out.bound = bound;
    out.weight_on.assign(g.order(), 0);
    VertexMask remaining = g.vertices();

    while (remaining && out.total != bound) {
        if (out.trace.iterations.size() > static_cast<std::size_t>(g.order()))
            throw InternalError("fractional colouring did not shrink the vertex set");

        auto sub = induced_subgraph(g, remaining);
        auto family = maximum_stable_sets(sub.graph, limit);
        auto probs = membership_probabilities(sub.graph, limit);

        std::optional<Rational> low;
        for (std::size_t i = 0; i < sub.original.size(); ++i) {
            if (probs.p[i] == 0) continue;
            Rational candidate = (1 - out.weight_on[sub.original[i]]) / probs.p[i];
            if (!low || candidate < *low) low = candidate;
        }
        Rational val = std::min(*low, Rational(bound - out.total));

        Rational share = val / static_cast<long long>(family.sets.size());
        for (VertexMask local : family.sets) {
            VertexMask global = 0;
            for_each_vertex(local, [&](int i) { global |= bit(sub.original[i]); });
            out.colouring.weights[global] += share;
        }
        for (std::size_t i = 0; i < sub.original.size(); ++i) out.weight_on[sub.original[i]] += probs.p[i] * val;
        out.total += val;

        VertexMask before = remaining;
        for_each_vertex(before, [&](int v) {
            if (out.weight_on[v] > 1) throw InternalError("vertex weight exceeded 1");
            if (out.weight_on[v] == 1) remaining &= ~bit(v);
        });
        out.trace.iterations.push_back({before, *low, val, family.sets.size(), out.total});

        if (out.total > bound) throw InternalError("total weight exceeded the bound");
        if (remaining == before && out.total != bound) throw InternalError("non-final iteration removed no vertex");
        for (int v = 0; v < g.order(); ++v)
            if (out.colouring.coverage(v) != out.weight_on[v]) throw InternalError("weight bookkeeping diverged");
    }

    auto verdict = verify_fractional_colouring(g, out.colouring, bound);
    if (!verdict.valid())
        throw InternalError("superlocal fractional colouring invalid: " + verdict.violations.front().describe());
    return out;
}

SuperlocalColouring superlocal_fractional_colour(const SimpleGraph& g) {
    return superlocal_fractional_colour(g, gamma_ll_prime(g));
}

std::string FractionalViolation::describe() const {
    switch (kind) {
        case Kind::not_stable:
            return "weighted set " + std::to_string(set) + " is not stable";
        case Kind::nonpositive_weight:
            return "weighted set " + std::to_string(set) + " has non-positive weight " + to_string(value);
        case Kind::coverage:
            return "vertex " + std::to_string(vertex) + " has coverage " + to_string(value) + " instead of 1/1";
        case Kind::total_exceeds_bound:
            return "total weight " + to_string(value) + " exceeds the bound";
    }
    return "unknown violation";
}

FractionalVerdict verify_fractional_colouring(const SimpleGraph& g, const FractionalColouring& fc, const Rational& bound) {
    FractionalVerdict verdict;
    using Kind = FractionalViolation::Kind;
    for (const auto& [set, w] : fc.weights) {
        if (set & ~g.vertices() || !is_stable(g, set)) verdict.violations.push_back({Kind::not_stable, set, -1, w});
        if (w <= 0) verdict.violations.push_back({Kind::nonpositive_weight, set, -1, w});
    }
    for (int v = 0; v < g.order(); ++v) {
        Rational c = fc.coverage(v);
        if (c != 1) verdict.violations.push_back({Kind::coverage, 0, v, c});
    }
    if (Rational total = fc.total(); total > bound) verdict.violations.push_back({Kind::total_exceeds_bound, 0, -1, total});
    return verdict;
}

}  // namespace superlocal
