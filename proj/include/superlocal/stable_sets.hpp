#pragma once

#include <vector>

#include "superlocal/graph.hpp"
#include "superlocal/rational.hpp"

namespace superlocal {

inline constexpr int kStableSetLimit = 24;

enum class StableSetKind { maximal, maximum };

/// Sets are sorted ascending by mask. For the maximum kind, alpha is α(G);
/// for the maximal kind it is the size of the largest listed set.
struct StableSetFamily {
    StableSetKind kind = StableSetKind::maximal;
    std::vector<VertexMask> sets;
    int alpha = 0;
};

bool is_stable(const SimpleGraph& g, VertexMask s);

/// Inclusion-maximal stable sets, each exactly once (maximal cliques of the complement).
StableSetFamily maximal_stable_sets(const SimpleGraph& g, int limit = kStableSetLimit);

/// All stable sets of size α(G).
StableSetFamily maximum_stable_sets(const SimpleGraph& g, int limit = kStableSetLimit);

/// Probability that each vertex lies in a uniformly random maximum stable set.
struct MembershipProbabilities {
    std::vector<Rational> p;  // indexed by vertex
    BigInt maximum_set_count;
    int alpha = 0;
};

MembershipProbabilities membership_probabilities(const SimpleGraph& g, int limit = kStableSetLimit);

}  // namespace superlocal
