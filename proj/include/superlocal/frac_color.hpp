#pragma once

#include <map>
#include <string>
#include <vector>

#include "superlocal/graph.hpp"
#include "superlocal/rational.hpp"
#include "superlocal/stable_sets.hpp"

namespace superlocal {

/// Sparse weighting of stable sets, keyed by vertex mask.
struct FractionalColouring {
    std::map<VertexMask, Rational> weights;

    Rational total() const;
    Rational coverage(int v) const;  // Σ_{S ∋ v} w(S)
};

struct IterationRecord {
    VertexMask vertices = 0;  // V(G_i)
    Rational low;
    Rational val;
    std::size_t maximum_set_count = 0;
    Rational total;  // T after this iteration
};

struct IterationTrace {
    std::vector<IterationRecord> iterations;
};

struct SuperlocalColouring {
    FractionalColouring colouring;
    IterationTrace trace;
    std::vector<Rational> weight_on;  // wo_v at termination
    Rational total;                   // T
    Rational bound;
};

/// Repeatedly spreads equal weight over the maximum stable sets of the
/// uncoloured part, in steps limited by the first vertex to reach weight 1
/// and by the remaining budget `bound - T`; finished vertices are dropped.
/// Requires bound ≥ γ'ℓℓ(G) (DomainError otherwise); under that condition the
/// result is always a valid fractional colouring, and InternalError signals a bug.
SuperlocalColouring superlocal_fractional_colour(const SimpleGraph& g, const Rational& bound,
                                                 int limit = kStableSetLimit);
SuperlocalColouring superlocal_fractional_colour(const SimpleGraph& g);

struct FractionalViolation {
    enum class Kind { not_stable, nonpositive_weight, coverage, total_exceeds_bound };
    Kind kind;
    VertexMask set = 0;  // for not_stable / nonpositive_weight
    int vertex = -1;     // for coverage
    Rational value;      // offending weight, coverage or total
    std::string describe() const;
};

struct FractionalVerdict {
    std::vector<FractionalViolation> violations;
    bool valid() const { return violations.empty(); }
};

/// Exact check: every key stable, every weight positive, coverage exactly 1
/// at each vertex, total ≤ bound. Lists all violations.
FractionalVerdict verify_fractional_colouring(const SimpleGraph& g, const FractionalColouring& fc, const Rational& bound);

}  // namespace superlocal
