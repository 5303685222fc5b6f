#pragma once

#include <vector>

#include "superlocal/graph.hpp"
#include "superlocal/interval.hpp"
#include "superlocal/rational.hpp"
#include "superlocal/stable_sets.hpp"

namespace superlocal {

inline constexpr int kChromaticLimit = 16;
inline constexpr int kMatchingLimit = 20;
inline constexpr std::size_t kLpColumnLimit = 4000;

struct VertexColouring {
    std::vector<int> colour;  // colour index per vertex, 0-based
    int k = 0;                // number of distinct colours used
};

bool is_proper(const SimpleGraph& g, const VertexColouring& c);

struct ChromaticResult {
    int chi = 0;
    VertexColouring colouring;
};

/// Exact χ by DSATUR branch and bound, seeded with ω as the lower bound.
ChromaticResult chromatic_number(const SimpleGraph& g, int limit = kChromaticLimit);

/// Covering LP over the maximal stable sets of a graph:
///   minimise Σ x_S  subject to  Σ_{S ∋ v} x_S ≥ 1 for every v,  x ≥ 0.
/// Solved through its dual (a fractional clique) with an exact rational
/// simplex; the optimum carries both solutions as a certificate.
struct RationalLP {
    int vertices = 0;
    std::vector<VertexMask> columns;
};

struct FractionalChromaticResult {
    Rational value;
    std::vector<VertexMask> columns;
    std::vector<Rational> stable_set_weights;  // primal, one per column
    std::vector<Rational> clique_weights;      // dual, one per vertex
};

FractionalChromaticResult solve_covering_lp(const RationalLP& lp);
FractionalChromaticResult fractional_chromatic_number(const SimpleGraph& g, int limit = kStableSetLimit,
                                                      std::size_t column_limit = kLpColumnLimit);

int stability_number(const SimpleGraph& g, int limit = kStableSetLimit);

/// Size of a maximum matching by dynamic programming over vertex subsets.
int matching_number(const SimpleGraph& g, int limit = kMatchingLimit);

struct ComplementMatchingResult {
    int chi = 0;
    int matching_size = 0;  // ν of the complement
    VertexColouring colouring;
};

/// χ(G) = n − ν(complement of G), valid when α(G) ≤ 2 (DomainError otherwise).
ComplementMatchingResult chi_via_complement_matching(const SimpleGraph& g, int limit = kMatchingLimit);

/// Colours vertices left to right with colour (position mod ω); vertices at
/// index ≥ pivot are rolled back by `offset` extra steps. Pivot 0 makes any
/// offset a global rotation. Throws DomainError if offset is outside 0..ω-1
/// or exceeds rollback_capacity(rep, pivot).
VertexColouring colour_linear_interval(const LinearIntervalRepresentation& rep, int offset, int pivot = 0);

/// Largest r such that roll-backs 0..r at `pivot` all give proper colourings.
int rollback_capacity(const LinearIntervalRepresentation& rep, int pivot);

}  // namespace superlocal
