#pragma once

#include <vector>

#include "superlocal/graph.hpp"
#include "superlocal/rational.hpp"

namespace superlocal {

struct ClosedInterval {
    Rational lo;
    Rational hi;

    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// Vertex i sits at points[i] (strictly increasing); u and v are adjacent
/// iff some interval contains both of their points.
struct LinearIntervalRepresentation {
    std::vector<Rational> points;
    std::vector<ClosedInterval> intervals;
};

/// Throws DomainError unless points increase strictly and every interval has lo ≤ hi.
void validate(const LinearIntervalRepresentation& rep);

SimpleGraph realize_linear_interval(const LinearIntervalRepresentation& rep);

}  // namespace superlocal
