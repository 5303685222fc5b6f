#pragma once

#include <functional>
#include <vector>

#include "superlocal/graph.hpp"

namespace superlocal {

/// ω of G restricted to `within` (0 when `within` is empty). Exact branch
/// and bound with a greedy-colouring bound.
int clique_number(const SimpleGraph& g, VertexMask within);
int clique_number(const SimpleGraph& g);

/// Size of the largest clique containing v.
int omega_v(const SimpleGraph& g, int v);

/// Calls visit(clique) once per inclusion-maximal clique of G|within
/// (Bron–Kerbosch with Tomita pivoting). An empty vertex set has no cliques.
void for_each_maximal_clique(const SimpleGraph& g, VertexMask within, const std::function<void(VertexMask)>& visit);

std::vector<VertexMask> maximal_cliques(const SimpleGraph& g);

}  // namespace superlocal
