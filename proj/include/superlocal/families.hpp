#pragma once

#include "superlocal/graph.hpp"

// Named graphs used as fixed witnesses throughout the tests and the CLI.
namespace superlocal::families {

SimpleGraph empty(int n);
SimpleGraph complete(int n);
SimpleGraph path(int n);
SimpleGraph cycle(int n);
SimpleGraph star(int leaves);
SimpleGraph petersen();

// Two adjacent centres 0 and 1, each with two leaves (2,3 on 0; 4,5 on 1).
SimpleGraph double_star();

// Clique on 0..k-1, every clique vertex with k pendant vertices.
SimpleGraph pendant_clique(int k);

// Complement of a perfect matching on 2m vertices.
SimpleGraph cocktail_party(int m);

}  // namespace superlocal::families
