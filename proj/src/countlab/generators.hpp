#pragma once

#include "countlab/graph.hpp"

namespace countlab {

Graph make_clique(int k);
Graph make_independent(int k);
// k disjoint edges on 2k vertices: edge i joins 2i and 2i+1.
Graph make_matching(int k);
// Path on n vertices (n-1 edges).
Graph make_path(int n);
// Cycle on n >= 3 vertices.
Graph make_cycle(int n);
// k-by-k grid, row-major labels; vertices adjacent iff at L1 distance 1.
Graph make_grid(int k);
// Wall of height k and length ell: full horizontal rows, full vertical
// connections on the first and last column, and interior vertical rungs
// between rows i and i+1 in column j exactly when i+j is even (1-based).
// Row-major labels.
Graph make_wall(int k, int ell);

} // namespace countlab
