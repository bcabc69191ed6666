#ifndef KEMPE_LATTICES_HPP
#define KEMPE_LATTICES_HPP

#include <cstdint>
#include <functional>

#include "kempe/graph.hpp"

namespace kempe {

// Cartesian product of cycles C_m and C_n; vertex (i,j) has index i*n + j.
// m, n >= 3 so that wraparound never creates multi-edges.
Graph toroidal_grid(int m, int n);

// Toroidal grid plus the parallel diagonals (i,j)-(i+1,j+1); 6-regular.
Graph triangular_lattice(int m, int n);

// Subdivided toroidal grid plus two chords per face; 4-regular, 3mn vertices.
// Indexing: grid vertex (i,j) -> i*n+j; midpoint of the horizontal edge
// (i,j)-(i,j+1) -> m*n + i*n+j; midpoint of the vertical edge (i,j)-(i+1,j)
// -> 2*m*n + i*n+j. Face (i,j) (named by its NW corner) joins its north and
// east midpoints, and its south and west midpoints.
Graph kagome_lattice(int m, int n);

// Two disjoint triangles {0,1,2} and {3,4,5} joined by the matching i - i+3.
Graph triangular_prism();

Graph complete_graph(int n);
Graph cycle(int n);

// Every labelled simple connected k-regular graph on n vertices, exactly
// once, by degree-constrained backtracking over the adjacency matrix.
// Requires n*k even and k < n. The visitor returns false to stop.
void for_each_k_regular_connected(int n, int k,
                                  const std::function<bool(const Graph&)>& visit);

// Pairing-model sample; rejects loops, multi-edges and disconnected
// outcomes. Deterministic for a fixed seed.
Graph random_k_regular_connected(int n, int k, std::uint64_t seed,
                                 int max_attempts = 100000);

}  // namespace kempe

#endif  // KEMPE_LATTICES_HPP
