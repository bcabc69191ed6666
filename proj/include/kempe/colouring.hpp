#ifndef KEMPE_COLOURING_HPP
#define KEMPE_COLOURING_HPP

#include <functional>
#include <optional>
#include <vector>

#include "kempe/graph.hpp"

namespace kempe {

// Total map vertex -> colour in {1..k}.
struct Colouring {
  int k = 0;
  std::vector<int> colours;

  bool operator==(const Colouring& other) const = default;
  auto operator<=>(const Colouring& other) const = default;
};

// Partial map; colour 0 means unassigned.
struct PartialColouring {
  int k = 0;
  std::vector<int> colours;

  std::vector<int> assigned_vertices() const;
};

struct ListAssignment {
  std::vector<std::vector<int>> lists;
};

// Throws if a colour lies outside {1..k}.
bool is_proper(const Graph& g, const Colouring& c);

// Properness restricted to the assigned vertices.
bool is_proper_partial(const Graph& g, const PartialColouring& c);

// Visits every proper k-colouring exactly once, in lexicographic order of
// the colour vector (vertex 0..n-1, colours 1..k, backtracking). The visitor
// returns false to stop early.
void for_each_colouring(const Graph& g, int k,
                        const std::function<bool(const Colouring&)>& visit);
std::vector<Colouring> enumerate_colourings(const Graph& g, int k);
std::size_t count_colourings(const Graph& g, int k);

// Greedy extension along the reverse of a d-elimination ordering ending in
// the assigned set of `partial`; requires d + 1 <= k. Lowest legal colour.
Colouring extend_colouring(const Graph& g, const PartialColouring& partial,
                           const EliminationOrdering& ordering);

// Extension via a BFS order of V \ S from the anchor x appended with S.
// Preconditions (each failure throws with the clause named):
//   |S| <= k; G[V\S] connected; deg(v) <= k for all v in V\S;
//   x in V\S with deg(x) <= k-1; partial proper on G[S].
Colouring extend_with_anchor(const Graph& g, const std::vector<int>& s,
                             const PartialColouring& partial, int x, int k);

// Backtracking search for a colouring respecting L, most-constrained vertex
// first. Presence/absence is the contract; the witness's palette size is the
// largest colour mentioned in L.
std::optional<Colouring> list_colour(const Graph& g, const ListAssignment& l);

// Block characterization: false iff every block is a complete graph or an
// odd cycle. Requires connected input.
bool is_degree_choosable(const Graph& g);

// First colouring in enumeration order, or nullopt.
std::optional<Colouring> find_k_colouring(const Graph& g, int k);

}  // namespace kempe

#endif  // KEMPE_COLOURING_HPP
