#ifndef KEMPE_GRAPH_HPP
#define KEMPE_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace kempe {

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
// Immutable after construction; all queries are safe for concurrent reads.
class Graph {
 public:
  Graph() = default;
  Graph(int n, const std::vector<std::pair<int, int>>& edges);

  int num_vertices() const { return n_; }
  int num_edges() const { return m_; }
  const std::vector<int>& neighbours(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  int max_degree() const;
  int min_degree() const;
  bool has_edge(int u, int v) const;
  std::vector<std::pair<int, int>> edges() const;

  // Edge-list text format: first line "n m", then m lines "u v" with u < v.
  // Loops, duplicates and out-of-range endpoints are rejected.
  static Graph read_edge_list(std::istream& in);
  void write_edge_list(std::ostream& out) const;
  std::string to_dot() const;

 private:
  int n_ = 0;
  int m_ = 0;
  std::vector<std::vector<int>> adj_;
};

// Removal order for a d-degenerate peeling: each vertex has at most `d`
// neighbours later in `order`.
struct EliminationOrdering {
  std::vector<int> order;
  int d = 0;
};

struct BlockDecomposition {
  std::vector<std::vector<int>> blocks;  // vertex sets, each sorted
  std::vector<int> cut_vertices;         // sorted
  std::vector<bool> end_block;           // block contains <= 1 cut vertex
};

// Result of identifying two non-adjacent vertices. Vertices other than u,v
// keep their relative order in 0..n-3; the merged vertex gets index n-2.
// index_map[old] = new index (u and v both map to the merged index).
struct IdentifyResult {
  Graph graph;
  std::vector<int> index_map;
  int merged = -1;
};

bool is_k_regular(const Graph& g, int k);
bool is_connected(const Graph& g);

// True iff n >= 4 and no vertex cut of size <= 2 exists. Checked by deleting
// every vertex pair and testing connectivity; O(n^3 m), fine at desk scale.
bool is_three_connected(const Graph& g);

// Minimum d admitting a d-elimination ordering, with a witness built by
// repeated min-degree removal (lowest index first among ties).
std::pair<int, EliminationOrdering> degeneracy(const Graph& g);

// A d-elimination ordering whose last |S| positions are exactly S, or
// nullopt when none exists. Degrees during peeling count all vertices still
// present, including S.
std::optional<EliminationOrdering> elimination_ordering_ending_in(
    const Graph& g, const std::vector<int>& s, int d);

// Checks that `order` is a permutation of V and every vertex has at most
// ord.d neighbours later in the order.
bool is_valid_elimination_ordering(const Graph& g,
                                   const EliminationOrdering& ord);

IdentifyResult identify(const Graph& g, int u, int v);

// Biconnected components of a connected graph. A graph consisting of a
// single isolated vertex is treated as one (end) block.
BlockDecomposition blocks(const Graph& g);

// Vertices at graph distance exactly 2 from v.
std::vector<int> second_neighbourhood(const Graph& g, int v);

// All unordered pairs {t1,t2} of neighbours of u with t1 not adjacent to t2.
std::vector<std::pair<int, int>> eligible_pairs(const Graph& g, int u);

// Every vertex of s2 has at least one neighbour in s1.
bool dominates(const Graph& g, const std::vector<int>& s1,
               const std::vector<int>& s2);
// Every vertex of s2 has exactly one neighbour in s1.
bool weakly_dominates(const Graph& g, const std::vector<int>& s1,
                      const std::vector<int>& s2);

std::vector<int> bfs_distances(const Graph& g, int source);
int diameter(const Graph& g);

}  // namespace kempe

#endif  // KEMPE_GRAPH_HPP
