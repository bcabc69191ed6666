#ifndef KEMPE_KEMPE_HPP
#define KEMPE_KEMPE_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kempe/colouring.hpp"
#include "kempe/graph.hpp"

namespace kempe {

// Hard resource error: a state-space budget was exceeded. Never a silent
// truncation.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr std::size_t kDefaultStateBudget = 2'000'000;

// One maximal (a,b)-component: the vertex set of a connected component of
// the subgraph induced by vertices coloured a or b.
struct KempeChain {
  int colour_a = 0;
  int colour_b = 0;
  std::vector<int> vertices;  // sorted
};

// Subgraph induced by a vertex subset, with a map back to original ids.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertex_ids;  // new index -> original vertex
};

struct ReconfigGraph {
  int k = 0;
  std::vector<Colouring> states;          // exactly C^k_G, enumeration order
  std::vector<std::vector<int>> edges;    // adjacency among state indices
  std::vector<int> class_id;              // canonical: ids ordered by min state index
  std::size_t num_classes = 0;
  std::vector<std::size_t> class_sizes;
};

struct WitnessStep {
  KempeChain chain;
  Colouring colouring;  // colouring after applying the chain
};
using WitnessPath = std::vector<WitnessStep>;

struct EquivalenceResult {
  bool equivalent = false;
  WitnessPath path;  // shortest; empty when the colourings are equal
};

struct ClassSummary {
  std::size_t num_states = 0;
  std::vector<std::size_t> sizes;
  std::size_t num_classes() const { return sizes.size(); }
};

InducedSubgraph two_colour_subgraph(const Graph& g, const Colouring& c, int a,
                                    int b);

// Components of G_c(a,b), ordered by minimum vertex id.
std::vector<KempeChain> kempe_chains(const Graph& g, const Colouring& c,
                                     int a, int b);

// Swaps a and b on chain.vertices. The chain must be a maximal
// (a,b)-component of (g, c); anything else throws.
Colouring apply_kempe_change(const Graph& g, const Colouring& c,
                             const KempeChain& chain);

// All single-Kempe-change moves from c, over colour pairs a < b.
std::vector<std::pair<KempeChain, Colouring>> kempe_moves(const Graph& g,
                                                          const Colouring& c);
std::vector<Colouring> kempe_neighbours(const Graph& g, const Colouring& c);

ReconfigGraph build_reconfig_graph(const Graph& g, int k,
                                   std::size_t budget = kDefaultStateBudget);

ClassSummary kempe_classes(const Graph& g, int k,
                           std::size_t budget = kDefaultStateBudget);

// Lazily expanded BFS from alpha; returns a shortest witness when reachable.
EquivalenceResult are_kempe_equivalent(const Graph& g, int k,
                                       const Colouring& alpha,
                                       const Colouring& beta,
                                       std::size_t budget = kDefaultStateBudget);

// Proper k-colourings with c(u) = c(v); u, v must be non-adjacent.
std::vector<Colouring> restricted_class(const Graph& g, int k, int u, int v);

// All k-1 colours other than c(x) appear in N(x).
bool is_locked(const Graph& g, const Colouring& c, int x);

// Every Kempe change from c preserves the partition of V into (nonempty)
// colour classes.
bool is_partition_frozen(const Graph& g, const Colouring& c);

// Exact diameter of each class (BFS from every state), indexed by class id.
// Throws BudgetExceeded when states * class size crosses `work_budget`.
std::vector<int> reconfig_diameter(const ReconfigGraph& r,
                                   std::size_t work_budget = 500'000'000);

// Canonical signature of the colour-class partition: for each vertex, the
// smallest vertex sharing its colour.
std::vector<int> partition_signature(const Colouring& c);

}  // namespace kempe

#endif  // KEMPE_KEMPE_HPP
