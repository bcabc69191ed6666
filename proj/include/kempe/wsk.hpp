#ifndef KEMPE_WSK_HPP
#define KEMPE_WSK_HPP

#include <cstdint>
#include <random>

#include "kempe/colouring.hpp"
#include "kempe/graph.hpp"

namespace kempe {

// State of one WSK chain. The colouring stays proper at every step
// (zero-temperature constraint); the RNG is part of the state so that
// trajectories are reproducible.
struct ChainState {
  Colouring colouring;
  std::uint64_t step = 0;
  std::mt19937_64 rng;
};

struct WskConfig {
  int q = 0;
  std::uint64_t steps = 0;
  std::uint64_t seed = 0;
  std::uint64_t record_every = 1;
  std::size_t distinct_cap = 1'000'000;
};

struct RunSummary {
  Colouring final;
  std::uint64_t steps = 0;
  std::uint64_t samples = 0;
  // colour_counts[v][c-1]: how often vertex v carried colour c at samples.
  std::vector<std::vector<std::uint64_t>> colour_counts;
  std::size_t distinct_states = 0;
  bool distinct_capped = false;
};

enum class ProbeOutcome {
  Ergodic,     // exact: single Kempe class
  NotErgodic,  // exact: more than one class (or an empty state space)
  Consistent,  // sampled only: nothing contradicted ergodicity
};

struct ProbeReport {
  bool exact = false;
  ProbeOutcome outcome = ProbeOutcome::Consistent;
  std::size_t num_classes = 0;  // meaningful when exact
  std::size_t num_states = 0;   // meaningful when exact
  // Sampled statistics (when !exact): per-colour occupancy of vertex 0.
  std::vector<double> occupancy;
  double max_abs_deviation = 0.0;  // |occupancy - 1/q|, maximum over colours
};

ChainState make_chain_state(const Graph& g, const Colouring& init,
                            std::uint64_t seed);

// One WSK move: draw a vertex v uniformly, a colour b uniformly from the
// q-1 colours other than the current colour of v, and flip the
// (colour(v), b)-Kempe chain containing v.
void wsk_advance(const Graph& g, ChainState& s);
ChainState wsk_step(const Graph& g, ChainState s);

RunSummary run_chain(const Graph& g, const Colouring& init,
                     const WskConfig& cfg);

// Exact verdict (full enumeration + class count) when the state space fits
// the budget; otherwise a sampled run that can only return Consistent.
ProbeReport ergodicity_probe(const Graph& g, int q, std::size_t state_budget,
                             std::uint64_t seed,
                             std::uint64_t sample_steps = 1'000'000);

}  // namespace kempe

#endif  // KEMPE_WSK_HPP
