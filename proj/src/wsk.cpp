#include "kempe/wsk.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "kempe/kempe.hpp"

namespace kempe {

namespace {

// Sampling uses plain modulo on the raw 64-bit stream so that trajectories
// do not depend on the standard library's distribution implementation.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
  return rng() % bound;
}

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 14695981039346656037ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

}  // namespace

ChainState make_chain_state(const Graph& g, const Colouring& init,
                            std::uint64_t seed) {
  if (!is_proper(g, init))
    throw std::invalid_argument("make_chain_state: initial colouring not proper");
  if (init.k < 2) throw std::invalid_argument("make_chain_state: q < 2");
  return ChainState{init, 0, std::mt19937_64(seed)};
}

void wsk_advance(const Graph& g, ChainState& s) {
  const int n = g.num_vertices();
  const int q = s.colouring.k;
  int v = static_cast<int>(draw(s.rng, n));
  int a = s.colouring.colours[v];
  // b uniform over the q-1 colours other than a.
  int b = 1 + static_cast<int>(draw(s.rng, q - 1));
  if (b >= a) ++b;

  // Flip the (a,b)-component containing v.
  std::vector<int>& col = s.colouring.colours;
  std::vector<int> stack{v};
  std::vector<bool> seen(n, false);
  seen[v] = true;
  std::vector<int> component;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    component.push_back(u);
    for (int w : g.neighbours(u)) {
      if (!seen[w] && (col[w] == a || col[w] == b)) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  for (int u : component) col[u] = (col[u] == a) ? b : a;
  ++s.step;
}

ChainState wsk_step(const Graph& g, ChainState s) {
  wsk_advance(g, s);
  return s;
}

RunSummary run_chain(const Graph& g, const Colouring& init,
                     const WskConfig& cfg) {
  if (init.k != cfg.q)
    throw std::invalid_argument("run_chain: init palette differs from q");
  ChainState s = make_chain_state(g, init, cfg.seed);
  const int n = g.num_vertices();
  RunSummary out;
  out.colour_counts.assign(n, std::vector<std::uint64_t>(cfg.q, 0));
  std::unordered_set<std::vector<int>, VectorHash> visited;
  visited.insert(s.colouring.colours);

  const std::uint64_t record_every = cfg.record_every == 0 ? 1 : cfg.record_every;
  for (std::uint64_t t = 0; t < cfg.steps; ++t) {
    wsk_advance(g, s);
    if (s.step % record_every == 0) {
      ++out.samples;
      for (int v = 0; v < n; ++v)
        ++out.colour_counts[v][s.colouring.colours[v] - 1];
    }
    if (visited.size() < cfg.distinct_cap)
      visited.insert(s.colouring.colours);
    else
      out.distinct_capped = true;
  }
  out.final = s.colouring;
  out.steps = s.step;
  out.distinct_states = visited.size();
  return out;
}

ProbeReport ergodicity_probe(const Graph& g, int q, std::size_t state_budget,
                             std::uint64_t seed, std::uint64_t sample_steps) {
  ProbeReport report;

  // Exact route: count states first; build the reconfiguration graph only
  // when the whole space fits the budget.
  std::size_t states = 0;
  bool fits = true;
  for_each_colouring(g, q, [&](const Colouring&) {
    if (++states > state_budget) {
      fits = false;
      return false;
    }
    return true;
  });
  if (fits) {
    auto summary = kempe_classes(g, q, state_budget);
    report.exact = true;
    report.num_classes = summary.num_classes();
    report.num_states = summary.num_states;
    report.outcome = report.num_classes == 1 ? ProbeOutcome::Ergodic
                                             : ProbeOutcome::NotErgodic;
    return report;
  }

  // Sampled route: sampling can never prove non-ergodicity, so the verdict
  // is Consistent; we report colour-occupancy statistics for vertex 0.
  auto init = find_k_colouring(g, q);
  if (!init.has_value())
    throw std::invalid_argument("ergodicity_probe: graph has no q-colouring");
  WskConfig cfg{q, sample_steps, seed, 1, /*distinct_cap=*/1};
  auto run = run_chain(g, *init, cfg);
  report.exact = false;
  report.outcome = ProbeOutcome::Consistent;
  report.occupancy.assign(q, 0.0);
  for (int c = 0; c < q; ++c) {
    report.occupancy[c] =
        static_cast<double>(run.colour_counts[0][c]) / run.samples;
    report.max_abs_deviation = std::max(
        report.max_abs_deviation, std::abs(report.occupancy[c] - 1.0 / q));
  }
  return report;
}

}  // namespace kempe
