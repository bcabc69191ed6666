#include "kempe/kempe.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_map>

namespace kempe {

namespace {

void check_pair(const Colouring& c, int a, int b) {
  if (a == b) throw std::invalid_argument("colour pair: a == b");
  if (a < 1 || a > c.k || b < 1 || b > c.k)
    throw std::invalid_argument("colour pair: colour out of range");
}

struct ColouringHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 14695981039346656037ull;
    for (int x : v) {
      h ^= static_cast<std::size_t>(x);
      h *= 1099511628211ull;
    }
    return h;
  }
};

using StateIndex = std::unordered_map<std::vector<int>, int, ColouringHash>;

}  // namespace

InducedSubgraph two_colour_subgraph(const Graph& g, const Colouring& c, int a,
                                    int b) {
  check_pair(c, a, b);
  InducedSubgraph out;
  const int n = g.num_vertices();
  std::vector<int> new_id(n, -1);
  for (int v = 0; v < n; ++v) {
    if (c.colours[v] == a || c.colours[v] == b) {
      new_id[v] = static_cast<int>(out.vertex_ids.size());
      out.vertex_ids.push_back(v);
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [u, v] : g.edges())
    if (new_id[u] >= 0 && new_id[v] >= 0)
      edges.emplace_back(new_id[u], new_id[v]);
  out.graph = Graph(static_cast<int>(out.vertex_ids.size()), edges);
  return out;
}

std::vector<KempeChain> kempe_chains(const Graph& g, const Colouring& c,
                                     int a, int b) {
  check_pair(c, a, b);
  const int n = g.num_vertices();
  std::vector<KempeChain> out;
  std::vector<bool> seen(n, false);
  for (int v = 0; v < n; ++v) {
    if (seen[v] || (c.colours[v] != a && c.colours[v] != b)) continue;
    KempeChain chain{a, b, {}};
    std::vector<int> stack{v};
    seen[v] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      chain.vertices.push_back(u);
      for (int w : g.neighbours(u)) {
        if (!seen[w] && (c.colours[w] == a || c.colours[w] == b)) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    std::sort(chain.vertices.begin(), chain.vertices.end());
    out.push_back(std::move(chain));
  }
  return out;
}

Colouring apply_kempe_change(const Graph& g, const Colouring& c,
                             const KempeChain& chain) {
  check_pair(c, chain.colour_a, chain.colour_b);
  if (chain.vertices.empty())
    throw std::invalid_argument("apply_kempe_change: empty chain");
  // Validate against the actual component containing the chain's first vertex.
  auto components = kempe_chains(g, c, chain.colour_a, chain.colour_b);
  const KempeChain* match = nullptr;
  for (const auto& comp : components) {
    if (std::binary_search(comp.vertices.begin(), comp.vertices.end(),
                           chain.vertices.front())) {
      match = &comp;
      break;
    }
  }
  if (match == nullptr || match->vertices != chain.vertices)
    throw std::invalid_argument("apply_kempe_change: not a maximal (a,b)-component");
  Colouring out = c;
  for (int v : chain.vertices) {
    if (out.colours[v] == chain.colour_a)
      out.colours[v] = chain.colour_b;
    else
      out.colours[v] = chain.colour_a;
  }
  return out;
}

std::vector<std::pair<KempeChain, Colouring>> kempe_moves(const Graph& g,
                                                          const Colouring& c) {
  std::vector<std::pair<KempeChain, Colouring>> out;
  for (int a = 1; a <= c.k; ++a) {
    for (int b = a + 1; b <= c.k; ++b) {
      for (auto& chain : kempe_chains(g, c, a, b)) {
        Colouring next = c;
        for (int v : chain.vertices)
          next.colours[v] = (next.colours[v] == a) ? b : a;
        out.emplace_back(std::move(chain), std::move(next));
      }
    }
  }
  return out;
}

std::vector<Colouring> kempe_neighbours(const Graph& g, const Colouring& c) {
  std::vector<Colouring> out;
  for (auto& [chain, next] : kempe_moves(g, c)) out.push_back(next);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ReconfigGraph build_reconfig_graph(const Graph& g, int k, std::size_t budget) {
  ReconfigGraph r;
  r.k = k;
  StateIndex index;
  bool over = false;
  for_each_colouring(g, k, [&](const Colouring& c) {
    if (r.states.size() >= budget) {
      over = true;
      return false;
    }
    index.emplace(c.colours, static_cast<int>(r.states.size()));
    r.states.push_back(c);
    return true;
  });
  if (over)
    throw BudgetExceeded("build_reconfig_graph: state budget of " +
                         std::to_string(budget) + " exceeded");

  const int num_states = static_cast<int>(r.states.size());
  r.edges.assign(num_states, {});
  for (int i = 0; i < num_states; ++i) {
    for (const auto& nb : kempe_neighbours(g, r.states[i])) {
      int j = index.at(nb.colours);
      r.edges[i].push_back(j);
    }
  }

  // Class ids canonicalized by minimum state index.
  r.class_id.assign(num_states, -1);
  for (int start = 0; start < num_states; ++start) {
    if (r.class_id[start] >= 0) continue;
    int id = static_cast<int>(r.num_classes++);
    r.class_sizes.push_back(0);
    std::vector<int> stack{start};
    r.class_id[start] = id;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      ++r.class_sizes[id];
      for (int w : r.edges[u]) {
        if (r.class_id[w] < 0) {
          r.class_id[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  return r;
}

ClassSummary kempe_classes(const Graph& g, int k, std::size_t budget) {
  auto r = build_reconfig_graph(g, k, budget);
  return ClassSummary{r.states.size(), r.class_sizes};
}

EquivalenceResult are_kempe_equivalent(const Graph& g, int k,
                                       const Colouring& alpha,
                                       const Colouring& beta,
                                       std::size_t budget) {
  if (alpha.k != k || beta.k != k)
    throw std::invalid_argument("are_kempe_equivalent: palette mismatch");
  if (!is_proper(g, alpha) || !is_proper(g, beta))
    throw std::invalid_argument("are_kempe_equivalent: colouring not proper");
  EquivalenceResult res;
  if (alpha == beta) {
    res.equivalent = true;
    return res;
  }

  StateIndex index;
  std::vector<Colouring> states{alpha};
  std::vector<int> parent{-1};
  std::vector<KempeChain> via{{}};
  index.emplace(alpha.colours, 0);
  std::queue<int> frontier;
  frontier.push(0);
  int goal = -1;
  while (!frontier.empty() && goal < 0) {
    int u = frontier.front();
    frontier.pop();
    for (auto& [chain, next] : kempe_moves(g, states[u])) {
      auto it = index.find(next.colours);
      if (it != index.end()) continue;
      if (states.size() >= budget)
        throw BudgetExceeded("are_kempe_equivalent: state budget exceeded");
      int id = static_cast<int>(states.size());
      index.emplace(next.colours, id);
      states.push_back(next);
      parent.push_back(u);
      via.push_back(chain);
      if (next == beta) {
        goal = id;
        break;
      }
      frontier.push(id);
    }
  }
  if (goal < 0) return res;
  res.equivalent = true;
  for (int at = goal; at != 0; at = parent[at])
    res.path.push_back(WitnessStep{via[at], states[at]});
  std::reverse(res.path.begin(), res.path.end());
  return res;
}

std::vector<Colouring> restricted_class(const Graph& g, int k, int u, int v) {
  if (u == v) throw std::invalid_argument("restricted_class: u == v");
  if (g.has_edge(u, v))
    throw std::invalid_argument("restricted_class: u adjacent to v");
  std::vector<Colouring> out;
  for_each_colouring(g, k, [&](const Colouring& c) {
    if (c.colours[u] == c.colours[v]) out.push_back(c);
    return true;
  });
  return out;
}

bool is_locked(const Graph& g, const Colouring& c, int x) {
  std::vector<bool> seen(c.k + 1, false);
  for (int w : g.neighbours(x)) seen[c.colours[w]] = true;
  for (int col = 1; col <= c.k; ++col)
    if (col != c.colours[x] && !seen[col]) return false;
  return true;
}

std::vector<int> partition_signature(const Colouring& c) {
  const int n = static_cast<int>(c.colours.size());
  std::vector<int> first(c.k + 1, -1);
  std::vector<int> sig(n);
  for (int v = 0; v < n; ++v) {
    if (first[c.colours[v]] < 0) first[c.colours[v]] = v;
    sig[v] = first[c.colours[v]];
  }
  return sig;
}

bool is_partition_frozen(const Graph& g, const Colouring& c) {
  if (!is_proper(g, c))
    throw std::invalid_argument("is_partition_frozen: colouring not proper");
  auto sig = partition_signature(c);
  for (const auto& [chain, next] : kempe_moves(g, c))
    if (partition_signature(next) != sig) return false;
  return true;
}

std::vector<int> reconfig_diameter(const ReconfigGraph& r,
                                   std::size_t work_budget) {
  const int num_states = static_cast<int>(r.states.size());
  std::size_t work = 0;
  for (std::size_t size : r.class_sizes) work += size * size;
  if (work > work_budget)
    throw BudgetExceeded("reconfig_diameter: work budget exceeded");

  std::vector<int> diam(r.num_classes, 0);
  std::vector<int> dist(num_states);
  for (int s = 0; s < num_states; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    int ecc = 0;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      ecc = std::max(ecc, dist[u]);
      for (int w : r.edges[u]) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    diam[r.class_id[s]] = std::max(diam[r.class_id[s]], ecc);
  }
  return diam;
}

}  // namespace kempe
