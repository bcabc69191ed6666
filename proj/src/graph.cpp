#include "kempe/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <queue>
#include <sstream>
#include <stack>
#include <stdexcept>

namespace kempe {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  adj_.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("Graph: edge endpoint out of range");
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nbrs : adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end())
      throw std::invalid_argument("Graph: duplicate edge");
  }
  m_ = static_cast<int>(edges.size());
}

int Graph::max_degree() const {
  int d = 0;
  for (const auto& nbrs : adj_) d = std::max(d, static_cast<int>(nbrs.size()));
  return d;
}

int Graph::min_degree() const {
  if (n_ == 0) return 0;
  int d = n_;
  for (const auto& nbrs : adj_) d = std::min(d, static_cast<int>(nbrs.size()));
  return d;
}

bool Graph::has_edge(int u, int v) const {
  const auto& nbrs = adj_[u];
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(m_);
  for (int u = 0; u < n_; ++u)
    for (int v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Graph Graph::read_edge_list(std::istream& in) {
  int n, m;
  if (!(in >> n >> m)) throw std::invalid_argument("edge list: bad header");
  if (n < 0 || m < 0) throw std::invalid_argument("edge list: bad header");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated");
    if (u >= v) throw std::invalid_argument("edge list: require u < v");
    edges.emplace_back(u, v);
  }
  return Graph(n, edges);  // range/loop/duplicate checks happen here
}

void Graph::write_edge_list(std::ostream& out) const {
  out << n_ << ' ' << m_ << '\n';
  for (auto [u, v] : edges()) out << u << ' ' << v << '\n';
}

std::string Graph::to_dot() const {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < n_; ++v) out << "  " << v << ";\n";
  for (auto [u, v] : edges()) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

bool is_k_regular(const Graph& g, int k) {
  for (int v = 0; v < g.num_vertices(); ++v)
    if (g.degree(v) != k) return false;
  return true;
}

namespace {

// Connectivity of g with the vertices in `removed` deleted.
bool connected_without(const Graph& g, const std::vector<bool>& removed) {
  const int n = g.num_vertices();
  int start = -1, live = 0;
  for (int v = 0; v < n; ++v) {
    if (!removed[v]) {
      ++live;
      if (start < 0) start = v;
    }
  }
  if (live <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<int> stack{start};
  seen[start] = true;
  int found = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int w : g.neighbours(u)) {
      if (!removed[w] && !seen[w]) {
        seen[w] = true;
        ++found;
        stack.push_back(w);
      }
    }
  }
  return found == live;
}

}  // namespace

bool is_connected(const Graph& g) {
  std::vector<bool> removed(g.num_vertices(), false);
  return connected_without(g, removed);
}

bool is_three_connected(const Graph& g) {
  const int n = g.num_vertices();
  if (n < 4) return false;
  std::vector<bool> removed(n, false);
  if (!connected_without(g, removed)) return false;
  for (int u = 0; u < n; ++u) {
    removed[u] = true;
    if (!connected_without(g, removed)) return false;
    for (int v = u + 1; v < n; ++v) {
      removed[v] = true;
      if (!connected_without(g, removed)) return false;
      removed[v] = false;
    }
    removed[u] = false;
  }
  return true;
}

std::pair<int, EliminationOrdering> degeneracy(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) throw std::invalid_argument("degeneracy: empty graph");
  std::vector<int> deg(n);
  std::vector<bool> gone(n, false);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
  EliminationOrdering ord;
  ord.order.reserve(n);
  int d = 0;
  for (int step = 0; step < n; ++step) {
    int best = -1;
    for (int v = 0; v < n; ++v)
      if (!gone[v] && (best < 0 || deg[v] < deg[best])) best = v;
    d = std::max(d, deg[best]);
    gone[best] = true;
    ord.order.push_back(best);
    for (int w : g.neighbours(best))
      if (!gone[w]) --deg[w];
  }
  ord.d = d;
  return {d, ord};
}

std::optional<EliminationOrdering> elimination_ordering_ending_in(
    const Graph& g, const std::vector<int>& s, int d) {
  const int n = g.num_vertices();
  std::vector<bool> in_s(n, false);
  for (int v : s) in_s[v] = true;
  std::vector<int> deg(n);
  std::vector<bool> gone(n, false);
  for (int v = 0; v < n; ++v) deg[v] = g.degree(v);

  EliminationOrdering ord;
  ord.d = d;
  ord.order.reserve(n);
  int remaining = n - static_cast<int>(s.size());
  // d-peeling is confluent, so greedy removal is complete: if it gets stuck
  // no ordering ending in s exists either.
  while (remaining > 0) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (!gone[v] && !in_s[v] && deg[v] <= d) {
        pick = v;
        break;
      }
    }
    if (pick < 0) return std::nullopt;
    gone[pick] = true;
    ord.order.push_back(pick);
    for (int w : g.neighbours(pick))
      if (!gone[w]) --deg[w];
    --remaining;
  }
  // Order the tail by min-degree peeling inside G[S]; the tail is valid iff
  // the degeneracy of G[S] is at most d.
  std::vector<int> tail = s;
  std::vector<bool> tail_gone(n, false);
  std::vector<int> tail_deg(n, 0);
  for (int v : s)
    for (int w : g.neighbours(v))
      if (in_s[w]) ++tail_deg[v];
  for (std::size_t step = 0; step < s.size(); ++step) {
    int best = -1;
    for (int v : s)
      if (!tail_gone[v] && (best < 0 || tail_deg[v] < tail_deg[best]))
        best = v;
    if (tail_deg[best] > d) return std::nullopt;
    tail_gone[best] = true;
    ord.order.push_back(best);
    for (int w : g.neighbours(best))
      if (in_s[w] && !tail_gone[w]) --tail_deg[w];
  }
  return ord;
}

bool is_valid_elimination_ordering(const Graph& g,
                                   const EliminationOrdering& ord) {
  const int n = g.num_vertices();
  if (static_cast<int>(ord.order.size()) != n) return false;
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = ord.order[i];
    if (v < 0 || v >= n || pos[v] >= 0) return false;
    pos[v] = i;
  }
  for (int v = 0; v < n; ++v) {
    int later = 0;
    for (int w : g.neighbours(v))
      if (pos[w] > pos[v]) ++later;
    if (later > ord.d) return false;
  }
  return true;
}

IdentifyResult identify(const Graph& g, int u, int v) {
  if (u == v) throw std::invalid_argument("identify: u == v");
  if (g.has_edge(u, v)) throw std::invalid_argument("identify: u adjacent to v");
  const int n = g.num_vertices();
  IdentifyResult res;
  res.index_map.assign(n, -1);
  res.merged = n - 2;
  int next = 0;
  for (int x = 0; x < n; ++x) {
    if (x == u || x == v)
      res.index_map[x] = res.merged;
    else
      res.index_map[x] = next++;
  }
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : g.edges()) {
    int na = res.index_map[a], nb = res.index_map[b];
    if (na > nb) std::swap(na, nb);
    edges.emplace_back(na, nb);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  res.graph = Graph(n - 1, edges);
  return res;
}

BlockDecomposition blocks(const Graph& g) {
  if (!is_connected(g)) throw std::invalid_argument("blocks: disconnected graph");
  const int n = g.num_vertices();
  BlockDecomposition out;
  if (n == 1) {
    out.blocks.push_back({0});
    out.end_block.push_back(true);
    return out;
  }

  // Iterative Hopcroft-Tarjan with an explicit edge stack.
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), child_idx(n, 0);
  std::vector<bool> is_cut(n, false);
  std::vector<std::pair<int, int>> edge_stack;
  int timer = 0;
  std::vector<int> stack{0};
  disc[0] = low[0] = timer++;
  int root_children = 0;

  auto pop_block = [&](std::pair<int, int> top_edge) {
    std::vector<int> verts;
    while (true) {
      auto e = edge_stack.back();
      edge_stack.pop_back();
      verts.push_back(e.first);
      verts.push_back(e.second);
      if (e == top_edge) break;
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    out.blocks.push_back(std::move(verts));
  };

  while (!stack.empty()) {
    int u = stack.back();
    if (child_idx[u] < g.degree(u)) {
      int w = g.neighbours(u)[child_idx[u]++];
      if (disc[w] < 0) {
        edge_stack.emplace_back(u, w);
        parent[w] = u;
        disc[w] = low[w] = timer++;
        if (u == 0) ++root_children;
        stack.push_back(w);
      } else if (w != parent[u] && disc[w] < disc[u]) {
        edge_stack.emplace_back(u, w);
        low[u] = std::min(low[u], disc[w]);
      }
    } else {
      stack.pop_back();
      int p = parent[u];
      if (p >= 0) {
        low[p] = std::min(low[p], low[u]);
        if (low[u] >= disc[p]) {
          if (p != 0) is_cut[p] = true;
          pop_block({p, u});
        }
      }
    }
  }
  if (root_children > 1) is_cut[0] = true;

  for (int v = 0; v < n; ++v)
    if (is_cut[v]) out.cut_vertices.push_back(v);
  for (const auto& b : out.blocks) {
    int cuts = 0;
    for (int v : b)
      if (is_cut[v]) ++cuts;
    out.end_block.push_back(cuts <= 1);
  }
  return out;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.num_vertices(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int w : g.neighbours(u)) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

std::vector<int> second_neighbourhood(const Graph& g, int v) {
  auto dist = bfs_distances(g, v);
  std::vector<int> out;
  for (int w = 0; w < g.num_vertices(); ++w)
    if (dist[w] == 2) out.push_back(w);
  return out;
}

std::vector<std::pair<int, int>> eligible_pairs(const Graph& g, int u) {
  std::vector<std::pair<int, int>> out;
  const auto& nbrs = g.neighbours(u);
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j)
      if (!g.has_edge(nbrs[i], nbrs[j])) out.emplace_back(nbrs[i], nbrs[j]);
  return out;
}

bool dominates(const Graph& g, const std::vector<int>& s1,
               const std::vector<int>& s2) {
  for (int v : s2) {
    int hits = 0;
    for (int u : s1)
      if (g.has_edge(u, v)) ++hits;
    if (hits < 1) return false;
  }
  return true;
}

bool weakly_dominates(const Graph& g, const std::vector<int>& s1,
                      const std::vector<int>& s2) {
  for (int v : s2) {
    int hits = 0;
    for (int u : s1)
      if (g.has_edge(u, v)) ++hits;
    if (hits != 1) return false;
  }
  return true;
}

int diameter(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) throw std::invalid_argument("diameter: empty graph");
  int diam = 0;
  for (int v = 0; v < n; ++v) {
    auto dist = bfs_distances(g, v);
    for (int w = 0; w < n; ++w) {
      if (dist[w] < 0) throw std::invalid_argument("diameter: disconnected graph");
      diam = std::max(diam, dist[w]);
    }
  }
  return diam;
}

}  // namespace kempe
