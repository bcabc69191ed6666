#include "kempe/lattices.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace kempe {

namespace {

void check_dims(int m, int n) {
  if (m < 3 || n < 3)
    throw std::invalid_argument("lattice: dimensions must be >= 3");
}

std::pair<int, int> ordered(int u, int v) {
  return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
}

}  // namespace

Graph toroidal_grid(int m, int n) {
  check_dims(m, n);
  std::vector<std::pair<int, int>> edges;
  auto id = [n](int i, int j) { return i * n + j; };
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      edges.push_back(ordered(id(i, j), id(i, (j + 1) % n)));
      edges.push_back(ordered(id(i, j), id((i + 1) % m, j)));
    }
  }
  return Graph(m * n, edges);
}

Graph triangular_lattice(int m, int n) {
  check_dims(m, n);
  auto id = [n](int i, int j) { return i * n + j; };
  auto edges = toroidal_grid(m, n).edges();
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j)
      edges.push_back(ordered(id(i, j), id((i + 1) % m, (j + 1) % n)));
  Graph g(m * n, edges);  // simplicity enforced by the constructor
  if (!is_k_regular(g, 6))
    throw std::logic_error("triangular_lattice: not 6-regular");
  return g;
}

Graph kagome_lattice(int m, int n) {
  check_dims(m, n);
  const int grid = m * n;
  auto corner = [n](int i, int j) { return i * n + j; };
  auto hmid = [n, grid](int i, int j) { return grid + i * n + j; };
  auto vmid = [n, grid](int i, int j) { return 2 * grid + i * n + j; };

  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < n; ++j) {
      // Subdivision edges.
      edges.push_back(ordered(corner(i, j), hmid(i, j)));
      edges.push_back(ordered(corner(i, (j + 1) % n), hmid(i, j)));
      edges.push_back(ordered(corner(i, j), vmid(i, j)));
      edges.push_back(ordered(corner((i + 1) % m, j), vmid(i, j)));
      // Face (i,j): north-east and south-west chords.
      edges.push_back(ordered(hmid(i, j), vmid(i, (j + 1) % n)));
      edges.push_back(ordered(hmid((i + 1) % m, j), vmid(i, j)));
    }
  }
  Graph g(3 * grid, edges);
  if (!is_k_regular(g, 4))
    throw std::logic_error("kagome_lattice: not 4-regular");
  return g;
}

Graph triangular_prism() {
  return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5},
                   {0, 3}, {1, 4}, {2, 5}});
}

Graph complete_graph(int n) {
  if (n < 1) throw std::invalid_argument("complete_graph: n < 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n < 3");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.push_back(ordered(v, (v + 1) % n));
  return Graph(n, edges);
}

namespace {

struct RegularEnumerator {
  int n, k;
  const std::function<bool(const Graph&)>& visit;
  std::vector<std::vector<int>> adj;  // chosen neighbours so far
  std::vector<int> deg;
  bool stopped = false;

  void emit() {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
      for (int v : adj[u])
        if (u < v) edges.emplace_back(u, v);
    Graph g(n, edges);
    if (is_connected(g) && !visit(g)) stopped = true;
  }

  // Complete the neighbourhood of vertex `row` by choosing `need` more
  // neighbours among indices >= from.
  void fill_row(int row, int from, int need) {
    if (stopped) return;
    if (need == 0) {
      if (row + 1 == n)
        emit();
      else
        fill_row(row + 1, row + 2, k - deg[row + 1]);
      return;
    }
    // Not enough candidate vertices left to finish this row.
    for (int v = from; v <= n - need; ++v) {
      if (deg[v] >= k) continue;
      adj[row].push_back(v);
      adj[v].push_back(row);
      ++deg[row];
      ++deg[v];
      fill_row(row, v + 1, need - 1);
      --deg[row];
      --deg[v];
      adj[row].pop_back();
      adj[v].pop_back();
      if (stopped) return;
    }
  }

  void run() {
    adj.assign(n, {});
    deg.assign(n, 0);
    fill_row(0, 1, k);
  }
};

}  // namespace

void for_each_k_regular_connected(
    int n, int k, const std::function<bool(const Graph&)>& visit) {
  if (k < 0 || k >= n) throw std::invalid_argument("k-regular: need 0 <= k < n");
  if ((static_cast<long long>(n) * k) % 2 != 0)
    throw std::invalid_argument("k-regular: n*k must be even");
  RegularEnumerator e{n, k, visit};
  e.run();
}

Graph random_k_regular_connected(int n, int k, std::uint64_t seed,
                                 int max_attempts) {
  if (k < 0 || k >= n) throw std::invalid_argument("k-regular: need 0 <= k < n");
  if ((static_cast<long long>(n) * k) % 2 != 0)
    throw std::invalid_argument("k-regular: n*k must be even");
  std::mt19937_64 rng(seed);
  std::vector<int> stubs(n * k);
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < k; ++i) stubs[v * k + i] = v;

  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<std::pair<int, int>> edges;
    bool ok = true;
    for (std::size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
      int u = stubs[i], v = stubs[i + 1];
      if (u == v) ok = false;
      else edges.push_back(u < v ? std::make_pair(u, v) : std::make_pair(v, u));
    }
    if (!ok) continue;
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
    Graph g(n, edges);
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("random_k_regular_connected: rejection budget exhausted");
}

}  // namespace kempe
