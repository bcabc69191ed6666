#include "kempe/colouring.hpp"

#include <algorithm>
#include <stdexcept>

namespace kempe {

std::vector<int> PartialColouring::assigned_vertices() const {
  std::vector<int> out;
  for (std::size_t v = 0; v < colours.size(); ++v)
    if (colours[v] != 0) out.push_back(static_cast<int>(v));
  return out;
}

bool is_proper(const Graph& g, const Colouring& c) {
  if (static_cast<int>(c.colours.size()) != g.num_vertices())
    throw std::invalid_argument("is_proper: colouring size mismatch");
  for (int col : c.colours)
    if (col < 1 || col > c.k)
      throw std::invalid_argument("is_proper: colour out of range");
  for (auto [u, v] : g.edges())
    if (c.colours[u] == c.colours[v]) return false;
  return true;
}

bool is_proper_partial(const Graph& g, const PartialColouring& c) {
  if (static_cast<int>(c.colours.size()) != g.num_vertices())
    throw std::invalid_argument("is_proper_partial: size mismatch");
  for (int col : c.colours)
    if (col < 0 || col > c.k)
      throw std::invalid_argument("is_proper_partial: colour out of range");
  for (auto [u, v] : g.edges())
    if (c.colours[u] != 0 && c.colours[u] == c.colours[v]) return false;
  return true;
}

void for_each_colouring(const Graph& g, int k,
                        const std::function<bool(const Colouring&)>& visit) {
  if (k < 1) throw std::invalid_argument("for_each_colouring: k < 1");
  const int n = g.num_vertices();
  Colouring c{k, std::vector<int>(n, 0)};
  bool stopped = false;
  auto rec = [&](auto&& self, int v) -> void {
    if (stopped) return;
    if (v == n) {
      if (!visit(c)) stopped = true;
      return;
    }
    for (int col = 1; col <= k && !stopped; ++col) {
      bool ok = true;
      for (int w : g.neighbours(v)) {
        if (w < v && c.colours[w] == col) {
          ok = false;
          break;
        }
      }
      if (ok) {
        c.colours[v] = col;
        self(self, v + 1);
      }
    }
    c.colours[v] = 0;
  };
  rec(rec, 0);
}

std::vector<Colouring> enumerate_colourings(const Graph& g, int k) {
  std::vector<Colouring> out;
  for_each_colouring(g, k, [&](const Colouring& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

std::size_t count_colourings(const Graph& g, int k) {
  std::size_t count = 0;
  for_each_colouring(g, k, [&](const Colouring&) {
    ++count;
    return true;
  });
  return count;
}

Colouring extend_colouring(const Graph& g, const PartialColouring& partial,
                           const EliminationOrdering& ordering) {
  const int n = g.num_vertices();
  const int k = partial.k;
  if (ordering.d + 1 > k)
    throw std::invalid_argument("extend_colouring: need d + 1 <= k");
  if (!is_valid_elimination_ordering(g, ordering))
    throw std::invalid_argument("extend_colouring: invalid elimination ordering");
  if (!is_proper_partial(g, partial))
    throw std::invalid_argument("extend_colouring: partial not proper");
  auto s = partial.assigned_vertices();
  // The ordering must end in exactly the assigned set.
  std::vector<int> tail(ordering.order.end() - s.size(), ordering.order.end());
  std::sort(tail.begin(), tail.end());
  if (tail != s)
    throw std::invalid_argument("extend_colouring: ordering does not end in S");

  Colouring c{k, partial.colours};
  for (int i = n - 1; i >= 0; --i) {
    int v = ordering.order[i];
    if (c.colours[v] != 0) continue;
    std::vector<bool> used(k + 1, false);
    for (int w : g.neighbours(v))
      if (c.colours[w] != 0) used[c.colours[w]] = true;
    int col = 1;
    while (col <= k && used[col]) ++col;
    if (col > k)
      throw std::logic_error("extend_colouring: no free colour");  // unreachable for valid input
    c.colours[v] = col;
  }
  return c;
}

Colouring extend_with_anchor(const Graph& g, const std::vector<int>& s,
                             const PartialColouring& partial, int x, int k) {
  const int n = g.num_vertices();
  if (static_cast<int>(s.size()) > k)
    throw std::invalid_argument("extend_with_anchor: |S| > k");
  std::vector<bool> in_s(n, false);
  for (int v : s) in_s[v] = true;
  if (x < 0 || x >= n || in_s[x])
    throw std::invalid_argument("extend_with_anchor: x not in V \\ S");
  if (g.degree(x) > k - 1)
    throw std::invalid_argument("extend_with_anchor: deg(x) > k - 1");
  for (int v = 0; v < n; ++v)
    if (!in_s[v] && g.degree(v) > k)
      throw std::invalid_argument("extend_with_anchor: vertex outside S with degree > k");
  if (!is_proper_partial(g, partial) || partial.k != k)
    throw std::invalid_argument("extend_with_anchor: partial not proper on S");
  for (int v = 0; v < n; ++v)
    if ((partial.colours[v] != 0) != in_s[v])
      throw std::invalid_argument("extend_with_anchor: partial domain is not S");

  // BFS over G[V \ S] from x.
  std::vector<int> order;
  std::vector<bool> seen(n, false);
  seen[x] = true;
  order.push_back(x);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int w : g.neighbours(order[head])) {
      if (!in_s[w] && !seen[w]) {
        seen[w] = true;
        order.push_back(w);
      }
    }
  }
  if (order.size() + s.size() != static_cast<std::size_t>(n))
    throw std::invalid_argument("extend_with_anchor: G[V \\ S] not connected");

  Colouring c{k, partial.colours};
  for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
    int v = order[i];
    std::vector<bool> used(k + 1, false);
    for (int w : g.neighbours(v))
      if (c.colours[w] != 0) used[c.colours[w]] = true;
    int col = 1;
    while (col <= k && used[col]) ++col;
    if (col > k) throw std::logic_error("extend_with_anchor: no free colour");
    c.colours[v] = col;
  }
  return c;
}

std::optional<Colouring> list_colour(const Graph& g, const ListAssignment& l) {
  const int n = g.num_vertices();
  if (static_cast<int>(l.lists.size()) != n)
    throw std::invalid_argument("list_colour: list count mismatch");
  int max_colour = 1;
  for (const auto& lst : l.lists)
    for (int c : lst) max_colour = std::max(max_colour, c);

  std::vector<std::vector<int>> live = l.lists;
  std::vector<int> chosen(n, 0);

  auto rec = [&](auto&& self, int remaining) -> bool {
    if (remaining == 0) return true;
    // Most-constrained uncoloured vertex first.
    int v = -1;
    for (int u = 0; u < n; ++u) {
      if (chosen[u] == 0 && (v < 0 || live[u].size() < live[v].size())) v = u;
    }
    for (int col : live[v]) {
      bool ok = true;
      for (int w : g.neighbours(v)) {
        if (chosen[w] == col) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      chosen[v] = col;
      if (self(self, remaining - 1)) return true;
      chosen[v] = 0;
    }
    return false;
  };
  if (!rec(rec, n)) return std::nullopt;
  return Colouring{max_colour, chosen};
}

namespace {

bool block_is_clique(const Graph& g, const std::vector<int>& block) {
  for (std::size_t i = 0; i < block.size(); ++i)
    for (std::size_t j = i + 1; j < block.size(); ++j)
      if (!g.has_edge(block[i], block[j])) return false;
  return true;
}

bool block_is_odd_cycle(const Graph& g, const std::vector<int>& block) {
  if (block.size() < 3 || block.size() % 2 == 0) return false;
  for (int v : block) {
    int deg_in_block = 0;
    for (int w : g.neighbours(v))
      if (std::binary_search(block.begin(), block.end(), w)) ++deg_in_block;
    if (deg_in_block != 2) return false;
  }
  return true;  // 2-connected and 2-regular inside the block is a cycle
}

}  // namespace

bool is_degree_choosable(const Graph& g) {
  if (!is_connected(g))
    throw std::invalid_argument("is_degree_choosable: disconnected graph");
  auto decomp = blocks(g);
  for (const auto& b : decomp.blocks)
    if (!block_is_clique(g, b) && !block_is_odd_cycle(g, b)) return true;
  return false;
}

std::optional<Colouring> find_k_colouring(const Graph& g, int k) {
  std::optional<Colouring> out;
  for_each_colouring(g, k, [&](const Colouring& c) {
    out = c;
    return false;
  });
  return out;
}

}  // namespace kempe
