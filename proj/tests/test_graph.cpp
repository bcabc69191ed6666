#include <random>

#include "doctest.h"
#include "kempe/graph.hpp"
#include "kempe/lattices.hpp"
#include "oracles.hpp"

using namespace kempe;

namespace {

Graph path(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, edges);
}

Graph bowtie() {
  return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (std::uniform_real_distribution<>(0, 1)(rng) < p)
        edges.emplace_back(u, v);
  return Graph(n, edges);
}

}  // namespace

TEST_CASE("graph construction rejects bad input") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 5}}), std::invalid_argument);
  Graph g(0, {});
  CHECK(g.num_vertices() == 0);
}

TEST_CASE("is_k_regular") {
  CHECK(is_k_regular(complete_graph(5), 4));
  CHECK(is_k_regular(triangular_prism(), 3));
  CHECK_FALSE(is_k_regular(path(3), 2));
}

TEST_CASE("is_connected") {
  Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_FALSE(is_connected(two_triangles));
  CHECK(is_connected(triangular_prism()));
  CHECK(is_connected(Graph(1, {})));
  CHECK(is_connected(Graph(0, {})));
}

TEST_CASE("is_three_connected") {
  CHECK(is_three_connected(complete_graph(4)));
  CHECK(is_three_connected(triangular_prism()));
  CHECK_FALSE(is_three_connected(bowtie()));
  CHECK_FALSE(is_three_connected(cycle(5)));
  CHECK_FALSE(is_three_connected(complete_graph(3)));  // n < 4
}

TEST_CASE("degeneracy") {
  auto [d_path, ord_path] = degeneracy(path(5));
  CHECK(d_path == 1);
  CHECK(is_valid_elimination_ordering(path(5), ord_path));

  auto [d_c5, ord_c5] = degeneracy(cycle(5));
  CHECK(d_c5 == 2);
  CHECK(is_valid_elimination_ordering(cycle(5), ord_c5));

  auto [d_prism, ord_prism] = degeneracy(triangular_prism());
  CHECK(d_prism == 3);  // min degree of every induced subgraph peel step
  CHECK(is_valid_elimination_ordering(triangular_prism(), ord_prism));

  CHECK_THROWS_AS(degeneracy(Graph(0, {})), std::invalid_argument);
}

TEST_CASE("degeneracy bounds on random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = random_graph(2 + static_cast<int>(rng() % 7), 0.4, rng);
    if (g.num_vertices() == 0) continue;
    auto [d, ord] = degeneracy(g);
    CHECK(d <= g.max_degree());
    CHECK(is_valid_elimination_ordering(g, ord));
    CHECK(ord.d == d);
  }
  // Equality cases: complete graphs and odd cycles at their degree.
  CHECK(degeneracy(complete_graph(5)).first == 4);
  CHECK(degeneracy(cycle(7)).first == 2);
}

TEST_CASE("elimination_ordering_ending_in basic cases") {
  auto ord = elimination_ordering_ending_in(path(3), {2}, 1);
  REQUIRE(ord.has_value());
  CHECK(ord->order == std::vector<int>{0, 1, 2});

  CHECK_FALSE(elimination_ordering_ending_in(complete_graph(4), {}, 2)
                  .has_value());

  // Prism with S = one triangle: the first vertex of any ordering has all 3
  // neighbours later, so nothing below d = 3 can work. Confirmed by the
  // exhaustive ordering oracle.
  auto prism = triangular_prism();
  CHECK_FALSE(oracle::ordering_ending_in_exists(prism, {0, 1, 2}, 2));
  CHECK_FALSE(
      elimination_ordering_ending_in(prism, {0, 1, 2}, 2).has_value());
  auto ord3 = elimination_ordering_ending_in(prism, {0, 1, 2}, 3);
  REQUIRE(ord3.has_value());
  CHECK(is_valid_elimination_ordering(prism, *ord3));
  std::vector<int> tail(ord3->order.begin() + 3, ord3->order.end());
  std::sort(tail.begin(), tail.end());
  CHECK(tail == std::vector<int>{0, 1, 2});
}

TEST_CASE("elimination_ordering_ending_in matches exhaustive search") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 3 + static_cast<int>(rng() % 4);  // up to 6 for permutation search
    auto g = random_graph(n, 0.5, rng);
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if (rng() % 3 == 0) s.push_back(v);
    for (int d = 0; d <= 3; ++d) {
      bool exists = oracle::ordering_ending_in_exists(g, s, d);
      auto got = elimination_ordering_ending_in(g, s, d);
      CHECK(got.has_value() == exists);
      if (got.has_value()) {
        CHECK(is_valid_elimination_ordering(g, *got));
        std::vector<int> tail(got->order.end() - s.size(), got->order.end());
        std::sort(tail.begin(), tail.end());
        auto sorted_s = s;
        std::sort(sorted_s.begin(), sorted_s.end());
        CHECK(tail == sorted_s);
      }
    }
  }
}

TEST_CASE("identify") {
  // C_4 with antipodal vertices merged collapses to P_3.
  Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  auto res = identify(c4, 0, 2);
  CHECK(res.graph.num_vertices() == 3);
  CHECK(res.graph.num_edges() == 2);
  CHECK(res.graph.degree(res.merged) == 2);
  CHECK(res.index_map[0] == res.merged);
  CHECK(res.index_map[2] == res.merged);

  // Star with two leaves merged is P_3.
  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  auto star_res = identify(star, 1, 2);
  CHECK(star_res.graph.num_vertices() == 3);
  CHECK(star_res.graph.num_edges() == 2);

  // Prism: non-adjacent pair with a common neighbour stays 2-degenerate
  // after identification (k = 3 case of the (k-1)-degeneracy lemma).
  auto prism = triangular_prism();
  auto prism_res = identify(prism, 1, 3);  // common neighbour 0
  CHECK(prism_res.graph.num_vertices() == 5);
  CHECK(degeneracy(prism_res.graph).first <= 2);

  CHECK_THROWS_AS(identify(c4, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(identify(c4, 0, 0), std::invalid_argument);
}

TEST_CASE("identify merged degree bound on random graphs") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    auto g = random_graph(4 + static_cast<int>(rng() % 5), 0.4, rng);
    int n = g.num_vertices();
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (g.has_edge(u, v)) continue;
        auto res = identify(g, u, v);
        CHECK(res.graph.degree(res.merged) <= g.degree(u) + g.degree(v));
      }
    }
  }
}

TEST_CASE("identified-graph degeneracy lemma on sampled regular graphs") {
  // 3-connected max-degree-k graphs, k in {3,4}: G_{u+v} is (k-1)-degenerate
  // for every non-adjacent pair with a common neighbour.
  std::mt19937_64 rng(17);
  for (int k : {3, 4}) {
    for (int trial = 0; trial < 12; ++trial) {
      int n = 5 + static_cast<int>(rng() % 5);  // up to 9
      if ((n * k) % 2 != 0 || k >= n) continue;
      Graph g;
      try {
        g = random_k_regular_connected(n, k, rng());
      } catch (const std::runtime_error&) {
        continue;
      }
      if (!is_three_connected(g)) continue;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (g.has_edge(u, v)) continue;
          bool common = false;
          for (int w : g.neighbours(u))
            if (g.has_edge(w, v)) { common = true; break; }
          if (!common) continue;
          CHECK(degeneracy(identify(g, u, v).graph).first <= k - 1);
        }
      }
    }
  }
}

TEST_CASE("blocks") {
  auto b = blocks(bowtie());
  CHECK(b.blocks.size() == 2);
  CHECK(b.cut_vertices == std::vector<int>{2});
  CHECK(b.end_block == std::vector<bool>{true, true});

  auto prism_blocks = blocks(triangular_prism());
  CHECK(prism_blocks.blocks.size() == 1);
  CHECK(prism_blocks.cut_vertices.empty());

  auto p4 = blocks(path(4));
  CHECK(p4.blocks.size() == 3);
  CHECK(p4.cut_vertices.size() == 2);
  int end_count = 0, mid_count = 0;
  for (bool e : p4.end_block) (e ? end_count : mid_count)++;
  CHECK(end_count == 2);
  CHECK(mid_count == 1);

  Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_THROWS_AS(blocks(two_triangles), std::invalid_argument);
}

TEST_CASE("blocks structural invariants on random connected graphs") {
  std::mt19937_64 rng(19);
  int done = 0;
  while (done < 30) {
    auto g = random_graph(2 + static_cast<int>(rng() % 7), 0.45, rng);
    if (!is_connected(g) || g.num_vertices() < 2) continue;
    ++done;
    auto b = blocks(g);
    // Every edge in exactly one block; block union covers V.
    std::vector<bool> covered(g.num_vertices(), false);
    for (auto [u, v] : g.edges()) {
      int owners = 0;
      for (const auto& blk : b.blocks) {
        bool has_u = std::binary_search(blk.begin(), blk.end(), u);
        bool has_v = std::binary_search(blk.begin(), blk.end(), v);
        if (has_u && has_v) ++owners;
      }
      CHECK(owners == 1);
    }
    for (const auto& blk : b.blocks)
      for (int v : blk) covered[v] = true;
    for (int v = 0; v < g.num_vertices(); ++v) CHECK(covered[v]);
    // Pairwise block intersections are single cut vertices.
    for (std::size_t i = 0; i < b.blocks.size(); ++i) {
      for (std::size_t j = i + 1; j < b.blocks.size(); ++j) {
        std::vector<int> inter;
        std::set_intersection(b.blocks[i].begin(), b.blocks[i].end(),
                              b.blocks[j].begin(), b.blocks[j].end(),
                              std::back_inserter(inter));
        CHECK(inter.size() <= 1);
        if (inter.size() == 1)
          CHECK(std::binary_search(b.cut_vertices.begin(),
                                   b.cut_vertices.end(), inter[0]));
      }
    }
  }
}

TEST_CASE("second_neighbourhood") {
  CHECK(second_neighbourhood(complete_graph(4), 0).empty());
  CHECK(second_neighbourhood(cycle(5), 0) == std::vector<int>{2, 3});
  // Prism vertex 0: the opposite triangle minus its matched partner 3.
  CHECK(second_neighbourhood(triangular_prism(), 0) == std::vector<int>{4, 5});
}

TEST_CASE("eligible_pairs") {
  CHECK(eligible_pairs(complete_graph(4), 0).empty());
  auto prism_pairs = eligible_pairs(triangular_prism(), 0);
  CHECK(prism_pairs == std::vector<std::pair<int, int>>{{1, 3}, {2, 3}});
  CHECK(eligible_pairs(cycle(5), 0).size() == 1);
}

TEST_CASE("domination") {
  Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(weakly_dominates(c4, {0}, {}));  // vacuous
  Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(weakly_dominates(star, {0}, {1, 2, 3}));
  CHECK_FALSE(weakly_dominates(c4, {0, 2}, {1, 3}));  // two neighbours each
  CHECK(dominates(c4, {0, 2}, {1, 3}));
}

TEST_CASE("diameter") {
  CHECK(diameter(complete_graph(5)) == 1);
  CHECK(diameter(cycle(6)) == 3);
  CHECK(diameter(triangular_prism()) == 2);
  CHECK(diameter(Graph(1, {})) == 0);
  Graph two(2, {});
  CHECK_THROWS_AS(diameter(two), std::invalid_argument);
}

TEST_CASE("diameter and second neighbourhood match Floyd-Warshall") {
  std::mt19937_64 rng(23);
  int done = 0;
  while (done < 25) {
    auto g = random_graph(2 + static_cast<int>(rng() % 7), 0.5, rng);
    if (!is_connected(g) || g.num_vertices() == 0) continue;
    ++done;
    auto d = oracle::all_pairs_distances(g);
    int expected = 0;
    for (const auto& row : d)
      for (int x : row) expected = std::max(expected, x);
    CHECK(diameter(g) == expected);
    for (int v = 0; v < g.num_vertices(); ++v) {
      std::vector<int> snd;
      for (int w = 0; w < g.num_vertices(); ++w)
        if (d[v][w] == 2) snd.push_back(w);
      CHECK(second_neighbourhood(g, v) == snd);
    }
  }
}
