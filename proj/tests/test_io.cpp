#include <sstream>

#include "doctest.h"
#include "kempe/io.hpp"
#include "kempe/lattices.hpp"

using namespace kempe;

TEST_CASE("colouring JSON round trip") {
  Colouring c{3, {1, 3, 2, 2, 1, 3}};
  auto j = colouring_to_json(c);
  CHECK(j["k"] == 3);
  CHECK(colouring_from_json(j) == c);
  CHECK(colouring_from_json(nlohmann::json::parse(j.dump())) == c);

  CHECK_THROWS(colouring_from_json(nlohmann::json::parse(R"({"k": 2})")));
  CHECK_THROWS(colouring_from_json(
      nlohmann::json::parse(R"({"k": 2, "colours": ["x"]})")));
}

TEST_CASE("witness JSON replays and validates") {
  auto prism = triangular_prism();
  Colouring left4{4, {1, 3, 2, 2, 1, 3}};
  Colouring right4{4, {3, 2, 1, 2, 1, 3}};
  auto result = are_kempe_equivalent(prism, 4, left4, right4);
  REQUIRE(result.equivalent);
  REQUIRE_FALSE(result.path.empty());

  auto j = witness_to_json(result.path);
  auto replayed = witness_from_json(prism, left4, j);
  REQUIRE(replayed.size() == result.path.size());
  CHECK(replayed.back().colouring == right4);
  for (std::size_t i = 0; i < replayed.size(); ++i)
    CHECK(replayed[i].colouring == result.path[i].colouring);

  // Tampering with a step's vertex set breaks the maximality check.
  auto bad = j;
  bad[0]["vertices"] = std::vector<int>{0, 1, 2, 3, 4, 5};
  CHECK_THROWS(witness_from_json(prism, left4, bad));

  // A wrong start colouring is caught on the first step.
  CHECK_THROWS(witness_from_json(prism, Colouring{4, {4, 3, 2, 2, 1, 3}}, j));

  // An empty witness is the identity path.
  CHECK(witness_from_json(prism, left4, nlohmann::json::array()).empty());
}

TEST_CASE("edge list parsing") {
  std::istringstream good("3 2\n0 1\n1 2\n");
  auto g = Graph::read_edge_list(good);
  CHECK(g.num_vertices() == 3);
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});

  std::ostringstream out;
  g.write_edge_list(out);
  std::istringstream back(out.str());
  CHECK(Graph::read_edge_list(back).edges() == g.edges());

  auto reject = [](const std::string& text) {
    std::istringstream in(text);
    CHECK_THROWS_AS(Graph::read_edge_list(in), std::invalid_argument);
  };
  reject("2 1\n0 0\n");      // loop
  reject("3 2\n0 1\n0 1\n"); // duplicate
  reject("3 1\n1 0\n");      // u >= v
  reject("2 1\n0 5\n");      // out of range
  reject("3 2\n0 1\n");      // truncated
}

TEST_CASE("DOT output") {
  auto dot = cycle(3).to_dot();
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("0 -- 1") != std::string::npos);
  CHECK(dot.find("1 -- 2") != std::string::npos);
  CHECK(dot.find("0 -- 2") != std::string::npos);
}
