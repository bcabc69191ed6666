#include "kempe/io.hpp"

#include <stdexcept>

namespace kempe {

nlohmann::json colouring_to_json(const Colouring& c) {
  return nlohmann::json{{"k", c.k}, {"colours", c.colours}};
}

Colouring colouring_from_json(const nlohmann::json& j) {
  Colouring c;
  c.k = j.at("k").get<int>();
  c.colours = j.at("colours").get<std::vector<int>>();
  return c;
}

nlohmann::json witness_to_json(const WitnessPath& path) {
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& step : path) {
    steps.push_back({{"pair", {step.chain.colour_a, step.chain.colour_b}},
                     {"vertices", step.chain.vertices}});
  }
  return steps;
}

WitnessPath witness_from_json(const Graph& g, const Colouring& start,
                              const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("witness: expected array");
  WitnessPath path;
  Colouring current = start;
  for (const auto& step : j) {
    KempeChain chain;
    auto pair = step.at("pair");
    chain.colour_a = pair.at(0).get<int>();
    chain.colour_b = pair.at(1).get<int>();
    chain.vertices = step.at("vertices").get<std::vector<int>>();
    current = apply_kempe_change(g, current, chain);  // throws if invalid
    path.push_back(WitnessStep{chain, current});
  }
  return path;
}

}  // namespace kempe
