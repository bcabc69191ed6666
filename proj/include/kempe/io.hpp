#ifndef KEMPE_IO_HPP
#define KEMPE_IO_HPP

#include <string>

#include "json.hpp"
#include "kempe/colouring.hpp"
#include "kempe/kempe.hpp"

namespace kempe {

// Colouring JSON: {"k": int, "colours": [int,...]}; a partial colouring
// uses 0 for unassigned entries in serialized form only.
nlohmann::json colouring_to_json(const Colouring& c);
Colouring colouring_from_json(const nlohmann::json& j);

// Witness path JSON: list of {"pair": [a,b], "vertices": [...]} steps.
nlohmann::json witness_to_json(const WitnessPath& path);

// Parses a witness and replays it from `start`, validating every step
// through apply_kempe_change. Returns the replayed path (with the
// intermediate colourings filled in). Throws on any invalid step.
WitnessPath witness_from_json(const Graph& g, const Colouring& start,
                              const nlohmann::json& j);

}  // namespace kempe

#endif  // KEMPE_IO_HPP
