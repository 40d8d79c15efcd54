#pragma once

#include "json.hpp"

#include "topoplan/homology.hpp"

namespace topoplan {

// {"vertices": [[x, y], ...], "edges": [[tail, head, weight], ...],
//  "triangles": [[a, b, c], ...]}
nlohmann::json surface_to_json(const SimplicialSurface& surface);
SimplicialSurface surface_from_json(const nlohmann::json& j);

// {"edge_count": E, "dimension": D, "null_tolerance": t,
//  "values": column-major flat array of E*D reals}
nlohmann::json basis_to_json(const HarmonicBasis& basis);
HarmonicBasis basis_from_json(const nlohmann::json& j);

}  // namespace topoplan
