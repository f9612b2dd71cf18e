#pragma once

#include <nlohmann/json.hpp>

#include "clarcube/clar.hpp"
#include "clarcube/cube.hpp"
#include "clarcube/hexsys.hpp"
#include "clarcube/matching.hpp"
#include "clarcube/poly.hpp"
#include "clarcube/resonance.hpp"

namespace clarcube {

// Big integers travel as decimal strings.

/// {"coeffs": ["20", "32", ...]}, index = degree.
nlohmann::json poly_to_json(const IntPolynomial& p);
/// {"shifted": ["1", "8", ...]}.
nlohmann::json shifted_to_json(const ShiftedCoefficients& s);
/// Accepts {"coeffs": [...]} with string or integer entries. Throws ParseError.
IntPolynomial poly_from_json(const nlohmann::json& j);

/// Sorted edge list [[[u, v], [u2, v2]], ...].
nlohmann::json edges_to_json(const HexagonalSystem& system, const EdgeSet& edges);

/// {"hexagons": [[q, r], ...], "edges": [[[u, v], [u2, v2]], ...]}.
nlohmann::json cover_to_json(const HexagonalSystem& system, const ClarCover& cover);
/// Inverse of cover_to_json; throws ParseError on unknown cells or edges.
ClarCover cover_from_json(const HexagonalSystem& system, const nlohmann::json& j);

/// {"n": int, "edges": [[i, j], ...]}.
nlohmann::json graph_to_json(const SimpleGraph& g);
/// Reads {"n": ..} or a resonance export {"vertices": ..}; extra entries
/// after the two endpoints of an edge are ignored. Throws ParseError.
SimpleGraph graph_from_json(const nlohmann::json& j);

/// {"vertices": n, "edges": [[i, j, "q r"], ...]}.
nlohmann::json resonance_to_json(const HexagonalSystem& system, const ResonanceGraph& graph);

}  // namespace clarcube
