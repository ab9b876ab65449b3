#pragma once

#include <optional>
#include <string>

#include "wftq/config.hpp"

namespace wftq {

/// A quadrilateral scene as ingested from JSON: exactly one of the angular or
/// vertex descriptions, plus optional solver overrides.
///
/// Schema (angles in degrees at this boundary, radians internally):
/// {
///   "curvature": <number>,
///   "angular": { "directions_deg": [4], "lengths": [4], "weights": [4] },
///   OR "vertices": { "points": [[..] x4], "weights": [4] },
///   "solver": { "tol": <number>, "max_iter": <integer> }   (optional)
/// }
/// Vertex coordinate arrays are [x, y] in the flat model and 3-vectors on
/// the sphere / hyperboloid. The angular basepoint is the model origin.
struct QuadScene {
    Curvature k;
    std::optional<AngularConfig> angular;
    std::optional<VertexConfig> vertices;
    double tol = 1e-10;
    int max_iter = 10000;

    /// Vertex view of the scene (realizing the angular form when needed).
    VertexConfig as_vertices() const;
    /// Angular view (extracting at the model origin needs the basepoint to
    /// be distinct from every vertex; angular scenes return as stored).
    AngularConfig as_angular() const;
    /// Sum of the scene's weights: the default inverse budget.
    double weight_sum() const;
};

/// Parses a scene; throws InvalidScene with a field/position diagnostic.
QuadScene load_scene(const std::string& path);
QuadScene parse_scene(const std::string& json_text);

/// Scene back to its schema (angular scenes keep their form).
std::string scene_to_json(const QuadScene& scene);

/// FNV-1a hash of the raw scene file bytes, as 16 hex digits.
std::string digest_hex(const std::string& bytes);

}  // namespace wftq
