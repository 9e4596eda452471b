#pragma once

#include <string>
#include <string_view>

#include "coboundary/crystal.hpp"

namespace coboundary {

/// {"datum": "GL3", "coords": "epsilon", "vertices": [{"id": 0, "wt": [1,0,0], "label": "1"}],
///  "edges": [{"from": 0, "to": 1, "i": 1}]}
/// Edges are the f_i arrows; e_i is derived. Ids are arbitrary distinct
/// integers, renumbered in order of appearance. An optional "factors" array
/// records the factor sizes of a tensor product.
CrystalGraph crystal_from_json(std::string_view text);
std::string crystal_to_json(const CrystalGraph& b);

CrystalGraph read_crystal_file(const std::string& path);

/// One node per vertex, one edge per f_i arrow labeled "i".
std::string crystal_to_dot(const CrystalGraph& b);

/// parse -> serialize -> parse gives the same graph under canonical ordering.
bool round_trip(std::string_view text);

/// {"source_size": n, "target_size": m, "image": [...]} plus label pairs when both sides carry labels.
std::string vertex_map_to_json(const CrystalGraph& source, const CrystalGraph& target, const VertexMap& map);

}  // namespace coboundary
