#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "pretop/space.hpp"

namespace pretop {

using Json = nlohmann::ordered_json;

// Space files: {"points": ["a", ...], "closure": {"a": ["a", ...], ...}}.
// Every closure list must contain the point itself; this is validated on
// load. Emission is canonical: closure lists follow point order, so
// emit(load(f)) is a fixed point.
ClosureSpace space_from_json(const Json& j);
Json space_to_json(const ClosureSpace& space);

ClosureSpace load_space(const std::string& path);
void save_space(const ClosureSpace& space, const std::string& path);

// Cover files: {"parts": [["a","b"], ...]}.
Cover cover_from_json(const Json& j, const ClosureSpace& space);
Json cover_to_json(const Cover& cover);
Cover load_cover(const std::string& path, const ClosureSpace& space);

// Map files: {"assignment": {"a": "x", ...}} (total on source points).
SpaceMap map_from_json(const Json& j, const ClosureSpace& source,
                       const ClosureSpace& target);
Json map_to_json(const SpaceMap& map);
SpaceMap load_map(const std::string& path, const ClosureSpace& source,
                  const ClosureSpace& target);

// Parses "a,b,c" as a point subset of `space`.
PointMask parse_point_list(const std::string& list, const ClosureSpace& space);
std::vector<std::string> mask_to_names(PointMask mask, const ClosureSpace& space);

} // namespace pretop
