#pragma once

#include <map>
#include <optional>

#include "essurf/triangulation.hpp"

namespace essurf {

/// Labels on boundary faces, constant on each boundary component (e.g. which
/// original boundary piece a face descends from).
using FaceTagMap = std::map<std::pair<int, int>, int>;

/// Carries tags through a surgery: faces with provenance keep their tag,
/// the rest inherit the unique tag of their boundary component. Fails
/// (nullopt) if a component ends up with no tag or with conflicting tags.
std::optional<FaceTagMap> transfer_tags(const Triangulation& result, const std::map<std::pair<int, int>, std::pair<int, int>>& provenance, const FaceTagMap& old_tags);

/// The tag of every face of each boundary component, when consistent.
std::optional<std::map<int, int>> component_tags(const Triangulation& t, const FaceTagMap& tags);

}  // namespace essurf
