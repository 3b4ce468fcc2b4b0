#pragma once

#include <cstdint>

#include "essurf/tags.hpp"
#include "essurf/triangulation.hpp"

namespace essurf {

enum class SimplifyGoal { MinimizeTets, MinimalVertices };

struct SimplifyResult {
    Triangulation tri;
    bool goal_met = false;
    FaceTagMap tags;  // transferred boundary tags when any were supplied
};

/// Greedy descent over 2-3 / 3-2 / 4-4 / 2-0 / shell moves with a bounded
/// random-restart budget. Never returns more tetrahedra than it was given.
/// MinimalVertices additionally drives the vertex count down (no internal
/// vertices, one vertex per boundary component; one vertex total when
/// closed); goal_met reports whether that was reached.
SimplifyResult simplify(const Triangulation& t, SimplifyGoal goal = SimplifyGoal::MinimizeTets, uint64_t seed = 0, int restarts = 16, const FaceTagMap* tags = nullptr);

}  // namespace essurf
