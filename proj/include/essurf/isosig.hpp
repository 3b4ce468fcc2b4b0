#pragma once

#include <string>

#include "essurf/triangulation.hpp"

namespace essurf {

/// Decodes a census isomorphism signature (the de facto base-64 text
/// encoding used by 3-manifold census software) into a triangulation.
/// Throws Error on malformed input.
Triangulation decode_iso_sig(const std::string& sig);

/// Canonical token: equal exactly for combinatorially isomorphic
/// triangulations (lexicographically smallest destination sequence over all
/// starting tetrahedra and relabellings).
std::string canonical_hash(const Triangulation& t);

}  // namespace essurf
