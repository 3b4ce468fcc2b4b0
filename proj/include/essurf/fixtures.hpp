#pragma once

#include <map>
#include <string>

#include "essurf/triangulation.hpp"

namespace essurf {
namespace fixtures {

/// Bundled gluing tables, keyed by name (single, s3_double, fig8, t3_cube,
/// gieseking, solid_torus, rp3, l31, l41, l52, ...).
const std::map<std::string, std::string>& tables();

Triangulation by_name(const std::string& name);

/// Isomorphism signature of the 18-tetrahedron circle-bundle example used as
/// the main enumeration fixture.
extern const char* kCircleBundleSig;

/// The standard 2-tetrahedron figure-eight complement signature.
extern const char* kFig8Sig;

}  // namespace fixtures
}  // namespace essurf
