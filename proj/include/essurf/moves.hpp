#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "essurf/triangulation.hpp"

namespace essurf {

/// A local surgery: some tetrahedra are removed and replaced by new ones
/// and/or direct identifications of exposed faces.
struct Replacement {
    enum class Kind { Internal, External };
    struct Slot {
        Kind kind = Kind::Internal;
        // Internal: gluing to another new tetrahedron.
        int other_new = -1;
        Perm4 perm;  // Internal: this-new-verts -> other-new-verts.
                     // External: this-new-verts -> old-tet-verts, with
                     // perm[face] = the claimed old face.
        int old_tet = -1, old_face = -1;
    };
    struct NewTet {
        std::array<Slot, 4> faces;
    };
    /// Squash identification of two exposed old faces: q maps tetA's
    /// vertices to tetB's with q[faceA] = faceB.
    struct Ident {
        int tetA, faceA, tetB, faceB;
        Perm4 q;
    };

    std::vector<int> removed;
    std::vector<NewTet> new_tets;
    std::vector<Ident> idents;
    /// Removed-tet slots whose outward partners simply become boundary.
    std::vector<std::pair<int, int>> make_boundary;
};

struct Rebuilt {
    bool ok = false;
    std::string reason;
    Triangulation tri;
    std::vector<int> tet_map;  // old -> new index, -1 for removed
    int new_base = 0;          // new tetrahedra occupy [new_base, ...)
    /// For every boundary face of the result that descends from an old
    /// boundary face: (new tet, face) -> (old tet, face).
    std::map<std::pair<int, int>, std::pair<int, int>> boundary_provenance;
};

Rebuilt rebuild(const Triangulation& t, const Replacement& r);

/// Elementary moves. Each returns the rebuilt triangulation or declines
/// (ok = false) when the configuration is not present or not safely legal.
Rebuilt pachner_23(const Triangulation& t, int tet, int face);
Rebuilt pachner_32(const Triangulation& t, int edge_class);
Rebuilt pachner_44(const Triangulation& t, int edge_class, int axis);  // axis in {0,1}
Rebuilt two_zero_edge(const Triangulation& t, int edge_class);
Rebuilt two_zero_vertex(const Triangulation& t, int vertex_class);
Rebuilt shell_boundary(const Triangulation& t, int tet);
Rebuilt one_four(const Triangulation& t, int tet);

}  // namespace essurf
