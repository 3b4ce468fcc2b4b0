#pragma once

#include <array>
#include <optional>
#include <vector>

namespace essurf {

/// A triangulated closed or bounded surface, abstracted away from whatever it
/// is the link or boundary of. Triangle corners are 0,1,2; side k is the edge
/// opposite corner k, with ordered endpoints (k+1 mod 3, k+2 mod 3).
class SurfaceComplex {
public:
    struct SideRef {
        int tri = -1;
        int side = -1;
        /// When glued, whether the ordered endpoints of the two sides are
        /// matched in reverse.
        bool swap = false;
        bool glued() const { return tri >= 0; }
    };

    /// One crossing of a dual path: leaves `from_tri` through its side
    /// `from_side`, enters `to_tri` through `to_side`.
    struct Crossing {
        int from_tri, from_side;
        int to_tri, to_side;
    };

    explicit SurfaceComplex(int tri_count) : glue_(tri_count) {}

    int tri_count() const { return static_cast<int>(glue_.size()); }

    /// Glues side a of triangle ta to side b of triangle tb; `swap` matches
    /// ordered endpoints in reverse.
    void glue(int ta, int a, int tb, int b, bool swap);

    const SideRef& side(int tri, int s) const { return glue_[tri][s]; }

    // -- derived structure (computed on demand, cached) --------------------

    int edge_count() const;
    int boundary_edge_count() const;
    int vertex_count() const;
    int euler() const;
    bool orientable() const;
    int boundary_component_count() const;
    int component_count() const;
    /// Orientable: the usual genus (so euler = 2 - 2g - b). Non-orientable:
    /// the non-orientable genus (euler = 2 - g - b).
    int genus() const;
    bool closed() const { return boundary_edge_count() == 0; }

    /// Class index per (tri, corner) vertex slot.
    int vertex_class(int tri, int corner) const;
    /// Class index per (tri, side) slot; a glued pair shares one class.
    int edge_class(int tri, int side) const;
    /// One representative (tri, side) per edge class.
    std::vector<std::pair<int, int>> edge_reps() const;

    /// The fan of crossings around an interior vertex class: a closed dual
    /// cycle through every triangle corner in the class. Empty if the vertex
    /// lies on the boundary.
    std::vector<Crossing> vertex_loop(int vertex_cls) const;

    /// 2g independent dual cycles forming a homology basis of a connected
    /// closed surface (tree/cotree construction). Each cycle is a closed list
    /// of crossings.
    std::vector<std::vector<Crossing>> homology_basis() const;

    /// Signed number of times the dual cycle crosses edges of the given edge
    /// classes (one slot per edge class, +1/-1 per crossing by direction
    /// against the class's stored orientation; useful mod 2).
    std::vector<int> crossing_vector(const std::vector<Crossing>& cycle) const;

    /// Connected components as separate complexes; `tri_maps`, when given,
    /// receives each component's triangle indices in this complex.
    std::vector<SurfaceComplex> split_components(std::vector<std::vector<int>>* tri_maps = nullptr) const;

private:
    struct Derived;
    const Derived& derived() const;

    std::vector<std::array<SideRef, 3>> glue_;
    mutable std::shared_ptr<const Derived> derived_;
};

}  // namespace essurf
