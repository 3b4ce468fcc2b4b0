#pragma once

#include <array>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "essurf/perm4.hpp"
#include "essurf/surface_complex.hpp"

namespace essurf {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class OrientationState { Unoriented, Oriented, NonOrientable };
enum class VertexType { Material, Ideal, Boundary };

/// Where face `face` of a tetrahedron is glued: partner tetrahedron and the
/// vertex relabelling, or nothing (a boundary face).
struct Gluing {
    int tet = -1;
    Perm4 perm;
    bool glued() const { return tet >= 0; }
};

/// Edge i of a tetrahedron joins edge_verts(i); lexicographic convention.
inline constexpr std::array<std::pair<int, int>, 6> kEdgeVerts = {{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

inline int edge_index(int a, int b) {
    if (a > b) std::swap(a, b);
    for (int e = 0; e < 6; ++e)
        if (kEdgeVerts[e].first == a && kEdgeVerts[e].second == b) return e;
    throw std::out_of_range("edge_index");
}

struct EdgeEmbedding {
    int tet;
    int edge;
    int sign;  // +1 when the embedding's (lo -> hi) direction matches the class orientation
};

struct EdgeClass {
    std::vector<EdgeEmbedding> embeddings;
    bool boundary = false;
    bool valid = true;  // false when identified with itself in reverse
    int degree() const { return static_cast<int>(embeddings.size()); }
};

struct VertexClass {
    std::vector<std::pair<int, int>> corners;  // (tet, vertex)
    VertexType type = VertexType::Material;
    int link_genus = 0;
    int link_euler = 2;
    bool link_orientable = true;
};

struct FaceClass {
    std::pair<int, int> front{-1, -1};  // (tet, face), the representative side
    std::pair<int, int> back{-1, -1};
    bool boundary = false;
};

struct Skeleton {
    std::vector<EdgeClass> edges;
    std::vector<int> edge_class_of;  // [6*tet + e]
    std::vector<int> edge_sign_of;   // orientation of each embedding within its class
    std::vector<VertexClass> vertices;
    std::vector<int> vertex_class_of;  // [4*tet + v]
    std::vector<FaceClass> faces;
    std::vector<int> face_class_of;  // [4*tet + f]
    int boundary_face_count = 0;
};

/// The induced triangulated link of a vertex class, one triangle per corner
/// embedding of the vertex.
struct LinkSurface {
    int owner_vertex;
    std::vector<std::pair<int, int>> corners;  // triangle i <-> corners[i] = (tet, vertex)
    SurfaceComplex complex;
    int genus = 0;
    int euler = 2;
};

/// A singular or ideal triangulation: tetrahedra plus involutive face
/// pairings. Immutable after construction; the skeleton is computed eagerly.
class Triangulation {
public:
    Triangulation() : Triangulation(std::vector<std::array<Gluing, 4>>{}) {}
    explicit Triangulation(std::vector<std::array<Gluing, 4>> gluings, OrientationState state = OrientationState::Unoriented);

    int size() const { return static_cast<int>(glue_.size()); }
    const Gluing& gluing(int tet, int face) const { return glue_[tet][face]; }
    const std::vector<std::array<Gluing, 4>>& gluings() const { return glue_; }
    OrientationState orientation_state() const { return state_; }

    const Skeleton& skeleton() const { return *skel_; }

    bool edges_valid() const;
    bool has_boundary_faces() const { return skel_->boundary_face_count > 0; }
    bool is_ideal() const;
    bool is_compact() const { return !is_ideal(); }
    bool is_closed() const;
    bool connected() const;

    /// True when this triangulates a (possibly ideal, possibly bounded)
    /// 3-manifold: edges valid and every vertex link a surface of the
    /// allowed kind. `allow_ideal` = false additionally rejects closed
    /// non-sphere links.
    bool is_manifold(bool allow_ideal = true) const;

    LinkSurface vertex_link(int vertex_cls) const;

    /// Splits into connected components; `tet_maps`, when given, receives for
    /// each component the original index of each of its tetrahedra.
    std::vector<Triangulation> components(std::vector<std::vector<int>>* tet_maps = nullptr) const;

    /// Boundary surface of the compact part: one SurfaceComplex triangle per
    /// boundary face, plus the map triangle -> (tet, face).
    std::pair<SurfaceComplex, std::vector<std::pair<int, int>>> boundary_surface() const;

    /// Genera of the boundary pieces of the underlying compact manifold:
    /// boundary-surface components followed by ideal vertex links, sorted.
    std::vector<int> boundary_genus_profile() const;

private:
    void compute_skeleton();

    std::vector<std::array<Gluing, 4>> glue_;
    OrientationState state_;
    std::shared_ptr<const Skeleton> skel_;
};

/// Parses the gluing-table format: `tets <n>`, then one line per face,
/// `i f -> j p0p1p2p3` or `i f -> bdry`. `#` starts a comment.
Triangulation parse_gluings(const std::string& text);

/// Renders a triangulation in the same format.
std::string to_gluing_table(const Triangulation& t);

/// Chooses coherent tetrahedron orientations, relabelling vertices where
/// needed so that every gluing permutation is odd, or returns the input
/// flagged NonOrientable.
Triangulation orient(const Triangulation& t);

/// Applies a vertex relabelling per tetrahedron and (optionally) a
/// renumbering of the tetrahedra themselves; new_index_of[old] = new.
Triangulation relabel(const Triangulation& t, const std::vector<Perm4>& sigma, const std::vector<int>& new_index_of = {});

}  // namespace essurf
