#include "essurf/simplify.hpp"

#include <algorithm>
#include <random>

#include "essurf/moves.hpp"

namespace essurf {

namespace {

struct State {
    Triangulation tri;
    FaceTagMap tags;
};

struct VertexMeasure {
    int internal_vertices = 0;
    int excess_boundary_vertices = 0;
};

VertexMeasure vertex_measure(const Triangulation& t) {
    VertexMeasure m;
    const Skeleton& sk = t.skeleton();
    if (t.is_closed()) {
        m.internal_vertices = static_cast<int>(sk.vertices.size()) - 1;
        return m;
    }
    int boundary_vertices = 0;
    for (const VertexClass& v : sk.vertices) {
        if (v.type == VertexType::Material) ++m.internal_vertices;
        if (v.type == VertexType::Boundary) ++boundary_vertices;
    }
    auto [surf, tris] = t.boundary_surface();
    int bc = surf.component_count();
    m.excess_boundary_vertices = boundary_vertices - bc;
    return m;
}

bool goal_met(const Triangulation& t, SimplifyGoal goal) {
    if (goal == SimplifyGoal::MinimizeTets) return true;
    VertexMeasure m = vertex_measure(t);
    return m.internal_vertices == 0 && m.excess_boundary_vertices == 0;
}

// Lexicographic fitness: goal distance first, then size.
std::array<long, 3> fitness(const Triangulation& t, SimplifyGoal goal) {
    if (goal == SimplifyGoal::MinimizeTets) return {0, 0, t.size()};
    VertexMeasure m = vertex_measure(t);
    return {m.internal_vertices + m.excess_boundary_vertices, t.size(), 0};
}

class Simplifier {
public:
    Simplifier(SimplifyGoal goal, bool tagged) : goal_(goal), tagged_(tagged) {}

    // Applies a rebuilt move if sound; boundary structure must survive.
    bool accept(State& st, const Rebuilt& mv, bool touches_boundary) {
        if (!mv.ok) return false;
        if (!mv.tri.edges_valid() || !mv.tri.is_manifold(true)) return false;
        FaceTagMap new_tags;
        if (tagged_) {
            auto t = transfer_tags(mv.tri, mv.boundary_provenance, st.tags);
            if (!t) return false;
            new_tags = std::move(*t);
        }
        if (touches_boundary && mv.tri.boundary_genus_profile() != st.tri.boundary_genus_profile()) return false;
        {
            std::vector<std::vector<int>> a, b;
            st.tri.components(&a);
            mv.tri.components(&b);
            if (a.size() != b.size()) return false;
        }
        st.tri = mv.tri;
        st.tags = std::move(new_tags);
        return true;
    }

    bool reduce_once(State& st) {
        const Skeleton& sk = st.tri.skeleton();
        for (size_t v = 0; v < sk.vertices.size(); ++v) {
            const VertexClass& vc = sk.vertices[v];
            if (vc.type == VertexType::Material && vc.corners.size() == 2)
                if (accept(st, two_zero_vertex(st.tri, static_cast<int>(v)), true)) return true;
        }
        for (size_t e = 0; e < sk.edges.size(); ++e) {
            const EdgeClass& ec = sk.edges[e];
            if (ec.boundary || !ec.valid) continue;
            if (ec.degree() == 3)
                if (accept(st, pachner_32(st.tri, static_cast<int>(e)), false)) return true;
            if (ec.degree() == 2)
                if (accept(st, two_zero_edge(st.tri, static_cast<int>(e)), true)) return true;
        }
        if (st.tri.has_boundary_faces()) {
            for (int tet = 0; tet < st.tri.size(); ++tet) {
                int b = 0;
                for (int f = 0; f < 4; ++f)
                    if (!st.tri.gluing(tet, f).glued()) ++b;
                if (b == 2 || b == 3)
                    if (accept(st, shell_boundary(st.tri, tet), true)) return true;
            }
        }
        return false;
    }

    void descend(State& st) {
        while (reduce_once(st)) {
        }
    }

    // One random size-neutral or size-increasing excursion.
    bool excursion(State& st, std::mt19937_64& rng, int height) {
        const long before = st.tri.size();
        // A few 4-4 rolls first.
        for (int k = 0; k < 4; ++k) {
            const Skeleton& sk = st.tri.skeleton();
            std::vector<int> deg4;
            for (size_t e = 0; e < sk.edges.size(); ++e)
                if (!sk.edges[e].boundary && sk.edges[e].valid && sk.edges[e].degree() == 4) deg4.push_back(static_cast<int>(e));
            if (deg4.empty()) break;
            int e = deg4[rng() % deg4.size()];
            if (!accept(st, pachner_44(st.tri, e, static_cast<int>(rng() % 2)), false)) continue;
            descend(st);
            if (st.tri.size() < before) return true;
        }
        for (int up = 0; up < height; ++up) {
            std::vector<std::pair<int, int>> faces;
            for (int tet = 0; tet < st.tri.size(); ++tet)
                for (int f = 0; f < 4; ++f) {
                    const Gluing& g = st.tri.gluing(tet, f);
                    if (g.glued() && g.tet != tet) faces.push_back({tet, f});
                }
            if (faces.empty()) break;
            auto [tet, f] = faces[rng() % faces.size()];
            if (!accept(st, pachner_23(st.tri, tet, f), false)) continue;
        }
        descend(st);
        return st.tri.size() < before;
    }

    SimplifyGoal goal_;
    bool tagged_;
};

}  // namespace

SimplifyResult simplify(const Triangulation& t, SimplifyGoal goal, uint64_t seed, int restarts, const FaceTagMap* tags) {
    Simplifier s(goal, tags != nullptr);
    State best{t, tags ? *tags : FaceTagMap{}};
    const long input_size = t.size();
    s.descend(best);

    auto better = [&](const State& a, const State& b) { return fitness(a.tri, goal) < fitness(b.tri, goal); };

    for (int attempt = 0; attempt < restarts; ++attempt) {
        if (goal_met(best.tri, goal) && goal == SimplifyGoal::MinimizeTets && best.tri.size() <= 1) break;
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + attempt + 1);
        State cur = best;
        bool progress = true;
        int stale = 0;
        while (stale < 3) {
            progress = s.excursion(cur, rng, 2 + attempt % 3);
            if (cur.tri.size() <= input_size && better(cur, best)) {
                best = cur;
                stale = 0;
            } else if (!progress) {
                ++stale;
            }
        }
        if (goal_met(best.tri, goal) && goal != SimplifyGoal::MinimizeTets) break;
    }

    SimplifyResult out;
    out.goal_met = goal_met(best.tri, goal);
    out.tri = std::move(best.tri);
    out.tags = std::move(best.tags);
    return out;
}

}  // namespace essurf
