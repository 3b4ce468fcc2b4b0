#include "essurf/surface_complex.hpp"

#include <cassert>
#include <memory>
#include <stdexcept>

namespace essurf {

namespace {

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }
    int find(int x) const {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent_[b] = a;
        return true;
    }

private:
    mutable std::vector<int> parent_;
};

}  // namespace

struct SurfaceComplex::Derived {
    std::vector<int> vertex_cls;  // [3*tri + corner]
    std::vector<int> edge_cls;    // [3*tri + side]
    int vertex_count = 0;
    int edge_count = 0;
    int boundary_edges = 0;
    int components = 0;
    int boundary_components = 0;
    bool orientable = true;
};

void SurfaceComplex::glue(int ta, int a, int tb, int b, bool swap) {
    assert(!glue_[ta][a].glued() && !glue_[tb][b].glued());
    assert(!(ta == tb && a == b));
    glue_[ta][a] = SideRef{tb, b, swap};
    glue_[tb][b] = SideRef{ta, a, swap};
    derived_.reset();
}

const SurfaceComplex::Derived& SurfaceComplex::derived() const {
    if (derived_) return *derived_;
    auto d = std::make_shared<Derived>();
    const int nt = tri_count();

    // Edge classes: each glued pair is one class, each boundary side its own.
    d->edge_cls.assign(3 * nt, -1);
    for (int t = 0; t < nt; ++t)
        for (int s = 0; s < 3; ++s) {
            if (d->edge_cls[3 * t + s] >= 0) continue;
            int c = d->edge_count++;
            d->edge_cls[3 * t + s] = c;
            const SideRef& g = glue_[t][s];
            if (g.glued())
                d->edge_cls[3 * g.tri + g.side] = c;
            else
                ++d->boundary_edges;
        }

    // Vertex classes: union corners across gluings.
    UnionFind vuf(3 * nt);
    for (int t = 0; t < nt; ++t)
        for (int s = 0; s < 3; ++s) {
            const SideRef& g = glue_[t][s];
            if (!g.glued() || 3 * g.tri + g.side < 3 * t + s) continue;
            int a0 = (s + 1) % 3, a1 = (s + 2) % 3;
            int b0 = (g.side + 1) % 3, b1 = (g.side + 2) % 3;
            if (g.swap) std::swap(b0, b1);
            vuf.unite(3 * t + a0, 3 * g.tri + b0);
            vuf.unite(3 * t + a1, 3 * g.tri + b1);
        }
    d->vertex_cls.assign(3 * nt, -1);
    for (int i = 0; i < 3 * nt; ++i) {
        int r = vuf.find(i);
        if (d->vertex_cls[r] < 0) d->vertex_cls[r] = d->vertex_count++;
        d->vertex_cls[i] = d->vertex_cls[r];
    }

    // Components of the surface.
    UnionFind cuf(nt);
    for (int t = 0; t < nt; ++t)
        for (int s = 0; s < 3; ++s)
            if (glue_[t][s].glued()) cuf.unite(t, glue_[t][s].tri);
    {
        std::vector<char> seen(nt, 0);
        for (int t = 0; t < nt; ++t)
            if (!seen[cuf.find(t)]) {
                seen[cuf.find(t)] = 1;
                ++d->components;
            }
    }

    // Boundary components: boundary sides sharing a vertex class are chained.
    {
        std::vector<int> bd;
        for (int t = 0; t < nt; ++t)
            for (int s = 0; s < 3; ++s)
                if (!glue_[t][s].glued()) bd.push_back(3 * t + s);
        UnionFind buf(static_cast<int>(bd.size()));
        for (size_t i = 0; i < bd.size(); ++i)
            for (size_t j = i + 1; j < bd.size(); ++j) {
                int ti = bd[i] / 3, si = bd[i] % 3;
                int tj = bd[j] / 3, sj = bd[j] % 3;
                for (int ei : {(si + 1) % 3, (si + 2) % 3})
                    for (int ej : {(sj + 1) % 3, (sj + 2) % 3})
                        if (d->vertex_cls[3 * ti + ei] == d->vertex_cls[3 * tj + ej]) buf.unite(static_cast<int>(i), static_cast<int>(j));
            }
        std::vector<char> seen(bd.size(), 0);
        for (size_t i = 0; i < bd.size(); ++i)
            if (!seen[buf.find(static_cast<int>(i))]) {
                seen[buf.find(static_cast<int>(i))] = 1;
                ++d->boundary_components;
            }
    }

    // Orientability: 2-colour triangles; coherent across a gluing iff the
    // sides are traversed in opposite directions.
    {
        std::vector<int> colour(nt, 0);
        for (int start = 0; start < nt; ++start) {
            if (colour[start] != 0) continue;
            colour[start] = 1;
            std::vector<int> stack{start};
            while (!stack.empty() && d->orientable) {
                int t = stack.back();
                stack.pop_back();
                for (int s = 0; s < 3; ++s) {
                    const SideRef& g = glue_[t][s];
                    if (!g.glued()) continue;
                    int want = g.swap ? colour[t] : -colour[t];
                    if (colour[g.tri] == 0) {
                        colour[g.tri] = want;
                        stack.push_back(g.tri);
                    } else if (colour[g.tri] != want) {
                        d->orientable = false;
                        break;
                    }
                }
            }
            if (!d->orientable) break;
        }
    }

    derived_ = d;
    return *derived_;
}

int SurfaceComplex::edge_count() const { return derived().edge_count; }
int SurfaceComplex::boundary_edge_count() const { return derived().boundary_edges; }
int SurfaceComplex::vertex_count() const { return derived().vertex_count; }
int SurfaceComplex::euler() const { return vertex_count() - edge_count() + tri_count(); }
bool SurfaceComplex::orientable() const { return derived().orientable; }
int SurfaceComplex::boundary_component_count() const { return derived().boundary_components; }
int SurfaceComplex::component_count() const { return derived().components; }

int SurfaceComplex::genus() const {
    int chi = euler();
    int b = boundary_component_count();
    if (orientable()) {
        assert((2 - chi - b) % 2 == 0);
        return (2 - chi - b) / 2;
    }
    return 2 - chi - b;
}

int SurfaceComplex::vertex_class(int tri, int corner) const { return derived().vertex_cls[3 * tri + corner]; }
int SurfaceComplex::edge_class(int tri, int side) const { return derived().edge_cls[3 * tri + side]; }

std::vector<std::pair<int, int>> SurfaceComplex::edge_reps() const {
    const Derived& d = derived();
    std::vector<std::pair<int, int>> reps(d.edge_count, {-1, -1});
    for (int t = 0; t < tri_count(); ++t)
        for (int s = 0; s < 3; ++s)
            if (reps[d.edge_cls[3 * t + s]].first < 0) reps[d.edge_cls[3 * t + s]] = {t, s};
    return reps;
}

std::vector<SurfaceComplex::Crossing> SurfaceComplex::vertex_loop(int vertex_cls_idx) const {
    const Derived& d = derived();
    // Find a corner in the class.
    int t0 = -1, c0 = -1;
    for (int t = 0; t < tri_count() && t0 < 0; ++t)
        for (int c = 0; c < 3; ++c)
            if (d.vertex_cls[3 * t + c] == vertex_cls_idx) {
                t0 = t;
                c0 = c;
                break;
            }
    if (t0 < 0) throw std::out_of_range("vertex_loop: no such vertex class");

    std::vector<Crossing> loop;
    // Walk the fan: leave through one side at the corner, never re-cross the
    // side we entered by.
    int t = t0, c = c0, leave = (c0 + 1) % 3;
    do {
        const SideRef& g = glue_[t][leave];
        if (!g.glued()) return {};  // boundary vertex: no closed loop
        // Endpoint correspondence to locate the image corner.
        int a0 = (leave + 1) % 3, a1 = (leave + 2) % 3;
        int b0 = (g.side + 1) % 3, b1 = (g.side + 2) % 3;
        if (g.swap) std::swap(b0, b1);
        int c2 = (c == a0) ? b0 : b1;
        loop.push_back(Crossing{t, leave, g.tri, g.side});
        t = g.tri;
        c = c2;
        // The two sides at corner c are the ones other than side c; continue
        // through the one we did not just enter by.
        leave = (g.side == (c + 1) % 3) ? (c + 2) % 3 : (c + 1) % 3;
    } while (!(t == t0 && c == c0 && leave == (c0 + 1) % 3));
    return loop;
}

std::vector<std::vector<SurfaceComplex::Crossing>> SurfaceComplex::homology_basis() const {
    const Derived& d = derived();
    if (component_count() != 1 || !closed()) throw std::logic_error("homology_basis: need a connected closed surface");

    const int nt = tri_count();
    // Primal spanning tree over vertex classes.
    std::vector<char> edge_in_tree(d.edge_count, 0);
    {
        UnionFind uf(d.vertex_count);
        for (int t = 0; t < nt; ++t)
            for (int s = 0; s < 3; ++s) {
                int e = d.edge_cls[3 * t + s];
                if (edge_in_tree[e]) continue;
                int va = d.vertex_cls[3 * t + (s + 1) % 3];
                int vb = d.vertex_cls[3 * t + (s + 2) % 3];
                if (uf.unite(va, vb)) edge_in_tree[e] = 1;
            }
    }

    // Dual spanning tree over triangles using the remaining edges. Record the
    // parent crossing for each triangle.
    std::vector<int> parent(nt, -2);
    std::vector<Crossing> parent_cross(nt);
    std::vector<char> edge_in_cotree(d.edge_count, 0);
    parent[0] = -1;
    std::vector<int> queue{0};
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        int t = queue[qi];
        for (int s = 0; s < 3; ++s) {
            const SideRef& g = glue_[t][s];
            int e = d.edge_cls[3 * t + s];
            if (edge_in_tree[e] || parent[g.tri] != -2) continue;
            parent[g.tri] = t;
            parent_cross[g.tri] = Crossing{t, s, g.tri, g.side};
            edge_in_cotree[e] = 1;
            queue.push_back(g.tri);
        }
    }

    auto path_to_root = [&](int t) {
        std::vector<Crossing> up;  // crossings from t towards the root
        while (parent[t] >= 0) {
            Crossing c = parent_cross[t];
            up.push_back(Crossing{c.to_tri, c.to_side, c.from_tri, c.from_side});
            t = parent[t];
        }
        return up;
    };

    std::vector<std::vector<Crossing>> basis;
    std::vector<char> used(d.edge_count, 0);
    for (int t = 0; t < nt; ++t)
        for (int s = 0; s < 3; ++s) {
            int e = d.edge_cls[3 * t + s];
            if (edge_in_tree[e] || edge_in_cotree[e] || used[e]) continue;
            used[e] = 1;
            const SideRef& g = glue_[t][s];
            // Leftover edge: the loop crosses it once, then returns through
            // the dual tree: g.tri -> root -> t.
            std::vector<Crossing> cycle;
            cycle.push_back(Crossing{t, s, g.tri, g.side});
            std::vector<Crossing> a = path_to_root(g.tri);  // g.tri -> root
            std::vector<Crossing> b = path_to_root(t);      // t -> root
            cycle.insert(cycle.end(), a.begin(), a.end());
            for (auto it = b.rbegin(); it != b.rend(); ++it) cycle.push_back(Crossing{it->to_tri, it->to_side, it->from_tri, it->from_side});
            basis.push_back(std::move(cycle));
        }
    // Rank check: 2g leftover edges on a closed connected surface.
    assert(static_cast<int>(basis.size()) == d.edge_count - (d.vertex_count - 1) - (nt - 1));
    return basis;
}

std::vector<int> SurfaceComplex::crossing_vector(const std::vector<Crossing>& cycle) const {
    const Derived& d = derived();
    std::vector<int> v(d.edge_count, 0);
    for (const Crossing& c : cycle) {
        // Direction fixed by which slot of the glued pair we leave through.
        int e = d.edge_cls[3 * c.from_tri + c.from_side];
        int a = 3 * c.from_tri + c.from_side, b = 3 * c.to_tri + c.to_side;
        v[e] += (a < b) ? 1 : -1;
    }
    return v;
}

std::vector<SurfaceComplex> SurfaceComplex::split_components(std::vector<std::vector<int>>* tri_maps) const {
    const int nt = tri_count();
    std::vector<int> comp(nt, -1);
    std::vector<std::vector<int>> members;
    for (int t = 0; t < nt; ++t) {
        if (comp[t] >= 0) continue;
        int c = static_cast<int>(members.size());
        members.push_back({});
        std::vector<int> stack{t};
        comp[t] = c;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            members[c].push_back(x);
            for (int s = 0; s < 3; ++s) {
                const SideRef& g = glue_[x][s];
                if (g.glued() && comp[g.tri] < 0) {
                    comp[g.tri] = c;
                    stack.push_back(g.tri);
                }
            }
        }
    }
    std::vector<SurfaceComplex> out;
    for (const std::vector<int>& tris : members) {
        std::vector<int> idx(nt, -1);
        for (size_t i = 0; i < tris.size(); ++i) idx[tris[i]] = static_cast<int>(i);
        SurfaceComplex sub(static_cast<int>(tris.size()));
        for (size_t i = 0; i < tris.size(); ++i)
            for (int s = 0; s < 3; ++s) {
                const SideRef& g = glue_[tris[i]][s];
                if (g.glued() && !sub.side(static_cast<int>(i), s).glued()) sub.glue(static_cast<int>(i), s, idx[g.tri], g.side, g.swap);
            }
        out.push_back(std::move(sub));
    }
    if (tri_maps) *tri_maps = members;
    return out;
}

}  // namespace essurf
