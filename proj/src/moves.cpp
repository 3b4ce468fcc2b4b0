#include "essurf/moves.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace essurf {

namespace {

std::vector<int> others2(int a, int b) {
    std::vector<int> r;
    for (int v = 0; v < 4; ++v)
        if (v != a && v != b) r.push_back(v);
    return r;
}

Rebuilt declined(const std::string& why) {
    Rebuilt r;
    r.ok = false;
    r.reason = why;
    return r;
}

bool is_perm(const int img[4]) {
    bool seen[4] = {false, false, false, false};
    for (int i = 0; i < 4; ++i) {
        if (img[i] < 0 || img[i] > 3 || seen[img[i]]) return false;
        seen[img[i]] = true;
    }
    return true;
}

}  // namespace

Rebuilt rebuild(const Triangulation& t, const Replacement& r) {
    const int n = t.size();
    std::vector<char> removed(n, 0);
    for (int x : r.removed) removed[x] = 1;

    std::map<std::pair<int, int>, std::pair<int, int>> external_claim;  // old slot -> (new index, face)
    std::map<std::pair<int, int>, Perm4> external_perm;                 // new-verts -> old-verts
    std::map<std::pair<int, int>, int> ident_of;
    std::set<std::pair<int, int>> boundary_claim(r.make_boundary.begin(), r.make_boundary.end());

    for (size_t i = 0; i < r.new_tets.size(); ++i)
        for (int f = 0; f < 4; ++f) {
            const Replacement::Slot& s = r.new_tets[i].faces[f];
            if (s.kind != Replacement::Kind::External) continue;
            std::pair<int, int> old{s.old_tet, s.perm[f]};
            assert(removed[s.old_tet]);
            if (!external_claim.emplace(old, std::make_pair(static_cast<int>(i), f)).second) return declined("slot claimed twice");
            external_perm[old] = s.perm;
        }
    for (size_t i = 0; i < r.idents.size(); ++i) {
        const auto& id = r.idents[i];
        assert(id.q[id.faceA] == id.faceB);
        if (ident_of.count({id.tetA, id.faceA}) || ident_of.count({id.tetB, id.faceB})) return declined("ident slot claimed twice");
        ident_of[{id.tetA, id.faceA}] = static_cast<int>(i);
        ident_of[{id.tetB, id.faceB}] = static_cast<int>(i);
    }

    std::vector<int> tet_map(n, -1);
    int kept = 0;
    for (int i = 0; i < n; ++i)
        if (!removed[i]) tet_map[i] = kept++;
    const int new_base = kept;
    const int total = kept + static_cast<int>(r.new_tets.size());

    std::vector<std::array<Gluing, 4>> glue(total);
    std::map<std::pair<int, int>, std::pair<int, int>> provenance;

    struct Resolution {
        enum class What { Boundary, Kept, New } what = What::Boundary;
        int tet = -1, face = -1;
        Perm4 perm;  // source-verts -> partner-verts
        std::optional<std::pair<int, int>> source;
    };

    // Follows a face sheet through the removed region. State: approaching old
    // slot (u,h) from outside, with acc mapping source vertices to u's.
    auto chase = [&](std::pair<int, int> slot, Perm4 acc) -> std::optional<Resolution> {
        int u = slot.first, h = slot.second;
        std::set<std::pair<int, int>> visited;
        while (true) {
            if (!visited.insert({u, h}).second) return std::nullopt;  // rolled-up cycle
            if (!removed[u]) return Resolution{Resolution::What::Kept, u, h, acc, std::nullopt};
            auto ext = external_claim.find({u, h});
            if (ext != external_claim.end())
                return Resolution{Resolution::What::New, ext->second.first, ext->second.second, external_perm.at({u, h}).inverse().after(acc), std::nullopt};
            if (boundary_claim.count({u, h})) return Resolution{Resolution::What::Boundary, -1, -1, acc, std::nullopt};
            auto idit = ident_of.find({u, h});
            if (idit == ident_of.end()) return std::nullopt;  // malformed replacement
            const Replacement::Ident& id = r.idents[idit->second];
            if (u == id.tetA && h == id.faceA) {
                acc = id.q.after(acc);
                u = id.tetB;
                h = id.faceB;
            } else {
                acc = id.q.inverse().after(acc);
                u = id.tetA;
                h = id.faceA;
            }
            const Gluing& g = t.gluing(u, h);
            if (!g.glued()) return Resolution{Resolution::What::Boundary, -1, -1, acc, std::make_pair(u, h)};
            acc = g.perm.after(acc);
            int h2 = g.perm[h];
            u = g.tet;
            h = h2;
        }
    };

    auto set_gluing = [&](int a, int fa, int b, int fb, const Perm4& p) -> bool {
        if (a == b && fa == fb) return false;
        if (glue[a][fa].glued()) return glue[a][fa].tet == b && glue[a][fa].perm == p && p[fa] == fb;
        if (glue[b][fb].glued()) return false;
        if (p[fa] != fb) return false;
        glue[a][fa] = Gluing{b, p};
        glue[b][fb] = Gluing{a, p.inverse()};
        return true;
    };

    auto final_of = [&](const Resolution& res) -> std::pair<int, int> {
        if (res.what == Resolution::What::Kept) return {tet_map[res.tet], res.face};
        return {new_base + res.tet, res.face};
    };

    // Kept-tetrahedron slots.
    for (int ot = 0; ot < n; ++ot) {
        if (removed[ot]) continue;
        for (int of = 0; of < 4; ++of) {
            const Gluing& g = t.gluing(ot, of);
            if (!g.glued()) {
                provenance[{tet_map[ot], of}] = {ot, of};
                continue;
            }
            if (!removed[g.tet]) {
                if (!set_gluing(tet_map[ot], of, tet_map[g.tet], g.perm[of], g.perm)) return declined("conflicting kept gluing");
                continue;
            }
            auto res = chase({g.tet, g.perm[of]}, g.perm);
            if (!res) return declined("chase failed");
            if (res->what == Resolution::What::Boundary) {
                if (res->source) provenance[{tet_map[ot], of}] = *res->source;
                continue;
            }
            auto [bt, bf] = final_of(*res);
            assert(res->perm[of] == bf);
            if (!set_gluing(tet_map[ot], of, bt, bf, res->perm)) return declined("conflicting resolution");
        }
    }

    // New-tetrahedron slots.
    for (size_t i = 0; i < r.new_tets.size(); ++i)
        for (int f = 0; f < 4; ++f) {
            const Replacement::Slot& s = r.new_tets[i].faces[f];
            int self = new_base + static_cast<int>(i);
            if (glue[self][f].glued()) continue;
            if (s.kind == Replacement::Kind::Internal) {
                if (s.other_new < 0) return declined("unset internal slot");
                if (!set_gluing(self, f, new_base + s.other_new, s.perm[f], s.perm)) return declined("conflicting internal gluing");
                continue;
            }
            std::pair<int, int> old{s.old_tet, s.perm[f]};
            const Gluing& g = t.gluing(old.first, old.second);
            if (!g.glued()) {
                provenance[{self, f}] = old;
                continue;
            }
            auto res = chase({g.tet, g.perm[old.second]}, g.perm.after(s.perm));
            if (!res) return declined("chase failed");
            if (res->what == Resolution::What::Boundary) {
                if (res->source) provenance[{self, f}] = *res->source;
                continue;
            }
            auto [bt, bf] = final_of(*res);
            assert(res->perm[f] == bf);
            if (!set_gluing(self, f, bt, bf, res->perm)) return declined("conflicting resolution");
        }

    Rebuilt out;
    out.tet_map = tet_map;
    out.new_base = new_base;
    out.boundary_provenance = std::move(provenance);
    try {
        out.tri = Triangulation(std::move(glue));
    } catch (const Error& e) {
        return declined(std::string("invalid result: ") + e.what());
    }
    out.ok = true;
    return out;
}

// ---------------------------------------------------------------------------

Rebuilt pachner_23(const Triangulation& t, int tet, int face) {
    const Gluing& g = t.gluing(tet, face);
    if (!g.glued() || g.tet == tet) return declined("2-3: need two distinct tetrahedra");
    int t1 = g.tet, f1 = g.perm[face];
    std::vector<int> x;
    for (int v = 0; v < 4; ++v)
        if (v != face) x.push_back(v);

    Replacement r;
    r.removed = {tet, t1};
    r.new_tets.resize(3);
    for (int i = 0; i < 3; ++i) {
        int xi = x[i], xj = x[(i + 1) % 3], xk = x[(i + 2) % 3];
        Replacement::NewTet& nt = r.new_tets[i];
        // Labels: 0 = apex in t0 (vertex `face`), 1 = apex in t1, 2 = xj, 3 = xk.
        {
            Replacement::Slot s;
            s.kind = Replacement::Kind::External;
            s.old_tet = t1;
            int img[4] = {g.perm[xi], f1, g.perm[xj], g.perm[xk]};
            assert(is_perm(img));
            s.perm = Perm4(img[0], img[1], img[2], img[3]);
            nt.faces[0] = s;
        }
        {
            Replacement::Slot s;
            s.kind = Replacement::Kind::External;
            s.old_tet = tet;
            int img[4] = {face, xi, xj, xk};
            assert(is_perm(img));
            s.perm = Perm4(img[0], img[1], img[2], img[3]);
            nt.faces[1] = s;
        }
        {
            Replacement::Slot s;
            s.kind = Replacement::Kind::Internal;
            s.other_new = (i + 1) % 3;
            s.perm = Perm4(0, 1, 3, 2);
            nt.faces[2] = s;
        }
        {
            Replacement::Slot s;
            s.kind = Replacement::Kind::Internal;
            s.other_new = (i + 2) % 3;
            s.perm = Perm4(0, 1, 3, 2);
            nt.faces[3] = s;
        }
    }
    return rebuild(t, r);
}

namespace {

struct EdgeFan {
    struct Visit {
        int tet, a, b, u, w;  // oriented edge (a,b); u shared with previous tet, w with next
    };
    std::vector<Visit> visits;
};

std::optional<EdgeFan> walk_edge_fan(const Triangulation& t, int edge_class) {
    const Skeleton& sk = t.skeleton();
    const EdgeClass& ec = sk.edges[edge_class];
    if (ec.boundary || !ec.valid) return std::nullopt;
    const EdgeEmbedding& em0 = ec.embeddings.front();
    auto [lo, hi] = kEdgeVerts[em0.edge];
    EdgeFan fan;
    int tet = em0.tet, a = lo, b = hi;
    std::vector<int> rest = others2(a, b);
    int u = rest[0], w = rest[1];
    for (int step = 0; step < ec.degree(); ++step) {
        fan.visits.push_back({tet, a, b, u, w});
        const Gluing& g = t.gluing(tet, u);
        if (!g.glued()) return std::nullopt;
        int na = g.perm[a], nb = g.perm[b], nu = g.perm[w], nw = g.perm[u];
        tet = g.tet;
        a = na;
        b = nb;
        u = nu;
        w = nw;
    }
    if (!(tet == fan.visits[0].tet && a == fan.visits[0].a && b == fan.visits[0].b && u == fan.visits[0].u)) return std::nullopt;
    return fan;
}

}  // namespace

Rebuilt pachner_32(const Triangulation& t, int edge_class) {
    auto fan = walk_edge_fan(t, edge_class);
    if (!fan || fan->visits.size() != 3) return declined("3-2: need an interior edge of degree 3");
    auto& v = fan->visits;
    if (v[0].tet == v[1].tet || v[0].tet == v[2].tet || v[1].tet == v[2].tet) return declined("3-2: tetrahedra not distinct");

    Replacement r;
    r.removed = {v[0].tet, v[1].tet, v[2].tet};
    r.new_tets.resize(2);
    // M_0 = (a, x0, x1, x2), M_1 = (b, x0, x1, x2); x_i is u of visit i.
    for (int side = 0; side < 2; ++side) {
        Replacement::NewTet& nt = r.new_tets[side];
        {
            Replacement::Slot s;
            s.kind = Replacement::Kind::Internal;
            s.other_new = 1 - side;
            s.perm = Perm4();
            nt.faces[0] = s;
        }
        for (int i = 0; i < 3; ++i) {
            const auto& vis = v[(i + 1) % 3];
            Replacement::Slot s;
            s.kind = Replacement::Kind::External;
            s.old_tet = vis.tet;
            int img[4];
            img[0] = side == 0 ? vis.a : vis.b;
            img[1 + i] = side == 0 ? vis.b : vis.a;
            img[1 + (i + 1) % 3] = vis.u;
            img[1 + (i + 2) % 3] = vis.w;
            assert(is_perm(img));
            s.perm = Perm4(img[0], img[1], img[2], img[3]);
            nt.faces[1 + i] = s;
        }
    }
    return rebuild(t, r);
}

Rebuilt pachner_44(const Triangulation& t, int edge_class, int axis) {
    auto fan = walk_edge_fan(t, edge_class);
    if (!fan || fan->visits.size() != 4) return declined("4-4: need an interior edge of degree 4");
    auto& v = fan->visits;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (v[i].tet == v[j].tet) return declined("4-4: tetrahedra not distinct");
    if (axis == 1) std::rotate(v.begin(), v.begin() + 1, v.end());

    Replacement r;
    r.removed = {v[0].tet, v[1].tet, v[2].tet, v[3].tet};
    r.new_tets.resize(4);
    // Q0=(x0,x2,x1,a) Q1=(x0,x2,a,x3) Q2=(x0,x2,x3,b) Q3=(x0,x2,b,x1)
    auto ext = [&](int visit, int i0, int i1, int i2, int i3) {
        Replacement::Slot s;
        s.kind = Replacement::Kind::External;
        s.old_tet = v[visit].tet;
        int img[4] = {i0, i1, i2, i3};
        assert(is_perm(img));
        s.perm = Perm4(i0, i1, i2, i3);
        return s;
    };
    auto internal = [&](int other) {
        Replacement::Slot s;
        s.kind = Replacement::Kind::Internal;
        s.other_new = other;
        s.perm = Perm4(0, 1, 3, 2);
        return s;
    };
    r.new_tets[0].faces[0] = ext(1, v[1].b, v[1].w, v[1].u, v[1].a);
    r.new_tets[0].faces[1] = ext(0, v[0].u, v[0].b, v[0].w, v[0].a);
    r.new_tets[0].faces[2] = internal(1);
    r.new_tets[0].faces[3] = internal(3);
    r.new_tets[1].faces[0] = ext(2, v[2].b, v[2].u, v[2].a, v[2].w);
    r.new_tets[1].faces[1] = ext(3, v[3].w, v[3].b, v[3].a, v[3].u);
    r.new_tets[1].faces[2] = internal(2);
    r.new_tets[1].faces[3] = internal(0);
    r.new_tets[2].faces[0] = ext(2, v[2].a, v[2].u, v[2].w, v[2].b);
    r.new_tets[2].faces[1] = ext(3, v[3].w, v[3].a, v[3].u, v[3].b);
    r.new_tets[2].faces[2] = internal(3);
    r.new_tets[2].faces[3] = internal(1);
    r.new_tets[3].faces[0] = ext(1, v[1].a, v[1].w, v[1].b, v[1].u);
    r.new_tets[3].faces[1] = ext(0, v[0].u, v[0].a, v[0].b, v[0].w);
    r.new_tets[3].faces[2] = internal(0);
    r.new_tets[3].faces[3] = internal(2);
    return rebuild(t, r);
}

Rebuilt two_zero_edge(const Triangulation& t, int edge_class) {
    const Skeleton& sk = t.skeleton();
    const EdgeClass& ec = sk.edges[edge_class];
    if (ec.boundary || !ec.valid || ec.degree() != 2) return declined("2-0 edge: need interior degree 2");
    const EdgeEmbedding& e0 = ec.embeddings[0];
    const EdgeEmbedding& e1 = ec.embeddings[1];
    if (e0.tet == e1.tet) return declined("2-0 edge: embeddings share a tetrahedron");
    int t0 = e0.tet, t1 = e1.tet;
    auto [a0, b0] = kEdgeVerts[e0.edge];

    std::vector<int> cd0 = others2(a0, b0);
    int c0 = cd0[0], d0 = cd0[1];
    const Gluing& gc = t.gluing(t0, c0);
    const Gluing& gd = t.gluing(t0, d0);
    if (!gc.glued() || !gd.glued() || gc.tet != t1 || gd.tet != t1) return declined("2-0 edge: faces not glued to partner");
    if (gc.perm[c0] == gd.perm[d0]) return declined("2-0 edge: degenerate gluing");
    if (gc.perm[a0] != gd.perm[a0] || gc.perm[b0] != gd.perm[b0]) return declined("2-0 edge: twisted pillow");

    int img[4];
    img[a0] = gc.perm[a0];
    img[b0] = gc.perm[b0];
    img[c0] = gd.perm[c0];
    img[d0] = gc.perm[d0];
    if (!is_perm(img)) return declined("2-0 edge: inconsistent maps");
    Perm4 phi(img[0], img[1], img[2], img[3]);

    int opp0 = edge_index(c0, d0);
    int opp1 = edge_index(std::min(phi[c0], phi[d0]), std::max(phi[c0], phi[d0]));
    if (sk.edge_class_of[6 * t0 + opp0] == sk.edge_class_of[6 * t1 + opp1]) return declined("2-0 edge: opposite edges identified");

    for (int vv : {a0, b0}) {
        bool bd0 = !t.gluing(t0, vv).glued();
        bool bd1 = !t.gluing(t1, phi[vv]).glued();
        if (bd0 && bd1) return declined("2-0 edge: both exposed faces on boundary");
    }

    Replacement r;
    r.removed = {t0, t1};
    r.idents.push_back({t0, a0, t1, phi[a0], phi});
    r.idents.push_back({t0, b0, t1, phi[b0], phi});
    return rebuild(t, r);
}

Rebuilt two_zero_vertex(const Triangulation& t, int vertex_class) {
    const Skeleton& sk = t.skeleton();
    const VertexClass& vc = sk.vertices[vertex_class];
    if (vc.corners.size() != 2 || vc.type != VertexType::Material) return declined("2-0 vertex: need internal degree 2");
    auto [t0, v0] = vc.corners[0];
    auto [t1, v1] = vc.corners[1];
    if (t0 == t1) return declined("2-0 vertex: corners share a tetrahedron");

    int img[4] = {-1, -1, -1, -1};
    for (int f = 0; f < 4; ++f) {
        if (f == v0) continue;
        const Gluing& g = t.gluing(t0, f);
        if (!g.glued() || g.tet != t1) return declined("2-0 vertex: fan not closed");
        for (int w = 0; w < 4; ++w) {
            if (w == f) continue;
            if (img[w] < 0)
                img[w] = g.perm[w];
            else if (img[w] != g.perm[w])
                return declined("2-0 vertex: twisted pillow");
        }
    }
    if (img[v0] != v1) return declined("2-0 vertex: corner mismatch");
    if (!is_perm(img)) return declined("2-0 vertex: inconsistent maps");
    Perm4 phi(img[0], img[1], img[2], img[3]);

    bool bd0 = !t.gluing(t0, v0).glued();
    bool bd1 = !t.gluing(t1, v1).glued();
    if (bd0 && bd1) return declined("2-0 vertex: both exposed faces on boundary");

    Replacement r;
    r.removed = {t0, t1};
    r.idents.push_back({t0, v0, t1, v1, phi});
    return rebuild(t, r);
}

Rebuilt shell_boundary(const Triangulation& t, int tet) {
    std::vector<int> bdry, interior;
    for (int f = 0; f < 4; ++f)
        (t.gluing(tet, f).glued() ? interior : bdry).push_back(f);
    if (bdry.size() != 2 && bdry.size() != 3) return declined("shell: need 2 or 3 boundary faces");
    for (int f : interior)
        if (t.gluing(tet, f).tet == tet) return declined("shell: self-gluing");
    if (bdry.size() == 2) {
        int e = edge_index(interior[0], interior[1]);  // the edge shared by the two boundary faces
        const Skeleton& sk = t.skeleton();
        int cls = sk.edge_class_of[6 * tet + e];
        int in_this = 0;
        for (const EdgeEmbedding& em : sk.edges[cls].embeddings)
            if (em.tet == tet) ++in_this;
        if (in_this != 1) return declined("shell: pinched edge");
    }
    Replacement r;
    r.removed = {tet};
    for (int f : interior) r.make_boundary.push_back({tet, f});
    return rebuild(t, r);
}

Rebuilt one_four(const Triangulation& t, int tet) {
    Replacement r;
    r.removed = {tet};
    r.new_tets.resize(4);
    for (int v = 0; v < 4; ++v) {
        Replacement::NewTet& nt = r.new_tets[v];
        {
            Replacement::Slot s;
            s.kind = Replacement::Kind::External;
            s.old_tet = tet;
            s.perm = Perm4();
            nt.faces[v] = s;
        }
        for (int f = 0; f < 4; ++f) {
            if (f == v) continue;
            Replacement::Slot s;
            s.kind = Replacement::Kind::Internal;
            s.other_new = f;
            s.perm = Perm4::transposition(v, f);
            nt.faces[f] = s;
        }
    }
    return rebuild(t, r);
}

}  // namespace essurf
