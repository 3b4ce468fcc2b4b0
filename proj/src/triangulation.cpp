#include "essurf/triangulation.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

namespace essurf {

namespace {

// Union-find with a relative sign on each element (for edge orientations).
class SignedUnionFind {
public:
    explicit SignedUnionFind(int n) : parent_(n), sign_(n, 1), ok_(n, true) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }
    std::pair<int, int> find(int x) {
        if (parent_[x] == x) return {x, 1};
        auto [root, s] = find(parent_[x]);
        parent_[x] = root;
        sign_[x] *= s;
        int mine = sign_[x];
        sign_[x] = mine;
        return {root, mine};
    }
    // Relate a and b with the given relative sign; records a contradiction on
    // the class instead of failing.
    void unite(int a, int b, int rel) {
        auto [ra, sa] = find(a);
        auto [rb, sb] = find(b);
        if (ra == rb) {
            if (sa * sb != rel) ok_[ra] = false;
            return;
        }
        parent_[rb] = ra;
        sign_[rb] = sa * rel * sb;
        ok_[ra] = ok_[ra] && ok_[rb];
    }
    int sign_of(int x) { return find(x).second; }
    int root(int x) { return find(x).first; }
    bool class_ok(int x) { return ok_[find(x).first]; }

private:
    std::vector<int> parent_;
    std::vector<int> sign_;
    std::vector<char> ok_;
};

class UnionFind {
public:
    explicit UnionFind(int n) : parent_(n) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }
    int find(int x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(int a, int b) { parent_[find(b)] = find(a); }

private:
    std::vector<int> parent_;
};

int rank_among(int x, const std::vector<int>& sorted) {
    for (size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] == x) return static_cast<int>(i);
    throw std::logic_error("rank_among");
}

std::vector<int> others(std::initializer_list<int> excluded) {
    std::vector<int> r;
    for (int v = 0; v < 4; ++v)
        if (std::find(excluded.begin(), excluded.end(), v) == excluded.end()) r.push_back(v);
    return r;
}

}  // namespace

Triangulation::Triangulation(std::vector<std::array<Gluing, 4>> gluings, OrientationState state) : glue_(std::move(gluings)), state_(state) {
    const int n = size();
    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = glue_[t][f];
            if (!g.glued()) continue;
            if (g.tet < 0 || g.tet >= n) throw Error("gluing partner out of range");
            int f2 = g.perm[f];
            const Gluing& back = glue_[g.tet][f2];
            if (!back.glued() || back.tet != t || !(back.perm == g.perm.inverse()))
                throw Error("face pairings are not involutive");
            if (g.tet == t && f2 == f) throw Error("face glued to itself");
        }
    if (state_ == OrientationState::Oriented)
        for (int t = 0; t < n; ++t)
            for (int f = 0; f < 4; ++f)
                if (glue_[t][f].glued() && glue_[t][f].perm.sign() != -1) throw Error("oriented triangulation with an even gluing");
    compute_skeleton();
}

void Triangulation::compute_skeleton() {
    const int n = size();
    auto skel = std::make_shared<Skeleton>();

    // --- edges: signed union-find over the 6n embeddings -------------------
    SignedUnionFind euf(6 * n);
    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = glue_[t][f];
            if (!g.glued()) continue;
            // The three edges of face f.
            std::vector<int> fv = others({f});
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) {
                    int a = fv[i], b = fv[j];
                    int a2 = g.perm[a], b2 = g.perm[b];
                    int rel = (a2 < b2) ? 1 : -1;  // (a<b) maps to (a2,b2)
                    euf.unite(6 * t + edge_index(a, b), 6 * g.tet + edge_index(a2, b2), rel);
                }
        }
    skel->edge_class_of.assign(6 * n, -1);
    skel->edge_sign_of.assign(6 * n, 1);
    std::map<int, int> edge_root_to_class;
    for (int t = 0; t < n; ++t)
        for (int e = 0; e < 6; ++e) {
            int slot = 6 * t + e;
            int root = euf.root(slot);
            auto it = edge_root_to_class.find(root);
            int cls;
            if (it == edge_root_to_class.end()) {
                cls = static_cast<int>(skel->edges.size());
                edge_root_to_class.emplace(root, cls);
                skel->edges.emplace_back();
                skel->edges[cls].valid = euf.class_ok(slot);
            } else {
                cls = it->second;
            }
            skel->edge_class_of[slot] = cls;
            skel->edge_sign_of[slot] = euf.sign_of(slot);
            skel->edges[cls].embeddings.push_back(EdgeEmbedding{t, e, euf.sign_of(slot)});
        }
    // First-discovered embedding carries the + orientation.
    for (EdgeClass& ec : skel->edges) {
        int lead = ec.embeddings.front().sign;
        if (lead < 0)
            for (EdgeEmbedding& em : ec.embeddings) em.sign = -em.sign;
    }
    for (const EdgeClass& ec : skel->edges)
        for (const EdgeEmbedding& em : ec.embeddings) skel->edge_sign_of[6 * em.tet + em.edge] = em.sign;

    // Boundary edges: some incident face is unglued.
    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f) {
            if (glue_[t][f].glued()) continue;
            std::vector<int> fv = others({f});
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j) skel->edges[skel->edge_class_of[6 * t + edge_index(fv[i], fv[j])]].boundary = true;
        }

    // --- faces --------------------------------------------------------------
    skel->face_class_of.assign(4 * n, -1);
    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f) {
            if (skel->face_class_of[4 * t + f] >= 0) continue;
            FaceClass fc;
            fc.front = {t, f};
            const Gluing& g = glue_[t][f];
            if (g.glued()) {
                fc.back = {g.tet, g.perm[f]};
            } else {
                fc.boundary = true;
                ++skel->boundary_face_count;
            }
            int cls = static_cast<int>(skel->faces.size());
            skel->face_class_of[4 * t + f] = cls;
            if (g.glued()) skel->face_class_of[4 * g.tet + g.perm[f]] = cls;
            skel->faces.push_back(fc);
        }

    // --- vertices -----------------------------------------------------------
    UnionFind vuf(4 * n);
    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = glue_[t][f];
            if (!g.glued()) continue;
            for (int v : others({f})) vuf.unite(4 * t + v, 4 * g.tet + g.perm[v]);
        }
    skel->vertex_class_of.assign(4 * n, -1);
    std::map<int, int> vroot_to_class;
    for (int t = 0; t < n; ++t)
        for (int v = 0; v < 4; ++v) {
            int root = vuf.find(4 * t + v);
            auto it = vroot_to_class.find(root);
            int cls;
            if (it == vroot_to_class.end()) {
                cls = static_cast<int>(skel->vertices.size());
                vroot_to_class.emplace(root, cls);
                skel->vertices.emplace_back();
            } else {
                cls = it->second;
            }
            skel->vertex_class_of[4 * t + v] = cls;
            skel->vertices[cls].corners.push_back({t, v});
        }

    skel_ = skel;

    // Classify vertices via their links.
    auto mutable_skel = std::const_pointer_cast<Skeleton>(skel_);
    for (size_t c = 0; c < skel->vertices.size(); ++c) {
        LinkSurface link = vertex_link(static_cast<int>(c));
        VertexClass& vc = mutable_skel->vertices[c];
        vc.link_euler = link.complex.euler();
        vc.link_genus = link.genus;
        vc.link_orientable = link.complex.orientable();
        if (!link.complex.closed())
            vc.type = VertexType::Boundary;
        else if (link.complex.euler() == 2)
            vc.type = VertexType::Material;
        else
            vc.type = VertexType::Ideal;
    }
}

LinkSurface Triangulation::vertex_link(int vertex_cls) const {
    const Skeleton& sk = *skel_;
    const VertexClass& vc = sk.vertices.at(vertex_cls);
    LinkSurface link{vertex_cls, vc.corners, SurfaceComplex(static_cast<int>(vc.corners.size())), 0, 2};

    std::map<std::pair<int, int>, int> tri_of_corner;
    for (size_t i = 0; i < vc.corners.size(); ++i) tri_of_corner[vc.corners[i]] = static_cast<int>(i);

    for (size_t i = 0; i < vc.corners.size(); ++i) {
        auto [t, v] = vc.corners[i];
        std::vector<int> faces = others({v});
        for (int f : faces) {
            const Gluing& g = glue_[t][f];
            if (!g.glued()) continue;
            int t2 = g.tet, v2 = g.perm[v], f2 = g.perm[f];
            int j = tri_of_corner.at({t2, v2});
            int s1 = rank_among(f, faces);
            std::vector<int> faces2 = others({v2});
            int s2 = rank_among(f2, faces2);
            if (link.complex.side(static_cast<int>(i), s1).glued()) continue;  // already done from the other end
            // Endpoint correspondence: link-triangle corners are ranked by
            // the edge-endpoint vertex they sit on.
            std::vector<int> mine = others({v});
            std::vector<int> theirs = others({v2});
            int a0 = (s1 + 1) % 3, a1 = (s1 + 2) % 3;  // corner slots of side s1
            // Which vertices do those corner slots represent?
            int u0 = mine[a0], u1 = mine[a1];
            int b_expected0 = rank_among(g.perm[u0], theirs);
            bool swap = !(b_expected0 == (s2 + 1) % 3);
            if (swap) assert(b_expected0 == (s2 + 2) % 3);
            assert(rank_among(g.perm[u1], theirs) == (swap ? (s2 + 1) % 3 : (s2 + 2) % 3));
            link.complex.glue(static_cast<int>(i), s1, j, s2, swap);
        }
    }
    link.euler = link.complex.euler();
    link.genus = link.complex.genus();
    return link;
}

bool Triangulation::edges_valid() const {
    for (const EdgeClass& e : skel_->edges)
        if (!e.valid) return false;
    return true;
}

bool Triangulation::is_ideal() const {
    for (const VertexClass& v : skel_->vertices)
        if (v.type == VertexType::Ideal) return true;
    return false;
}

bool Triangulation::is_closed() const { return !has_boundary_faces() && !is_ideal(); }

bool Triangulation::connected() const {
    if (size() == 0) return true;
    std::vector<std::vector<int>> maps;
    return components(&maps).size() == 1;
}

bool Triangulation::is_manifold(bool allow_ideal) const {
    if (!edges_valid()) return false;
    for (const VertexClass& v : skel_->vertices) {
        if (v.type == VertexType::Boundary) {
            // Link must be a disc.
            if (v.link_euler != 1 || !v.link_orientable) return false;
            continue;
        }
        if (v.type == VertexType::Ideal && !allow_ideal) return false;
    }
    // Disc check above needs one boundary component; re-derive cheaply.
    for (size_t c = 0; c < skel_->vertices.size(); ++c) {
        if (skel_->vertices[c].type != VertexType::Boundary) continue;
        LinkSurface link = vertex_link(static_cast<int>(c));
        if (link.complex.boundary_component_count() != 1 || link.complex.component_count() != 1) return false;
    }
    return true;
}

std::vector<Triangulation> Triangulation::components(std::vector<std::vector<int>>* tet_maps) const {
    const int n = size();
    UnionFind uf(std::max(n, 1));
    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f)
            if (glue_[t][f].glued()) uf.unite(t, glue_[t][f].tet);
    std::map<int, int> comp_of_root;
    std::vector<std::vector<int>> members;
    for (int t = 0; t < n; ++t) {
        int r = uf.find(t);
        auto it = comp_of_root.find(r);
        if (it == comp_of_root.end()) {
            comp_of_root.emplace(r, static_cast<int>(members.size()));
            members.push_back({t});
        } else {
            members[it->second].push_back(t);
        }
    }
    std::vector<Triangulation> out;
    for (const std::vector<int>& tets : members) {
        std::vector<int> new_index(n, -1);
        for (size_t i = 0; i < tets.size(); ++i) new_index[tets[i]] = static_cast<int>(i);
        std::vector<std::array<Gluing, 4>> g(tets.size());
        for (size_t i = 0; i < tets.size(); ++i)
            for (int f = 0; f < 4; ++f) {
                const Gluing& old = glue_[tets[i]][f];
                g[i][f] = old.glued() ? Gluing{new_index[old.tet], old.perm} : Gluing{};
            }
        out.emplace_back(std::move(g), state_);
    }
    if (tet_maps) *tet_maps = members;
    return out;
}

std::pair<SurfaceComplex, std::vector<std::pair<int, int>>> Triangulation::boundary_surface() const {
    std::vector<std::pair<int, int>> tris;
    std::map<std::pair<int, int>, int> index_of;
    for (int t = 0; t < size(); ++t)
        for (int f = 0; f < 4; ++f)
            if (!glue_[t][f].glued()) {
                index_of[{t, f}] = static_cast<int>(tris.size());
                tris.push_back({t, f});
            }
    SurfaceComplex surf(static_cast<int>(tris.size()));

    for (size_t i = 0; i < tris.size(); ++i) {
        auto [t, f] = tris[i];
        std::vector<int> fverts = others({f});
        for (int s1 = 0; s1 < 3; ++s1) {
            if (surf.side(static_cast<int>(i), s1).glued()) continue;
            // The side opposite corner slot s1 is the edge joining the other
            // two face vertices; rotate around that edge through glued faces
            // until the boundary reappears.
            int u = fverts[(s1 + 1) % 3], v = fverts[(s1 + 2) % 3];
            int ct = t, cu = u, cv = v;
            int leave = -1;
            for (int w : others({cu, cv}))
                if (w != f) leave = w;
            while (glue_[ct][leave].glued()) {
                const Gluing& g = glue_[ct][leave];
                int entered = g.perm[leave];
                int nu = g.perm[cu], nv = g.perm[cv];
                ct = g.tet;
                cu = nu;
                cv = nv;
                leave = -1;
                for (int w : others({cu, cv}))
                    if (w != entered) leave = w;
            }
            int j = index_of.at({ct, leave});
            std::vector<int> fverts2 = others({leave});
            int opp2 = -1;
            for (int k = 0; k < 3; ++k)
                if (fverts2[k] != cu && fverts2[k] != cv) opp2 = k;
            if (j == static_cast<int>(i) && opp2 == s1) throw Error("boundary edge identified with itself");
            // Endpoint correspondence accumulated through the rotation: u -> cu, v -> cv.
            bool swap = !(fverts2[(opp2 + 1) % 3] == cu);
            surf.glue(static_cast<int>(i), s1, j, opp2, swap);
        }
    }
    return {std::move(surf), std::move(tris)};
}

std::vector<int> Triangulation::boundary_genus_profile() const {
    std::vector<int> genera;
    auto [surf, tris] = boundary_surface();
    for (const SurfaceComplex& comp : surf.split_components()) genera.push_back(comp.genus());
    for (const VertexClass& v : skel_->vertices)
        if (v.type == VertexType::Ideal) genera.push_back(v.link_genus);
    std::sort(genera.begin(), genera.end());
    return genera;
}

// ---------------------------------------------------------------------------

Triangulation parse_gluings(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int n = -1;
    std::vector<std::array<Gluing, 4>> glue;
    std::vector<std::array<bool, 4>> seen;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string stripped = line.substr(0, line.find('#'));
        std::istringstream ls(stripped);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (n < 0) {
            if (tok != "tets") throw Error("line " + std::to_string(lineno) + ": expected 'tets <n>'");
            if (!(ls >> n) || n < 0) throw Error("line " + std::to_string(lineno) + ": bad tetrahedron count");
            glue.assign(n, {});
            seen.assign(n, {false, false, false, false});
            continue;
        }
        int t = -1, f = -1;
        std::string arrow, dest;
        try {
            t = std::stoi(tok);
        } catch (...) {
            throw Error("line " + std::to_string(lineno) + ": malformed line");
        }
        if (!(ls >> f >> arrow >> dest) || arrow != "->") throw Error("line " + std::to_string(lineno) + ": malformed line");
        if (t < 0 || t >= n || f < 0 || f > 3) throw Error("line " + std::to_string(lineno) + ": tetrahedron or face out of range");
        if (seen[t][f]) throw Error("line " + std::to_string(lineno) + ": duplicate face");
        seen[t][f] = true;
        if (dest == "bdry") continue;
        int j = -1;
        try {
            j = std::stoi(dest);
        } catch (...) {
            throw Error("line " + std::to_string(lineno) + ": malformed destination");
        }
        std::string perm;
        if (!(ls >> perm) || perm.size() != 4) throw Error("line " + std::to_string(lineno) + ": expected a 4-digit permutation");
        int img[4];
        bool used[4] = {false, false, false, false};
        for (int i = 0; i < 4; ++i) {
            if (perm[i] < '0' || perm[i] > '3') throw Error("line " + std::to_string(lineno) + ": bad permutation digit");
            img[i] = perm[i] - '0';
            if (used[img[i]]) throw Error("line " + std::to_string(lineno) + ": not a permutation");
            used[img[i]] = true;
        }
        if (j < 0 || j >= n) throw Error("line " + std::to_string(lineno) + ": destination out of range");
        glue[t][f] = Gluing{j, Perm4(img[0], img[1], img[2], img[3])};
    }
    if (n < 0) throw Error("missing 'tets <n>' header");
    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f)
            if (!seen[t][f]) throw Error("missing line for tetrahedron " + std::to_string(t) + " face " + std::to_string(f));
    return Triangulation(std::move(glue));
}

std::string to_gluing_table(const Triangulation& t) {
    std::ostringstream out;
    out << "tets " << t.size() << "\n";
    for (int i = 0; i < t.size(); ++i)
        for (int f = 0; f < 4; ++f) {
            const Gluing& g = t.gluing(i, f);
            out << i << " " << f << " -> ";
            if (g.glued())
                out << g.tet << " " << g.perm.str() << "\n";
            else
                out << "bdry\n";
        }
    return out.str();
}

Triangulation relabel(const Triangulation& t, const std::vector<Perm4>& sigma, const std::vector<int>& new_index_of) {
    const int n = t.size();
    std::vector<int> idx(n);
    if (new_index_of.empty())
        for (int i = 0; i < n; ++i) idx[i] = i;
    else
        idx = new_index_of;
    std::vector<std::array<Gluing, 4>> g(n);
    for (int old_t = 0; old_t < n; ++old_t) {
        for (int old_f = 0; old_f < 4; ++old_f) {
            const Gluing& og = t.gluing(old_t, old_f);
            int nt = idx[old_t], nf = sigma[old_t][old_f];
            if (!og.glued()) {
                g[nt][nf] = Gluing{};
            } else {
                g[nt][nf] = Gluing{idx[og.tet], sigma[og.tet].after(og.perm).after(sigma[old_t].inverse())};
            }
        }
    }
    return Triangulation(std::move(g), OrientationState::Unoriented);
}

Triangulation orient(const Triangulation& t) {
    const int n = t.size();
    std::vector<int> sign(n, 0);
    bool orientable = true;
    for (int start = 0; start < n && orientable; ++start) {
        if (sign[start] != 0) continue;
        sign[start] = 1;
        std::vector<int> stack{start};
        while (!stack.empty() && orientable) {
            int u = stack.back();
            stack.pop_back();
            for (int f = 0; f < 4; ++f) {
                const Gluing& g = t.gluing(u, f);
                if (!g.glued()) continue;
                int want = (g.perm.sign() == -1) ? sign[u] : -sign[u];
                if (sign[g.tet] == 0) {
                    sign[g.tet] = want;
                    stack.push_back(g.tet);
                } else if (sign[g.tet] != want) {
                    orientable = false;
                    break;
                }
            }
        }
    }
    if (!orientable) return Triangulation(t.gluings(), OrientationState::NonOrientable);
    std::vector<Perm4> sigma(n);
    for (int i = 0; i < n; ++i) sigma[i] = (sign[i] == 1) ? Perm4() : Perm4::transposition(2, 3);
    Triangulation res = relabel(t, sigma);
    return Triangulation(res.gluings(), OrientationState::Oriented);
}

}  // namespace essurf
