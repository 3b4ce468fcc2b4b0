#include "essurf/fixtures.hpp"

#include <array>
#include <sstream>

namespace essurf {
namespace fixtures {

const char* kCircleBundleSig = "sLLLLPLPMvQAQbefijjlklkjpqqoorrraxaaaaaaaaxhaaaahhh";
const char* kFig8Sig = "cPcbbbiht";

namespace {

// The 6-tetrahedron triangulation of the 3-torus from the unit cube split
// along its main diagonal, opposite faces identified by translation.
std::string t3_cube_table() {
    struct Pt {
        int x, y, z;
        bool operator==(const Pt& o) const { return x == o.x && y == o.y && z == o.z; }
        bool operator<(const Pt& o) const { return std::tie(x, y, z) < std::tie(o.x, o.y, o.z); }
    };
    auto axis = [](int a) { return Pt{a == 0, a == 1, a == 2}; };
    auto add = [](Pt p, Pt q) { return Pt{p.x + q.x, p.y + q.y, p.z + q.z}; };

    std::vector<std::array<Pt, 4>> tets;
    int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (auto& pr : perms) {
        Pt p0{0, 0, 0};
        Pt p1 = axis(pr[0]);
        Pt p2 = add(p1, axis(pr[1]));
        Pt p3{1, 1, 1};
        tets.push_back({p0, p1, p2, p3});
    }

    // A face of tet i is its three corners other than vertex f. Two faces are
    // glued when the point triples coincide, possibly after translating one
    // of them by a unit vector (the torus identifications).
    auto face_pts = [&](int t, int f) {
        std::array<Pt, 3> pts;
        int k = 0;
        for (int v = 0; v < 4; ++v)
            if (v != f) pts[k++] = tets[t][v];
        return pts;
    };
    auto match = [&](std::array<Pt, 3> a, std::array<Pt, 3> b, Pt shift) {
        // For each point of a, find the index in b of the shifted image.
        std::array<int, 3> m{-1, -1, -1};
        for (int i = 0; i < 3; ++i) {
            Pt want = add(a[i], shift);
            for (int j = 0; j < 3; ++j)
                if (b[j] == want) m[i] = j;
            if (m[i] < 0) return std::array<int, 3>{-1, -1, -1};
        }
        return m;
    };

    std::vector<std::array<Gluing, 4>> glue(6);
    for (int t = 0; t < 6; ++t)
        for (int f = 0; f < 4; ++f) {
            if (glue[t][f].glued()) continue;
            auto a = face_pts(t, f);
            bool found = false;
            for (int u = 0; u < 6 && !found; ++u)
                for (int g = 0; g < 4 && !found; ++g) {
                    if (u == t && g == f) continue;
                    auto b = face_pts(u, g);
                    for (Pt shift : {Pt{0, 0, 0}, Pt{1, 0, 0}, Pt{-1, 0, 0}, Pt{0, 1, 0}, Pt{0, -1, 0}, Pt{0, 0, 1}, Pt{0, 0, -1}}) {
                        if (shift == Pt{0, 0, 0} && u == t) continue;
                        if (!(shift == Pt{0, 0, 0}) && u == t && false) continue;
                        auto m = match(a, b, shift);
                        if (m[0] < 0) continue;
                        if (shift == Pt{0, 0, 0} && glue[u][g].glued()) continue;
                        if (glue[u][g].glued()) continue;
                        // Build the vertex permutation t -> u.
                        int img[4];
                        std::array<int, 3> av, bv;
                        int k = 0;
                        for (int v = 0; v < 4; ++v)
                            if (v != f) av[k++] = v;
                        k = 0;
                        for (int v = 0; v < 4; ++v)
                            if (v != g) bv[k++] = v;
                        img[f] = g;
                        for (int i = 0; i < 3; ++i) img[av[i]] = bv[m[i]];
                        Perm4 p(img[0], img[1], img[2], img[3]);
                        glue[t][f] = Gluing{u, p};
                        glue[u][g] = Gluing{t, p.inverse()};
                        found = true;
                        break;
                    }
                }
            if (!found) throw Error("t3_cube: unmatched face");
        }
    Triangulation t3(std::move(glue));
    return to_gluing_table(t3);
}

std::map<std::string, std::string> build_tables() {
    std::map<std::string, std::string> m;
    m["single"] =
        "tets 1\n"
        "0 0 -> bdry\n0 1 -> bdry\n0 2 -> bdry\n0 3 -> bdry\n";
    // Double of the 3-simplex: the 3-sphere.
    m["s3_double"] =
        "tets 2\n"
        "0 0 -> 1 0123\n0 1 -> 1 0123\n0 2 -> 1 0123\n0 3 -> 1 0123\n"
        "1 0 -> 0 0123\n1 1 -> 0 0123\n1 2 -> 0 0123\n1 3 -> 0 0123\n";
    // The standard 2-tetrahedron ideal triangulation of the figure-eight
    // knot complement.
    m["fig8"] =
        "tets 2\n"
        "0 0 -> 1 0123\n0 1 -> 1 1203\n0 2 -> 1 1032\n0 3 -> 1 3021\n"
        "1 0 -> 0 0123\n1 1 -> 0 1320\n1 2 -> 0 2013\n1 3 -> 0 1032\n";
    m["t3_cube"] = t3_cube_table();
    return m;
}

}  // namespace

const std::map<std::string, std::string>& tables() {
    static const std::map<std::string, std::string> m = build_tables();
    return m;
}

Triangulation by_name(const std::string& name) {
    auto it = tables().find(name);
    if (it == tables().end()) throw Error("unknown fixture: " + name);
    return parse_gluings(it->second);
}

}  // namespace fixtures
}  // namespace essurf
