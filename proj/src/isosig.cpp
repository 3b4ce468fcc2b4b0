#include "essurf/isosig.hpp"

#include <algorithm>
#include <cassert>

namespace essurf {

namespace {

const char* kChars = "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789+-";

int sval(char c) {
    if (c >= 'a' && c <= 'z') return c - 'a';
    if (c >= 'A' && c <= 'Z') return c - 'A' + 26;
    if (c >= '0' && c <= '9') return c - '0' + 52;
    if (c == '+') return 62;
    if (c == '-') return 63;
    return -1;
}

class Reader {
public:
    explicit Reader(const std::string& s) : s_(s) {}
    bool done() const { return pos_ >= s_.size(); }
    int next() {
        if (done()) throw Error("iso-sig: truncated signature");
        int v = sval(s_[pos_++]);
        if (v < 0) throw Error("iso-sig: invalid character");
        return v;
    }
    size_t read_uint(int n_chars) {
        size_t v = 0;
        for (int i = 0; i < n_chars; ++i) v |= static_cast<size_t>(next()) << (6 * i);
        return v;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
};

}  // namespace

Triangulation decode_iso_sig(const std::string& sig) {
    if (sig.empty()) throw Error("iso-sig: empty signature");
    Reader in(sig);
    std::vector<std::array<Gluing, 4>> glue;

    while (!in.done()) {
        size_t n;
        int first = in.next();
        if (first < 63) {
            n = static_cast<size_t>(first);
        } else {
            int n_chars = in.next();
            if (n_chars <= 0) throw Error("iso-sig: bad size prefix");
            n = in.read_uint(n_chars);
        }
        if (n == 0) {
            if (!in.done()) throw Error("iso-sig: content after empty component");
            break;
        }
        int index_chars = 1;
        {
            size_t tmp = n;
            index_chars = 0;
            while (tmp > 0) {
                tmp >>= 6;
                ++index_chars;
            }
        }

        // Facet actions, three to a character: 0 boundary, 1 new tetrahedron,
        // 2 gluing to an already-seen tetrahedron.
        std::vector<int> actions;
        size_t facets_covered = 0;
        const size_t total_facets = 4 * n;
        while (facets_covered < total_facets) {
            int v = in.next();
            for (int i = 0; i < 3; ++i) {
                int a = (v >> (2 * i)) & 3;
                if (facets_covered >= total_facets) {
                    if (a != 0) throw Error("iso-sig: nonzero padding");
                    continue;
                }
                if (a == 3) throw Error("iso-sig: invalid facet action");
                actions.push_back(a);
                facets_covered += (a == 0) ? 1 : 2;
                if (facets_covered > total_facets) throw Error("iso-sig: facet actions overrun");
            }
        }

        size_t n_joins = 0;
        for (int a : actions)
            if (a == 2) ++n_joins;
        std::vector<size_t> join_dest(n_joins);
        for (size_t i = 0; i < n_joins; ++i) join_dest[i] = in.read_uint(index_chars);
        std::vector<int> join_perm(n_joins);
        for (size_t i = 0; i < n_joins; ++i) {
            join_perm[i] = in.next();
            if (join_perm[i] >= 24) throw Error("iso-sig: invalid permutation index");
        }

        // Replay the canonical breadth-first construction.
        size_t base = glue.size();
        glue.resize(base + n);
        size_t next_unused = 1, act = 0, join = 0;
        for (size_t t = 0; t < n; ++t)
            for (int f = 0; f < 4; ++f) {
                if (glue[base + t][f].glued()) continue;
                if (act >= actions.size()) throw Error("iso-sig: too few facet actions");
                int a = actions[act++];
                if (a == 0) continue;
                if (a == 1) {
                    if (next_unused >= n) throw Error("iso-sig: too many new-tetrahedron actions");
                    size_t u = next_unused++;
                    glue[base + t][f] = Gluing{static_cast<int>(base + u), Perm4()};
                    glue[base + u][f] = Gluing{static_cast<int>(base + t), Perm4()};
                } else {
                    size_t dest = join_dest[join];
                    Perm4 p = Perm4::from_ordered_index(join_perm[join]);
                    ++join;
                    if (dest >= next_unused) throw Error("iso-sig: join to unseen tetrahedron");
                    int f2 = p[f];
                    if (glue[base + dest][f2].glued() || (dest == t && f2 == f)) throw Error("iso-sig: inconsistent join");
                    glue[base + t][f] = Gluing{static_cast<int>(base + dest), p};
                    glue[base + dest][f2] = Gluing{static_cast<int>(base + t), p.inverse()};
                }
            }
        if (act != actions.size() || join != n_joins || next_unused != n) throw Error("iso-sig: malformed component");
    }
    return Triangulation(std::move(glue));
}

namespace {

// The destination sequence for one choice of start: BFS labelling with each
// new tetrahedron relabelled so its discovery gluing is the identity.
std::vector<int> destination_sequence(const Triangulation& t, int start, const Perm4& rho0, const std::vector<int>& comp_tets) {
    const int n = t.size();
    std::vector<int> label(n, -1);          // old tet -> new label
    std::vector<Perm4> rho(n);              // old vertices -> new vertices
    std::vector<int> order;                 // new label -> old tet
    label[start] = 0;
    rho[start] = rho0;
    order.push_back(start);

    std::vector<int> seq;
    seq.reserve(comp_tets.size() * 4 * 3);
    for (size_t k = 0; k < order.size(); ++k) {
        int ot = order[k];
        for (int nf = 0; nf < 4; ++nf) {
            int of = rho[ot].inverse()[nf];
            const Gluing& g = t.gluing(ot, of);
            if (!g.glued()) {
                seq.push_back(-1);
                seq.push_back(-1);
                continue;
            }
            if (label[g.tet] < 0) {
                label[g.tet] = static_cast<int>(order.size());
                rho[g.tet] = rho[ot].after(g.perm.inverse());
                order.push_back(g.tet);
            }
            Perm4 q = rho[g.tet].after(g.perm).after(rho[ot].inverse());
            seq.push_back(label[g.tet]);
            seq.push_back(q.ordered_index());
        }
    }
    return seq;
}

}  // namespace

std::string canonical_hash(const Triangulation& t) {
    std::vector<std::vector<int>> comp_tets;
    t.components(&comp_tets);
    // Canonicalize each connected component, then sort the component tokens.
    std::vector<std::string> tokens;
    for (const std::vector<int>& tets : comp_tets) {
        std::vector<int> best;
        for (int start : tets)
            for (int pi = 0; pi < 24; ++pi) {
                std::vector<int> seq = destination_sequence(t, start, Perm4::from_ordered_index(pi), tets);
                if (best.empty() || seq < best) best = std::move(seq);
            }
        std::string token = std::to_string(tets.size());
        for (int v : best) {
            token.push_back('.');
            token += std::to_string(v);
        }
        tokens.push_back(std::move(token));
    }
    std::sort(tokens.begin(), tokens.end());
    std::string out;
    for (size_t i = 0; i < tokens.size(); ++i) {
        if (i) out.push_back('|');
        out += tokens[i];
    }
    return out;
}

}  // namespace essurf
