#ifndef CENSUS_TRIANGULATION_HPP
#define CENSUS_TRIANGULATION_HPP

#include <array>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include <census/perm.hpp>

namespace census {

// Edges of a tetrahedron indexed 0..5 as corner pairs in lexicographic order.
inline constexpr std::array<std::array<int, 2>, 6> kEdgeVerts{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

inline constexpr int edge_index(int a, int b) {
    if (a > b) std::swap(a, b);
    constexpr int idx[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return idx[a][b];
}

// Shape-parameter slot of an edge in an ideal tetrahedron: opposite edges
// share a slot.  Edges (01),(23) -> 0; (02),(13) -> 1; (03),(12) -> 2.
inline constexpr int edge_param_slot(int e) {
    constexpr int slot[6] = {0, 1, 2, 2, 1, 0};
    return slot[e];
}

struct FaceGluing {
    int nbr = -1;  // neighbouring tetrahedron, -1 when unglued
    Perm4 map;     // corner map into the neighbour; map[f] is the image face

    bool glued() const { return nbr >= 0; }
    bool operator==(const FaceGluing&) const = default;
};

// Gluing table of n tetrahedra.  Face f of tetrahedron t is the face
// opposite corner f.  For a gluing g = glue[t][f], the matching entry
// glue[g.nbr][g.map[f]] must hold the inverse map back to t.
struct Triangulation {
    int n = 0;
    std::vector<std::array<FaceGluing, 4>> glue;

    Triangulation() = default;
    explicit Triangulation(int tets) : n(tets), glue(tets) {}

    int add_tet() {
        glue.emplace_back();
        return n++;
    }

    bool operator==(const Triangulation&) const = default;

    void set_gluing(int t, int f, int t2, const Perm4& p) {
        glue[t][f] = FaceGluing{t2, p};
        glue[t2][p[f]] = FaceGluing{t, p.inverse()};
    }

    bool all_faces_glued() const {
        for (int t = 0; t < n; ++t)
            for (int f = 0; f < 4; ++f)
                if (!glue[t][f].glued()) return false;
        return true;
    }

    // Gluing relation must be a total involution on glued slots.
    bool valid_involution() const {
        for (int t = 0; t < n; ++t)
            for (int f = 0; f < 4; ++f) {
                const FaceGluing& g = glue[t][f];
                if (!g.glued()) continue;
                if (g.nbr >= n) return false;
                const FaceGluing& back = glue[g.nbr][g.map[f]];
                if (back.nbr != t) return false;
                if (!back.map.after(g.map).is_identity()) return false;
            }
        return true;
    }

    bool all_gluings_odd() const {
        for (int t = 0; t < n; ++t)
            for (int f = 0; f < 4; ++f)
                if (glue[t][f].glued() && !glue[t][f].map.odd()) return false;
        return true;
    }
};

struct EdgeClass {
    int id = 0;
    std::vector<std::pair<int, int>> slots;  // (tet, edge index 0..5)
    int valence = 0;
    int distinct_tets = 0;
    bool reversed = false;           // edge identified with itself reversing direction
    std::array<int, 2> endpoints{};  // vertex class ids of tail/head of the root slot
};

struct VertexClass {
    int id = 0;
    std::vector<std::pair<int, int>> corners;  // (tet, corner)
    int link_euler_x2 = 0;                     // 2 * Euler characteristic of the link surface
};

// Union-find with a parity bit recording direction flips relative to the root.
class ParityUF {
public:
    explicit ParityUF(int n) : parent_(n), parity_(n, 0), conflict_(n, 0) {
        for (int i = 0; i < n; ++i) parent_[i] = i;
    }

    // unify x and y with relative parity rel (0 = same direction, 1 = flipped)
    void unite(int x, int y, int rel) {
        auto [rx, px] = find_full(x);
        auto [ry, py] = find_full(y);
        if (rx == ry) {
            if ((px ^ py) != rel) conflict_[rx] = 1;
            return;
        }
        parent_[ry] = rx;
        parity_[ry] = uint8_t(px ^ py ^ rel);
        conflict_[rx] |= conflict_[ry];
    }

    std::pair<int, int> find_full(int x) {
        int p = 0;
        int start = x;
        while (parent_[x] != x) {
            p ^= parity_[x];
            x = parent_[x];
        }
        // compress
        int r = x;
        x = start;
        int pp = p;
        while (parent_[x] != x) {
            int nxt = parent_[x];
            int nparity = pp ^ parity_[x];
            parent_[x] = r;
            parity_[x] = uint8_t(pp);
            pp = nparity;
            x = nxt;
        }
        return {r, p};
    }

    bool conflicted(int x) { return conflict_[find_full(x).first] != 0; }

private:
    std::vector<int> parent_;
    std::vector<uint8_t> parity_;
    std::vector<uint8_t> conflict_;
};

struct Classes {
    std::vector<EdgeClass> edges;
    std::vector<VertexClass> vertices;
    std::vector<int> edge_class_of;    // 6*t + e -> edge class id
    std::vector<int8_t> edge_parity;   // 0: slot direction agrees with class root, 1: flipped
    std::vector<int> vertex_class_of;  // 4*t + v -> vertex class id
    // face classes: glued pairs of (tet,face) slots
    std::vector<int> face_class_of;                      // 4*t + f -> face class id
    std::vector<std::pair<int, int>> face_reps;          // class id -> smaller (tet,face) slot
    int valence_sum = 0;
};

// Partition edge and corner slots into classes induced by the gluings and
// assemble vertex link data.  Throws on a non-involutive table.
inline Classes compute_classes(const Triangulation& tri) {
    if (!tri.valid_involution()) throw std::runtime_error("gluing table is not an involution");
    const int n = tri.n;
    Classes cl;

    // --- face classes ---
    cl.face_class_of.assign(4 * n, -1);
    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f) {
            if (cl.face_class_of[4 * t + f] >= 0 || !tri.glue[t][f].glued()) continue;
            int id = int(cl.face_reps.size());
            cl.face_class_of[4 * t + f] = id;
            const FaceGluing& g = tri.glue[t][f];
            cl.face_class_of[4 * g.nbr + g.map[f]] = id;
            cl.face_reps.emplace_back(t, f);
        }

    // --- edge classes (with direction parity) ---
    ParityUF uf(6 * n);
    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = tri.glue[t][f];
            if (!g.glued()) continue;
            for (int e = 0; e < 6; ++e) {
                auto [a, b] = kEdgeVerts[e];
                if (a == f || b == f) continue;  // edge not on face f
                int ia = g.map[a], ib = g.map[b];
                int e2 = edge_index(ia, ib);
                int rel = (ia < ib) ? 0 : 1;
                uf.unite(6 * t + e, 6 * g.nbr + e2, rel);
            }
        }

    cl.edge_class_of.assign(6 * n, -1);
    cl.edge_parity.assign(6 * n, 0);
    std::vector<int> root_to_id(6 * n, -1);
    for (int s = 0; s < 6 * n; ++s) {
        auto [r, par] = uf.find_full(s);
        if (root_to_id[r] < 0) {
            root_to_id[r] = int(cl.edges.size());
            EdgeClass ec;
            ec.id = root_to_id[r];
            cl.edges.push_back(ec);
        }
        int id = root_to_id[r];
        cl.edge_class_of[s] = id;
        cl.edge_parity[s] = int8_t(par);
        cl.edges[id].slots.emplace_back(s / 6, s % 6);
    }
    // Renumber edge classes by smallest slot so ids are deterministic.
    {
        std::vector<int> order(cl.edges.size());
        for (size_t i = 0; i < order.size(); ++i) order[i] = int(i);
        std::sort(order.begin(), order.end(), [&](int a, int b) { return cl.edges[a].slots.front() < cl.edges[b].slots.front(); });
        std::vector<int> newid(cl.edges.size());
        std::vector<EdgeClass> edges2(cl.edges.size());
        for (size_t k = 0; k < order.size(); ++k) {
            newid[order[k]] = int(k);
            edges2[k] = cl.edges[order[k]];
            edges2[k].id = int(k);
        }
        cl.edges = std::move(edges2);
        for (int s = 0; s < 6 * n; ++s) cl.edge_class_of[s] = newid[cl.edge_class_of[s]];
    }
    for (EdgeClass& ec : cl.edges) {
        ec.valence = int(ec.slots.size());
        std::set<int> tets;
        for (auto& [t, e] : ec.slots) tets.insert(t);
        ec.distinct_tets = int(tets.size());
        ec.reversed = uf.conflicted(6 * ec.slots.front().first + ec.slots.front().second);
        cl.valence_sum += ec.valence;
    }

    // --- vertex classes ---
    std::vector<int> vparent(4 * n);
    for (int i = 0; i < 4 * n; ++i) vparent[i] = i;
    auto vfind = [&](int x) {
        while (vparent[x] != x) x = vparent[x] = vparent[vparent[x]];
        return x;
    };
    for (int t = 0; t < n; ++t)
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = tri.glue[t][f];
            if (!g.glued()) continue;
            for (int v = 0; v < 4; ++v) {
                if (v == f) continue;
                int a = vfind(4 * t + v), b = vfind(4 * g.nbr + g.map[v]);
                if (a != b) vparent[a] = b;
            }
        }
    std::vector<int> vroot_to_id(4 * n, -1);
    cl.vertex_class_of.assign(4 * n, -1);
    for (int c = 0; c < 4 * n; ++c) {
        int r = vfind(c);
        if (vroot_to_id[r] < 0) {
            vroot_to_id[r] = int(cl.vertices.size());
            VertexClass vc;
            vc.id = vroot_to_id[r];
            cl.vertices.push_back(vc);
        }
        cl.vertex_class_of[c] = vroot_to_id[r];
        cl.vertices[vroot_to_id[r]].corners.emplace_back(c / 4, c % 4);
    }

    // Edge endpoints (tail, head of the root slot's canonical direction).
    for (EdgeClass& ec : cl.edges) {
        auto [t, e] = ec.slots.front();
        auto [a, b] = kEdgeVerts[e];
        ec.endpoints = {cl.vertex_class_of[4 * t + a], cl.vertex_class_of[4 * t + b]};
    }

    // Link Euler characteristic.  The link of a vertex class is a closed
    // surface assembled from one corner triangle per corner.  Its vertices
    // are the edge-class ends incident to the class; its edges come in
    // glued pairs of corner-triangle sides, 3 per corner.
    //   2*chi = 2*V_link - F_link   (E_link = 3/2 F_link)
    // Ends are orbits of directed edge slots; a reversed class has one end.
    {
        std::vector<int> ends_at(cl.vertices.size(), 0);
        for (const EdgeClass& ec : cl.edges) {
            auto [t, e] = ec.slots.front();
            auto [a, b] = kEdgeVerts[e];
            if (ec.reversed) {
                ends_at[cl.vertex_class_of[4 * t + a]] += 1;
            } else {
                ends_at[cl.vertex_class_of[4 * t + a]] += 1;
                ends_at[cl.vertex_class_of[4 * t + b]] += 1;
            }
        }
        for (VertexClass& vc : cl.vertices) vc.link_euler_x2 = 2 * ends_at[vc.id] - int(vc.corners.size());
    }

    return cl;
}

// Closed orientable 3-manifold test: total gluing, odd gluing maps under
// the reference orientations, no reversed edge self-identifications, and
// every vertex link a 2-sphere.
inline bool has_self_identified_face(const Triangulation& tri) {
    for (int t = 0; t < tri.n; ++t)
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = tri.glue[t][f];
            if (g.glued() && g.nbr == t && g.map[f] == f) return true;
        }
    return false;
}

inline bool is_closed_orientable(const Triangulation& tri) {
    if (tri.n == 0) return false;
    if (!tri.all_faces_glued()) return false;
    if (!tri.valid_involution()) return false;
    if (!tri.all_gluings_odd()) return false;
    if (has_self_identified_face(tri)) return false;
    Classes cl = compute_classes(tri);
    for (const EdgeClass& ec : cl.edges)
        if (ec.reversed) return false;
    for (const VertexClass& vc : cl.vertices)
        if (vc.link_euler_x2 != 4) return false;
    // connectivity of the dual graph
    std::vector<int> seen(tri.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int f = 0; f < 4; ++f) {
            int u = tri.glue[t][f].nbr;
            if (u >= 0 && !seen[u]) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == tri.n;
}

// Cusped variant: same combinatorial conditions but every vertex link a torus.
inline bool is_ideal_torus_cusped(const Triangulation& tri) {
    if (tri.n == 0 || !tri.all_faces_glued() || !tri.valid_involution() || !tri.all_gluings_odd()) return false;
    if (has_self_identified_face(tri)) return false;
    Classes cl = compute_classes(tri);
    for (const EdgeClass& ec : cl.edges)
        if (ec.reversed) return false;
    for (const VertexClass& vc : cl.vertices)
        if (vc.link_euler_x2 != 0) return false;
    std::vector<int> seen(tri.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int t = stack.back();
        stack.pop_back();
        for (int f = 0; f < 4; ++f) {
            int u = tri.glue[t][f].nbr;
            if (u >= 0 && !seen[u]) {
                seen[u] = 1;
                ++count;
                stack.push_back(u);
            }
        }
    }
    return count == tri.n;
}

// Walk once around an edge class starting from a slot, reporting each face
// crossing as (tet, face, entered_face, directed edge).  Used for region
// boundary words and for assembling gluing equations.
struct EdgeWalkStep {
    int tet;
    int exit_face;
    int edge;  // edge index within tet
    int va, vb;  // directed edge endpoints in tet (va -> vb)
};

inline std::vector<EdgeWalkStep> walk_edge(const Triangulation& tri, int t0, int e0) {
    auto [a0, b0] = kEdgeVerts[e0];
    // the two faces of t0 containing edge e0 are the complements of its endpoints
    int f_entry0 = -1, f_exit0 = -1;
    for (int f = 0; f < 4; ++f) {
        if (f == a0 || f == b0) continue;
        if (f_exit0 < 0)
            f_exit0 = f;
        else
            f_entry0 = f;
    }
    std::vector<EdgeWalkStep> steps;
    int t = t0, va = a0, vb = b0, entry = f_entry0;
    for (;;) {
        int exit = -1;
        for (int f = 0; f < 4; ++f)
            if (f != va && f != vb && f != entry) exit = f;
        steps.push_back({t, exit, edge_index(va, vb), va, vb});
        const FaceGluing& g = tri.glue[t][exit];
        if (!g.glued()) throw std::runtime_error("walk_edge hit an unglued face");
        int nt = g.nbr;
        int nva = g.map[va], nvb = g.map[vb];
        int nentry = g.map[exit];
        t = nt;
        va = nva;
        vb = nvb;
        entry = nentry;
        if (t == t0 && va == a0 && vb == b0 && entry == f_entry0) break;
        if (int(steps.size()) > 12 * tri.n + 2) throw std::runtime_error("walk_edge failed to close");
    }
    return steps;
}

}  // namespace census

#endif
