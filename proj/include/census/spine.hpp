#ifndef CENSUS_SPINE_HPP
#define CENSUS_SPINE_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include <census/marked.hpp>
#include <census/presentation.hpp>
#include <census/triangulation.hpp>

namespace census {

// Dual-spine bookkeeping: spine vertices are tetrahedra, spine edges are
// face classes, regions are edge classes; a region is pierced once by the
// graph exactly when its edge class is marked.
struct SpineView {
    int vertices = 0;
    int edges = 0;
    int regions = 0;
    std::vector<int> pierced;  // marked edge class ids

    static SpineView of(const Triangulation& tri, const Classes& cl, const std::vector<int>& marked) {
        SpineView s;
        s.vertices = tri.n;
        s.edges = int(cl.face_reps.size());
        s.regions = int(cl.edges.size());
        s.pierced = marked;
        return s;
    }
};

// Non-minimality witness: an unmarked edge class of valence i <= 3 whose
// incidences lie in i distinct tetrahedra (the configurations admitting the
// 3->2, 2->0 and 1->0 spine moves).
inline bool low_valence_condition(const EdgeClass& ec) {
    return ec.valence <= 3 && ec.distinct_tets == ec.valence;
}

inline std::optional<std::pair<int, int>> low_valence_obstruction(const Classes& cl,
                                                                  const std::vector<int>& marked) {
    for (const EdgeClass& ec : cl.edges) {
        if (std::binary_search(marked.begin(), marked.end(), ec.id)) continue;
        if (low_valence_condition(ec)) return std::make_pair(ec.id, ec.valence);
    }
    return std::nullopt;
}

// 2 -> 3 bistellar move on the face separating two distinct tetrahedra.
// Returns the new triangulation plus the marked set transported through
// the move (the new central edge is unmarked).
struct Move23Result {
    Triangulation tri;
    std::vector<int> marked;
};

inline Move23Result apply_move23(const Triangulation& tri, const Classes& cl, const std::vector<int>& marked,
                                 int t1, int f) {
    const FaceGluing& g0 = tri.glue[t1][f];
    if (!g0.glued() || g0.nbr == t1) throw std::invalid_argument("apply_move23: face must join two distinct tetrahedra");
    const int t2 = g0.nbr;
    const Perm4 sigma = g0.map;
    const int a = f;  // apex of t1 opposite the common face

    // even arrangement (a,p,q,r) of the corners of t1
    int p = -1, q = -1, r = -1;
    {
        int others[3], k = 0;
        for (int v = 0; v < 4; ++v)
            if (v != a) others[k++] = v;
        Perm4 arr(a, others[0], others[1], others[2]);
        if (arr.odd()) std::swap(others[1], others[2]);
        p = others[0];
        q = others[1];
        r = others[2];
    }

    const int n = tri.n;
    // old tetrahedra keep their indices except t1 and t2, which are replaced
    // by three new ones appended at the end; then everything is compacted.
    // new tets: N_pq (a,b,p,q), N_pr (b,a,p,r), N_qr (a,b,q,r)
    const int npq = 0, npr = 1, nqr = 2;  // local ids

    // corner hosting maps mu: new tet corners -> corners of t1 (with the
    // face corner opposite the outer face playing the missing apex role)
    // outer faces on the t1 side:
    //   N_qr face 1 covers t1 face p;  N_pq face 1 covers t1 face r;
    //   N_pr face 0 covers t1 face q.
    struct Outer {
        int local;    // local new tet id
        int nf;       // face of the new tet
        Perm4 mu;     // new corner -> t1 (or t2) corner
        int side;     // 0: t1, 1: t2
        int old_face; // face index in the old tet
    };
    auto mk = [&](int local, int nf, int c0, int c1, int c2, int c3, int side, int old_face) {
        return Outer{local, nf, Perm4(c0, c1, c2, c3), side, old_face};
    };
    std::vector<Outer> outers;
    outers.push_back(mk(nqr, 1, a, p, q, r, 0, p));
    outers.push_back(mk(npq, 1, a, r, p, q, 0, r));
    outers.push_back(mk(npr, 0, q, a, p, r, 0, q));
    // t2 side: conjugate by sigma and swap the apex roles (corner 0 <-> 1
    // in N_pq, N_qr; corners already swapped in N_pr)
    const Perm4 swap01(1, 0, 2, 3);
    for (int i = 0; i < 3; ++i) {
        Outer o = outers[i];
        Perm4 mu2;
        for (int c = 0; c < 4; ++c) mu2.img[c] = sigma[o.mu[swap01[c]]];
        int nf2 = swap01[o.nf];
        outers.push_back(Outer{o.local, nf2, mu2, 1, sigma[o.old_face]});
    }

    Move23Result out;
    // index map: old tets except t1,t2 keep order; new tets appended
    std::vector<int> old_to_new(n, -1);
    int idx = 0;
    for (int t = 0; t < n; ++t)
        if (t != t1 && t != t2) old_to_new[t] = idx++;
    const int base = idx;  // new tets at base+0,1,2
    out.tri = Triangulation(n + 1);

    // internal gluings of the bipyramid
    // N_pq face3 {a,b,p} <-> N_pr face3 {a,b,p}: 0->1,1->0,2->2,3->3
    out.tri.set_gluing(base + npq, 3, base + npr, Perm4(1, 0, 2, 3));
    // N_pr face2 {a,b,r} <-> N_qr face2 {a,b,r}: 0->1,1->0,2->2,3->3
    out.tri.set_gluing(base + npr, 2, base + nqr, Perm4(1, 0, 2, 3));
    // N_qr face3 {a,b,q} <-> N_pq face2 {a,b,q}: 0->0,1->1,2->3,3->2
    out.tri.set_gluing(base + nqr, 3, base + npq, Perm4(0, 1, 3, 2));

    // outer gluings: old partner of (side tet, old_face)
    auto host = [&](int side) { return side == 0 ? t1 : t2; };
    for (const Outer& o : outers) {
        int ot = host(o.side);
        const FaceGluing& old_g = tri.glue[ot][o.old_face];
        int partner = old_g.nbr;
        if (partner != t1 && partner != t2) {
            Perm4 nmap;
            for (int c = 0; c < 4; ++c) nmap.img[c] = old_g.map[o.mu[c]];
            out.tri.set_gluing(base + o.local, o.nf, old_to_new[partner], nmap);
        } else {
            // partner face is another outer face of the bipyramid
            int pside = (partner == t1) ? 0 : 1;
            int pface = old_g.map[o.old_face];
            const Outer* po = nullptr;
            for (const Outer& cand : outers)
                if (cand.side == pside && cand.old_face == pface) po = &cand;
            if (!po) throw std::runtime_error("apply_move23: inner self-gluing through the moved face");
            if (out.tri.glue[base + o.local][o.nf].glued()) continue;  // already set from the other side
            Perm4 nmap;
            Perm4 mu_inv = po->mu.inverse();
            for (int c = 0; c < 4; ++c) nmap.img[c] = mu_inv[old_g.map[o.mu[c]]];
            out.tri.set_gluing(base + o.local, o.nf, base + po->local, nmap);
        }
    }

    // untouched gluings between old tetrahedra
    for (int t = 0; t < n; ++t) {
        if (t == t1 || t == t2) continue;
        for (int ff = 0; ff < 4; ++ff) {
            const FaceGluing& g = tri.glue[t][ff];
            if (!g.glued() || g.nbr == t1 || g.nbr == t2) continue;
            if (out.tri.glue[old_to_new[t]][ff].glued()) continue;
            out.tri.set_gluing(old_to_new[t], ff, old_to_new[g.nbr], g.map);
        }
    }

    // transport the marking: find, for each marked class, a slot surviving
    // the move and look its class up in the new triangulation
    Classes ncl = compute_classes(out.tri);
    auto map_slot = [&](int t, int e) -> std::pair<int, int> {
        if (t != t1 && t != t2) return {old_to_new[t], e};
        // an edge of t1/t2 away from the interior face: express via an outer host
        auto [x, y] = kEdgeVerts[e];
        int side = (t == t1) ? 0 : 1;
        for (const Outer& o : outers) {
            if (o.side != side) continue;
            // mu maps new corners -> old corners; invert on {x,y}
            Perm4 inv = o.mu.inverse();
            int nx = inv[x], ny = inv[y];
            // the edge must avoid the virtual apex corner (the one playing
            // the removed face's opposite corner) -- that corner is o.nf's
            // opposite... the virtual corner is the one whose mu-image is
            // the old apex of the *other* side; instead just require the
            // new edge to lie on the outer face o.nf: i.e. nx,ny != o.nf
            if (nx == o.nf || ny == o.nf) continue;
            return {base + o.local, edge_index(nx, ny)};
        }
        throw std::runtime_error("apply_move23: marked edge lost (interior edge marked?)");
    };
    std::vector<int> nmarked;
    for (int m : marked) {
        auto [t, e] = cl.edges[m].slots.front();
        auto [nt, ne] = map_slot(t, e);
        nmarked.push_back(ncl.edge_class_of[6 * nt + ne]);
    }
    std::sort(nmarked.begin(), nmarked.end());
    nmarked.erase(std::unique(nmarked.begin(), nmarked.end()), nmarked.end());
    out.marked = std::move(nmarked);
    return out;
}

// One-step expansion test: some 2->3 move produces an unmarked edge class
// whose dual region admits a 2->0 or 1->0 move.  A hit certifies the input
// is not minimal.
inline bool expand_and_test(const Triangulation& tri, const Classes& cl, const std::vector<int>& marked) {
    for (int t = 0; t < tri.n; ++t)
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = tri.glue[t][f];
            if (!g.glued() || g.nbr == t) continue;
            if (g.nbr < t) continue;  // each face class once
            Move23Result res;
            try {
                res = apply_move23(tri, cl, marked, t, f);
            } catch (const std::exception&) {
                continue;
            }
            Classes ncl = compute_classes(res.tri);
            for (const EdgeClass& ec : ncl.edges) {
                if (std::binary_search(res.marked.begin(), res.marked.end(), ec.id)) continue;
                if (ec.valence <= 2 && ec.distinct_tets == ec.valence) return true;
            }
        }
    return false;
}

// Upper bound for the complexity of the graph exterior: puncture the
// marked regions of the dual spine; every tetrahedron meeting a marked
// edge stops being a spine vertex.  Always at most n-1 for an efficient
// nonempty marking.
inline int complement_complexity_bound(const Triangulation& tri, const Classes& cl,
                                       const std::vector<int>& marked) {
    if (marked.empty()) throw std::invalid_argument("complement_complexity_bound: empty marking");
    std::vector<char> touched(tri.n, 0);
    for (int m : marked)
        for (auto& [t, e] : cl.edges[m].slots) touched[t] = 1;
    int untouched = 0;
    for (int t = 0; t < tri.n; ++t)
        if (!touched[t]) ++untouched;
    return std::min(tri.n - 1, untouched);
}

// Presentation of the fundamental group from the dual spine: generators
// are face classes outside a spanning tree of the dual graph, relators the
// boundary words of the regions.  Dropping the relators of marked regions
// presents the fundamental group of the graph exterior.
inline Presentation spine_presentation(const Triangulation& tri, const Classes& cl,
                                       const std::vector<int>& marked, bool drop_marked) {
    const int n = tri.n;
    const int F = int(cl.face_reps.size());

    // spanning tree of the dual graph over face classes
    std::vector<char> in_tree(F, 0);
    std::vector<char> seen(n, 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (size_t h = 0; h < queue.size(); ++h) {
        int t = queue[h];
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = tri.glue[t][f];
            if (!g.glued() || seen[g.nbr]) continue;
            seen[g.nbr] = 1;
            in_tree[cl.face_class_of[4 * t + f]] = 1;
            queue.push_back(g.nbr);
        }
    }
    if (int(queue.size()) != n) throw std::runtime_error("spine_presentation: disconnected dual graph");

    std::vector<int> gen_of(F, 0);  // 0 when in tree, else 1-based generator id
    int gens = 0;
    for (int fc = 0; fc < F; ++fc)
        if (!in_tree[fc]) gen_of[fc] = ++gens;

    Presentation pres;
    pres.gens = gens;
    for (const EdgeClass& ec : cl.edges) {
        if (drop_marked && std::binary_search(marked.begin(), marked.end(), ec.id)) continue;
        auto [t0, e0] = ec.slots.front();
        Word w;
        for (const EdgeWalkStep& st : walk_edge(tri, t0, e0)) {
            int fc = cl.face_class_of[4 * st.tet + st.exit_face];
            if (gen_of[fc] == 0) continue;
            // crossing sign: +1 when leaving through the representative side
            int sign = (cl.face_reps[fc] == std::make_pair(st.tet, st.exit_face)) ? 1 : -1;
            // self-glued faces: both sides in the same tet; disambiguate by
            // face index
            w.push_back(sign * gen_of[fc]);
        }
        w = cyclic_reduce(std::move(w));
        if (!w.empty()) pres.relators.push_back(std::move(w));
    }
    return pres;
}

}  // namespace census

#endif
