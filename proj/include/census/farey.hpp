#ifndef CENSUS_FAREY_HPP
#define CENSUS_FAREY_HPP

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include <census/homology.hpp>
#include <census/marked.hpp>
#include <census/triangulation.hpp>

namespace census {

// Slope a/b on the torus, normalised to b >= 0 with gcd(|a|,b) = 1; the
// slope 1/0 is infinity.
struct Slope {
    long long a = 0, b = 1;

    Slope() = default;
    Slope(long long num, long long den) : a(num), b(den) { normalize(); }

    void normalize() {
        if (a == 0 && b == 0) throw std::invalid_argument("slope 0/0");
        long long g = std::gcd(std::llabs(a), std::llabs(b));
        if (g > 1) {
            a /= g;
            b /= g;
        }
        if (b < 0) {
            a = -a;
            b = -b;
        }
        if (b == 0) a = 1;
    }

    bool operator==(const Slope&) const = default;
    auto operator<=>(const Slope&) const = default;
};

inline long long det(const Slope& s, const Slope& t) { return s.a * t.b - s.b * t.a; }

inline bool is_farey_neighbor(const Slope& s, const Slope& t) { return std::llabs(det(s, t)) == 1; }

// Unordered triple of pairwise Farey neighbours.
struct FareyTriangle {
    std::array<Slope, 3> v;

    FareyTriangle() = default;
    FareyTriangle(Slope x, Slope y, Slope z) : v{x, y, z} {
        std::sort(v.begin(), v.end());
        if (!is_farey_neighbor(v[0], v[1]) || !is_farey_neighbor(v[0], v[2]) || !is_farey_neighbor(v[1], v[2]))
            throw std::invalid_argument("not a Farey triangle");
    }

    bool contains(const Slope& s) const { return v[0] == s || v[1] == s || v[2] == s; }

    Slope opposite_of_edge(const Slope& x, const Slope& y) const {
        for (const Slope& s : v)
            if (!(s == x) && !(s == y)) return s;
        throw std::logic_error("edge not in triangle");
    }

    // flip across the edge not containing `out`: replaces `out` by the
    // mirror vertex on the other side
    FareyTriangle flip_out(const Slope& out) const {
        Slope x, y;
        int k = 0;
        Slope keep[2];
        for (const Slope& s : v)
            if (!(s == out)) keep[k++] = s;
        x = keep[0];
        y = keep[1];
        // the two triangles on edge (x,y) have third vertices x+y and x-y
        Slope sum(x.a + y.a, x.b + y.b);
        Slope diff(x.a - y.a, x.b - y.b);
        Slope fresh = (sum == out) ? diff : sum;
        return FareyTriangle(x, y, fresh);
    }

    bool operator==(const FareyTriangle&) const = default;
    auto operator<=>(const FareyTriangle&) const = default;
};

// A path f_1..f_k of adjacent triangles: anchors 0/1 off the f2 side and
// p/q off the f_(k-1) side; length k >= 4.
struct FareyPath {
    std::vector<FareyTriangle> tri;
    Slope target;  // p/q

    int length() const { return int(tri.size()); }
};

struct PathSearchResult {
    int lambda = 0;
    FareyPath path;
};

// Shortest triangle path from 0/1 to p/q through the optional via slope.
// Breadth-first over (triangle, via seen) seeded just past the forced
// first flip; slopes are pruned beyond a bound derived from the input
// sizes (detours through large slopes never help).  In buildable mode the
// via slope only counts where the layered construction realises it by an
// edge (it is ignored in the f2 stage when the next flip returns to f1).
inline PathSearchResult shortest_path(long long p, long long q, std::optional<Slope> via = std::nullopt,
                                      bool buildable = false) {
    if (std::gcd(std::llabs(p), std::llabs(q)) != 1) throw std::invalid_argument("shortest_path: p,q not coprime");
    const Slope start(0, 1);
    const Slope goal(p, q);
    if (via && (*via == start)) via.reset();  // trivially contained in f1

    long long bound = 4;
    bound = std::max(bound, std::llabs(p) + std::llabs(q));
    if (via) bound = std::max(bound, std::llabs(via->a) + std::llabs(via->b));
    bound = 3 * bound + 40;

    auto in_bound = [&](const FareyTriangle& t) {
        for (const Slope& s : t.v)
            if (std::llabs(s.a) > bound || s.b > bound) return false;
        return true;
    };

    using Key = std::pair<FareyTriangle, bool>;
    std::map<Key, Key> parent;                 // state -> previous state
    std::map<Key, FareyTriangle> seed_f1;      // seed state -> its f1
    std::map<Key, int> depth;
    std::deque<Key> queue;

    auto push = [&](const FareyTriangle& t, bool sv, int d, std::optional<Key> par) -> bool {
        Key key{t, sv};
        if (depth.count(key)) return false;
        depth[key] = d;
        if (par) parent[key] = *par;
        queue.push_back(key);
        return true;
    };

    // assemble the triangle list for a final state, padding with an f1,f2
    // repetition when the floor k >= 4 requires it
    auto finish = [&](const Key& last, const FareyTriangle& fk) {
        std::vector<FareyTriangle> rev{fk, last.first};
        Key cur = last;
        while (parent.count(cur)) {
            cur = parent[cur];
            rev.push_back(cur.first);
        }
        rev.push_back(seed_f1.at(cur));
        std::reverse(rev.begin(), rev.end());
        while (int(rev.size()) < 4) {
            if (!buildable) {
                rev.insert(rev.begin() + 2, {rev[0], rev[1]});
            } else {
                // detour that stays away from the f1 fan so the layered
                // construction applies
                FareyTriangle x = rev[1];
                for (const Slope& out : rev[1].v) {
                    FareyTriangle cand = rev[1].flip_out(out);
                    if (!cand.contains(start)) {
                        x = cand;
                        break;
                    }
                }
                rev.insert(rev.begin() + 2, {x, rev[1]});
            }
        }
        PathSearchResult res;
        res.lambda = int(rev.size());
        res.path.target = goal;
        res.path.tri = std::move(rev);
        return res;
    };

    // seeds: f2 = flip of a fan triangle f1 across the edge opposite 0/1
    for (long long k = -bound; k <= bound; ++k) {
        // fan neighbours of 0/1 in circular order: ..., -1/1, 1/0, 1/1, ...
        auto fan = [&](long long idx) -> Slope {
            if (idx == 0) return Slope(1, 0);
            if (idx > 0) return Slope(1, idx);
            return Slope(-1, -idx);
        };
        Slope u = fan(k), w = fan(k + 1);
        if (!is_farey_neighbor(u, w)) continue;
        FareyTriangle f1(start, u, w);
        if (!in_bound(f1)) continue;
        FareyTriangle f2 = f1.flip_out(start);
        if (!in_bound(f2)) continue;
        bool sv = !via;
        if (via && !buildable) sv = f1.contains(*via) || f2.contains(*via);
        if (push(f2, sv, 2, std::nullopt)) seed_f1.emplace(Key{f2, sv}, f1);
    }

    while (!queue.empty()) {
        Key key = queue.front();
        queue.pop_front();
        const FareyTriangle& t = key.first;
        bool seen = key.second;
        int d = depth[key];

        // goal: a flip introducing p/q ends the path
        if (!t.contains(goal)) {
            for (const Slope& out : t.v) {
                FareyTriangle nt = t.flip_out(out);
                if (!nt.contains(goal)) continue;
                bool sv = seen || !via || nt.contains(*via);
                if (!sv) continue;
                return finish(key, nt);
            }
        }

        for (const Slope& out : t.v) {
            FareyTriangle nt = t.flip_out(out);
            if (!in_bound(nt)) continue;
            bool sv = seen || !via;
            if (buildable && d == 2 && nt.contains(start)) continue;  // not realisable by layering
            if (via && !sv) {
                if (buildable && d == 2) {
                    // credit a via in f2 once the construction is known to keep it
                    sv = nt.contains(*via) || t.contains(*via);
                } else {
                    sv = nt.contains(*via);
                }
            }
            push(nt, sv, d + 1, key);
        }
    }
    throw std::runtime_error("shortest_path: no path within slope bound " + std::to_string(bound));
}

inline int lambda_of(long long l, long long m, long long p, long long q) {
    return shortest_path(p, q, Slope(l, m)).lambda;
}

// max(lambda - 3, 0): the layered-triangulation upper bound for the
// complexity of the pair.
inline int complexity_upper_bound(long long l, long long m, long long p, long long q) {
    if (std::gcd(std::llabs(l), std::llabs(m)) != 1) throw std::invalid_argument("knot slope not coprime");
    return std::max(shortest_path(p, q, Slope(l, m)).lambda - 3, 0);
}

// Fundamental group parameters of a torus knot exterior: (|l|, |pm - ql|).
inline std::pair<long long, long long> torus_knot_group_params(long long l, long long m, long long p, long long q) {
    if (std::gcd(std::llabs(l), std::llabs(m)) != 1 || std::gcd(std::llabs(p), std::llabs(q)) != 1)
        throw std::invalid_argument("torus_knot_group_params: slopes must be coprime");
    return {std::llabs(l), std::llabs(p * m - q * l)};
}

// Irreducibility of the pair: false exactly when the knot bounds a
// meridian disc in a lens space other than the sphere, or lies few times
// around in S2 x S1.
inline bool is_irreducible_torus_knot(long long l, long long m, long long p, long long q) {
    if (std::gcd(std::llabs(l), std::llabs(m)) != 1 || std::gcd(std::llabs(p), std::llabs(q)) != 1)
        throw std::invalid_argument("is_irreducible_torus_knot: slopes must be coprime");
    if ((l == 0 || p * m - q * l == 0) && q != 0) return false;
    if (std::llabs(l) <= 2 && p == 0) return false;
    return true;
}

namespace detail {

// Boundary bookkeeping while layering: the two free faces, the slopes of
// the three current boundary edge classes, and one representative edge
// slot per slope ever realised (slots persist; a slope reappearing later
// is isotopic to its first realisation, so the first slot serves for the
// marking).
struct LayerState {
    Triangulation tri;
    std::pair<int, int> bd_up, bd_down;                  // (tet, face)
    std::array<std::pair<int, Slope>, 3> bd;             // (edge class, slope)
    std::map<Slope, std::pair<int, int>> slot_of_slope;  // first realisation

    int bd_class_of(const Slope& s) const {
        for (auto& [cls, sl] : bd)
            if (sl == s) return cls;
        return -1;
    }
};

inline int third_corner(int f, int x, int y) {
    for (int c = 0; c < 4; ++c)
        if (c != f && c != x && c != y) return c;
    throw std::logic_error("third_corner");
}

// find the corner pair of the boundary face carrying the given edge class
inline std::pair<int, int> face_edge_of_class(const Triangulation& tri, const Classes& cl, int tet, int face,
                                              int cls) {
    for (int x = 0; x < 4; ++x)
        for (int y = x + 1; y < 4; ++y) {
            if (x == face || y == face) continue;
            if (cl.edge_class_of[6 * tet + edge_index(x, y)] == cls) return {x, y};
        }
    throw std::logic_error("face_edge_of_class: class not on face");
}

}  // namespace detail

// Layered triangulation of the lens space along the path, with the edge
// class realising knot_slope marked.  k triangles give k-3 tetrahedra,
// k-2 edge classes and one vertex.
inline MarkedTriangulation build_layered(const FareyPath& path, const Slope& knot_slope) {
    const int k = path.length();
    if (k < 4) throw std::invalid_argument("build_layered: path too short");
    const Slope anchor(0, 1);
    const Slope target = path.target;
    if (knot_slope == anchor || knot_slope == target)
        throw std::invalid_argument("build_layered: knot slope bounds a meridian disc");

    // check anchors
    if (!path.tri.front().contains(anchor)) throw std::invalid_argument("build_layered: f1 missing 0/1");
    if (!path.tri.back().contains(target)) throw std::invalid_argument("build_layered: fk missing p/q");

    detail::LayerState st;
    st.tri = Triangulation(1);

    auto register_slope = [&](const Slope& s, int tet, int edge) {
        st.slot_of_slope.emplace(s, std::make_pair(tet, edge));
    };

    // --- initial tetrahedron: realises the flip f2 -> f3 and the 0/1 anchor ---
    // fold: face 3 -> face 2 by the odd twist (0->1,1->3,2->0,3->2)
    {
        const FareyTriangle& f1 = path.tri[0];
        const FareyTriangle& f2 = path.tri[1];
        const FareyTriangle& f3 = path.tri[2];
        Slope out;  // f2 minus f3
        bool found = false;
        for (const Slope& s : f2.v)
            if (!f3.contains(s)) {
                out = s;
                found = true;
            }
        if (!found) throw std::invalid_argument("build_layered: f2 == f3");
        if (f3.contains(Slope(0, 1)))
            throw std::invalid_argument("build_layered: path returns to f1; not realisable by layering");
        Slope fresh;  // f3 minus f2
        for (const Slope& s : f3.v)
            if (!f2.contains(s)) fresh = s;
        Slope pa, pb;  // persisting pair f2 cap f3
        {
            int c = 0;
            Slope keep[2];
            for (const Slope& s : f2.v)
                if (f3.contains(s)) keep[c++] = s;
            if (c != 2) throw std::invalid_argument("build_layered: f2, f3 not adjacent");
            pa = keep[0];
            pb = keep[1];
        }
        st.tri.set_gluing(0, 3, 0, Perm4(1, 3, 0, 2));
        st.bd_up = {0, 0};
        st.bd_down = {0, 1};
        // classes: {01,02,13} (the interior edge folded onto a boundary
        // edge), {03,12}, and the fresh {23}
        if (out == Slope(0, 1)) throw std::logic_error("build_layered: anchor flipped out of f2");
        register_slope(fresh, 0, edge_index(2, 3));
        // The interior edge carries the flipped-out slope, and the fold
        // identifies it with the boundary edge of its f1-mate: the two
        // non-anchor slopes of f1 become one edge.  When the path steps
        // straight back (f3 = f1) both persisting slopes lie in f1 and are
        // isotopic to the core, so either assignment serves.
        Slope merged_slope = pa, plain_slope = pb;
        if (f1.contains(out)) {
            if (f1.contains(pb) && !f1.contains(pa)) {
                merged_slope = pb;
                plain_slope = pa;
            }
            register_slope(out, 0, edge_index(0, 1));
        }
        register_slope(merged_slope, 0, edge_index(0, 2));
        register_slope(plain_slope, 0, edge_index(0, 3));
        Classes cl = compute_classes(st.tri);
        st.bd = {std::make_pair(cl.edge_class_of[edge_index(0, 2)], merged_slope),
                 std::make_pair(cl.edge_class_of[edge_index(0, 3)], plain_slope),
                 std::make_pair(cl.edge_class_of[edge_index(2, 3)], fresh)};
    }

    // --- layer one tetrahedron per flip f_i -> f_(i+1), 3 <= i <= k-2 ---
    for (int i = 3; i <= k - 2; ++i) {
        const FareyTriangle& fi = path.tri[i - 1];
        const FareyTriangle& fnext = path.tri[i];
        Slope out;
        bool found = false;
        for (const Slope& s : fi.v)
            if (!fnext.contains(s)) {
                out = s;
                found = true;
            }
        if (!found) throw std::invalid_argument("build_layered: consecutive triangles equal");
        Slope fresh;
        for (const Slope& s : fnext.v)
            if (!fi.contains(s)) fresh = s;

        Classes cl = compute_classes(st.tri);
        // the boundary class carrying `out`
        int cls_out = st.bd_class_of(out);
        if (cls_out < 0) throw std::logic_error("build_layered: flipped slope not on boundary");

        auto [tu, fu] = st.bd_up;
        auto [td, fd] = st.bd_down;
        auto [ux, uy] = detail::face_edge_of_class(st.tri, cl, tu, fu, cls_out);
        auto [dx, dy] = detail::face_edge_of_class(st.tri, cl, td, fd, cls_out);
        int uz = detail::third_corner(fu, ux, uy);
        int dz = detail::third_corner(fd, dx, dy);

        const int m = st.tri.add_tet();
        // glue m.face3 (corners 0,1,2) onto bd_up with (0,1) on the out-edge
        {
            Perm4 map(ux, uy, uz, fu);
            if (!map.odd()) map = Perm4(uy, ux, uz, fu);
            st.tri.set_gluing(m, 3, tu, map);
        }
        // glue m.face2 (corners 0,1,3) onto bd_down likewise
        {
            Perm4 map(dx, dy, fd, dz);
            if (!map.odd()) map = Perm4(dy, dx, fd, dz);
            st.tri.set_gluing(m, 2, td, map);
        }
        st.bd_up = {m, 0};
        st.bd_down = {m, 1};
        register_slope(fresh, m, edge_index(2, 3));

        Classes ncl = compute_classes(st.tri);
        if (int(ncl.edges.size()) != int(cl.edges.size()) + 1)
            throw std::logic_error("build_layered: layering should add one edge class");
        // rebuild the boundary class table: persisting classes inherit
        // their slopes through any old slot
        std::array<std::pair<int, Slope>, 3> nbd;
        int at = 0;
        for (auto& [cls_old, s] : st.bd) {
            if (s == out) continue;
            auto [t0s, e0s] = cl.edges[cls_old].slots.front();
            nbd[at++] = {ncl.edge_class_of[6 * t0s + e0s], s};
        }
        if (at != 2) throw std::logic_error("build_layered: boundary update lost a class");
        nbd[2] = {ncl.edge_class_of[6 * m + edge_index(2, 3)], fresh};
        if (nbd[0].first == nbd[1].first || nbd[0].first == nbd[2].first || nbd[1].first == nbd[2].first)
            throw std::logic_error("build_layered: boundary classes degenerate");
        st.bd = nbd;
    }

    // --- closing fold: fill p/q by identifying the two boundary faces ---
    {
        const FareyTriangle& fkm1 = path.tri[k - 2];
        const FareyTriangle& fk = path.tri[k - 1];
        Slope s0;
        bool found = false;
        for (const Slope& s : fkm1.v)
            if (!fk.contains(s)) {
                s0 = s;
                found = true;
            }
        if (!found) throw std::invalid_argument("build_layered: f_(k-1) == f_k");
        Slope x, y;
        {
            int c = 0;
            Slope keep[2];
            for (const Slope& s : fkm1.v)
                if (fk.contains(s)) keep[c++] = s;
            if (c != 2) throw std::invalid_argument("build_layered: f_(k-1), f_k not adjacent");
            x = keep[0];
            y = keep[1];
        }
        Classes cl = compute_classes(st.tri);
        int cls_s0 = st.bd_class_of(s0);
        int cls_x = st.bd_class_of(x);
        int cls_y = st.bd_class_of(y);
        if (cls_s0 < 0 || cls_x < 0 || cls_y < 0) throw std::logic_error("build_layered: closing slopes missing");

        auto [tu, fu] = st.bd_up;
        auto [td, fd] = st.bd_down;
        // corner of a face opposite one of its edges = the corner on the
        // other two edges
        auto corner_opp = [&](int tet, int face, int cls) {
            auto [ex, ey] = detail::face_edge_of_class(st.tri, cl, tet, face, cls);
            return detail::third_corner(face, ex, ey);
        };
        int u_cx = corner_opp(tu, fu, cls_x), u_cy = corner_opp(tu, fu, cls_y), u_cs = corner_opp(tu, fu, cls_s0);
        int d_cx = corner_opp(td, fd, cls_x), d_cy = corner_opp(td, fd, cls_y), d_cs = corner_opp(td, fd, cls_s0);
        // fold around the s0 edge: corner over x maps to corner over y
        Perm4 map;
        map.img[u_cx] = uint8_t(d_cy);
        map.img[u_cy] = uint8_t(d_cx);
        map.img[u_cs] = uint8_t(d_cs);
        map.img[fu] = uint8_t(fd);
        if (!map.odd()) throw std::runtime_error("build_layered: closing fold not orientation-reversing");
        st.tri.set_gluing(tu, fu, td, map);
    }

    if (!is_closed_orientable(st.tri)) throw std::runtime_error("build_layered: result not a closed orientable manifold");
    Classes cl = compute_classes(st.tri);
    if (int(cl.edges.size()) != k - 2) throw std::runtime_error("build_layered: wrong edge count");
    if (cl.vertices.size() != 1) throw std::runtime_error("build_layered: wrong vertex count");
    // first homology must come out as Z/|p| (Z when p = 0)
    {
        AbGroup h1 = chain_h1(st.tri, cl);
        long long p_abs = std::llabs(target.a);
        AbGroup want = (p_abs == 0) ? AbGroup{1, {}} : (p_abs == 1 ? AbGroup{0, {}} : AbGroup{0, {p_abs}});
        if (!(h1 == want)) throw std::runtime_error("build_layered: homology check failed");
    }

    // the marked edge: the class that carried knot_slope at some stage
    int cls = -1;
    if (auto it = st.slot_of_slope.find(knot_slope); it != st.slot_of_slope.end())
        cls = cl.edge_class_of[6 * it->second.first + it->second.second];
    if (cls < 0) throw std::invalid_argument("build_layered: knot slope never on the boundary");
    MarkedTriangulation mt;
    mt.tri = st.tri;
    mt.marked = {cls};
    return mt;
}

// Convenience: layered marked triangulation of (L(p,q), K(l,m)), using a
// shortest path on which the knot slope is realised by an edge.
inline MarkedTriangulation layered_lens_knot(long long l, long long m, long long p, long long q) {
    PathSearchResult res = shortest_path(p, q, Slope(l, m), true);
    return build_layered(res.path, Slope(l, m));
}

}  // namespace census

#endif
