#ifndef CENSUS_QUADGRAPH_HPP
#define CENSUS_QUADGRAPH_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace census {

// Connected 4-valent multigraph on up to 5 vertices; loops count twice
// towards the degree.  adj[i][i] holds the number of loops at i.
struct QuadGraph {
    int n = 0;
    std::array<std::array<uint8_t, 5>, 5> adj{};

    int degree(int v) const {
        int d = 2 * adj[v][v];
        for (int j = 0; j < n; ++j)
            if (j != v) d += adj[v][j];
        return d;
    }

    bool connected() const {
        if (n == 0) return false;
        std::array<int, 5> seen{};
        std::vector<int> stack{0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int j = 0; j < n; ++j)
                if (j != v && adj[v][j] > 0 && !seen[j]) {
                    seen[j] = 1;
                    ++count;
                    stack.push_back(j);
                }
        }
        return count == n;
    }

    std::string flat() const {
        std::string s;
        s.reserve(size_t(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j) s += char('0' + adj[i][j]);
        return s;
    }

    std::string canonical() const {
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::string best;
        do {
            std::string s;
            s.reserve(size_t(n) * n);
            for (int i = 0; i < n; ++i)
                for (int j = i; j < n; ++j) {
                    int a = perm[i], b = perm[j];
                    s += char('0' + adj[std::min(a, b)][std::max(a, b)]);
                }
            if (best.empty() || s < best) best = s;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    }

    bool operator==(const QuadGraph&) const = default;
};

// Half-edge view: each vertex owns 4 dart slots.  Slot order at a vertex:
// loop ends first (loop 0 end 0, loop 0 end 1, ...), then non-loop edge
// copies by increasing neighbour.
struct DartGraph {
    int n = 0;
    // dart id = 4*v + slot; mate[d] is the dart glued to d
    std::vector<int> mate;

    static DartGraph from(const QuadGraph& g) {
        DartGraph dg;
        dg.n = g.n;
        dg.mate.assign(4 * g.n, -1);
        std::array<int, 5> next{};
        auto take = [&](int v) { return 4 * v + next[v]++; };
        for (int i = 0; i < g.n; ++i)
            for (int l = 0; l < g.adj[i][i]; ++l) {
                int d1 = take(i), d2 = take(i);
                dg.mate[d1] = d2;
                dg.mate[d2] = d1;
            }
        for (int i = 0; i < g.n; ++i)
            for (int j = i + 1; j < g.n; ++j)
                for (int c = 0; c < g.adj[i][j]; ++c) {
                    int d1 = take(i), d2 = take(j);
                    dg.mate[d1] = d2;
                    dg.mate[d2] = d1;
                }
        return dg;
    }
};

// A graph automorphism refined to darts: a permutation of dart ids
// commuting with the mate involution and respecting vertex blocks.
using DartAut = std::vector<int>;

namespace detail {

inline void extend_dart_aut(const DartGraph& dg, const std::vector<int>& vperm, std::vector<int>& dmap,
                            std::vector<char>& used, int d, std::vector<DartAut>& out) {
    const int total = 4 * dg.n;
    while (d < total && dmap[d] >= 0) ++d;
    if (d == total) {
        out.push_back(dmap);
        return;
    }
    int v = d / 4;
    int tv = vperm[v];
    for (int slot = 0; slot < 4; ++slot) {
        int td = 4 * tv + slot;
        if (used[td]) continue;
        int m = dg.mate[d];
        int tm = dg.mate[td];
        // mate constraint: image of mate must be mate of image
        if (tm / 4 != vperm[m / 4]) continue;
        if (dmap[m] >= 0 && dmap[m] != tm) continue;
        if (dmap[m] < 0 && used[tm]) continue;
        dmap[d] = td;
        used[td] = 1;
        bool set_m = dmap[m] < 0;
        if (set_m) {
            dmap[m] = tm;
            used[tm] = 1;
        }
        extend_dart_aut(dg, vperm, dmap, used, d + 1, out);
        if (set_m) {
            dmap[m] = -1;
            used[tm] = 0;
        }
        dmap[d] = -1;
        used[td] = 0;
    }
}

}  // namespace detail

inline std::vector<DartAut> dart_automorphisms(const QuadGraph& g) {
    DartGraph dg = DartGraph::from(g);
    std::vector<DartAut> out;
    std::vector<int> perm(g.n);
    for (int i = 0; i < g.n; ++i) perm[i] = i;
    do {
        bool ok = true;
        for (int i = 0; i < g.n && ok; ++i)
            for (int j = i; j < g.n && ok; ++j) {
                int a = perm[i], b = perm[j];
                if (g.adj[i][j] != g.adj[std::min(a, b)][std::max(a, b)]) ok = false;
            }
        if (!ok) continue;
        std::vector<int> dmap(4 * g.n, -1);
        std::vector<char> used(4 * g.n, 0);
        detail::extend_dart_aut(dg, perm, dmap, used, 0, out);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

// Vertex orientations: one of two parity classes of orderings of the four
// darts at each vertex.  Stored as a +-1 per vertex relative to the slot
// order of DartGraph.
struct OrientedQuadGraph {
    QuadGraph graph;
    std::vector<int8_t> orient;  // size n, entries +-1
};

inline int slot_perm_parity(const DartAut& a, int v, int tv) {
    // parity of the induced map slot(v) -> slot(tv)
    std::array<int, 4> p{};
    for (int s = 0; s < 4; ++s) p[s] = a[4 * v + s] - 4 * tv;
    int inv = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (p[i] > p[j]) ++inv;
    return inv % 2 ? -1 : 1;
}

// All connected 4-valent multigraphs on n vertices, one per isomorphism
// class, emitted in canonical form.
inline std::vector<QuadGraph> enumerate_quad_graphs(int n) {
    if (n < 1 || n > 5) throw std::invalid_argument("enumerate_quad_graphs: n out of range 1..5");
    std::vector<QuadGraph> out;
    QuadGraph g;
    g.n = n;

    // positions: loops (i,i) then pairs (i,j), i<j
    std::vector<std::pair<int, int>> pos;
    for (int i = 0; i < n; ++i) pos.emplace_back(i, i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pos.emplace_back(i, j);

    std::vector<int> deg(n, 0);
    auto rec = [&](auto&& self, size_t k) -> void {
        if (k == pos.size()) {
            for (int v = 0; v < n; ++v)
                if (deg[v] != 4) return;
            if (!g.connected()) return;
            if (g.flat() != g.canonical()) return;
            out.push_back(g);
            return;
        }
        auto [i, j] = pos[k];
        int unit = (i == j) ? 2 : 1;
        int maxm = (i == j) ? 2 : 4;
        for (int m = 0; m <= maxm; ++m) {
            if (deg[i] + unit * m > 4) break;
            if (i != j && deg[j] + m > 4) break;
            g.adj[i][j] = uint8_t(m);
            if (i != j) g.adj[j][i] = uint8_t(m);
            deg[i] += unit * m;
            if (i != j) deg[j] += m;
            self(self, k + 1);
            deg[i] -= unit * m;
            if (i != j) deg[j] -= m;
        }
        g.adj[i][j] = 0;
        if (i != j) g.adj[j][i] = 0;
    };
    rec(rec, 0);
    return out;
}

// All (graph, vertex orientation) pairs up to isomorphism, where reversing
// every orientation at once (the mirror) is also an isomorphism: mirror
// pairs of gluing families produce the same unoriented triangulations, so
// one representative per mirror class suffices for a complete census.
inline std::vector<OrientedQuadGraph> enumerate_oriented_quad_graphs(int n) {
    std::vector<OrientedQuadGraph> out;
    for (const QuadGraph& g : enumerate_quad_graphs(n)) {
        std::vector<DartAut> auts = dart_automorphisms(g);
        int total = 1 << g.n;
        std::vector<char> seen(total, 0);
        for (int mask = 0; mask < total; ++mask) {
            if (seen[mask]) continue;
            // orbit of mask under automorphisms and the global reversal
            std::vector<int> orbit{mask};
            seen[mask] = 1;
            for (size_t idx = 0; idx < orbit.size(); ++idx) {
                for (int flip = 0; flip < 2; ++flip) {
                    int base = flip ? (orbit[idx] ^ (total - 1)) : orbit[idx];
                    for (const DartAut& a : auts) {
                        int img = 0;
                        for (int v = 0; v < g.n; ++v) {
                            int tv = a[4 * v] / 4;
                            int sign = ((base >> v) & 1) ? -1 : 1;
                            if (sign * slot_perm_parity(a, v, tv) < 0) img |= 1 << tv;
                        }
                        if (!seen[img]) {
                            seen[img] = 1;
                            orbit.push_back(img);
                        }
                    }
                }
            }
            OrientedQuadGraph og;
            og.graph = g;
            og.orient.assign(g.n, 1);
            for (int v = 0; v < g.n; ++v)
                if ((mask >> v) & 1) og.orient[v] = -1;
            out.push_back(std::move(og));
        }
    }
    return out;
}

}  // namespace census

#endif
