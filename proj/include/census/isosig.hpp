#ifndef CENSUS_ISOSIG_HPP
#define CENSUS_ISOSIG_HPP

#include <algorithm>
#include <string>
#include <vector>

#include <census/triangulation.hpp>

namespace census {

// Relabel a triangulation: tet_map[t] is the new index of old tet t and
// corner_map[t] maps old corners of t to new corners.
inline Triangulation relabel(const Triangulation& tri, const std::vector<int>& tet_map,
                             const std::vector<Perm4>& corner_map) {
    Triangulation out(tri.n);
    for (int t = 0; t < tri.n; ++t)
        for (int f = 0; f < 4; ++f) {
            const FaceGluing& g = tri.glue[t][f];
            if (!g.glued()) continue;
            int nt = tet_map[t];
            int nf = corner_map[t][f];
            Perm4 nmap = corner_map[g.nbr].after(g.map).after(corner_map[t].inverse());
            out.glue[nt][nf] = FaceGluing{tet_map[g.nbr], nmap};
        }
    return out;
}

// Map a set of edge class ids through a relabeling: returns the sorted ids
// the marked classes carry in the relabeled triangulation's deterministic
// class numbering.
inline std::vector<int> relabel_marked(const Triangulation& tri, const Classes& cl,
                                       const std::vector<int>& marked, const std::vector<int>& tet_map,
                                       const std::vector<Perm4>& corner_map, const Classes& cl_new) {
    std::vector<int> out;
    out.reserve(marked.size());
    for (int m : marked) {
        auto [t, e] = cl.edges[m].slots.front();
        auto [a, b] = kEdgeVerts[e];
        int ne = edge_index(corner_map[t][a], corner_map[t][b]);
        out.push_back(cl_new.edge_class_of[6 * tet_map[t] + ne]);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

struct SigCandidate {
    std::string encoding;
    std::vector<int> marked;

    bool operator<(const SigCandidate& o) const {
        if (encoding != o.encoding) return encoding < o.encoding;
        return marked < o.marked;
    }
};

// Breadth-first canonical relabeling from a chosen start tetrahedron and
// corner relabeling; discovery gluings are normalised to the identity.
inline void bfs_labels(const Triangulation& tri, int start, const Perm4& rho, std::vector<int>& tet_map,
                       std::vector<Perm4>& corner_map) {
    const int n = tri.n;
    tet_map.assign(n, -1);
    corner_map.assign(n, Perm4());
    std::vector<int> order;
    order.reserve(n);
    tet_map[start] = 0;
    corner_map[start] = rho;
    order.push_back(start);
    std::vector<int> new_to_old(n, -1);
    new_to_old[0] = start;
    int next = 1;
    for (int u = 0; u < n && u < int(order.size()); ++u) {
        int t = new_to_old[u];
        for (int nf = 0; nf < 4; ++nf) {
            int f = corner_map[t].inverse()[nf];
            const FaceGluing& g = tri.glue[t][f];
            if (!g.glued()) continue;
            if (tet_map[g.nbr] < 0) {
                tet_map[g.nbr] = next;
                new_to_old[next] = g.nbr;
                corner_map[g.nbr] = corner_map[t].after(g.map.inverse());
                order.push_back(g.nbr);
                ++next;
            }
        }
    }
}

}  // namespace detail

// Canonical string for a marked triangulation: minimise, over every choice
// of start tetrahedron and its 24 corner relabelings, the breadth-first
// relabeled gluing table followed by the image of the marked set.  Two
// marked triangulations get equal strings iff they differ by a
// combinatorial isomorphism matching the markings.
inline std::string iso_signature(const Triangulation& tri, const std::vector<int>& marked = {}) {
    Classes cl = compute_classes(tri);
    bool have_best = false;
    detail::SigCandidate best;
    std::vector<int> tet_map;
    std::vector<Perm4> corner_map;
    for (int start = 0; start < tri.n; ++start) {
        for (const Perm4& rho : all_perms4()) {
            detail::bfs_labels(tri, start, rho, tet_map, corner_map);
            bool complete = std::all_of(tet_map.begin(), tet_map.end(), [](int x) { return x >= 0; });
            if (!complete) continue;  // disconnected: signature over component of start only would be wrong
            Triangulation rl = relabel(tri, tet_map, corner_map);
            detail::SigCandidate cand;
            cand.encoding.reserve(size_t(tri.n) * 24);
            for (int t = 0; t < tri.n; ++t)
                for (int f = 0; f < 4; ++f) {
                    const FaceGluing& g = rl.glue[t][f];
                    if (!g.glued()) {
                        cand.encoding += "x;";
                    } else {
                        cand.encoding += std::to_string(g.nbr);
                        cand.encoding += g.map.digits();
                        cand.encoding += ';';
                    }
                }
            if (!marked.empty()) {
                Classes cl_new = compute_classes(rl);
                cand.marked = relabel_marked(tri, cl, marked, tet_map, corner_map, cl_new);
            }
            if (!have_best || cand < best) {
                best = std::move(cand);
                have_best = true;
            }
        }
    }
    if (!have_best) throw std::runtime_error("iso_signature: disconnected triangulation");
    std::string s = std::to_string(tri.n) + "|" + best.encoding;
    if (!marked.empty()) {
        s += "m";
        for (size_t i = 0; i < best.marked.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(best.marked[i]);
        }
    }
    return s;
}

}  // namespace census

#endif
