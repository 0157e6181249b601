#ifndef CENSUS_GLUINGS_HPP
#define CENSUS_GLUINGS_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include <census/isosig.hpp>
#include <census/quadgraph.hpp>
#include <census/triangulation.hpp>

namespace census {

struct GluingStats {
    long long raw = 0;        // label assignments tried
    long long closed = 0;     // passing the closed-orientable test
    long long distinct = 0;   // after signature dedup
};

// One triangulation per assignment of an orientation-reversing label to
// each graph edge (3 per edge), filtered to closed orientable manifolds
// and deduplicated by signature.  Tetrahedron t is graph vertex t; dart
// slot s of an oriented vertex maps to face s, with faces 0,1 swapped on
// vertices of negative orientation.
inline std::vector<Triangulation> enumerate_gluings(const OrientedQuadGraph& og, GluingStats* stats = nullptr,
                                                    std::map<std::string, Triangulation>* sink = nullptr) {
    const QuadGraph& g = og.graph;
    DartGraph dg = DartGraph::from(g);
    const int n = g.n;

    auto face_of = [&](int dart) {
        int v = dart / 4, s = dart % 4;
        if (og.orient[v] < 0) s = (s == 0) ? 1 : (s == 1) ? 0 : s;
        return std::make_pair(v, s);
    };

    // graph edges as dart pairs (each once)
    std::vector<std::pair<int, int>> edges;
    for (int d = 0; d < 4 * n; ++d)
        if (d < dg.mate[d]) edges.emplace_back(d, dg.mate[d]);

    std::map<std::string, Triangulation> local;
    std::map<std::string, Triangulation>& dedup = sink ? *sink : local;
    std::vector<int> choice(edges.size(), 0);
    for (;;) {
        Triangulation tri(n);
        for (size_t e = 0; e < edges.size(); ++e) {
            auto [t1, f1] = face_of(edges[e].first);
            auto [t2, f2] = face_of(edges[e].second);
            const Perm4& p = odd_gluings(f1, f2)[choice[e]];
            tri.glue[t1][f1] = FaceGluing{t2, p};
            tri.glue[t2][f2] = FaceGluing{t1, p.inverse()};
        }
        if (stats) stats->raw += 1;
        if (tri.valid_involution() && is_closed_orientable(tri)) {
            if (stats) stats->closed += 1;
            dedup.emplace(iso_signature(tri), tri);
        }
        size_t k = 0;
        while (k < edges.size() && ++choice[k] == 3) {
            choice[k] = 0;
            ++k;
        }
        if (k == edges.size()) break;
    }
    std::vector<Triangulation> out;
    if (!sink) {
        for (auto& [sig, tri] : dedup) out.push_back(tri);
        if (stats) stats->distinct += (long long)out.size();
    }
    return out;
}

// All closed orientable triangulations with n tetrahedra, up to
// isomorphism.
inline std::vector<Triangulation> enumerate_closed(int n, GluingStats* stats = nullptr) {
    std::map<std::string, Triangulation> dedup;
    for (const OrientedQuadGraph& og : enumerate_oriented_quad_graphs(n)) enumerate_gluings(og, stats, &dedup);
    std::vector<Triangulation> out;
    for (auto& [sig, tri] : dedup) out.push_back(tri);
    if (stats) stats->distinct = (long long)out.size();
    return out;
}

}  // namespace census

#endif
