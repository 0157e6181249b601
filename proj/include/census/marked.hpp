#ifndef CENSUS_MARKED_HPP
#define CENSUS_MARKED_HPP

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include <census/triangulation.hpp>

namespace census {

// A triangulation together with the set of edge classes forming the
// embedded graph G.
struct MarkedTriangulation {
    Triangulation tri;
    std::vector<int> marked;  // sorted edge class ids

    bool is_marked(int edge_class) const {
        return std::binary_search(marked.begin(), marked.end(), edge_class);
    }
};

inline std::vector<int> marked_degrees(const Classes& cl, const std::vector<int>& marked) {
    std::vector<int> deg(cl.vertices.size(), 0);
    for (int m : marked) {
        const EdgeClass& ec = cl.edges[m];
        deg[ec.endpoints[0]] += 1;
        deg[ec.endpoints[1]] += 1;
    }
    return deg;
}

enum class GraphTag { knot, link2, t2, h2, g4a, g4b, g4c, other };

inline const char* to_string(GraphTag t) {
    switch (t) {
        case GraphTag::knot: return "knot";
        case GraphTag::link2: return "link2";
        case GraphTag::t2: return "2t";
        case GraphTag::h2: return "2h";
        case GraphTag::g4a: return "4a";
        case GraphTag::g4b: return "4b";
        case GraphTag::g4c: return "4c";
        case GraphTag::other: return "other";
    }
    return "?";
}

// Abstract shape of the embedded graph: the trivalent part as a multigraph
// plus the number of isolated knot components.
struct EmbeddedGraphStructure {
    int trivalent_vertices = 0;
    // edges between trivalent vertices, endpoints as indices into a dense
    // renumbering of the degree-3 vertex classes; loops have both equal
    std::vector<std::pair<int, int>> edges;
    int knot_components = 0;

    // canonical adjacency signature of the trivalent multigraph
    std::string multigraph_signature() const;
};

inline std::string EmbeddedGraphStructure::multigraph_signature() const {
    const int k = trivalent_vertices;
    if (k == 0) return "knots:" + std::to_string(knot_components);
    std::array<std::array<int, 6>, 6> adj{};
    for (auto& [a, b] : edges) {
        adj[a][b]++;
        if (a != b) adj[b][a]++;
    }
    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    std::string best;
    do {
        std::string s;
        s.reserve(size_t(k) * k + 4);
        for (int i = 0; i < k; ++i)
            for (int j = i; j < k; ++j) s += char('0' + adj[perm[i]][perm[j]]);
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return "v" + std::to_string(k) + ":" + best + ":knots:" + std::to_string(knot_components);
}

// Efficiency test: every vertex class carries 2 or 3 marked edge ends,
// each degree-2 vertex carries exactly one marked loop (a knot component),
// and the marking is nonempty.  Returns the abstract structure on success.
inline std::optional<EmbeddedGraphStructure> check_efficient(const Classes& cl, const std::vector<int>& marked) {
    if (marked.empty()) return std::nullopt;
    std::vector<int> deg = marked_degrees(cl, marked);
    for (int d : deg)
        if (d != 2 && d != 3) return std::nullopt;

    EmbeddedGraphStructure st;
    std::vector<int> dense(cl.vertices.size(), -1);
    for (size_t v = 0; v < deg.size(); ++v)
        if (deg[v] == 3) dense[v] = st.trivalent_vertices++;

    std::vector<int> loops_at(cl.vertices.size(), 0);
    for (int m : marked) {
        const EdgeClass& ec = cl.edges[m];
        auto [a, b] = ec.endpoints;
        if (deg[a] == 3 && deg[b] == 3) {
            st.edges.emplace_back(dense[a], dense[b]);
        } else if (a == b && deg[a] == 2) {
            loops_at[a]++;
        } else {
            // a marked edge touching a degree-2 vertex must be that
            // vertex's knot loop; anything else breaks efficiency
            return std::nullopt;
        }
    }
    for (size_t v = 0; v < deg.size(); ++v) {
        if (deg[v] == 2) {
            if (loops_at[v] != 1) return std::nullopt;
            st.knot_components++;
        }
    }
    return st;
}

namespace detail {
// Canonical signatures of the abstract graph types realised in the tables.
// The two-vertex shapes are forced; the three 4-vertex shapes are pinned
// by where they show up in the counts (4a at complexity 2, 4b/4c at 4).
inline const std::string& sig_theta() {
    static const std::string s = [] {
        EmbeddedGraphStructure g;
        g.trivalent_vertices = 2;
        g.edges = {{0, 1}, {0, 1}, {0, 1}};
        return g.multigraph_signature();
    }();
    return s;
}
inline const std::string& sig_handcuff() {
    static const std::string s = [] {
        EmbeddedGraphStructure g;
        g.trivalent_vertices = 2;
        g.edges = {{0, 0}, {0, 1}, {1, 1}};
        return g.multigraph_signature();
    }();
    return s;
}
// 4a: the 4-cycle with two opposite edges doubled (octahedral graph dual);
// realised at complexity 2 in the sphere.
inline const std::string& sig_4a() {
    static const std::string s = [] {
        EmbeddedGraphStructure g;
        g.trivalent_vertices = 4;
        g.edges = {{0, 1}, {0, 1}, {2, 3}, {2, 3}, {0, 2}, {1, 3}};
        return g.multigraph_signature();
    }();
    return s;
}
// 4b: the complete graph K4.
inline const std::string& sig_4b() {
    static const std::string s = [] {
        EmbeddedGraphStructure g;
        g.trivalent_vertices = 4;
        g.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
        return g.multigraph_signature();
    }();
    return s;
}
// 4c: two handcuff-like lobes joined by a doubled middle edge.
inline const std::string& sig_4c() {
    static const std::string s = [] {
        EmbeddedGraphStructure g;
        g.trivalent_vertices = 4;
        g.edges = {{0, 0}, {0, 1}, {1, 2}, {1, 2}, {2, 3}, {3, 3}};
        return g.multigraph_signature();
    }();
    return s;
}
}  // namespace detail

inline GraphTag graph_type(const EmbeddedGraphStructure& st) {
    if (st.trivalent_vertices == 0) {
        if (st.knot_components == 1) return GraphTag::knot;
        if (st.knot_components == 2) return GraphTag::link2;
        return GraphTag::other;
    }
    if (st.knot_components > 0) return GraphTag::other;
    const std::string sig = st.multigraph_signature();
    if (sig == detail::sig_theta()) return GraphTag::t2;
    if (sig == detail::sig_handcuff()) return GraphTag::h2;
    if (sig == detail::sig_4a()) return GraphTag::g4a;
    if (sig == detail::sig_4b()) return GraphTag::g4b;
    if (sig == detail::sig_4c()) return GraphTag::g4c;
    return GraphTag::other;
}

}  // namespace census

#endif
