#pragma once

#include <map>
#include <set>
#include <vector>

#include "arbor/error.hpp"
#include "arbor/graph.hpp"

namespace fixtures {

using arbor::EmbeddedGraph;
using arbor::Surface;

// Builds rotations from a consistently oriented face list (every edge must
// appear once in each direction across the faces). With the tracing
// convention used by the library, the leaving edge of a corner immediately
// precedes the arriving edge in the rotation, so within a face (..., x, v, y, ...)
// vertex y is chained right before x at v.
inline EmbeddedGraph from_oriented_faces(const std::vector<std::vector<int>>& faces,
                                         Surface surface = Surface::plane) {
    std::map<int, std::map<int, int>> before;  // at v: before[x] = y
    for (const auto& f : faces) {
        int k = static_cast<int>(f.size());
        for (int i = 0; i < k; ++i) {
            int x = f[(i + k - 1) % k], v = f[i], y = f[(i + 1) % k];
            if (!before[v].emplace(x, y).second)
                throw arbor::InternalError("face list not consistently oriented");
        }
    }
    std::map<int, std::vector<int>> rot;
    for (auto& [v, succ] : before) {
        std::vector<int> order;
        int start = succ.begin()->first;
        int cur = start;
        do {
            order.push_back(cur);
            cur = succ.at(cur);
        } while (cur != start && order.size() <= succ.size());
        if (order.size() != succ.size())
            throw arbor::InternalError("rotation at vertex does not close into one cycle");
        rot[v] = order;
    }
    return arbor::build_embedded(rot, {}, surface);
}

inline EmbeddedGraph triangle() {
    return from_oriented_faces({{0, 1, 2}, {0, 2, 1}});
}

inline EmbeddedGraph path3() {
    return arbor::build_embedded({{0, {1}}, {1, {0, 2}}, {2, {1}}}, {}, Surface::plane);
}

inline EmbeddedGraph cycle4() {
    return arbor::build_embedded({{0, {1, 3}}, {1, {2, 0}}, {2, {3, 1}}, {3, {0, 2}}}, {},
                                 Surface::plane);
}

inline EmbeddedGraph k4() {
    return from_oriented_faces({{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
}

inline EmbeddedGraph octahedron() {
    return from_oriented_faces({{0, 1, 2},
                                {0, 2, 3},
                                {0, 3, 4},
                                {0, 4, 1},
                                {5, 2, 1},
                                {5, 3, 2},
                                {5, 4, 3},
                                {5, 1, 4}});
}

// Vertices: 0 north pole, 1..5 upper ring, 6..10 lower ring, 11 south pole.
inline EmbeddedGraph icosahedron() {
    std::vector<std::vector<int>> faces;
    auto u = [](int i) { return 1 + (i % 5 + 5) % 5; };
    auto l = [](int i) { return 6 + (i % 5 + 5) % 5; };
    for (int i = 0; i < 5; ++i) {
        faces.push_back({0, u(i), u(i + 1)});
        faces.push_back({u(i + 1), u(i), l(i)});
        faces.push_back({l(i), l(i + 1), u(i + 1)});
        faces.push_back({11, l(i + 1), l(i)});
    }
    return from_oriented_faces(faces);
}

// Octahedron with every bottom face stacked: vertex 0 keeps degree 4 and
// its whole rim (1..4) is pushed to degree 6.
inline EmbeddedGraph stacked_octahedron() {
    return from_oriented_faces({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1},
                                {6, 5, 2}, {6, 2, 1}, {6, 1, 5},
                                {7, 5, 3}, {7, 3, 2}, {7, 2, 5},
                                {8, 5, 4}, {8, 4, 3}, {8, 3, 5},
                                {9, 5, 1}, {9, 1, 4}, {9, 4, 5}});
}

// Seven-spoke bipyramid (poles 0 and 1) with one apex corner face split by
// vertex 9. Degrees: 0 -> 8, 1 -> 7, 2 and 3 -> 5, rim 4..8 -> 4, 9 -> 3.
inline EmbeddedGraph split_bipyramid() {
    std::vector<std::vector<int>> fs;
    for (int i = 1; i < 7; ++i) fs.push_back({0, 2 + i, 2 + (i + 1) % 7});
    for (int i = 0; i < 7; ++i) fs.push_back({1, 2 + (i + 1) % 7, 2 + i});
    fs.push_back({9, 0, 2});
    fs.push_back({9, 2, 3});
    fs.push_back({9, 3, 0});
    return from_oriented_faces(fs);
}

// Unique vertex at graph distance 3 (icosahedron only).
inline int antipode(const EmbeddedGraph& g, int v) {
    std::map<int, int> dist;
    dist[v] = 0;
    std::vector<int> frontier{v};
    for (int d = 1; d <= 3; ++d) {
        std::vector<int> next;
        for (int x : frontier)
            for (int y : g.rot.at(x))
                if (!dist.count(y)) {
                    dist[y] = d;
                    next.push_back(y);
                }
        frontier = next;
    }
    int found = -1;
    for (auto [x, d] : dist)
        if (d == 3) {
            if (found >= 0) throw arbor::InternalError("antipode not unique");
            found = x;
        }
    if (found < 0) throw arbor::InternalError("no vertex at distance 3");
    return found;
}

// K6 on the projective plane, derived as the antipodal quotient of the
// icosahedron: quotient rotations come from one representative per vertex
// pair, and the edge signature is recovered by searching the 2^15 sign
// assignments for one that traces 10 triangular faces. The search is
// deterministic, so the fixture is stable.
inline EmbeddedGraph k6_projective() {
    EmbeddedGraph ico = icosahedron();
    std::map<int, int> rep;  // vertex -> class representative in 0..5
    for (int v : {0, 1, 2, 3, 4, 5}) {
        rep[v] = v;
        rep[antipode(ico, v)] = v;
    }
    std::map<int, std::vector<int>> rot;
    for (int v = 0; v < 6; ++v) {
        std::vector<int> r;
        for (int w : ico.rot.at(v)) r.push_back(rep.at(w));
        rot[v] = r;
    }
    std::vector<std::pair<int, int>> es;
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b) es.emplace_back(a, b);
    for (unsigned mask = 0; mask < (1u << 15); ++mask) {
        std::set<std::pair<int, int>> neg;
        for (int i = 0; i < 15; ++i)
            if (mask & (1u << i)) neg.insert(es[i]);
        try {
            EmbeddedGraph g = arbor::build_embedded(rot, neg, Surface::projective);
            if (g.faces.size() == 10 && arbor::is_triangulation(g)) return g;
        } catch (const arbor::Error&) {
        }
    }
    throw arbor::InternalError("no signature embeds K6 in the projective plane");
}

// Abstract complete graph as adjacency (for oracles that ignore embeddings).
inline std::map<int, std::vector<int>> complete_adj(int n) {
    std::map<int, std::vector<int>> adj;
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u)
            if (u != v) adj[v].push_back(u);
    return adj;
}

}  // namespace fixtures
