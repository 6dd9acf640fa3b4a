#include "arbor/match.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "arbor/error.hpp"

namespace arbor {

namespace {

std::array<int, 3> sorted_triple(int a, int b, int c) {
    std::array<int, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    return t;
}

struct Searcher {
    const EmbeddedGraph& g;
    const Configuration& c;
    int k;
    std::set<std::array<int, 3>> host_faces;
    // Per declaration index: earlier pattern neighbors, and pattern faces
    // whose last vertex (in declaration order) is this one.
    std::vector<std::vector<int>> earlier_nbrs;
    std::vector<std::vector<std::array<int, 3>>> faces_at;
    std::vector<int> img;
    std::set<int> used;

    Searcher(const EmbeddedGraph& graph, const Configuration& config)
        : g(graph), c(config), k(config.vertex_count()) {
        for (const auto& f : g.faces)
            if (f.size() == 3) host_faces.insert(sorted_triple(f[0], f[1], f[2]));

        std::map<std::string, int> decl;
        for (int i = 0; i < k; ++i) decl[c.vnames[i]] = i;

        earlier_nbrs.assign(k, {});
        for (const auto& [a, b] : c.edges) {
            int i = decl.at(a), j = decl.at(b);
            earlier_nbrs[std::max(i, j)].push_back(std::min(i, j));
        }
        faces_at.assign(k, {});
        for (const auto& f : c.faces) {
            std::array<int, 3> t{decl.at(f[0]), decl.at(f[1]), decl.at(f[2])};
            faces_at[std::max({t[0], t[1], t[2]})].push_back(t);
        }
        img.assign(k, -1);
    }

    bool admissible(int i, int v) const {
        if (used.count(v)) return false;
        if (!c.delta.at(c.vnames[i]).satisfied(g.degree(v))) return false;
        for (int j : earlier_nbrs[i])
            if (!g.has_edge(img[j], v)) return false;
        for (const auto& t : faces_at[i]) {
            int a = t[0] == i ? v : img[t[0]];
            int b = t[1] == i ? v : img[t[1]];
            int d = t[2] == i ? v : img[t[2]];
            if (!host_faces.count(sorted_triple(a, b, d))) return false;
        }
        return true;
    }

    bool extend(int i) {
        if (i == k) return true;
        std::vector<int> cands;
        if (earlier_nbrs[i].empty()) {
            cands = g.vertices();
        } else {
            cands = g.rot.at(img[earlier_nbrs[i][0]]);
            std::sort(cands.begin(), cands.end());
        }
        for (int v : cands) {
            if (!admissible(i, v)) continue;
            img[i] = v;
            used.insert(v);
            if (extend(i + 1)) return true;
            used.erase(v);
            img[i] = -1;
        }
        return false;
    }
};

}  // namespace

std::optional<Matching> match_config(const EmbeddedGraph& g, const Configuration& c) {
    if (!is_triangulation(g)) throw NotATriangulation("pattern search needs a triangulation");
    for (const auto& f : c.faces)
        if (f.size() != 3) return std::nullopt;
    if (c.vertex_count() > g.n()) return std::nullopt;

    Searcher s(g, c);
    if (!s.extend(0)) return std::nullopt;
    Matching h;
    for (int i = 0; i < s.k; ++i) h[c.vnames[i]] = s.img[i];
    return h;
}

bool verify_matching(const EmbeddedGraph& g, const Configuration& c, const Matching& h) {
    // Totality, image validity, injectivity.
    if (static_cast<int>(h.size()) != c.vertex_count()) return false;
    std::set<int> images;
    for (const auto& name : c.vnames) {
        auto it = h.find(name);
        if (it == h.end() || !g.has_vertex(it->second)) return false;
        if (!images.insert(it->second).second) return false;
    }
    // Degrees.
    for (const auto& name : c.vnames)
        if (!c.delta.at(name).satisfied(g.degree(h.at(name)))) return false;
    // Edges map to edges.
    for (const auto& [a, b] : c.edges)
        if (!g.has_edge(h.at(a), h.at(b))) return false;
    // Faces map to facial walks, read in either direction from any start.
    for (const auto& f : c.faces) {
        std::vector<int> want;
        for (const auto& name : f) want.push_back(h.at(name));
        int len = static_cast<int>(want.size());
        bool found = false;
        for (const auto& walk : g.faces) {
            if (static_cast<int>(walk.size()) != len) continue;
            for (int s = 0; s < len && !found; ++s) {
                bool fwd = true, bwd = true;
                for (int i = 0; i < len; ++i) {
                    fwd &= walk[(s + i) % len] == want[i];
                    bwd &= walk[(s + len - i) % len] == want[i];
                }
                found = fwd || bwd;
            }
            if (found) break;
        }
        if (!found) return false;
    }
    return true;
}

ConfigMatch find_configuration(const EmbeddedGraph& g, const std::vector<Configuration>& catalog) {
    if (!is_triangulation(g)) throw NotATriangulation("pattern search needs a triangulation");
    for (const auto& c : catalog) {
        auto h = match_config(g, c);
        if (h) return ConfigMatch{c.id, *h};
    }
    throw NoConfigurationFound("no catalog entry matches this triangulation:\n" +
                               serialize_graph(g));
}

}  // namespace arbor
