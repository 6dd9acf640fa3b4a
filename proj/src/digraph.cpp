#include "arbor/digraph.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "arbor/error.hpp"

namespace arbor {

Digraph Digraph::from_arcs(const std::vector<std::pair<int, int>>& arcs,
                           const std::vector<int>& extra_vertices) {
    Digraph d;
    for (auto [u, v] : arcs) {
        if (u == v) throw NonSimple("loop arc at vertex " + std::to_string(u));
        d.verts.insert(u);
        d.verts.insert(v);
        d.arcs.emplace_back(u, v);
    }
    for (int v : extra_vertices) d.verts.insert(v);
    return d;
}

bool Digraph::has_digon() const {
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : arcs) {
        if (seen.count({v, u})) return true;
        seen.insert({u, v});
    }
    return false;
}

Digraph orient(const SimpleGraph& g, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> arcs;
    for (auto& [u, nbrs] : g.adj)
        for (int v : nbrs) {
            if (u > v) continue;
            if (rng() % 2 == 0)
                arcs.emplace_back(u, v);
            else
                arcs.emplace_back(v, u);
        }
    return Digraph::from_arcs(arcs, g.vertices());
}

namespace {

// Kahn's algorithm on the subdigraph induced by one color class.
bool class_acyclic(const std::vector<int>& members,
                   const std::vector<std::pair<int, int>>& arcs) {
    std::map<int, int> indeg;
    for (int v : members) indeg[v] = 0;
    std::map<int, std::vector<int>> out;
    for (auto [u, v] : arcs) {
        if (indeg.count(u) && indeg.count(v)) {
            out[u].push_back(v);
            ++indeg[v];
        }
    }
    std::vector<int> queue;
    for (auto& [v, d] : indeg)
        if (d == 0) queue.push_back(v);
    std::size_t popped = 0;
    while (popped < queue.size()) {
        int v = queue[popped++];
        for (int w : out[v])
            if (--indeg[w] == 0) queue.push_back(w);
    }
    return popped == members.size();
}

}  // namespace

bool digraph_classes_acyclic(const Digraph& d, const Coloring& f) {
    std::map<int, std::vector<int>> classes;
    for (int v : d.verts) {
        auto it = f.find(v);
        if (it == f.end())
            throw PartialInput("no color for vertex " + std::to_string(v));
        classes[it->second].push_back(v);
    }
    for (auto& [c, members] : classes)
        if (!class_acyclic(members, d.arcs)) return false;
    return true;
}

bool digraph_chromatic_brute(const Digraph& d, int k) {
    if (d.has_digon()) throw DigonPresent("digraph contains a 2-cycle");
    if (d.n() > 12)
        throw TooLarge("exhaustive coloring capped at 12 vertices, got " +
                       std::to_string(d.n()));
    if (k < 1) return d.n() == 0;

    std::vector<int> vs = d.vertices();
    std::vector<int> pick(vs.size(), 1);
    while (true) {
        Coloring f;
        for (std::size_t i = 0; i < vs.size(); ++i) f[vs[i]] = pick[i];
        if (digraph_classes_acyclic(d, f)) return true;
        std::size_t i = 0;
        while (i < pick.size() && pick[i] == k) pick[i++] = 1;
        if (i == pick.size()) return false;
        ++pick[i];
    }
}

}  // namespace arbor
