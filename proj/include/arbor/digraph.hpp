#pragma once

#include <random>
#include <set>
#include <utility>
#include <vector>

#include "arbor/coloring.hpp"
#include "arbor/graph.hpp"

namespace arbor {

// Loop-free directed graph. Digons (u->v->u) are representable; operations
// that assume their absence check and say so.
struct Digraph {
    std::set<int> verts;
    std::vector<std::pair<int, int>> arcs;

    static Digraph from_arcs(const std::vector<std::pair<int, int>>& arcs,
                             const std::vector<int>& extra_vertices = {});

    int n() const { return static_cast<int>(verts.size()); }
    std::vector<int> vertices() const { return {verts.begin(), verts.end()}; }
    bool has_digon() const;
};

// One arc per undirected edge, direction by coin flip: digon-free.
Digraph orient(const SimpleGraph& g, std::mt19937_64& rng);

// true iff every color class induces an acyclic subdigraph; f must be total
bool digraph_classes_acyclic(const Digraph& d, const Coloring& f);

// Exhaustive check for a k-coloring with acyclic classes. Rejects digons
// (DigonPresent) since a digon forces its endpoints apart in every valid
// coloring of interest here, and n > 12 (TooLarge).
bool digraph_chromatic_brute(const Digraph& d, int k);

}  // namespace arbor
