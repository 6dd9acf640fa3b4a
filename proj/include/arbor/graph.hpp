#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arbor/error.hpp"

namespace arbor {

enum class Surface { plane, projective };

inline std::pair<int, int> edge_key(int u, int v) {
    return u < v ? std::make_pair(u, v) : std::make_pair(v, u);
}

// Combinatorial embedding: clockwise neighbor order per vertex plus an edge
// signature for the projective plane (plane graphs have all-positive edges).
// Faces are traced once at construction and cached; the struct is treated as
// immutable afterwards.
struct EmbeddedGraph {
    Surface surface = Surface::plane;
    std::map<int, std::vector<int>> rot;
    std::set<std::pair<int, int>> neg;       // edges with signature -1, keys normalized
    std::vector<std::vector<int>> faces;     // closed facial walks, one vertex per edge step

    int n() const { return static_cast<int>(rot.size()); }
    int m() const;
    bool has_vertex(int v) const { return rot.count(v) != 0; }
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    int sign(int u, int v) const { return neg.count(edge_key(u, v)) ? -1 : 1; }
    std::vector<int> vertices() const;
    std::vector<std::pair<int, int>> edges() const;
    int components() const;
};

EmbeddedGraph build_embedded(std::map<int, std::vector<int>> rotations,
                             std::set<std::pair<int, int>> negative_edges,
                             Surface surface);

bool is_triangulation(const EmbeddedGraph& g);

EmbeddedGraph triangulate(const EmbeddedGraph& g);

// Adjacency-only view. Coloring oracles and degeneracy work on arbitrary
// simple graphs (K5, K7, ...), not just embeddable ones.
struct SimpleGraph {
    std::map<int, std::vector<int>> adj;  // neighbor lists kept sorted

    static SimpleGraph from_edges(const std::vector<std::pair<int, int>>& edges,
                                  const std::vector<int>& extra_vertices = {});

    int n() const { return static_cast<int>(adj.size()); }
    int m() const;
    bool has_vertex(int v) const { return adj.count(v) != 0; }
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj.at(v).size()); }
    std::vector<int> vertices() const;
};

SimpleGraph skeleton(const EmbeddedGraph& g);

struct DegeneracyOrder {
    std::vector<int> order;            // removal order, min-degree peel
    std::map<int, int> back_degree;    // neighbors later in the order
    int max_back_degree = 0;
};

DegeneracyOrder degeneracy_order(const SimpleGraph& g);
DegeneracyOrder degeneracy_order(const EmbeddedGraph& g);

EmbeddedGraph delete_vertices(const EmbeddedGraph& g, const std::set<int>& s);

// Mirror embedding: every rotation reversed. Signature unchanged.
EmbeddedGraph mirror(const EmbeddedGraph& g);

// Text format. Graph files may also carry digraph arcs and color lists; the
// parser collects them so one file can drive any CLI command.
struct ParsedInput {
    EmbeddedGraph graph;
    std::vector<std::pair<int, int>> arcs;
    std::map<int, std::vector<int>> lists;
};

ParsedInput parse_input(const std::string& text);
std::string serialize_graph(const EmbeddedGraph& g);

}  // namespace arbor
