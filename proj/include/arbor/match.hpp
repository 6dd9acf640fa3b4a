#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "arbor/catalog.hpp"
#include "arbor/graph.hpp"

namespace arbor {

// Injective map from pattern vertex names to host vertices.
using Matching = std::map<std::string, int>;

struct ConfigMatch {
    std::string id;
    Matching h;
};

// Searches for an occurrence of the pattern in a triangulation: pattern edges
// map to edges, pattern faces to faces, and every host degree satisfies the
// vertex's constraint. Returns the lexicographically smallest image tuple in
// declaration order, or nothing. Throws NotATriangulation.
std::optional<Matching> match_config(const EmbeddedGraph& g, const Configuration& c);

// Rechecks a matching from scratch, sharing no code with the search.
bool verify_matching(const EmbeddedGraph& g, const Configuration& c, const Matching& h);

// First catalog entry that matches, in file order. Throws NoConfigurationFound
// with the serialized graph attached when nothing matches.
ConfigMatch find_configuration(const EmbeddedGraph& g, const std::vector<Configuration>& catalog);

}  // namespace arbor
