#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arbor/graph.hpp"

namespace arbor {

struct GeneratorParams {
    int n = 4;
    std::uint64_t seed = 0;
    int flips = -1;  // negative picks the default of 10 * n
};

// Random plane triangulation: stacked insertion into a random face up to n
// vertices, then random diagonal flips (illegal flips are skipped, not
// retried). Deterministic for fixed params. Without flips every output is
// stacked and so has a degree-3 vertex; the flips spread the degrees out.
EmbeddedGraph gen_triangulation(const GeneratorParams& params);

// Canonical key under relabeling and reflection: minimum breadth-first code
// over all starting darts and both rotation senses. Equal keys mean
// isomorphic embeddings; for 3-connected plane graphs that is graph
// isomorphism.
std::string canonical_code(const EmbeddedGraph& g);

// One representative per isomorphism class of plane triangulations on n
// vertices: breadth-first closure of the flip move from a stacked start
// (the flip graph on n-vertex triangulations is connected). Capped at
// n = 11; class counts explode beyond desk scale after that.
std::vector<EmbeddedGraph> triangulation_census(int n);

}  // namespace arbor
