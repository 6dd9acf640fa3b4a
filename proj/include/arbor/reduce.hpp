#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arbor/catalog.hpp"
#include "arbor/coloring.hpp"
#include "arbor/graph.hpp"
#include "arbor/match.hpp"
#include "arbor/rational.hpp"

namespace arbor {

// All ways to color the removed vertices from their lists so the whole graph
// stays arboreal, given a coloring f of everything else. Search walks the
// removed vertices in ascending order, pruning any partial assignment that
// already closes a monochromatic cycle, so the survivors come out in
// canonical (map-lexicographic) order. Throws TooLarge when |removed| > 9
// and PartialInput when f or the lists do not line up with V(G) - removed.
std::vector<Coloring> extend_all(const EmbeddedGraph& g, const std::vector<int>& removed,
                                 const Coloring& f, const ListAssignment& L);

struct ReducibleMatch {
    std::string id;
    Matching h;
    std::vector<int> removed;  // host vertices to delete, ascending
};

// find_configuration plus the removal set the matched entry prescribes. The
// removal can be a strict subset of the matched vertices (a double bad wheel
// keeps its pendant 4-vertex, a wheel with two low corners keeps the fourth
// rim vertex).
ReducibleMatch find_reducible(const EmbeddedGraph& g, const std::vector<Configuration>& catalog);

struct ReductionStep {
    EmbeddedGraph triangulation;  // snapshot the match was found in
    std::string config_id;
    Matching h;
    std::vector<int> removed;  // ascending, size 1..9
};

struct ReductionTrace {
    EmbeddedGraph input;
    std::vector<ReductionStep> steps;
    EmbeddedGraph base;  // residual graph, at most base_threshold vertices
    std::string base_source = "brute";
};

// Peels reducible configurations until at most base_threshold vertices
// remain: triangulate, match, delete, repeat. Plane inputs may be any simple
// plane graph. A projective input is consumed directly while it stays a
// triangulation (deletions can drop it back to the plane); anything else
// above the threshold is rejected with ProjectiveNotTriangulable rather than
// silently mishandled.
ReductionTrace reduce(const EmbeddedGraph& g, const ListAssignment& L,
                      const std::vector<Configuration>& catalog = builtin_catalog(),
                      int base_threshold = 9);

// Distinct arboreal list colorings of g obtained by replaying a reduction
// trace: brute-forced base colorings, then every step's extensions in
// reverse removal order. Colorings never revisit a vertex, so branches are
// distinct by construction. Stops once cap colorings are found.
std::vector<Coloring> enumerate_up_to(const EmbeddedGraph& g, const ListAssignment& L,
                                      std::size_t cap,
                                      const std::vector<Configuration>& catalog = builtin_catalog());

// Same, but demands exactly k results: throws ExhaustedBeforeK when the
// replay tree holds fewer than k colorings.
std::vector<Coloring> enumerate_colorings(const EmbeddedGraph& g, const ListAssignment& L,
                                          std::size_t k,
                                          const std::vector<Configuration>& catalog = builtin_catalog());

// Certified lower bound on log2(number of arboreal list colorings), from a
// trace whose steps each extend in at least two ways: steps + log2(bases),
// rounded down to a multiple of 1/9. The rounding is exact for the bound
// that matters: the result is >= n/9 iff the unrounded value is, because
// both sides then live on the same 1/9 grid. Throws UnverifiedStep unless
// every step's verified minimum is >= 2 and the base count is positive.
Rational certificate_exponent(const ReductionTrace& trace,
                              const std::vector<long long>& per_step_min_extensions,
                              long long base_count);

}  // namespace arbor
