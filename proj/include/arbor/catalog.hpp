#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace arbor {

enum class DegKind { exact, pair, atleast };

// Admissible host degrees for one pattern vertex. "pair k" accepts k-1 or k,
// "atleast k" is unbounded above.
struct DegreeConstraint {
    DegKind kind = DegKind::exact;
    int value = 0;

    bool satisfied(int deg) const;
    int min_value() const;
    // Largest admissible degree; meaningless for atleast (callers must check).
    int max_value() const;
    std::string str() const;
};

enum class ReduceKind { lemma, direct };

struct Configuration {
    std::string id;
    std::vector<std::string> vnames;  // declaration order, drives the matcher
    std::map<std::string, DegreeConstraint> delta;
    std::vector<std::pair<std::string, std::string>> edges;
    std::vector<std::vector<std::string>> faces;
    ReduceKind reduce_kind = ReduceKind::lemma;
    std::vector<std::string> removal;  // deletion order for the reducer

    int vertex_count() const { return static_cast<int>(vnames.size()); }
    bool has_vertex(const std::string& name) const;
    bool has_edge(const std::string& a, const std::string& b) const;
    int config_degree(const std::string& name) const;
    std::vector<std::string> neighbors(const std::string& name) const;
};

// Parses and fully validates a catalog. Throws ParseError (with line number)
// on malformed input or an unusable deletion order, DeltaBelowDegree when a
// constraint admits a degree below the vertex's degree inside the pattern.
std::vector<Configuration> parse_catalog(const std::string& text);

const std::string& builtin_catalog_text();
const std::vector<Configuration>& builtin_catalog();

}  // namespace arbor
