#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "arbor/graph.hpp"

namespace arbor {

using Coloring = std::map<int, int>;

struct ListAssignment {
    std::map<int, std::vector<int>> lists;  // per vertex, sorted

    static ListAssignment uniform(const std::vector<int>& vertices,
                                  std::vector<int> colors = {1, 2, 3});
    const std::vector<int>& at(int v) const;
    bool covers(const std::vector<int>& vertices) const;
};

// true iff every color class induces a forest; f must assign all of V(G)
bool is_arboreal(const SimpleGraph& g, const Coloring& f);
bool is_arboreal(const EmbeddedGraph& g, const Coloring& f);

struct SafeColors {
    std::vector<int> lemma_safe;  // at most one colored neighbor carries the color
    std::vector<int> exact_safe;  // colored neighbors lie in distinct class components
};

SafeColors safe_colors(const SimpleGraph& g, const Coloring& partial, int v,
                       const ListAssignment& L);

// Colors in reverse min-degree-peel order picking a safe color per vertex;
// requires back degrees at most 5 and lists of size at least 3. With an rng
// the pick among safe colors is randomized (still list-respecting).
Coloring greedy_color(const SimpleGraph& g, const ListAssignment& L,
                      std::mt19937_64* rng = nullptr);

// Exact count of arboreal list colorings by exhaustive search; optionally
// captures the colorings themselves in deterministic order.
long long brute_force_colorings(const SimpleGraph& g, const ListAssignment& L, int cap = 16,
                                std::vector<Coloring>* listing = nullptr);

}  // namespace arbor
