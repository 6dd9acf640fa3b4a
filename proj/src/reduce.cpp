#include "arbor/reduce.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <set>

#include "arbor/union_find.hpp"

namespace arbor {

std::vector<Coloring> extend_all(const EmbeddedGraph& g, const std::vector<int>& removed,
                                 const Coloring& f, const ListAssignment& L) {
    std::vector<int> s = removed;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (s.size() > 9) throw TooLarge("removed set of " + std::to_string(s.size()) + " vertices");
    for (int v : s)
        if (!g.has_vertex(v)) throw PartialInput("removed vertex " + std::to_string(v) + " not in graph");
    if (!L.covers(s)) throw PartialInput("removed vertex without a color list");

    std::vector<int> verts = g.vertices();
    std::map<int, int> idx;
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) idx[verts[i]] = i;
    std::set<int> sset(s.begin(), s.end());
    for (int v : verts) {
        bool rem = sset.count(v) != 0;
        if (rem && f.count(v)) throw PartialInput("f colors removed vertex " + std::to_string(v));
        if (!rem && !f.count(v)) throw PartialInput("f misses vertex " + std::to_string(v));
    }

    int n = static_cast<int>(verts.size());
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : g.edges()) {
        adj[idx[u]].push_back(idx[v]);
        adj[idx[v]].push_back(idx[u]);
    }
    std::vector<int> color(n, 0);
    std::vector<char> colored(n, 0);
    for (const auto& [v, c] : f) {
        color[idx.at(v)] = c;
        colored[idx.at(v)] = 1;
    }

    // one forest index for all classes: only same-colored endpoints are ever
    // merged, so components stay monochromatic and a rejected merge is
    // exactly a cycle inside one class
    UnionFind uf(n);
    for (auto [u, v] : g.edges()) {
        int a = idx[u], b = idx[v];
        if (colored[a] && colored[b] && color[a] == color[b] && !uf.unite(a, b))
            return {};  // f itself closes a monochromatic cycle; nothing extends it
    }

    std::vector<Coloring> out;
    std::vector<int> pick(s.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == s.size()) {
            Coloring full = f;
            for (std::size_t j = 0; j < s.size(); ++j) full[s[j]] = pick[j];
            out.push_back(std::move(full));
            return;
        }
        int v = idx[s[i]];
        for (int c : L.at(s[i])) {
            int mark = uf.checkpoint();
            bool ok = true;
            for (int w : adj[v]) {
                if (colored[w] && color[w] == c && !uf.unite(v, w)) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                color[v] = c;
                colored[v] = 1;
                pick[i] = c;
                rec(i + 1);
                colored[v] = 0;
            }
            uf.rollback(mark);
        }
    };
    rec(0);
    return out;
}

ReducibleMatch find_reducible(const EmbeddedGraph& g, const std::vector<Configuration>& catalog) {
    ConfigMatch cm = find_configuration(g, catalog);
    const Configuration* cfg = nullptr;
    for (const Configuration& c : catalog)
        if (c.id == cm.id) cfg = &c;
    if (!cfg) throw InternalError("matched id missing from catalog");
    ReducibleMatch rm;
    rm.id = cm.id;
    rm.h = cm.h;
    for (const std::string& name : cfg->removal) rm.removed.push_back(cm.h.at(name));
    std::sort(rm.removed.begin(), rm.removed.end());
    return rm;
}

ReductionTrace reduce(const EmbeddedGraph& g, const ListAssignment& L,
                      const std::vector<Configuration>& catalog, int base_threshold) {
    if (base_threshold < 3) throw InternalError("base threshold below 3");
    if (!L.covers(g.vertices())) throw PartialInput("every vertex needs a color list");

    ReductionTrace tr;
    tr.input = g;
    EmbeddedGraph cur = g;
    while (cur.n() > base_threshold) {
        EmbeddedGraph t;
        if (is_triangulation(cur)) {
            t = cur;
        } else if (cur.surface == Surface::plane) {
            t = triangulate(cur);
        } else {
            throw ProjectiveNotTriangulable(
                "projective graph on " + std::to_string(cur.n()) +
                " vertices is not a triangulation; re-embedding is out of scope");
        }
        ReducibleMatch rm = find_reducible(t, catalog);
        tr.steps.push_back({t, rm.id, rm.h, rm.removed});
        cur = delete_vertices(t, std::set<int>(rm.removed.begin(), rm.removed.end()));
    }
    tr.base = cur;
    return tr;
}

std::vector<Coloring> enumerate_up_to(const EmbeddedGraph& g, const ListAssignment& L,
                                      std::size_t cap, const std::vector<Configuration>& catalog) {
    std::vector<Coloring> out;
    if (cap == 0) return out;
    ReductionTrace tr = reduce(g, L, catalog);
    std::vector<Coloring> bases;
    brute_force_colorings(skeleton(tr.base), L, 16, &bases);

    // replay: last-removed set is extended first, so each recursion level i
    // turns a coloring of steps[i].triangulation minus its removed set into
    // colorings of the whole snapshot
    std::function<bool(int, const Coloring&)> rec = [&](int i, const Coloring& f) {
        if (i < 0) {
            out.push_back(f);
            return out.size() >= cap;
        }
        const ReductionStep& st = tr.steps[i];
        for (const Coloring& e : extend_all(st.triangulation, st.removed, f, L))
            if (rec(i - 1, e)) return true;
        return false;
    };
    for (const Coloring& b : bases)
        if (rec(static_cast<int>(tr.steps.size()) - 1, b)) break;
    return out;
}

std::vector<Coloring> enumerate_colorings(const EmbeddedGraph& g, const ListAssignment& L,
                                          std::size_t k, const std::vector<Configuration>& catalog) {
    std::vector<Coloring> out = enumerate_up_to(g, L, k, catalog);
    if (out.size() < k) {
        throw ExhaustedBeforeK("replay tree holds " + std::to_string(out.size()) +
                               " colorings, requested " + std::to_string(k));
    }
    return out;
}

Rational certificate_exponent(const ReductionTrace& trace,
                              const std::vector<long long>& per_step_min_extensions,
                              long long base_count) {
    if (per_step_min_extensions.size() != trace.steps.size()) {
        throw UnverifiedStep("have " + std::to_string(per_step_min_extensions.size()) +
                             " extension counts for " + std::to_string(trace.steps.size()) +
                             " steps");
    }
    for (std::size_t i = 0; i < per_step_min_extensions.size(); ++i) {
        if (per_step_min_extensions[i] < 2) {
            throw UnverifiedStep("step " + std::to_string(i) + " extends in " +
                                 std::to_string(per_step_min_extensions[i]) + " ways");
        }
    }
    if (base_count < 1) throw UnverifiedStep("base coloring count must be positive");
    if (base_count > (1LL << 31)) throw TooLarge("base coloring count");

    // floor(9 * log2(base_count)) via exact limb arithmetic on base_count^9
    std::vector<std::uint32_t> limbs{1};
    for (int rep = 0; rep < 9; ++rep) {
        std::uint64_t carry = 0;
        for (std::uint32_t& limb : limbs) {
            std::uint64_t cur = static_cast<std::uint64_t>(limb) * base_count + carry;
            limb = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        while (carry) {
            limbs.push_back(static_cast<std::uint32_t>(carry & 0xffffffffu));
            carry >>= 32;
        }
    }
    int top = static_cast<int>(limbs.size()) - 1;
    std::int64_t p = 32LL * top;
    for (std::uint32_t t = limbs[top]; t > 1; t >>= 1) ++p;

    return Rational(9 * static_cast<std::int64_t>(trace.steps.size()) + p, 9);
}

}  // namespace arbor
