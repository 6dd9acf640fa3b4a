#include "arbor/coloring.hpp"

#include <algorithm>

#include "arbor/union_find.hpp"

namespace arbor {

ListAssignment ListAssignment::uniform(const std::vector<int>& vertices,
                                       std::vector<int> colors) {
    std::sort(colors.begin(), colors.end());
    ListAssignment L;
    for (int v : vertices) L.lists[v] = colors;
    return L;
}

const std::vector<int>& ListAssignment::at(int v) const {
    auto it = lists.find(v);
    if (it == lists.end())
        throw InternalError("no color list for vertex " + std::to_string(v));
    return it->second;
}

bool ListAssignment::covers(const std::vector<int>& vertices) const {
    for (int v : vertices)
        if (!lists.count(v)) return false;
    return true;
}

namespace {

std::map<int, int> dense_index(const SimpleGraph& g) {
    std::map<int, int> idx;
    int k = 0;
    for (const auto& [v, nb] : g.adj) idx[v] = k++;
    return idx;
}

}  // namespace

bool is_arboreal(const SimpleGraph& g, const Coloring& f) {
    for (const auto& [v, nb] : g.adj)
        if (!f.count(v)) throw PartialInput("vertex " + std::to_string(v) + " is uncolored");
    auto idx = dense_index(g);
    std::map<int, UnionFind> class_forest;
    for (const auto& [v, nb] : g.adj) {
        for (int u : nb) {
            if (u < v || f.at(u) != f.at(v)) continue;
            UnionFind& uf = class_forest.try_emplace(f.at(v), g.n()).first->second;
            if (!uf.unite(idx.at(v), idx.at(u))) return false;
        }
    }
    return true;
}

bool is_arboreal(const EmbeddedGraph& g, const Coloring& f) {
    return is_arboreal(skeleton(g), f);
}

SafeColors safe_colors(const SimpleGraph& g, const Coloring& partial, int v,
                       const ListAssignment& L) {
    SafeColors out;
    auto idx = dense_index(g);
    for (int c : L.at(v)) {
        std::vector<int> carriers;
        for (int u : g.adj.at(v)) {
            auto it = partial.find(u);
            if (it != partial.end() && it->second == c) carriers.push_back(u);
        }
        if (carriers.size() <= 1) out.lemma_safe.push_back(c);

        if (carriers.size() <= 1) {
            out.exact_safe.push_back(c);
            continue;
        }
        UnionFind uf(g.n());
        for (const auto& [x, nb] : g.adj) {
            auto fx = partial.find(x);
            if (fx == partial.end() || fx->second != c) continue;
            for (int y : nb) {
                if (y >= x) continue;
                auto fy = partial.find(y);
                if (fy != partial.end() && fy->second == c) uf.unite(idx.at(x), idx.at(y));
            }
        }
        bool distinct = true;
        for (std::size_t i = 0; i < carriers.size() && distinct; ++i)
            for (std::size_t j = i + 1; j < carriers.size() && distinct; ++j)
                if (uf.same(idx.at(carriers[i]), idx.at(carriers[j]))) distinct = false;
        if (distinct) out.exact_safe.push_back(c);
    }
    return out;
}

Coloring greedy_color(const SimpleGraph& g, const ListAssignment& L, std::mt19937_64* rng) {
    DegeneracyOrder d = degeneracy_order(g);
    if (d.max_back_degree > 5)
        throw DegeneracyTooHigh("max back degree " + std::to_string(d.max_back_degree));
    Coloring f;
    for (auto it = d.order.rbegin(); it != d.order.rend(); ++it) {
        int v = *it;
        if (static_cast<int>(L.at(v).size()) < 3)
            throw InternalError("greedy coloring needs lists of size 3");
        SafeColors sc = safe_colors(g, f, v, L);
        if (sc.lemma_safe.empty())
            throw InternalError("no safe color despite bounded back degree");
        std::size_t pick = rng ? static_cast<std::size_t>((*rng)() % sc.lemma_safe.size()) : 0;
        f[v] = sc.lemma_safe[pick];
    }
    return f;
}

namespace {

struct BruteSearch {
    const SimpleGraph& g;
    const ListAssignment& L;
    std::vector<int> order;               // BFS over each component, lowest id first
    std::map<int, int> idx;
    std::map<int, UnionFind> forests;     // one per palette color
    std::vector<int> color_of;            // dense, -1 = unassigned
    std::vector<Coloring>* listing;
    long long count = 0;

    BruteSearch(const SimpleGraph& g_, const ListAssignment& L_, std::vector<Coloring>* out)
        : g(g_), L(L_), idx(dense_index(g_)), color_of(g_.n(), -1), listing(out) {
        std::set<int> seen;
        for (const auto& [s, nb0] : g.adj) {
            if (seen.count(s)) continue;
            std::vector<int> queue{s};
            seen.insert(s);
            for (std::size_t h = 0; h < queue.size(); ++h) {
                order.push_back(queue[h]);
                for (int u : g.adj.at(queue[h]))
                    if (seen.insert(u).second) queue.push_back(u);
            }
        }
        for (const auto& [v, colors] : L.lists)
            for (int c : colors) forests.try_emplace(c, g.n());
    }

    void run(std::size_t pos) {
        if (pos == order.size()) {
            ++count;
            if (listing) {
                Coloring f;
                for (const auto& [v, i] : idx) f[v] = color_of[i];
                listing->push_back(std::move(f));
            }
            return;
        }
        int v = order[pos];
        int vi = idx.at(v);
        for (int c : L.at(v)) {
            UnionFind& uf = forests.at(c);
            int mark = uf.checkpoint();
            bool ok = true;
            for (int u : g.adj.at(v)) {
                int ui = idx.at(u);
                if (color_of[ui] != c) continue;
                if (!uf.unite(vi, ui)) { ok = false; break; }
            }
            if (ok) {
                color_of[vi] = c;
                run(pos + 1);
                color_of[vi] = -1;
            }
            uf.rollback(mark);
        }
    }
};

}  // namespace

long long brute_force_colorings(const SimpleGraph& g, const ListAssignment& L, int cap,
                                std::vector<Coloring>* listing) {
    if (g.n() > cap)
        throw TooLarge(std::to_string(g.n()) + " vertices exceeds the oracle cap " +
                       std::to_string(cap));
    if (!L.covers(g.vertices())) throw InternalError("list assignment misses vertices");
    if (g.n() == 0) {
        if (listing) listing->push_back({});
        return 1;
    }
    BruteSearch search(g, L, listing);
    search.run(0);
    return search.count;
}

}  // namespace arbor
