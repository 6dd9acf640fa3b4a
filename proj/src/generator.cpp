#include "arbor/generator.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <utility>

#include "arbor/error.hpp"

namespace arbor {

namespace {

using Face = std::array<int, 3>;
using Dart = std::pair<int, int>;

// Oriented triangle soup with a dart index. All surgery happens here; the
// rotation system is only assembled once at the end.
struct Mesh {
    std::vector<Face> faces;
    std::map<Dart, int> face_of;  // directed edge -> owning face index

    static Mesh sphere() {
        Mesh m;
        m.push_face({0, 1, 2});
        m.push_face({2, 1, 0});
        return m;
    }

    void enter(std::size_t i) {
        const Face& f = faces[i];
        for (int k = 0; k < 3; ++k) face_of[{f[k], f[(k + 1) % 3]}] = static_cast<int>(i);
    }

    void push_face(Face f) {
        faces.push_back(f);
        enter(faces.size() - 1);
    }

    void drop_darts(std::size_t i) {
        const Face& f = faces[i];
        for (int k = 0; k < 3; ++k) face_of.erase({f[k], f[(k + 1) % 3]});
    }

    bool has_edge(int u, int v) const { return face_of.count({u, v}) != 0; }

    // New vertex w joined to the corners of face i, which splits in three.
    void insert_vertex(std::size_t i, int w) {
        Face f = faces[i];
        drop_darts(i);
        faces[i] = {f[0], f[1], w};
        enter(i);
        push_face({f[1], f[2], w});
        push_face({f[2], f[0], w});
    }

    static int third(const Face& f, int u, int v) {
        for (int k = 0; k < 3; ++k)
            if (f[k] != u && f[k] != v) return f[k];
        throw InternalError("degenerate face");
    }

    // Diagonal flip across the dart (u, v). Skipped when the replacement
    // diagonal already exists or the two side corners coincide.
    bool flip(int u, int v) {
        int i = face_of.at({u, v});
        int j = face_of.at({v, u});
        int x = third(faces[i], u, v);
        int y = third(faces[j], u, v);
        if (x == y || has_edge(x, y)) return false;
        drop_darts(i);
        drop_darts(j);
        faces[i] = {x, u, y};
        enter(i);
        faces[j] = {y, v, x};
        enter(j);
        // the moved diagonal must have swapped cleanly
        if (!face_of.count({x, y}) || !face_of.count({y, x}) ||
            face_of.count({u, v}) || face_of.count({v, u}))
            throw InternalError("flip left an inconsistent dart index");
        return true;
    }

    // Rotation from the face corners: inside a face (..., x, v, y, ...) the
    // leaving neighbor y chains right before the arriving neighbor x at v,
    // matching the library's face-tracing convention.
    EmbeddedGraph to_graph() const {
        std::map<int, std::map<int, int>> before;
        for (const Face& f : faces)
            for (int k = 0; k < 3; ++k) {
                int x = f[(k + 2) % 3], v = f[k], y = f[(k + 1) % 3];
                if (!before[v].emplace(x, y).second)
                    throw InternalError("face soup not consistently oriented");
            }
        std::map<int, std::vector<int>> rot;
        for (auto& [v, succ] : before) {
            std::vector<int> order;
            int start = succ.begin()->first;
            int cur = start;
            do {
                order.push_back(cur);
                cur = succ.at(cur);
            } while (cur != start && order.size() <= succ.size());
            if (order.size() != succ.size())
                throw InternalError("rotation does not close into one cycle");
            rot[v] = std::move(order);
        }
        return build_embedded(std::move(rot), {}, Surface::plane);
    }
};

}  // namespace

EmbeddedGraph gen_triangulation(const GeneratorParams& params) {
    if (params.n < 3) throw ParseError("generator needs n >= 3");
    Mesh mesh = Mesh::sphere();
    std::mt19937_64 rng(params.seed);
    for (int w = 3; w < params.n; ++w)
        mesh.insert_vertex(rng() % mesh.faces.size(), w);
    int flips = params.flips >= 0 ? params.flips : 10 * params.n;
    for (int t = 0; t < flips; ++t) {
        std::size_t i = rng() % mesh.faces.size();
        int k = static_cast<int>(rng() % 3);
        mesh.flip(mesh.faces[i][k], mesh.faces[i][(k + 1) % 3]);
    }
    EmbeddedGraph g = mesh.to_graph();
    if (!is_triangulation(g) || g.m() != 3 * g.n() - 6)
        throw InternalError("generator produced a non-triangulation");
    return g;
}

namespace {

// Breadth-first code from one dart: label vertices in discovery order and
// list each vertex's rotation starting at its discovery edge. dir = -1 reads
// rotations backwards, covering the mirror embedding.
void bfs_code(const EmbeddedGraph& g, int u, int v, int dir, std::vector<int>& out) {
    out.clear();
    std::map<int, int> label;
    std::vector<std::pair<int, int>> queue;  // (vertex, discovery neighbor)
    label[u] = 0;
    queue.emplace_back(u, v);
    for (std::size_t h = 0; h < queue.size(); ++h) {
        auto [w, entry] = queue[h];
        const std::vector<int>& r = g.rot.at(w);
        int d = static_cast<int>(r.size());
        int at = static_cast<int>(std::find(r.begin(), r.end(), entry) - r.begin());
        out.push_back(d);
        for (int s = 0; s < d; ++s) {
            int nb = r[((at + s * dir) % d + d) % d];
            auto [it, fresh] = label.emplace(nb, static_cast<int>(label.size()));
            if (fresh) queue.emplace_back(nb, w);
            out.push_back(it->second);
        }
    }
}

}  // namespace

std::string canonical_code(const EmbeddedGraph& g) {
    if (g.n() == 0) return "";
    std::vector<int> best, cur;
    for (const auto& [u, nbrs] : g.rot)
        for (int v : nbrs)
            for (int dir : {1, -1}) {
                bfs_code(g, u, v, dir, cur);
                if (best.empty() || cur < best) best.swap(cur);
            }
    std::string s;
    for (int x : best) {
        s += std::to_string(x);
        s += ',';
    }
    return s;
}

std::vector<EmbeddedGraph> triangulation_census(int n) {
    if (n < 3) throw ParseError("census needs n >= 3");
    if (n > 11)
        throw TooLarge("triangulation census capped at 11 vertices, got " +
                       std::to_string(n));
    Mesh start = Mesh::sphere();
    for (int w = 3; w < n; ++w) start.insert_vertex(0, w);

    std::vector<EmbeddedGraph> out;
    std::vector<Mesh> queue;
    std::set<std::string> seen;
    out.push_back(start.to_graph());
    seen.insert(canonical_code(out.back()));
    queue.push_back(std::move(start));
    for (std::size_t h = 0; h < queue.size(); ++h) {
        // copy: flips mutate, and the queue may reallocate underneath us
        Mesh base = queue[h];
        std::vector<Dart> darts;
        for (const auto& [d, i] : base.face_of)
            if (d.first < d.second) darts.push_back(d);
        for (Dart d : darts) {
            Mesh next = base;
            if (!next.flip(d.first, d.second)) continue;
            EmbeddedGraph g = next.to_graph();
            if (seen.insert(canonical_code(g)).second) {
                out.push_back(std::move(g));
                queue.push_back(std::move(next));
            }
        }
    }
    return out;
}

}  // namespace arbor
