#include "arbor/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace arbor {

int EmbeddedGraph::m() const {
    std::size_t ends = 0;
    for (const auto& [v, nb] : rot) ends += nb.size();
    return static_cast<int>(ends / 2);
}

bool EmbeddedGraph::has_edge(int u, int v) const {
    auto it = rot.find(u);
    if (it == rot.end()) return false;
    return std::find(it->second.begin(), it->second.end(), v) != it->second.end();
}

int EmbeddedGraph::degree(int v) const {
    auto it = rot.find(v);
    if (it == rot.end()) throw InternalError("degree of unknown vertex " + std::to_string(v));
    return static_cast<int>(it->second.size());
}

std::vector<int> EmbeddedGraph::vertices() const {
    std::vector<int> out;
    out.reserve(rot.size());
    for (const auto& [v, nb] : rot) out.push_back(v);
    return out;
}

std::vector<std::pair<int, int>> EmbeddedGraph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (const auto& [v, nb] : rot)
        for (int u : nb)
            if (v < u) out.emplace_back(v, u);
    return out;
}

int EmbeddedGraph::components() const {
    std::set<int> seen;
    int c = 0;
    for (const auto& [start, nb0] : rot) {
        if (seen.count(start)) continue;
        ++c;
        std::queue<int> q;
        q.push(start);
        seen.insert(start);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int u : rot.at(v))
                if (seen.insert(u).second) q.push(u);
        }
    }
    return c;
}

namespace {

using RotMap = std::map<int, std::vector<int>>;
using NegSet = std::set<std::pair<int, int>>;

int edge_sign(const NegSet& neg, int u, int v) {
    return neg.count(edge_key(u, v)) ? -1 : 1;
}

// Face tracing over flags (directed edge, side). A flag walks the boundary of
// one face; the side flips whenever a negative edge is crossed. Every face is
// traced exactly twice, once per direction, and the two orbits are consumed
// together. Isolated vertices get a singleton walk so Euler counts work out.
std::vector<std::vector<int>> trace_faces(const RotMap& rot, const NegSet& neg) {
    std::vector<std::pair<int, int>> darts;
    std::map<std::pair<int, int>, int> dart_id;   // dart -> index into darts
    std::map<std::pair<int, int>, int> rot_pos;   // (v,u) -> index of u in rot[v]
    for (const auto& [v, nb] : rot) {
        for (std::size_t i = 0; i < nb.size(); ++i) {
            dart_id[{v, nb[i]}] = static_cast<int>(darts.size());
            darts.emplace_back(v, nb[i]);
            rot_pos[{v, nb[i]}] = static_cast<int>(i);
        }
    }

    auto flag_of = [&](int u, int v, int s) { return dart_id.at({u, v}) * 2 + (s < 0 ? 1 : 0); };
    auto step = [&](int u, int v, int s) {
        int s2 = s * edge_sign(neg, u, v);
        const std::vector<int>& rv = rot.at(v);
        int d = static_cast<int>(rv.size());
        int i = rot_pos.at({v, u});
        int j = s2 > 0 ? (i + d - 1) % d : (i + 1) % d;
        return std::tuple<int, int, int>(v, rv[j], s2);
    };

    std::vector<char> visited(darts.size() * 2, 0);
    std::vector<std::vector<int>> faces;
    // positive-side seeds first: on the plane every face is then reported in
    // the orientation the corner-insertion code assumes
    for (int s : {1, -1}) {
        for (std::size_t di = 0; di < darts.size(); ++di) {
            int f0 = static_cast<int>(di) * 2 + (s < 0 ? 1 : 0);
            if (visited[f0]) continue;
            std::vector<int> walk;
            int u = darts[di].first, v = darts[di].second, cs = s;
            do {
                visited[flag_of(u, v, cs)] = 1;
                walk.push_back(u);
                std::tie(u, v, cs) = step(u, v, cs);
            } while (flag_of(u, v, cs) != f0);
            // consume the mirror orbit (same face, opposite direction)
            int mu = darts[di].second, mv = darts[di].first;
            int ms = -s * edge_sign(neg, mu, mv);
            if (visited[flag_of(mu, mv, ms)])
                throw InternalError("self-mirror face orbit");
            int w0 = flag_of(mu, mv, ms);
            do {
                visited[flag_of(mu, mv, ms)] = 1;
                std::tie(mu, mv, ms) = step(mu, mv, ms);
            } while (flag_of(mu, mv, ms) != w0);
            faces.push_back(std::move(walk));
        }
    }
    for (const auto& [v, nb] : rot)
        if (nb.empty()) faces.push_back({v});
    return faces;
}

int euler_value(const EmbeddedGraph& g) {
    return g.n() - g.m() + static_cast<int>(g.faces.size());
}

void check_structure(const RotMap& rot) {
    for (const auto& [v, nb] : rot) {
        std::set<int> seen;
        for (int u : nb) {
            if (u == v) throw NonSimple("loop at vertex " + std::to_string(v));
            if (!seen.insert(u).second)
                throw NonSimple("parallel edge " + std::to_string(v) + "-" + std::to_string(u));
            auto it = rot.find(u);
            if (it == rot.end() ||
                std::find(it->second.begin(), it->second.end(), v) == it->second.end())
                throw InconsistentRotation(std::to_string(v) + " lists " + std::to_string(u) +
                                           " but not vice versa");
        }
    }
}

EmbeddedGraph assemble(RotMap rot, NegSet neg, Surface surface) {
    EmbeddedGraph g;
    g.surface = surface;
    g.rot = std::move(rot);
    g.neg = std::move(neg);
    g.faces = trace_faces(g.rot, g.neg);
    return g;
}

}  // namespace

EmbeddedGraph build_embedded(std::map<int, std::vector<int>> rotations,
                             std::set<std::pair<int, int>> negative_edges,
                             Surface surface) {
    check_structure(rotations);
    NegSet neg;
    for (auto [u, v] : negative_edges) {
        auto key = edge_key(u, v);
        auto it = rotations.find(key.first);
        if (it == rotations.end() ||
            std::find(it->second.begin(), it->second.end(), key.second) == it->second.end())
            throw InconsistentRotation("signature on missing edge " + std::to_string(u) + "-" +
                                       std::to_string(v));
        neg.insert(key);
    }
    if (surface == Surface::plane && !neg.empty())
        throw InconsistentRotation("negative signature on a plane graph");
    EmbeddedGraph g = assemble(std::move(rotations), std::move(neg), surface);
    int c = g.components();
    int want = surface == Surface::plane ? 2 * c : 2 * c - 1;
    if (euler_value(g) != want)
        throw EulerMismatch("n-m+f = " + std::to_string(euler_value(g)) + ", expected " +
                            std::to_string(want) + " for declared surface");
    return g;
}

bool is_triangulation(const EmbeddedGraph& g) {
    if (g.n() < 3 || g.components() != 1) return false;
    for (const auto& w : g.faces)
        if (w.size() != 3) return false;
    return true;
}

namespace {

// Inserts `nb` into rot[v] in the face corner identified by the arriving
// neighbor, i.e. between the corner's leaving edge and `arriving`.
void insert_at_corner(RotMap& rot, int v, int arriving, int nb) {
    auto& rv = rot[v];
    auto it = std::find(rv.begin(), rv.end(), arriving);
    if (it == rv.end()) throw InternalError("corner insertion: arriving edge missing");
    rv.insert(it, nb);
}

bool fan_ok(const RotMap& rot, const std::vector<int>& w, int a) {
    int L = static_cast<int>(w.size());
    int apex = w[a];
    std::set<int> targets;
    for (int k = 2; k <= L - 2; ++k) {
        int t = w[(a + k) % L];
        if (t == apex || !targets.insert(t).second) return false;
        const auto& ra = rot.at(apex);
        if (std::find(ra.begin(), ra.end(), t) != ra.end()) return false;
    }
    return true;
}

}  // namespace

EmbeddedGraph triangulate(const EmbeddedGraph& g) {
    if (g.surface != Surface::plane)
        throw ProjectiveNotTriangulable("triangulate handles plane graphs only");
    if (g.n() < 3) throw CannotTriangulateSimply("need at least 3 vertices");

    RotMap rot = g.rot;

    // join components first; any rotation gap is a valid corner for a new edge
    {
        std::set<int> seen;
        std::vector<int> reps;
        for (const auto& [start, nb0] : rot) {
            if (seen.count(start)) continue;
            reps.push_back(start);
            std::queue<int> q;
            q.push(start);
            seen.insert(start);
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (int u : rot.at(v))
                    if (seen.insert(u).second) q.push(u);
            }
        }
        for (std::size_t i = 1; i < reps.size(); ++i) {
            rot[reps[0]].push_back(reps[i]);
            rot[reps[i]].push_back(reps[0]);
        }
    }

    for (;;) {
        auto faces = trace_faces(rot, {});
        const std::vector<int>* work = nullptr;
        for (const auto& w : faces)
            if (w.size() > 3) { work = &w; break; }
        if (!work) break;
        const std::vector<int>& w = *work;
        int L = static_cast<int>(w.size());

        int apex = -1;
        for (int a = 0; a < L; ++a)
            if (fan_ok(rot, w, a)) { apex = a; break; }
        if (apex >= 0) {
            std::vector<int> targets;
            for (int k = 2; k <= L - 2; ++k) targets.push_back(w[(apex + k) % L]);
            for (int k = 2; k <= L - 2; ++k) {
                int c = (apex + k) % L;
                insert_at_corner(rot, w[c], w[(c + L - 1) % L], w[apex]);
            }
            auto& ra = rot[w[apex]];
            auto it = std::find(ra.begin(), ra.end(), w[(apex + L - 1) % L]);
            if (it == ra.end()) throw InternalError("fan apex corner missing");
            ra.insert(it, targets.begin(), targets.end());
            continue;
        }

        // no clean fan apex: fall back to a single chord, ears first
        bool added = false;
        for (int dist = 2; dist <= L / 2 && !added; ++dist) {
            for (int i = 0; i < L && !added; ++i) {
                int j = (i + dist) % L;
                int x = w[i], y = w[j];
                if (x == y) continue;
                const auto& rx = rot.at(x);
                if (std::find(rx.begin(), rx.end(), y) != rx.end()) continue;
                insert_at_corner(rot, x, w[(i + L - 1) % L], y);
                insert_at_corner(rot, y, w[(j + L - 1) % L], x);
                added = true;
            }
        }
        if (!added) throw InternalError("face admits no chord");
    }

    check_structure(rot);
    EmbeddedGraph out = assemble(std::move(rot), {}, Surface::plane);
    if (!is_triangulation(out)) throw InternalError("triangulate produced a non-triangulation");
    return out;
}

SimpleGraph SimpleGraph::from_edges(const std::vector<std::pair<int, int>>& edges,
                                    const std::vector<int>& extra_vertices) {
    std::map<int, std::set<int>> sets;
    for (auto [u, v] : edges) {
        if (u == v) throw NonSimple("loop at vertex " + std::to_string(u));
        sets[u].insert(v);
        sets[v].insert(u);
    }
    for (int v : extra_vertices) sets[v];
    SimpleGraph g;
    for (auto& [v, nb] : sets) g.adj[v] = std::vector<int>(nb.begin(), nb.end());
    return g;
}

int SimpleGraph::m() const {
    std::size_t ends = 0;
    for (const auto& [v, nb] : adj) ends += nb.size();
    return static_cast<int>(ends / 2);
}

bool SimpleGraph::has_edge(int u, int v) const {
    auto it = adj.find(u);
    if (it == adj.end()) return false;
    return std::binary_search(it->second.begin(), it->second.end(), v);
}

std::vector<int> SimpleGraph::vertices() const {
    std::vector<int> out;
    out.reserve(adj.size());
    for (const auto& [v, nb] : adj) out.push_back(v);
    return out;
}

SimpleGraph skeleton(const EmbeddedGraph& g) {
    SimpleGraph s;
    for (const auto& [v, nb] : g.rot) {
        std::vector<int> sorted = nb;
        std::sort(sorted.begin(), sorted.end());
        s.adj[v] = std::move(sorted);
    }
    return s;
}

DegeneracyOrder degeneracy_order(const SimpleGraph& g) {
    std::map<int, std::set<int>> adj;
    for (const auto& [v, nb] : g.adj) adj[v] = std::set<int>(nb.begin(), nb.end());

    DegeneracyOrder out;
    while (!adj.empty()) {
        int best = -1, bestdeg = -1;
        for (const auto& [v, nb] : adj) {
            int d = static_cast<int>(nb.size());
            if (bestdeg < 0 || d < bestdeg) { best = v; bestdeg = d; }
        }
        out.order.push_back(best);
        out.back_degree[best] = bestdeg;
        out.max_back_degree = std::max(out.max_back_degree, bestdeg);
        for (int u : adj[best]) adj[u].erase(best);
        adj.erase(best);
    }
    return out;
}

DegeneracyOrder degeneracy_order(const EmbeddedGraph& g) { return degeneracy_order(skeleton(g)); }

EmbeddedGraph delete_vertices(const EmbeddedGraph& g, const std::set<int>& s) {
    for (int v : s)
        if (!g.has_vertex(v)) throw InternalError("deleting unknown vertex " + std::to_string(v));

    RotMap rot;
    for (const auto& [v, nb] : g.rot) {
        if (s.count(v)) continue;
        std::vector<int> kept;
        for (int u : nb)
            if (!s.count(u)) kept.push_back(u);
        rot[v] = std::move(kept);
    }
    NegSet neg;
    for (const auto& e : g.neg)
        if (rot.count(e.first) && rot.count(e.second) &&
            std::find(rot[e.first].begin(), rot[e.first].end(), e.second) != rot[e.first].end())
            neg.insert(e);

    EmbeddedGraph out = assemble(std::move(rot), std::move(neg), g.surface);
    int c = out.components();
    int e = euler_value(out);
    if (g.surface == Surface::plane) {
        if (e != 2 * c) throw InternalError("plane deletion broke the Euler relation");
    } else if (out.neg.empty() && e == 2 * c) {
        out.surface = Surface::plane;  // crosscap no longer used
    } else if (e != 2 * c - 1 && e != 2 * c) {
        throw InternalError("projective deletion broke the Euler relation");
    }
    return out;
}

EmbeddedGraph mirror(const EmbeddedGraph& g) {
    RotMap rot = g.rot;
    for (auto& [v, nb] : rot) std::reverse(nb.begin(), nb.end());
    return assemble(std::move(rot), g.neg, g.surface);
}

namespace {

int parse_int(const std::string& tok, int lineno) {
    try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("line " + std::to_string(lineno) + ": expected integer, got '" + tok + "'");
    }
}

}  // namespace

ParsedInput parse_input(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_header = false;
    int declared_n = 0;
    Surface surface = Surface::plane;
    RotMap rot;
    NegSet neg;
    ParsedInput out;

    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string kw;
        if (!(ls >> kw)) continue;

        if (kw == "n") {
            std::string count, skw, stag;
            if (!(ls >> count >> skw >> stag) || skw != "surface")
                throw ParseError("line " + std::to_string(lineno) +
                                 ": header must be 'n <count> surface <plane|projective>'");
            declared_n = parse_int(count, lineno);
            if (stag == "plane") surface = Surface::plane;
            else if (stag == "projective") surface = Surface::projective;
            else throw ParseError("line " + std::to_string(lineno) + ": unknown surface '" + stag + "'");
            have_header = true;
        } else if (kw == "rot" || kw == "list") {
            std::string vtok;
            if (!(ls >> vtok) || vtok.back() != ':')
                throw ParseError("line " + std::to_string(lineno) + ": expected '<v>:'");
            int v = parse_int(vtok.substr(0, vtok.size() - 1), lineno);
            std::vector<int> items;
            std::string t;
            while (ls >> t) items.push_back(parse_int(t, lineno));
            if (kw == "rot") {
                if (rot.count(v))
                    throw ParseError("line " + std::to_string(lineno) + ": duplicate rotation for " +
                                     std::to_string(v));
                rot[v] = std::move(items);
            } else {
                out.lists[v] = std::move(items);
            }
        } else if (kw == "sign") {
            std::string a, b, val;
            if (!(ls >> a >> b >> val) || val != "-1")
                throw ParseError("line " + std::to_string(lineno) + ": expected 'sign <u> <v> -1'");
            neg.insert(edge_key(parse_int(a, lineno), parse_int(b, lineno)));
        } else if (kw == "arc") {
            std::string a, b;
            if (!(ls >> a >> b))
                throw ParseError("line " + std::to_string(lineno) + ": expected 'arc <u> <v>'");
            out.arcs.emplace_back(parse_int(a, lineno), parse_int(b, lineno));
        } else {
            throw ParseError("line " + std::to_string(lineno) + ": unknown keyword '" + kw + "'");
        }
    }
    if (!have_header) throw ParseError("missing 'n <count> surface <tag>' header");
    if (declared_n != static_cast<int>(rot.size()))
        throw ParseError("header declares " + std::to_string(declared_n) + " vertices, found " +
                         std::to_string(rot.size()) + " rotation lines");
    out.graph = build_embedded(std::move(rot), std::move(neg), surface);
    return out;
}

std::string serialize_graph(const EmbeddedGraph& g) {
    std::ostringstream os;
    os << "n " << g.n() << " surface " << (g.surface == Surface::plane ? "plane" : "projective")
       << "\n";
    for (const auto& [v, nb] : g.rot) {
        os << "rot " << v << ":";
        for (int u : nb) os << " " << u;
        os << "\n";
    }
    for (const auto& e : g.neg) os << "sign " << e.first << " " << e.second << " -1\n";
    return os.str();
}

}  // namespace arbor
