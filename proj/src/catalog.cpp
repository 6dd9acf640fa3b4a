#include "arbor/catalog.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "arbor/error.hpp"

namespace arbor {

bool DegreeConstraint::satisfied(int deg) const {
    switch (kind) {
        case DegKind::exact:
            return deg == value;
        case DegKind::pair:
            return deg == value || deg == value - 1;
        case DegKind::atleast:
            return deg >= value;
    }
    return false;
}

int DegreeConstraint::min_value() const {
    return kind == DegKind::pair ? value - 1 : value;
}

int DegreeConstraint::max_value() const {
    if (kind == DegKind::atleast) throw InternalError("max_value on atleast constraint");
    return value;
}

std::string DegreeConstraint::str() const {
    const char* k = kind == DegKind::exact ? "exact" : kind == DegKind::pair ? "pair" : "atleast";
    return std::string(k) + " " + std::to_string(value);
}

bool Configuration::has_vertex(const std::string& name) const {
    return delta.count(name) > 0;
}

bool Configuration::has_edge(const std::string& a, const std::string& b) const {
    for (const auto& [x, y] : edges)
        if ((x == a && y == b) || (x == b && y == a)) return true;
    return false;
}

int Configuration::config_degree(const std::string& name) const {
    int d = 0;
    for (const auto& [x, y] : edges) d += (x == name) + (y == name);
    return d;
}

std::vector<std::string> Configuration::neighbors(const std::string& name) const {
    std::vector<std::string> out;
    for (const auto& [x, y] : edges) {
        if (x == name) out.push_back(y);
        if (y == name) out.push_back(x);
    }
    return out;
}

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
    throw ParseError("line " + std::to_string(line) + ": " + msg);
}

std::vector<std::string> tokenize(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream in(body);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

int parse_int(const std::string& tok, int line) {
    size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
        fail(line, "expected an integer, got '" + tok + "'");
    }
    if (pos != tok.size()) fail(line, "expected an integer, got '" + tok + "'");
    return v;
}

// A lemma deletion order is usable when, deleting left to right, every vertex
// still has at most 5 pattern-or-outside neighbors at its turn and some vertex
// has at most 3. Outside neighbors are bounded via the degree constraint, so
// the bound for v is max admissible degree minus the later-deleted neighbors.
void check_lemma_order(const Configuration& c, int line) {
    std::set<std::string> later(c.removal.begin(), c.removal.end());
    bool some_low = false;
    for (const auto& name : c.removal) {
        later.erase(name);
        const DegreeConstraint& dc = c.delta.at(name);
        if (dc.kind == DegKind::atleast)
            fail(line, "config " + c.id + ": vertex " + name +
                           " has an unbounded degree constraint, unusable in a lemma order");
        int removed_later = 0;
        for (const auto& nb : c.neighbors(name)) removed_later += later.count(nb);
        int bound = dc.max_value() - removed_later;
        if (bound > 5)
            fail(line, "config " + c.id + ": vertex " + name + " may keep degree " +
                           std::to_string(bound) + " > 5 at its deletion step");
        if (bound <= 3) some_low = true;
    }
    if (!some_low)
        fail(line, "config " + c.id + ": no vertex in the deletion order drops to degree <= 3");
}

void finish_config(Configuration& c, int line, bool saw_reduce) {
    if (c.vnames.empty()) fail(line, "config " + c.id + " has no vertices");
    if (!saw_reduce) fail(line, "config " + c.id + " has no reduce line");
    for (const auto& name : c.vnames) {
        const DegreeConstraint& dc = c.delta.at(name);
        int dc_deg = c.config_degree(name);
        if (dc.min_value() < dc_deg)
            throw DeltaBelowDegree("config " + c.id + ": vertex " + name + " admits degree " +
                                   std::to_string(dc.min_value()) + " below its " +
                                   std::to_string(dc_deg) + " pattern edges");
    }
    if (c.reduce_kind == ReduceKind::lemma) check_lemma_order(c, line);
}

}  // namespace

std::vector<Configuration> parse_catalog(const std::string& text) {
    std::vector<Configuration> catalog;
    std::set<std::string> ids;
    std::istringstream in(text);
    std::string raw;
    int line = 0;

    bool open = false;
    bool saw_reduce = false;
    Configuration cur;

    while (std::getline(in, raw)) {
        ++line;
        std::vector<std::string> toks = tokenize(raw);
        if (toks.empty()) continue;
        const std::string& head = toks[0];

        if (head == "config") {
            if (open) fail(line, "config inside config " + cur.id);
            if (toks.size() != 2) fail(line, "config takes exactly one id");
            if (!ids.insert(toks[1]).second) fail(line, "duplicate config id " + toks[1]);
            cur = Configuration{};
            cur.id = toks[1];
            open = true;
            saw_reduce = false;
            continue;
        }
        if (!open) fail(line, "'" + head + "' outside a config block");

        if (head == "vertex") {
            if (toks.size() != 5 || toks[2] != "deg")
                fail(line, "expected: vertex <name> deg <kind> <k>");
            const std::string& name = toks[1];
            if (cur.has_vertex(name)) fail(line, "vertex " + name + " redeclared");
            DegreeConstraint dc;
            if (toks[3] == "exact")
                dc.kind = DegKind::exact;
            else if (toks[3] == "pair")
                dc.kind = DegKind::pair;
            else if (toks[3] == "atleast")
                dc.kind = DegKind::atleast;
            else
                fail(line, "unknown degree kind '" + toks[3] + "'");
            dc.value = parse_int(toks[4], line);
            if (dc.value < 0 || (dc.kind == DegKind::pair && dc.value < 1))
                fail(line, "degree bound out of range");
            cur.vnames.push_back(name);
            cur.delta[name] = dc;
        } else if (head == "edge") {
            if (toks.size() != 3) fail(line, "expected: edge <a> <b>");
            if (toks[1] == toks[2]) fail(line, "loop edge at " + toks[1]);
            for (int i = 1; i <= 2; ++i)
                if (!cur.has_vertex(toks[i])) fail(line, "unknown vertex " + toks[i]);
            if (cur.has_edge(toks[1], toks[2]))
                fail(line, "duplicate edge " + toks[1] + " " + toks[2]);
            cur.edges.emplace_back(toks[1], toks[2]);
        } else if (head == "face") {
            if (toks.size() < 4) fail(line, "a face needs at least three vertices");
            std::vector<std::string> walk(toks.begin() + 1, toks.end());
            std::set<std::string> uniq(walk.begin(), walk.end());
            if (uniq.size() != walk.size()) fail(line, "face repeats a vertex");
            for (size_t i = 0; i < walk.size(); ++i) {
                const std::string& a = walk[i];
                const std::string& b = walk[(i + 1) % walk.size()];
                if (!cur.has_vertex(a)) fail(line, "unknown vertex " + a);
                if (!cur.has_edge(a, b)) fail(line, "face side " + a + " " + b + " is not an edge");
            }
            for (const auto& f : cur.faces) {
                std::set<std::string> other(f.begin(), f.end());
                if (other == uniq) fail(line, "duplicate face");
            }
            cur.faces.push_back(std::move(walk));
        } else if (head == "reduce") {
            if (saw_reduce) fail(line, "config " + cur.id + " has two reduce lines");
            if (toks.size() < 3) fail(line, "expected: reduce <lemma|direct> <name...>");
            if (toks[1] == "lemma")
                cur.reduce_kind = ReduceKind::lemma;
            else if (toks[1] == "direct")
                cur.reduce_kind = ReduceKind::direct;
            else
                fail(line, "unknown reduce kind '" + toks[1] + "'");
            std::set<std::string> seen;
            for (size_t i = 2; i < toks.size(); ++i) {
                if (!cur.has_vertex(toks[i])) fail(line, "unknown vertex " + toks[i]);
                if (!seen.insert(toks[i]).second) fail(line, "vertex " + toks[i] + " deleted twice");
                cur.removal.push_back(toks[i]);
            }
            if (cur.removal.size() > 9)
                fail(line, "config " + cur.id + " deletes more than 9 vertices");
            saw_reduce = true;
        } else if (head == "end") {
            if (toks.size() != 1) fail(line, "end takes no arguments");
            finish_config(cur, line, saw_reduce);
            catalog.push_back(std::move(cur));
            open = false;
        } else {
            fail(line, "unknown directive '" + head + "'");
        }
    }
    if (open) fail(line, "config " + cur.id + " not closed by end");
    return catalog;
}

const std::vector<Configuration>& builtin_catalog() {
    static const std::vector<Configuration> catalog = parse_catalog(builtin_catalog_text());
    return catalog;
}

}  // namespace arbor
