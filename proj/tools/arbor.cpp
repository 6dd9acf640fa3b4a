#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "arbor/catalog.hpp"
#include "arbor/coloring.hpp"
#include "arbor/digraph.hpp"
#include "arbor/discharge.hpp"
#include "arbor/error.hpp"
#include "arbor/generator.hpp"
#include "arbor/graph.hpp"
#include "arbor/match.hpp"
#include "arbor/reduce.hpp"

namespace {

std::string read_path(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw arbor::ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

arbor::ParsedInput load_graph(const std::string& path) {
    return arbor::parse_input(read_path(path));
}

// --catalog replaces the shipped configuration list wholesale
const std::vector<arbor::Configuration>& pick_catalog(
    const std::string& path, std::vector<arbor::Configuration>& storage) {
    if (path.empty()) return arbor::builtin_catalog();
    storage = arbor::parse_catalog(read_path(path));
    return storage;
}

// lists from the input file when present, otherwise uniform {1,2,3}
arbor::ListAssignment lists_for(const arbor::ParsedInput& in) {
    if (!in.lists.empty()) return arbor::ListAssignment{in.lists};
    return arbor::ListAssignment::uniform(in.graph.vertices());
}

arbor::Coloring parse_coloring(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    arbor::Coloring f;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string a, b, junk;
        if (!(ls >> a)) continue;
        if (!(ls >> b) || (ls >> junk))
            throw arbor::ParseError("line " + std::to_string(lineno) +
                                    ": expected '<vertex> <color>'");
        try {
            f[std::stoi(a)] = std::stoi(b);
        } catch (const std::exception&) {
            throw arbor::ParseError("line " + std::to_string(lineno) +
                                    ": expected '<vertex> <color>'");
        }
    }
    return f;
}

void print_coloring(const arbor::Coloring& f) {
    for (auto [v, c] : f) std::cout << v << " " << c << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    using namespace arbor;

    CLI::App app{"arboreal 3-coloring toolkit for embedded graphs"};
    app.require_subcommand(1);
    int rc = 0;

    std::string file = "-";
    std::string coloring_file;
    std::string catalog_path;
    std::vector<Configuration> catalog_storage;
    int count = 1;
    int cap = 16;
    int k = 3;
    int n = 4;
    int flips = -1;
    int samples = 100;
    std::uint64_t seed = 0;
    bool brute = false;
    bool seeded = false;

    auto* tri = app.add_subcommand("triangulate", "add edges until every face is a triangle");
    tri->add_option("file", file, "graph file, - for stdin");
    tri->callback([&] { std::cout << serialize_graph(triangulate(load_graph(file).graph)); });

    auto* dis = app.add_subcommand("discharge", "run the charge rules and report the audit");
    dis->add_option("file", file, "graph file, - for stdin");
    dis->add_option("--catalog", catalog_path, "configuration catalog file");
    dis->callback([&] {
        std::cout << render_audit(
            audit(load_graph(file).graph, pick_catalog(catalog_path, catalog_storage)));
    });

    auto* fc = app.add_subcommand("find-config", "locate the first matching configuration");
    fc->add_option("file", file, "graph file, - for stdin");
    fc->add_option("--catalog", catalog_path, "configuration catalog file");
    fc->callback([&] {
        ConfigMatch cm = find_configuration(load_graph(file).graph,
                                            pick_catalog(catalog_path, catalog_storage));
        std::cout << "config " << cm.id << "\n";
        for (const auto& [name, v] : cm.h) std::cout << "map " << name << " " << v << "\n";
    });

    auto* col = app.add_subcommand("color", "produce one arboreal list coloring");
    col->add_option("file", file, "graph file, - for stdin");
    auto* seed_opt = col->add_option("--seed", seed, "randomize the safe-color picks");
    col->callback([&] {
        ParsedInput in = load_graph(file);
        seeded = seed_opt->count() > 0;
        std::mt19937_64 rng(seed);
        print_coloring(greedy_color(skeleton(in.graph), lists_for(in), seeded ? &rng : nullptr));
    });

    auto* en = app.add_subcommand("enumerate", "list distinct arboreal colorings");
    en->add_option("file", file, "graph file, - for stdin");
    en->add_option("--count", count, "how many colorings")->required();
    en->add_option("--catalog", catalog_path, "configuration catalog file");
    en->callback([&] {
        ParsedInput in = load_graph(file);
        std::vector<Coloring> cs = enumerate_colorings(
            in.graph, lists_for(in), static_cast<std::size_t>(count),
            pick_catalog(catalog_path, catalog_storage));
        for (std::size_t i = 0; i < cs.size(); ++i) {
            if (i) std::cout << "\n";
            print_coloring(cs[i]);
        }
    });

    auto* cnt = app.add_subcommand("count", "count arboreal list colorings exactly");
    cnt->add_option("file", file, "graph file, - for stdin");
    cnt->add_flag("--brute", brute, "exhaustive search (the only mode)")->required();
    cnt->add_option("--cap", cap, "vertex-count cap for the exhaustive search");
    cnt->callback([&] {
        ParsedInput in = load_graph(file);
        std::cout << brute_force_colorings(skeleton(in.graph), lists_for(in), cap) << "\n";
    });

    auto* chk = app.add_subcommand("check", "test a coloring file for arboreality");
    chk->add_option("file", file, "graph file, - for stdin");
    chk->add_option("coloring", coloring_file, "lines of '<vertex> <color>'")->required();
    chk->callback([&] {
        ParsedInput in = load_graph(file);
        bool ok = is_arboreal(in.graph, parse_coloring(read_path(coloring_file)));
        std::cout << (ok ? "arboreal" : "not-arboreal") << "\n";
        rc = ok ? 0 : 1;
    });

    auto* dch = app.add_subcommand("digraph-chi",
                                   "does a k-coloring with acyclic classes exist");
    dch->add_option("file", file, "graph file with arc lines, - for stdin");
    dch->add_option("--k", k, "number of colors")->required();
    dch->callback([&] {
        ParsedInput in = load_graph(file);
        Digraph d = Digraph::from_arcs(in.arcs, in.graph.vertices());
        std::cout << (digraph_chromatic_brute(d, k) ? "yes" : "no") << "\n";
    });

    auto* gen = app.add_subcommand("gen", "random plane triangulation");
    gen->add_option("--n", n, "vertex count")->required()->check(CLI::Range(3, 1000000));
    gen->add_option("--seed", seed, "rng seed");
    gen->add_option("--flips", flips, "diagonal flip attempts (default 10n)");
    gen->callback([&] { std::cout << serialize_graph(gen_triangulation({n, seed, flips})); });

    auto* ac = app.add_subcommand("audit-corpus",
                                  "generate triangulations and audit every one");
    ac->add_option("--samples", samples, "number of graphs")->required();
    ac->add_option("--n", n, "largest vertex count (sizes mix over 4..n)")
        ->check(CLI::Range(4, 1000000));
    ac->add_option("--seed", seed, "rng seed");
    ac->add_option("--flips", flips, "fixed flip count (default: mixed)");
    ac->add_option("--catalog", catalog_path, "configuration catalog file");
    ac->callback([&] {
        const std::vector<Configuration>& cat = pick_catalog(catalog_path, catalog_storage);
        std::mt19937_64 rng(seed);
        std::map<std::string, int> hist;
        int found = 0;
        bool exact = true;
        for (int i = 0; i < samples; ++i) {
            int ni = 4 + static_cast<int>(rng() % static_cast<std::uint64_t>(n - 3));
            std::uint64_t gs = rng();
            int fl = flips >= 0 ? flips
                                : static_cast<int>(rng() % static_cast<std::uint64_t>(20 * ni));
            EmbeddedGraph g = gen_triangulation({ni, gs, fl});
            AuditReport r = audit(g, cat);
            if (!r.conserved) exact = false;
            if (r.config_found) {
                ++found;
                ++hist[r.config_id];
            } else {
                std::cerr << "no configuration in sample " << i << ":\n" << serialize_graph(g);
            }
        }
        for (const auto& [id, c] : hist) std::cout << "match " << id << " " << c << "\n";
        std::cout << found << "/" << samples << " configurations found; conservation "
                  << (exact ? "exact" : "VIOLATED") << "\n";
        if (found != samples || !exact) rc = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const arbor::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: InternalError: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
