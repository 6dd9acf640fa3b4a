#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "arbor/catalog.hpp"
#include "arbor/discharge.hpp"
#include "arbor/graph.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace arbor;
using namespace fixtures;

namespace {

// Octahedron grown so the hub 0 keeps degree 4 while its wheel becomes
// degrees 8, 7, 6, 6 (vertices 1, 2, 3, 4). Built by repeatedly splitting
// faces on the far side of the hub.
EmbeddedGraph bad_wheel_host() {
    return from_oriented_faces(
        {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 1}, {5, 3, 2},  {5, 1, 4},
         {6, 5, 2}, {6, 1, 5}, {7, 6, 2}, {7, 1, 6}, {8, 7, 2},  {8, 2, 1},
         {9, 8, 1}, {9, 1, 7}, {9, 7, 8}, {10, 5, 4}, {10, 3, 5}, {11, 10, 4},
         {11, 4, 3}, {11, 3, 10}},
        Surface::plane);
}

// Same idea with wheel degrees 8, 8, 6, 6 around hub 0.
EmbeddedGraph double_heavy_host() {
    return from_oriented_faces(
        {{0, 1, 2}, {0, 2, 3}, {0, 3, 4},  {0, 4, 1},  {6, 5, 2},  {6, 1, 5}, {7, 6, 2},
         {7, 1, 6}, {8, 7, 2}, {8, 2, 1},  {8, 1, 7},  {9, 5, 1},  {9, 1, 4}, {9, 4, 5},
         {10, 5, 3}, {10, 3, 2}, {10, 2, 5}, {11, 5, 4}, {11, 4, 3}, {11, 3, 5}},
        Surface::plane);
}

std::map<int, Rational> replay(const ChargeMap& initial, const TransferLedger& ledger) {
    std::map<int, Rational> c = initial.charge;
    for (const auto& t : ledger.entries) {
        c[t.from] -= t.amount;
        c[t.to] += t.amount;
    }
    return c;
}

using Entry = std::tuple<std::string, int, int, Rational>;

std::vector<Entry> entries_of(const TransferLedger& ledger) {
    std::vector<Entry> out;
    for (const auto& t : ledger.entries) out.push_back({t.rule, t.from, t.to, t.amount});
    return out;
}

// Pattern oracle sharing nothing with the implementation: a degree multiset
// fits a pattern iff some ordering satisfies every slot predicate.
using Slot = std::function<bool(int)>;

bool fits(std::array<int, 4> d, const std::array<Slot, 4>& pattern) {
    std::sort(d.begin(), d.end());
    do {
        bool ok = true;
        for (int i = 0; i < 4 && ok; ++i) ok = pattern[i](d[i]);
        if (ok) return true;
    } while (std::next_permutation(d.begin(), d.end()));
    return false;
}

Slot eq(int k) { return [k](int x) { return x == k; }; }
Slot ge(int k) { return [k](int x) { return x >= k; }; }

std::vector<std::string> raw_rules(const std::array<int, 4>& d) {
    std::vector<std::string> hits;
    if (fits(d, {ge(8), ge(8), ge(8), eq(6)})) hits.push_back("R4");
    if (fits(d, {ge(8), ge(8), eq(7), eq(6)})) hits.push_back("R5");
    if (fits(d, {ge(8), ge(7), ge(7), ge(7)})) hits.push_back("R6");
    if (fits(d, {ge(8), ge(8), eq(6), eq(6)}) || fits(d, {ge(8), eq(7), eq(7), eq(6)}))
        hits.push_back("R7");
    if (fits(d, {ge(8), eq(7), eq(6), eq(6)})) hits.push_back("R8");
    return hits;
}

}  // namespace

TEST_CASE("initial charges on the reference triangulations") {
    auto ico = icosahedron();
    ChargeMap c = initial_charges(ico);
    CHECK(c.phase == ChargePhase::initial);
    for (int v : ico.vertices()) CHECK(c.charge.at(v) == Rational(-1));
    CHECK(c.total() == Rational(-12));

    ChargeMap ck4 = initial_charges(k4());
    for (const auto& [v, q] : ck4.charge) CHECK(q == Rational(-3));
    CHECK(ck4.total() == Rational(-12));

    auto k6 = k6_projective();
    ChargeMap ck6 = initial_charges(k6);
    for (const auto& [v, q] : ck6.charge) CHECK(q == Rational(-1));
    CHECK(ck6.total() == Rational(-6));
}

TEST_CASE("initial charges demand a triangulation") {
    CHECK_THROWS_AS(initial_charges(cycle4()), NotATriangulation);
    CHECK_THROWS_AS(discharge(path3()), NotATriangulation);
}

TEST_CASE("four-vertex rule classification") {
    auto want = [](const char* id, std::int64_t n, std::int64_t d) {
        return std::make_pair(std::string(id), Rational(n, d));
    };
    CHECK(four_vertex_rule({9, 7, 6, 6}) == want("R8", 3, 2));
    CHECK(four_vertex_rule({8, 7, 6, 6}) == want("R8", 3, 2));
    CHECK(four_vertex_rule({8, 8, 6, 6}) == want("R7", 1, 1));
    CHECK(four_vertex_rule({8, 7, 7, 6}) == want("R7", 1, 1));
    CHECK(four_vertex_rule({11, 9, 6, 6}) == want("R7", 1, 1));
    CHECK(four_vertex_rule({8, 8, 7, 6}) == want("R5", 3, 4));
    CHECK(four_vertex_rule({8, 8, 8, 6}) == want("R4", 2, 3));
    CHECK(four_vertex_rule({10, 9, 8, 6}) == want("R4", 2, 3));
    CHECK(four_vertex_rule({8, 7, 7, 7}) == want("R6", 1, 2));
    CHECK(four_vertex_rule({8, 8, 7, 7}) == want("R6", 1, 2));
    CHECK(four_vertex_rule({8, 8, 8, 7}) == want("R6", 1, 2));
    CHECK(four_vertex_rule({8, 8, 8, 8}) == want("R6", 1, 2));
    // order of arguments must not matter
    CHECK(four_vertex_rule({6, 8, 6, 7}) == want("R8", 3, 2));

    CHECK_FALSE(four_vertex_rule({7, 7, 7, 7}).has_value());
    CHECK_FALSE(four_vertex_rule({8, 6, 6, 6}).has_value());
    CHECK_FALSE(four_vertex_rule({8, 7, 6, 5}).has_value());
    CHECK_FALSE(four_vertex_rule({8, 8, 8, 4}).has_value());
    CHECK_FALSE(four_vertex_rule({6, 6, 6, 6}).has_value());
    CHECK_FALSE(four_vertex_rule({9, 6, 6, 5}).has_value());
}

TEST_CASE("heavy-to-4 patterns partition the degree multisets") {
    std::map<std::string, Rational> amount = {{"R4", Rational(2, 3)},
                                              {"R5", Rational(3, 4)},
                                              {"R6", Rational(1, 2)},
                                              {"R7", Rational(1)},
                                              {"R8", Rational(3, 2)}};
    int matched = 0;
    for (int a = 3; a <= 12; ++a)
        for (int b = a; b <= 12; ++b)
            for (int c = b; c <= 12; ++c)
                for (int d = c; d <= 12; ++d) {
                    std::array<int, 4> degs{a, b, c, d};
                    auto hits = raw_rules(degs);
                    REQUIRE_MESSAGE(hits.size() <= 1,
                                    (std::to_string(a) + "," + std::to_string(b) + "," +
                                     std::to_string(c) + "," + std::to_string(d)));
                    auto got = four_vertex_rule(degs);
                    if (hits.empty()) {
                        CHECK_FALSE(got.has_value());
                    } else {
                        ++matched;
                        REQUIRE(got.has_value());
                        CHECK(got->first == hits[0]);
                        CHECK(got->second == amount.at(hits[0]));
                    }
                }
    CHECK(matched > 20);  // the scan actually exercised every rule family
}

TEST_CASE("no rule fires without vertices of degree seven or more") {
    for (const EmbeddedGraph& g : {icosahedron(), k4(), octahedron(), k6_projective()}) {
        auto [fin, ledger] = discharge(g);
        CHECK(ledger.entries.empty());
        CHECK(fin.phase == ChargePhase::final);
        CHECK(fin.charge == initial_charges(g).charge);
    }
}

TEST_CASE("split bipyramid: R1, R2 and R3 fire with exact amounts") {
    EmbeddedGraph g = split_bipyramid();
    REQUIRE(g.degree(0) == 8);
    REQUIRE(g.degree(1) == 7);
    REQUIRE(g.degree(2) == 5);
    REQUIRE(g.degree(9) == 3);

    auto [fin, ledger] = discharge(g);
    std::vector<Entry> want = {
        {"R1", 1, 2, Rational(1, 3)}, {"R1", 1, 3, Rational(1, 3)}, {"R2", 1, 4, Rational(1, 2)},
        {"R2", 1, 5, Rational(1, 2)}, {"R2", 1, 6, Rational(1, 2)}, {"R2", 1, 7, Rational(1, 2)},
        {"R2", 1, 8, Rational(1, 2)}, {"R3", 0, 2, Rational(1, 2)}, {"R3", 0, 3, Rational(1, 2)},
    };
    CHECK(entries_of(ledger) == want);

    std::map<int, Rational> expect = {
        {0, Rational(1)},      {1, Rational(-13, 6)}, {2, Rational(-1, 6)}, {3, Rational(-1, 6)},
        {4, Rational(-3, 2)},  {5, Rational(-3, 2)},  {6, Rational(-3, 2)}, {7, Rational(-3, 2)},
        {8, Rational(-3, 2)},  {9, Rational(-3)},
    };
    CHECK(fin.charge == expect);
    CHECK(fin.total() == Rational(-12));
}

TEST_CASE("bad wheel host: R8 drains the heavy neighbor") {
    EmbeddedGraph g = bad_wheel_host();
    REQUIRE(g.n() == 12);
    REQUIRE(g.degree(0) == 4);
    REQUIRE(g.degree(1) == 8);
    REQUIRE(g.degree(2) == 7);
    REQUIRE(g.degree(3) == 6);
    REQUIRE(g.degree(4) == 6);

    CHECK(is_bad_4_vertex(g, 0));
    CHECK_FALSE(is_bad_4_vertex(g, 6));   // wheel 8,7,6,5
    CHECK_THROWS_AS(is_bad_4_vertex(g, 1), NotDegreeFour);
    CHECK_THROWS_AS(is_bad_4_vertex(g, 99), NotDegreeFour);

    auto [fin, ledger] = discharge(g);
    std::vector<Entry> want = {
        {"R1", 2, 7, Rational(1, 3)}, {"R2", 2, 0, Rational(1, 2)}, {"R2", 2, 6, Rational(1, 2)},
        {"R2", 2, 8, Rational(1, 2)}, {"R3", 1, 7, Rational(1, 2)}, {"R8", 1, 0, Rational(3, 2)},
    };
    CHECK(entries_of(ledger) == want);
    CHECK(fin.charge.at(0) == Rational(0));
    CHECK(fin.charge.at(1) == Rational(0));
    CHECK(fin.charge.at(2) == Rational(-5, 6));
    CHECK(fin.charge.at(7) == Rational(-1, 6));
    CHECK(fin.total() == Rational(-12));

    AuditReport r = audit(g, builtin_catalog());
    CHECK(r.conserved);
    CHECK(r.negative_final == std::vector<int>{2, 6, 7, 8, 9, 10, 11});
    CHECK(r.config_found);
    CHECK_FALSE(r.contradiction);
}

TEST_CASE("double heavy host: both senders pay a full unit") {
    EmbeddedGraph g = double_heavy_host();
    REQUIRE(g.degree(0) == 4);
    REQUIRE(g.degree(1) == 8);
    REQUIRE(g.degree(2) == 8);
    REQUIRE(g.degree(3) == 6);
    REQUIRE(g.degree(4) == 6);
    CHECK_FALSE(is_bad_4_vertex(g, 0));

    auto [fin, ledger] = discharge(g);
    std::vector<Entry> want = {
        {"R7", 1, 0, Rational(1)},
        {"R7", 2, 0, Rational(1)},
    };
    CHECK(entries_of(ledger) == want);
    CHECK(fin.charge.at(0) == Rational(0));
    CHECK(fin.charge.at(1) == Rational(1));
    CHECK(fin.charge.at(2) == Rational(1));
    CHECK(fin.charge.at(5) == Rational(2));
    CHECK(fin.total() == Rational(-12));
}

TEST_CASE("replaying the ledger reproduces the final charges") {
    for (const EmbeddedGraph& g : {icosahedron(), k6_projective(), split_bipyramid(),
                                   bad_wheel_host(), double_heavy_host()}) {
        ChargeMap initial = initial_charges(g);
        auto [fin, ledger] = discharge(g);
        CHECK(replay(initial, ledger) == fin.charge);
        CHECK(fin.total() == initial.total());
    }
}

TEST_CASE("audit reports and the empty-catalog contradiction") {
    AuditReport r = audit(k4(), builtin_catalog());
    CHECK(r.conserved);
    CHECK(r.config_found);
    CHECK(r.config_id == "Q1");
    CHECK(r.negative_final == std::vector<int>{0, 1, 2, 3});
    CHECK_FALSE(r.contradiction);

    AuditReport bare = audit(k4(), {});
    CHECK(bare.conserved);
    CHECK_FALSE(bare.config_found);
    CHECK(bare.contradiction);
    CHECK(bare.config_id.empty());

    AuditReport ik6 = audit(k6_projective(), builtin_catalog());
    CHECK(ik6.conserved);
    CHECK(ik6.config_found);
    for (const auto& [v, q] : ik6.final_charges.charge) CHECK(q == Rational(-1));
}

TEST_CASE("audit rendering") {
    std::string txt = render_audit(audit(k4(), builtin_catalog()));
    std::string want =
        "0 initial -3/1 final -3/1\n"
        "1 initial -3/1 final -3/1\n"
        "2 initial -3/1 final -3/1\n"
        "3 initial -3/1 final -3/1\n"
        "total initial -12/1 final -12/1 conserved\n"
        "negative final: 0 1 2 3\n"
        "config Q1\n";
    CHECK(txt == want);

    std::string wheel = render_audit(audit(bad_wheel_host(), builtin_catalog()));
    CHECK(wheel.find("R8 1 0 3/2\n") != std::string::npos);
    CHECK(wheel.find("0 initial -2/1 final 0/1\n") != std::string::npos);

    std::string none = render_audit(audit(k4(), {}));
    CHECK(none.find("config NONE") != std::string::npos);
}
