#include "arbor/discharge.hpp"

#include <algorithm>
#include <sstream>

namespace arbor {

Rational ChargeMap::total() const {
    Rational t = 0;
    for (const auto& [v, c] : charge) t += c;
    return t;
}

ChargeMap initial_charges(const EmbeddedGraph& g) {
    if (!is_triangulation(g)) throw NotATriangulation("charges are defined on triangulations only");
    ChargeMap cm;
    cm.phase = ChargePhase::initial;
    for (int v : g.vertices()) cm.charge[v] = Rational(g.degree(v) - 6);
    Rational want = g.surface == Surface::plane ? Rational(-12) : Rational(-6);
    if (cm.total() != want) {
        throw TotalChargeMismatch("total " + cm.total().str() + ", surface demands " + want.str());
    }
    return cm;
}

namespace {

// Neighbor degrees of a 4-vertex, descending.
std::array<int, 4> wheel_degrees(const EmbeddedGraph& g, int v) {
    const auto& nbrs = g.rot.at(v);
    std::array<int, 4> d{};
    for (int i = 0; i < 4; ++i) d[i] = g.degree(nbrs[i]);
    std::sort(d.begin(), d.end(), std::greater<int>());
    return d;
}

}  // namespace

bool is_bad_4_vertex(const EmbeddedGraph& g, int v) {
    if (!g.has_vertex(v) || g.degree(v) != 4) {
        throw NotDegreeFour("vertex " + std::to_string(v));
    }
    auto d = wheel_degrees(g, v);
    return d[0] >= 8 && d[1] == 7 && d[2] == 6 && d[3] == 6;
}

std::optional<std::pair<std::string, Rational>> four_vertex_rule(std::array<int, 4> d) {
    std::sort(d.begin(), d.end(), std::greater<int>());
    if (d[0] >= 8 && d[1] == 7 && d[2] == 6 && d[3] == 6)
        return std::make_pair(std::string("R8"), Rational(3, 2));
    if ((d[0] >= 8 && d[1] >= 8 && d[2] == 6 && d[3] == 6) ||
        (d[0] >= 8 && d[1] == 7 && d[2] == 7 && d[3] == 6))
        return std::make_pair(std::string("R7"), Rational(1));
    if (d[0] >= 8 && d[1] >= 8 && d[2] == 7 && d[3] == 6)
        return std::make_pair(std::string("R5"), Rational(3, 4));
    if (d[0] >= 8 && d[1] >= 8 && d[2] >= 8 && d[3] == 6)
        return std::make_pair(std::string("R4"), Rational(2, 3));
    if (d[0] >= 8 && d[1] >= 7 && d[2] >= 7 && d[3] >= 7)
        return std::make_pair(std::string("R6"), Rational(1, 2));
    return std::nullopt;
}

std::pair<ChargeMap, TransferLedger> discharge(const EmbeddedGraph& g) {
    ChargeMap initial = initial_charges(g);
    TransferLedger ledger;

    std::vector<int> vs = g.vertices();
    auto sorted_nbrs = [&](int v) {
        std::vector<int> ns = g.rot.at(v);
        std::sort(ns.begin(), ns.end());
        return ns;
    };

    // R1: 7 -> adjacent 5, amount 1/3.  R2: 7 -> adjacent 4, amount 1/2.
    // R3: 8+ -> adjacent 5, amount 1/2. R4..R8: 8+ -> adjacent 4, amount
    // fixed by the 4-vertex's wheel. Everything reads initial degrees.
    for (int u : vs) {
        if (g.degree(u) != 7) continue;
        for (int v : sorted_nbrs(u))
            if (g.degree(v) == 5) ledger.entries.push_back({u, v, Rational(1, 3), "R1"});
    }
    for (int u : vs) {
        if (g.degree(u) != 7) continue;
        for (int v : sorted_nbrs(u))
            if (g.degree(v) == 4) ledger.entries.push_back({u, v, Rational(1, 2), "R2"});
    }
    for (int u : vs) {
        if (g.degree(u) < 8) continue;
        for (int v : sorted_nbrs(u))
            if (g.degree(v) == 5) ledger.entries.push_back({u, v, Rational(1, 2), "R3"});
    }
    std::vector<Transfer> heavy;
    for (int u : vs) {
        if (g.degree(u) < 8) continue;
        for (int v : sorted_nbrs(u)) {
            if (g.degree(v) != 4) continue;
            auto rule = four_vertex_rule(wheel_degrees(g, v));
            if (rule) heavy.push_back({u, v, rule->second, rule->first});
        }
    }
    // Heavy transfers were collected sender-first; regroup by rule id so the
    // ledger reads R4 blocks before R5 blocks and so on.
    std::stable_sort(heavy.begin(), heavy.end(),
                     [](const Transfer& a, const Transfer& b) { return a.rule < b.rule; });
    ledger.entries.insert(ledger.entries.end(), heavy.begin(), heavy.end());

    ChargeMap fin = initial;
    fin.phase = ChargePhase::final;
    for (const Transfer& t : ledger.entries) {
        fin.charge[t.from] -= t.amount;
        fin.charge[t.to] += t.amount;
    }
    return {fin, ledger};
}

AuditReport audit(const EmbeddedGraph& g, const std::vector<Configuration>& catalog) {
    AuditReport r;
    r.initial = initial_charges(g);
    auto [fin, ledger] = discharge(g);
    r.final_charges = fin;
    r.ledger = ledger;
    r.conserved = r.final_charges.total() == r.initial.total();
    for (const auto& [v, c] : r.final_charges.charge)
        if (c < Rational(0)) r.negative_final.push_back(v);
    try {
        ConfigMatch m = find_configuration(g, catalog);
        r.config_found = true;
        r.config_id = m.id;
        r.matching = m.h;
    } catch (const NoConfigurationFound&) {
        r.config_found = false;
        r.contradiction = true;
    }
    return r;
}

std::string render_audit(const AuditReport& r) {
    std::ostringstream out;
    for (const auto& [v, c] : r.initial.charge) {
        out << v << " initial " << c.str() << " final " << r.final_charges.charge.at(v).str()
            << "\n";
    }
    for (const Transfer& t : r.ledger.entries) {
        out << t.rule << " " << t.from << " " << t.to << " " << t.amount.str() << "\n";
    }
    out << "total initial " << r.initial.total().str() << " final " << r.final_charges.total().str()
        << (r.conserved ? " conserved" : " NOT CONSERVED") << "\n";
    out << "negative final:";
    for (int v : r.negative_final) out << " " << v;
    out << "\n";
    if (r.config_found) {
        out << "config " << r.config_id << "\n";
    } else {
        out << "config NONE: negative total yet no matchable vertex pattern, "
               "which would force all final charges nonnegative\n";
    }
    return out.str();
}

}  // namespace arbor
