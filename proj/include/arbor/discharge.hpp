#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arbor/catalog.hpp"
#include "arbor/graph.hpp"
#include "arbor/match.hpp"
#include "arbor/rational.hpp"

namespace arbor {

enum class ChargePhase { initial, final };

struct ChargeMap {
    std::map<int, Rational> charge;
    ChargePhase phase = ChargePhase::initial;

    Rational total() const;
};

// One transfer, recorded when the rules fire. rule is "R1".."R8".
struct Transfer {
    int from = 0;
    int to = 0;
    Rational amount;
    std::string rule;
};

struct TransferLedger {
    std::vector<Transfer> entries;
};

// charge(v) = deg(v) - 6, summing to -12 on the plane and -6 on the
// projective plane. A wrong total means the embedding itself is broken.
ChargeMap initial_charges(const EmbeddedGraph& g);

// A 4-vertex whose neighbor degrees form {>=8, 7, 6, 6}. Such a vertex
// drains 3/2 from its heavy neighbor (rule R8).
bool is_bad_4_vertex(const EmbeddedGraph& g, int v);

// Which of R4..R8 a vertex of degree >=8 applies toward an adjacent
// 4-vertex, given the 4-vertex's neighbor degrees. Patterns are matched on
// the degree multiset only; bare values are exact, ">=8"/">=7" are lower
// bounds. Checked most specific first (R8, R7, R5, R4, R6); the patterns
// are pairwise disjoint, so the order is a tiebreak that never fires.
std::optional<std::pair<std::string, Rational>> four_vertex_rule(std::array<int, 4> degs);

// Applies R1..R8 in one pass: every transfer is decided from the initial
// degrees, then all are summed. Ledger order is deterministic: by rule,
// then ascending sender, then ascending receiver.
std::pair<ChargeMap, TransferLedger> discharge(const EmbeddedGraph& g);

struct AuditReport {
    ChargeMap initial;
    ChargeMap final_charges;
    TransferLedger ledger;
    bool conserved = false;            // sum(final) == sum(initial), exactly
    std::vector<int> negative_final;   // vertices ending below zero, ascending
    bool config_found = false;
    std::string config_id;
    Matching matching;
    // Set when no catalog entry matches: the total charge is negative, yet
    // a match-free triangulation would force every final charge >= 0.
    bool contradiction = false;
};

AuditReport audit(const EmbeddedGraph& g, const std::vector<Configuration>& catalog);

// Report text: per-vertex "v initial p/q final r/s" lines, ledger lines
// "Rk from to amount", totals, and the matched configuration id.
std::string render_audit(const AuditReport& r);

}  // namespace arbor
