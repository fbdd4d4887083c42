#pragma once

#include <chrono>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "kneser/bitcore.hpp"
#include "kneser/derive.hpp"
#include "kneser/lemma.hpp"

namespace kneser {

struct Violation {
    std::string clause;
    std::size_t index;
    std::string detail;
};

struct ReportStats {
    std::size_t length = 0;
    std::map<int, std::size_t> level_counts;  // visited vertices per level
};

struct VerificationReport {
    bool ok = false;
    std::vector<Violation> violations;  // capped at 100, ordered by check phase then index
    ReportStats stats;

    /// `OK` or `FAIL` followed by one `clause@index: detail` line each.
    std::string render() const;
};

/// Checks every clause of the lemma: cycle validity, path family shape,
/// disjointness, coverage, and the three anchor conditions.
VerificationReport verify_lemma_structure(const LemmaStructure& s);

/// Checks distinctness, level membership, adjacency at every cyclic index
/// and the coverage claim against the graph definition.
VerificationReport verify_certificate(const HCycleCertificate& c);

/// Exhaustive backtracking Hamiltonicity test for small graphs.
bool exhaustive_hamilton_oracle(const GraphKind& g, std::chrono::milliseconds budget);

/// All vertices of g in canonical ascending order.
std::vector<Vertex> graph_vertices(const GraphKind& g);

}  // namespace kneser
