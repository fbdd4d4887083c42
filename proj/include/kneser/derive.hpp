#pragma once

#include <cstdint>
#include <vector>

#include "kneser/bitcore.hpp"
#include "kneser/lemma.hpp"

namespace kneser {

/// A cyclic vertex sequence claimed to be a (partial) Hamilton cycle of
/// the named graph.
struct HCycleCertificate {
    GraphKind graph;
    std::vector<Vertex> order;
    std::uint64_t visited = 0;  // = order.size()
    std::uint64_t total = 0;    // = |V(graph)|
};

/// Hamilton cycle of the bipartite Kneser graph H(n,k): the level-k cycle
/// vertices interleaved with the top ends of their paths.
HCycleCertificate bipartite_hamilton(int n, int k, BaseCycleProvider& provider);

/// Cycle of length 2*C(n-1,k-1) in the Kneser graph K(n,k); for k = 1 the
/// full rotation Hamilton cycle {1},{2},...,{n}.
HCycleCertificate kneser_cycle(int n, int k, BaseCycleProvider& provider);

/// Cycle in Q(n,k) covering the smaller of levels k and k+1 completely.
HCycleCertificate qnk_cycle(int n, int k, BaseCycleProvider& provider);

struct Fraction {
    std::int64_t num;
    std::int64_t den;
    friend bool operator==(const Fraction&, const Fraction&) = default;
};

/// Fraction of K(n,k) vertices visited by kneser_cycle: 2k/n in lowest
/// terms for k >= 2, and 1 for the full k = 1 Hamilton cycle.
Fraction coverage_fraction(int n, int k);

}  // namespace kneser
