#pragma once

#include <iosfwd>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "kneser/bitcore.hpp"
#include "kneser/middle_levels.hpp"

namespace kneser {

/// An upward path in Q(n): consecutive vertices differ in one bit and
/// each step raises the level by one.
using MonotonePath = std::vector<Vertex>;

enum class SpecialPathKind { D, A, B };

/// D(n,k) = (a(n,k), a(n,k+1), b(n,k));
/// A(n,k) = (a(n,k+1), ..., a(n,n-k));
/// B(n,k) = (b(n,k+1), ..., b(n,n-k-1)), empty when n = 2k+1.
MonotonePath make_special_path(SpecialPathKind kind, int n, int k);

struct InvariantViolation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The cycle C(n,k) through all of level k together with the family of
/// vertex-disjoint monotone paths P(n,k) from level k+1 up to level n-k.
/// The cycle is stored canonically: it begins a(n,k), a(n,k+1), b(n,k).
struct LemmaStructure {
    int n = 0;
    int k = 0;
    std::vector<Vertex> cycle;
    std::map<Vertex, MonotonePath> paths;  // keyed by start vertex, level k+1
};

struct XYPartition {
    std::set<Vertex> x;  // path ends shared with the (k-1)-family
    std::set<Vertex> y;  // path ends free of it
    std::map<Vertex, Vertex> terminal_edges;  // E_X: end vertex -> top vertex
};

/// Builds (C(n,k), P(n,k)) for k >= 1, n >= 2k+1. Dispatch: middle-levels
/// base when n = 2k+1, the explicit k = 1 construction, otherwise the
/// inductive step from (n-1,k) and (n-1,k-1). Rows are built upward,
/// keeping only the previous row. Every result is re-validated; a failure
/// raises InvariantViolation naming the violated clause.
LemmaStructure build(int n, int k, BaseCycleProvider& provider);

LemmaStructure build_base_a(int k, BaseCycleProvider& provider);

LemmaStructure build_k1(int n);

LemmaStructure build_step_c(int n, int k, const LemmaStructure& sub_k,
                            const LemmaStructure& sub_km1);

XYPartition compute_xy_partition(const LemmaStructure& sub_k, const LemmaStructure& sub_km1);

/// Text dump: `LEMMA n k`, `CYCLE` plus the canonical cycle, then one
/// `PATH` block per path ordered by start vertex.
void dump_lemma(std::ostream& out, const LemmaStructure& s);
LemmaStructure parse_lemma(std::istream& in);

}  // namespace kneser
