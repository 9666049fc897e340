#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "cedf/cedf.hpp"

namespace cedf {

/// A vertex-labeled digraph with vertices in Z_v.
struct LabeledDigraph {
    std::vector<i64> vertices;
    std::vector<std::pair<i64, i64>> arcs;  // (tail, head)
};

// The blown-up cycle C_m[l] labeled by c: arcs A_i x A_{i+1 mod m}.
LabeledDigraph to_digraph(const Cedf& c);

// Multiset of arc differences head-subtracted-from-tail; equals
// external_differences(c) for the digraph of c.
DifferenceMultiset arc_differences(const LabeledDigraph& g, i64 v);

/// v translated copies of the base digraph, stored as the base plus one
/// offset per copy; arcs are materialized lazily during verification.
struct Decomposition {
    Cedf base;
    std::vector<i64> offsets;
};

// Develops a verified CEDF through Z_v: copy g has arcs (g+a, g+b).
// Throws std::invalid_argument if c does not verify.
Decomposition develop(const Cedf& c);

struct ArcDeviation {
    i64 tail;
    i64 head;
    i64 observed;
    i64 expected;
    bool operator==(const ArcDeviation&) const = default;
};

struct DecompositionReport {
    bool valid = false;
    i64 arcs_total = 0;
    std::vector<ArcDeviation> deviations;
};

// Tallies every arc over all copies: valid iff each ordered pair of
// distinct vertices appears exactly lambda times and no loop appears.
// Tail-chunked dense counting keeps memory bounded for large v.
DecompositionReport verify_decomposition(const Decomposition& dec);

// One arc per line "tail head copy_index", ascending by
// (copy_index, tail, head).
void export_arcs(const Decomposition& dec, std::ostream& out);

}  // namespace cedf
