#pragma once

#include <optional>
#include <vector>

#include "cedf/cedf.hpp"

namespace cedf {

struct SearchConfig {
    CedfParams params;
    // 0 means unlimited.
    i64 max_results = 1;
    bool symmetry_break = true;
    // Wall-clock seconds; 0 means unlimited.
    double time_budget_s = 0.0;
    bool canonicalize_output = false;
    // Difference-count pruning; disabled only to measure its effect.
    bool prune = true;
    int threads = 1;
};

enum class SearchStatus { found, exhausted_none, inconclusive };

struct SearchOutcome {
    SearchStatus status = SearchStatus::inconclusive;
    std::vector<Cedf> results;
    i64 nodes_explored = 0;
};

// Depth-first search over blocks in sequence order, elements ascending
// within a block. Prunes a branch as soon as a running difference count
// exceeds lambda, residue 0 appears, or disjointness fails. With
// symmetry_break the first element of A_0 is fixed to 0 (translation);
// rotation/reversal/scaling duplicates are removed post hoc via
// canonical_form when canonicalize_output is set. A hit time budget
// yields status inconclusive, never a false exhausted_none. With
// threads > 1 the space is partitioned on completed A_0 blocks; the
// outcome is identical for any worker count.
SearchOutcome search_cedf(const SearchConfig& cfg);

// Number of canonical_form-distinct CEDFs; nullopt when the budget ran
// out before the space was exhausted.
std::optional<i64> count_canonical(const CedfParams& params,
                                   double time_budget_s = 0.0,
                                   int threads = 1);

}  // namespace cedf
