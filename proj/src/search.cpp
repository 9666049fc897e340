#include "cedf/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <thread>

namespace cedf {

namespace {

using Clock = std::chrono::steady_clock;

struct Dfs {
    const SearchConfig& cfg;
    i64 v, lambda;
    int m, l;
    Clock::time_point deadline;
    bool has_deadline;

    std::vector<std::vector<i64>> blocks;
    std::vector<char> used;
    std::vector<i64> diff_count;
    i64 nodes = 0;
    bool out_of_time = false;
    std::vector<Cedf>* sink;
    i64 remaining;  // results still wanted; <0 means unlimited

    explicit Dfs(const SearchConfig& c, std::vector<Cedf>* results, i64 want)
        : cfg(c),
          v(c.params.v),
          lambda(c.params.lambda),
          m(c.params.m),
          l(c.params.l),
          has_deadline(c.time_budget_s > 0),
          used(static_cast<size_t>(c.params.v), 0),
          diff_count(static_cast<size_t>(c.params.v), 0),
          sink(results),
          remaining(want) {
        blocks.assign(static_cast<size_t>(m), {});
        if (has_deadline)
            deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(c.time_budget_s));
    }

    bool budget_hit() {
        if (!has_deadline || out_of_time) return out_of_time;
        if ((nodes & 0xfff) == 0 && Clock::now() > deadline) out_of_time = true;
        return out_of_time;
    }

    bool bump(i64 r) {
        i64& c = diff_count[static_cast<size_t>(r)];
        ++c;
        if (!cfg.prune) return true;
        return r != 0 && c <= lambda;
    }

    void drop(i64 r) { --diff_count[static_cast<size_t>(r)]; }

    // Differences introduced by appending e to block bi, in a fixed
    // order so they can be undone symmetrically.
    template <typename Fn>
    bool for_new_diffs(int bi, i64 e, Fn&& fn) {
        if (bi > 0)
            for (i64 a : blocks[static_cast<size_t>(bi - 1)])
                if (!fn(mod_sub(a, e, v))) return false;
        if (bi == m - 1)
            for (i64 b : blocks[0])
                if (!fn(mod_sub(e, b, v))) return false;
        return true;
    }

    void undo_diffs(int bi, i64 e, size_t applied) {
        size_t n = 0;
        if (bi > 0)
            for (i64 a : blocks[static_cast<size_t>(bi - 1)]) {
                if (n++ == applied) return;
                drop(mod_sub(a, e, v));
            }
        if (bi == m - 1)
            for (i64 b : blocks[0]) {
                if (n++ == applied) return;
                drop(mod_sub(e, b, v));
            }
    }

    bool emit() {
        Cedf c{cfg.params, blocks};
        // With pruning on, any completed assignment is necessarily valid;
        // without it the candidate must be checked.
        if (!cfg.prune && !verify(c).is_valid) return true;
        sink->push_back(std::move(c));
        if (remaining > 0 && --remaining == 0) return false;
        return true;
    }

    // Returns false to stop the whole search (enough results / budget).
    bool extend(int bi) {
        if (bi == m) return emit();
        i64 start = 0;
        int have = static_cast<int>(blocks[static_cast<size_t>(bi)].size());
        if (have > 0)
            start = blocks[static_cast<size_t>(bi)].back() + 1;
        else if (bi == 0 && cfg.symmetry_break)
            return try_element(0, 0);  // translation fixed: min(A_0) = 0
        for (i64 e = start; e < v; ++e) {
            if (!try_element(bi, e)) return false;
        }
        return true;
    }

    bool try_element(int bi, i64 e) {
        if (used[static_cast<size_t>(e)]) return true;
        ++nodes;
        if (budget_hit()) return false;
        size_t applied = 0;
        bool ok = for_new_diffs(bi, e, [&](i64 r) {
            ++applied;
            return bump(r);
        });
        if (!ok) {
            undo_diffs(bi, e, applied);
            return true;  // prune this element, keep searching siblings
        }
        used[static_cast<size_t>(e)] = 1;
        blocks[static_cast<size_t>(bi)].push_back(e);
        bool block_full = static_cast<int>(blocks[static_cast<size_t>(bi)].size()) == l;
        bool keep_going = extend(block_full ? bi + 1 : bi);
        blocks[static_cast<size_t>(bi)].pop_back();
        used[static_cast<size_t>(e)] = 0;
        undo_diffs(bi, e, applied);
        return keep_going;
    }
};

std::vector<Cedf> dedupe_canonical(std::vector<Cedf> results) {
    std::map<std::vector<i64>, Cedf> by_key;
    for (auto& c : results) {
        Cedf canon = canonical_form(c);
        by_key.try_emplace(flatten(canon), std::move(canon));
    }
    std::vector<Cedf> out;
    out.reserve(by_key.size());
    for (auto& [key, c] : by_key) out.push_back(std::move(c));
    return out;
}

// All completed A_0 choices consistent with the config, used as
// independent work units for the parallel path.
std::vector<std::vector<i64>> first_blocks(const SearchConfig& cfg, i64& nodes) {
    std::vector<std::vector<i64>> units;
    std::vector<i64> cur;
    i64 v = cfg.params.v;
    int l = cfg.params.l;
    auto rec = [&](auto&& self, i64 start) -> void {
        if (static_cast<int>(cur.size()) == l) {
            units.push_back(cur);
            return;
        }
        for (i64 e = start; e < v; ++e) {
            ++nodes;
            cur.push_back(e);
            self(self, e + 1);
            cur.pop_back();
        }
    };
    if (cfg.symmetry_break) {
        ++nodes;
        cur.push_back(0);
        rec(rec, 1);
    } else {
        rec(rec, 0);
    }
    return units;
}

SearchOutcome search_parallel(const SearchConfig& cfg) {
    i64 prefix_nodes = 0;
    auto units = first_blocks(cfg, prefix_nodes);
    std::vector<std::vector<Cedf>> unit_results(units.size());
    std::vector<i64> unit_nodes(units.size(), 0);
    std::atomic<size_t> next{0};
    std::atomic<bool> timed_out{false};

    auto worker = [&] {
        for (;;) {
            size_t idx = next.fetch_add(1);
            if (idx >= units.size()) return;
            SearchConfig sub = cfg;
            sub.threads = 1;
            Dfs dfs(sub, &unit_results[idx], 0);  // unlimited within a unit
            // Seed the completed A_0 into the search state.
            for (i64 e : units[idx]) {
                dfs.used[static_cast<size_t>(e)] = 1;
                dfs.blocks[0].push_back(e);
            }
            dfs.extend(1);
            unit_nodes[idx] = dfs.nodes;
            if (dfs.out_of_time) timed_out = true;
        }
    };

    int n = std::max(1, cfg.threads);
    std::vector<std::thread> pool;
    for (int i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    SearchOutcome out;
    out.nodes_explored = prefix_nodes;
    for (size_t i = 0; i < units.size(); ++i) {
        out.nodes_explored += unit_nodes[i];
        for (auto& c : unit_results[i]) {
            if (cfg.max_results == 0 || static_cast<i64>(out.results.size()) < cfg.max_results)
                out.results.push_back(std::move(c));
        }
    }
    if (cfg.canonicalize_output) out.results = dedupe_canonical(std::move(out.results));
    if (timed_out)
        out.status = SearchStatus::inconclusive;
    else
        out.status = out.results.empty() ? SearchStatus::exhausted_none : SearchStatus::found;
    return out;
}

}  // namespace

SearchOutcome search_cedf(const SearchConfig& cfg) {
    const CedfParams& p = cfg.params;
    if (p.v < 2 || p.m < 2 || p.l < 1 || p.lambda < 1)
        throw std::invalid_argument("parameters out of range");

    SearchOutcome out;
    if (!p.satisfies_necessary_condition()) {
        out.status = SearchStatus::exhausted_none;
        return out;
    }
    if (static_cast<i64>(p.m) * p.l > p.v) {
        out.status = SearchStatus::exhausted_none;  // not enough elements for disjoint blocks
        return out;
    }

    if (cfg.threads > 1) return search_parallel(cfg);

    Dfs dfs(cfg, &out.results, cfg.max_results);
    bool completed = dfs.extend(0);
    out.nodes_explored = dfs.nodes;
    if (cfg.canonicalize_output) out.results = dedupe_canonical(std::move(out.results));
    if (dfs.out_of_time)
        out.status = SearchStatus::inconclusive;
    else if (!out.results.empty())
        out.status = SearchStatus::found;
    else
        out.status = SearchStatus::exhausted_none;
    (void)completed;
    return out;
}

std::optional<i64> count_canonical(const CedfParams& params, double time_budget_s, int threads) {
    SearchConfig cfg;
    cfg.params = params;
    cfg.max_results = 0;
    cfg.symmetry_break = true;
    cfg.time_budget_s = time_budget_s;
    cfg.canonicalize_output = true;
    cfg.threads = threads;
    SearchOutcome out = search_cedf(cfg);
    if (out.status == SearchStatus::inconclusive) return std::nullopt;
    return static_cast<i64>(out.results.size());
}

}  // namespace cedf
